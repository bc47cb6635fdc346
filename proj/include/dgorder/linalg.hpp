#pragma once

#include "dgorder/matrix.hpp"

#include <optional>
#include <vector>

namespace dgo {

// ---- linear algebra over a field (Q or F_p) ----

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(QMat& m, const CoefficientRing& field);
std::size_t rank(const QMat& m, const CoefficientRing& field);
Q determinant(const QMat& m, const CoefficientRing& field);
std::optional<QMat> inverse(const QMat& m, const CoefficientRing& field);
// some x with m * x = b
std::optional<QVec> solve(const QMat& m, const QVec& b, const CoefficientRing& field);
// all x with x * m = b, returned as a particular row solution
std::optional<QVec> solve_left(const QMat& m, const QVec& b, const CoefficientRing& field);

// Basis of {x : m * x = 0}. Over Z the basis is a saturated basis of the
// integer kernel lattice.
std::vector<QVec> kernel_basis(const QMat& m, const CoefficientRing& ring);

// det(t I - m) over Q, coefficients low to high
std::vector<Q> characteristic_polynomial(const QMat& m);

// ---- integer normal forms ----

struct SmithForm {
    ZMat U, S, V; // M = U * S * V
};
SmithForm smith_normal_form(const ZMat& m);

struct HermiteForm {
    ZMat H; // row-style HNF, zero rows at the bottom
    ZMat U; // M = U * H
    ZMat W; // W * M = H, W = U^{-1}
};
HermiteForm hermite_normal_form(const ZMat& m);

// nonzero diagonal entries of the Smith form, in order
std::vector<Z> invariant_factors(const ZMat& m);

// ---- subspaces of K^n, stored by a reduced echelon basis ----

class Subspace {
public:
    Subspace() = default;
    Subspace(std::size_t ambient, const CoefficientRing& field) : n_(ambient), field_(field) {}
    Subspace(std::size_t ambient, const CoefficientRing& field, const std::vector<QVec>& gens);

    static Subspace whole(std::size_t n, const CoefficientRing& field);

    std::size_t ambient_dim() const noexcept { return n_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<QVec>& basis() const noexcept { return basis_; }
    const CoefficientRing& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return basis_.empty(); }

    bool contains(const QVec& v) const;
    bool contains(const Subspace& o) const;
    // coordinates in the echelon basis; nullopt if v is outside
    std::optional<QVec> coordinates(const QVec& v) const;
    // adds v, returns true if the dimension grew
    bool insert(const QVec& v);

    Subspace operator+(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }
    friend bool operator<(const Subspace& a, const Subspace& b);

private:
    void reduce();

    std::size_t n_ = 0;
    CoefficientRing field_;
    std::vector<QVec> basis_;
    std::vector<std::size_t> pivots_;
};

// Vectors completing `sub` (a subspace of `whole`) to a basis of `whole`.
std::vector<QVec> complement_basis(const Subspace& sub, const Subspace& whole);

} // namespace dgo
