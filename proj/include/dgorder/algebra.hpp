#pragma once

#include "dgorder/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dgo {

// (-1)^e
inline int parity_sign(int e) { return e % 2 == 0 ? 1 : -1; }

// Finite-basis graded associative algebra: b_i * b_j = sum_k c(i,j,k) b_k.
class GradedAlgebra {
public:
    GradedAlgebra() = default;
    GradedAlgebra(CoefficientRing ring, std::vector<std::string> names, std::vector<int> degrees);

    std::size_t dim() const noexcept { return degrees_.size(); }
    const CoefficientRing& ring() const noexcept { return ring_; }
    int degree(std::size_t i) const { return degrees_.at(i); }
    const std::vector<int>& degrees() const noexcept { return degrees_; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    // distinct degrees, ascending
    std::vector<int> degree_set() const;
    std::vector<std::size_t> indices_of_degree(int d) const;

    const Q& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim() + j) * dim() + k]; }
    void set_constant(std::size_t i, std::size_t j, std::size_t k, const Q& v);

    const QVec& unit() const noexcept { return unit_; }
    void set_unit(QVec u) { unit_ = normalize(u); }
    // solves for a two-sided unit; returns false if none exists
    bool detect_unit();

    QVec normalize(const QVec& v) const;
    QVec multiply(const QVec& a, const QVec& b) const;
    QVec basis_product(std::size_t i, std::size_t j) const;
    // column j holds a * b_j
    QMat left_multiplication(const QVec& a) const;
    // column j holds b_j * a
    QMat right_multiplication(const QVec& a) const;

    // degree of a nonzero homogeneous vector
    std::optional<int> homogeneous_degree(const QVec& v) const;

    friend bool operator==(const GradedAlgebra&, const GradedAlgebra&) = default;

private:
    CoefficientRing ring_;
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::vector<Q> c_;
    QVec unit_;
};

// A graded algebra with a differential, d(b_i) = sum_j D(j,i) b_j.
struct DgAlgebra {
    GradedAlgebra algebra;
    QMat differential;

    std::size_t dim() const noexcept { return algebra.dim(); }
    const CoefficientRing& ring() const noexcept { return algebra.ring(); }
    QVec d(const QVec& v) const { return algebra.normalize(differential * v); }

    friend bool operator==(const DgAlgebra&, const DgAlgebra&) = default;
};

struct AxiomCheck {
    AxiomCheck() = default;
    explicit AxiomCheck(std::string name) : axiom(std::move(name)) {}

    std::string axiom;
    bool passed = true;
    std::vector<std::size_t> witness;
    std::string detail;
};

struct VerificationReport {
    std::vector<AxiomCheck> checks;

    bool passed() const;
    const AxiomCheck* failure() const;
    const AxiomCheck* find(const std::string& axiom) const;
    std::string summary() const;
};

VerificationReport verify_dg_algebra(const GradedAlgebra& a, const QMat& d);
inline VerificationReport verify_dg_algebra(const DgAlgebra& a) { return verify_dg_algebra(a.algebra, a.differential); }

// Sub-dg-algebra spanned by homogeneous vectors (columns of the embedding).
struct EmbeddedAlgebra {
    DgAlgebra algebra;
    QMat embedding; // dim(parent) x dim(sub)
};

// Restriction to a d-stable graded subalgebra containing `unit` with the
// given homogeneous basis; throws PreconditionFailed if it is not closed.
EmbeddedAlgebra restrict_to_subalgebra(const DgAlgebra& a, const std::vector<QVec>& basis, const QVec& unit);

EmbeddedAlgebra cycles_subalgebra(const DgAlgebra& a);
DgAlgebra opposite_dg_algebra(const DgAlgebra& a);
DgAlgebra direct_product(const DgAlgebra& a, const DgAlgebra& b);

// Degree-0 part of the center.
std::vector<QVec> center_degree_zero(const GradedAlgebra& a);
std::vector<QVec> primitive_central_idempotents(const DgAlgebra& a);
// all sums of primitive central idempotents, including 0 and 1
std::vector<QVec> central_homogeneous_idempotents(const DgAlgebra& a);

struct Block {
    DgAlgebra algebra;
    QMat embedding;
    QVec idempotent;
};
std::vector<Block> block_decompose(const DgAlgebra& a);

// homogeneous basis vectors of the span of `vectors`, grouped by degree
std::vector<QVec> homogeneous_basis(const GradedAlgebra& a, const std::vector<QVec>& vectors);

// minimal polynomial of left multiplication by x on the subalgebra with unit e,
// coefficients low to high, monic
std::vector<Q> minimal_polynomial(const GradedAlgebra& a, const QVec& x, const QVec& e);

} // namespace dgo
