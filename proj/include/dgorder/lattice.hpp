#pragma once

#include "dgorder/linalg.hpp"

#include <optional>
#include <vector>

namespace dgo {

// Finitely generated Z-submodule of Q^n. The basis is the row-style HNF of the
// generators after clearing denominators, so equal lattices have equal bases.
class ZLattice {
public:
    ZLattice() = default;
    explicit ZLattice(std::size_t ambient) : n_(ambient), basis_(0, ambient) {}
    ZLattice(std::size_t ambient, const std::vector<QVec>& generators);
    ZLattice(const QMat& generator_rows);

    static ZLattice standard(std::size_t n);

    std::size_t ambient_dim() const noexcept { return n_; }
    std::size_t rank() const noexcept { return basis_.rows(); }
    bool is_full() const noexcept { return rank() == n_; }
    const QMat& basis() const noexcept { return basis_; }
    std::vector<QVec> basis_vectors() const { return basis_.row_list(); }

    bool contains(const QVec& v) const;
    bool contains(const ZLattice& o) const;
    // coordinates in the basis; nullopt when v is not in the rational span
    std::optional<QVec> rational_coordinates(const QVec& v) const;
    // integral coordinates; nullopt when v is not in the lattice
    std::optional<ZVec> coordinates(const QVec& v) const;

    ZLattice operator+(const ZLattice& o) const;
    ZLattice scaled(const Q& c) const;
    // image under v -> m * v (m maps the ambient space to Q^{m.rows()})
    ZLattice mapped(const QMat& m) const;

    // |det| of the basis for a full lattice (covolume relative to Z^n)
    Q volume() const;

    friend bool operator==(const ZLattice& a, const ZLattice& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }

private:
    std::size_t n_ = 0;
    QMat basis_;
};

ZLattice lattice_intersect(const ZLattice& a, const ZLattice& b);

// [super : sub] for full lattices sub within super (rational in general)
Q lattice_index(const ZLattice& sub, const ZLattice& super);

// {x in Q^n : x * m in Z^N}; m must have full row rank n
ZLattice integral_preimage(const QMat& m);

// {x in L : x * m in Z^N}, m of size ambient x N, any rank
ZLattice integral_preimage_in(const ZLattice& lattice, const QMat& m);

// Lattices inside a subspace: the part of `lattice` supported on the given
// coordinates (other coordinates zero).
ZLattice coordinate_slice(const ZLattice& lattice, const std::vector<std::size_t>& support);

} // namespace dgo
