#include "dgorder/lattice.hpp"

namespace dgo {

namespace {

const CoefficientRing kQ = CoefficientRing::rationals();
const CoefficientRing kZ = CoefficientRing::integers();

QMat canonical_basis(const QMat& gens) {
    if (gens.rows() == 0) return QMat(0, gens.cols());
    Z den = common_denominator(gens);
    ZMat scaled(gens.rows(), gens.cols());
    for (std::size_t i = 0; i < gens.rows(); ++i)
        for (std::size_t j = 0; j < gens.cols(); ++j) scaled(i, j) = Q(gens(i, j) * den).get_num();
    ZMat h = hermite_normal_form(scaled).H;
    std::size_t r = 0;
    while (r < h.rows()) {
        bool zero = true;
        for (std::size_t j = 0; j < h.cols() && zero; ++j) zero = h(r, j) == 0;
        if (zero) break;
        ++r;
    }
    QMat out(r, gens.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < gens.cols(); ++j) out(i, j) = Q(h(i, j)) / den;
    return out;
}

} // namespace

ZLattice::ZLattice(std::size_t ambient, const std::vector<QVec>& generators) : n_(ambient) {
    basis_ = canonical_basis(generators.empty() ? QMat(0, ambient) : QMat::from_rows(generators, ambient));
}

ZLattice::ZLattice(const QMat& generator_rows) : n_(generator_rows.cols()), basis_(canonical_basis(generator_rows)) {}

ZLattice ZLattice::standard(std::size_t n) { return ZLattice(QMat::identity(n)); }

std::optional<QVec> ZLattice::rational_coordinates(const QVec& v) const {
    if (v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "lattice coordinates");
    if (rank() == 0) {
        if (is_zero(v)) return QVec{};
        return std::nullopt;
    }
    auto x = solve_left(basis_, v, kQ);
    if (!x) return std::nullopt;
    return x;
}

std::optional<ZVec> ZLattice::coordinates(const QVec& v) const {
    auto x = rational_coordinates(v);
    if (!x || !is_integral(*x)) return std::nullopt;
    ZVec z(x->size());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = (*x)[i].get_num();
    return z;
}

bool ZLattice::contains(const QVec& v) const { return coordinates(v).has_value(); }

bool ZLattice::contains(const ZLattice& o) const {
    for (std::size_t i = 0; i < o.rank(); ++i)
        if (!contains(o.basis_.row(i))) return false;
    return true;
}

ZLattice ZLattice::operator+(const ZLattice& o) const {
    if (o.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "lattice sum");
    return ZLattice(QMat::vstack(basis_, o.basis_));
}

ZLattice ZLattice::scaled(const Q& c) const {
    if (c == 0) return ZLattice(n_);
    return ZLattice(basis_ * c);
}

ZLattice ZLattice::mapped(const QMat& m) const {
    if (m.cols() != n_) throw Error(ErrorCode::DimensionMismatch, "lattice image");
    if (rank() == 0) return ZLattice(m.rows());
    return ZLattice((m * basis_.transpose()).transpose());
}

Q ZLattice::volume() const {
    if (!is_full()) throw Error(ErrorCode::NotFull, "volume of a lattice of rank " + std::to_string(rank()));
    return abs(determinant(basis_, kQ));
}

ZLattice lattice_intersect(const ZLattice& a, const ZLattice& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "lattice intersection");
    const std::size_t n = a.ambient_dim();
    if (a.rank() == 0 || b.rank() == 0) return ZLattice(n);
    QMat stacked = QMat::vstack(a.basis(), -b.basis());
    Z den = common_denominator(stacked);
    QMat scaled = stacked * Q(den);
    std::vector<QVec> gens;
    for (const auto& k : kernel_basis(scaled.transpose(), kZ)) {
        QVec v(n, Q(0));
        for (std::size_t i = 0; i < a.rank(); ++i)
            if (k[i] != 0)
                for (std::size_t j = 0; j < n; ++j) v[j] += k[i] * a.basis()(i, j);
        gens.push_back(v);
    }
    return ZLattice(n, gens);
}

Q lattice_index(const ZLattice& sub, const ZLattice& super) { return sub.volume() / super.volume(); }

ZLattice integral_preimage(const QMat& m) {
    const std::size_t n = m.rows();
    Z c = common_denominator(m);
    ZMat mz = to_integer(m * Q(c));
    SmithForm s = smith_normal_form(mz);
    for (std::size_t i = 0; i < n; ++i)
        if (i >= m.cols() || s.S(i, i) == 0)
            throw Error(ErrorCode::NotFull, "integral preimage of a map that is not injective");
    auto uinv = inverse(to_rational(s.U), kQ);
    std::vector<QVec> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(Q(c, s.S(i, i)) * uinv->row(i));
    for (auto& r : rows)
        for (auto& x : r) x.canonicalize();
    return ZLattice(n, rows);
}

ZLattice integral_preimage_in(const ZLattice& lattice, const QMat& m) {
    const std::size_t k = lattice.rank();
    if (k == 0) return lattice;
    QMat p = lattice.basis() * m;
    QMat aug = QMat::hstack(p, QMat::identity(k));
    ZLattice ys = integral_preimage(aug);
    return ZLattice(ys.basis() * lattice.basis());
}

ZLattice coordinate_slice(const ZLattice& lattice, const std::vector<std::size_t>& support) {
    const std::size_t n = lattice.ambient_dim();
    if (lattice.rank() == 0) return lattice;
    std::vector<bool> in(n, false);
    for (auto s : support) in[s] = true;
    std::vector<std::size_t> outside;
    for (std::size_t j = 0; j < n; ++j)
        if (!in[j]) outside.push_back(j);
    if (outside.empty()) return lattice;
    QMat bout = lattice.basis().select_cols(outside);
    Z den = common_denominator(bout);
    std::vector<QVec> gens;
    for (const auto& y : kernel_basis((bout * Q(den)).transpose(), kZ)) {
        QVec v(n, Q(0));
        for (std::size_t i = 0; i < lattice.rank(); ++i)
            if (y[i] != 0)
                for (std::size_t j = 0; j < n; ++j) v[j] += y[i] * lattice.basis()(i, j);
        gens.push_back(v);
    }
    return ZLattice(n, gens);
}

} // namespace dgo
