#include "dgorder/linalg.hpp"

#include <algorithm>

namespace dgo {

namespace {

void require_field(const CoefficientRing& f) {
    if (!f.is_field()) throw Error(ErrorCode::UnsupportedRing, f.name() + " is not a field");
}

} // namespace

std::vector<std::size_t> rref(QMat& m, const CoefficientRing& field) {
    require_field(field);
    const bool finite = field.is_finite();
    if (finite)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = field.normalize(m(i, j));

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    Q t;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        Q inv = field.inverse(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) {
            m(r, j) *= inv;
            if (finite) m(r, j) = field.normalize(m(r, j));
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Q f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (m(r, j) == 0) continue;
                t = f * m(r, j);
                m(i, j) -= t;
                if (finite) m(i, j) = field.normalize(m(i, j));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const QMat& m, const CoefficientRing& field) {
    QMat c = m;
    return rref(c, field).size();
}

Q determinant(const QMat& m, const CoefficientRing& field) {
    require_field(field);
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    QMat a = m;
    const std::size_t n = a.rows();
    Q det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && field.normalize(a(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            a.swap_rows(p, c);
            det = -det;
        }
        det = field.normalize(det * a(c, c));
        Q inv = field.inverse(a(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            Q f = field.normalize(a(i, c) * inv);
            for (std::size_t j = c; j < n; ++j) a(i, j) = field.normalize(a(i, j) - f * a(c, j));
        }
    }
    return field.normalize(det);
}

std::optional<QMat> inverse(const QMat& m, const CoefficientRing& field) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    QMat aug = QMat::hstack(m, QMat::identity(n));
    auto piv = rref(aug, field);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    return aug.submatrix(0, n, n, n);
}

std::optional<QVec> solve(const QMat& m, const QVec& b, const CoefficientRing& field) {
    if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: right-hand side");
    QMat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto piv = rref(aug, field);
    QVec x(m.cols(), Q(0));
    for (std::size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == m.cols()) return std::nullopt;
        x[piv[r]] = aug(r, m.cols());
    }
    return x;
}

std::optional<QVec> solve_left(const QMat& m, const QVec& b, const CoefficientRing& field) {
    return solve(m.transpose(), b, field);
}

namespace {

std::vector<QVec> field_kernel(const QMat& m, const CoefficientRing& field) {
    QMat r = m;
    auto piv = rref(r, field);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<QVec> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVec v(m.cols(), Q(0));
        v[f] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = field.normalize(-r(k, f));
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<QVec> integer_kernel(const QMat& m) {
    ZMat zm = to_integer(m);
    // W * M^T = H; rows of W opposite zero rows of H span the kernel
    HermiteForm hf = hermite_normal_form(zm.transpose());
    std::vector<QVec> out;
    for (std::size_t i = 0; i < hf.H.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < hf.H.cols() && zero; ++j) zero = hf.H(i, j) == 0;
        if (!zero) continue;
        QVec v(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) v[j] = Q(hf.W(i, j));
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

std::vector<Q> characteristic_polynomial(const QMat& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
    // Faddeev-LeVerrier
    std::vector<Q> c(n + 1, Q(0));
    c[n] = 1;
    QMat acc(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        QMat next = m * acc;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        acc = next;
        QMat am = m * acc;
        Q tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / static_cast<long>(k);
    }
    return c;
}

std::vector<QVec> kernel_basis(const QMat& m, const CoefficientRing& ring) {
    if (ring.is_field()) return field_kernel(m, ring);
    if (ring.kind() == RingKind::Integers) return integer_kernel(m);
    throw Error(ErrorCode::UnsupportedRing, "kernel over " + ring.name());
}

// ---- Smith normal form ----

SmithForm smith_normal_form(const ZMat& m) {
    ZMat A = m;
    const std::size_t r = A.rows(), c = A.cols();
    ZMat U = ZMat::identity(r), V = ZMat::identity(c);

    // every operation keeps M = U * A * V
    auto row_op = [&](std::size_t i, std::size_t j, const Z& k) {
        A.add_row(i, j, k);
        U.add_col(j, i, -k);
    };
    auto col_op = [&](std::size_t i, std::size_t j, const Z& k) {
        A.add_col(i, j, k);
        V.add_row(j, i, -k);
    };
    auto swap_r = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        A.swap_rows(i, j);
        U.swap_cols(i, j);
    };
    auto swap_c = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        A.swap_cols(i, j);
        V.swap_rows(i, j);
    };

    for (std::size_t t = 0; t < std::min(r, c); ++t) {
        bool found = false;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j)
                if (A(i, j) != 0 && (!found || abs(A(i, j)) < abs(A(bi, bj)))) {
                    found = true;
                    bi = i;
                    bj = j;
                }
        if (!found) break;
        swap_r(t, bi);
        swap_c(t, bj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (A(i, t) == 0) continue;
                Z q;
                mpz_fdiv_q(q.get_mpz_t(), A(i, t).get_mpz_t(), A(t, t).get_mpz_t());
                row_op(i, t, -q);
                if (A(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (A(t, j) == 0) continue;
                Z q;
                mpz_fdiv_q(q.get_mpz_t(), A(t, j).get_mpz_t(), A(t, t).get_mpz_t());
                col_op(j, t, -q);
                if (A(t, j) != 0) clean = false;
            }
            if (!clean) {
                std::size_t pi = t, pj = t;
                for (std::size_t i = t + 1; i < r; ++i)
                    if (A(i, t) != 0 && abs(A(i, t)) < abs(A(pi, pj))) { pi = i; pj = t; }
                for (std::size_t j = t + 1; j < c; ++j)
                    if (A(t, j) != 0 && abs(A(t, j)) < abs(A(pi, pj))) { pi = t; pj = j; }
                swap_r(t, pi);
                swap_c(t, pj);
                continue;
            }
            bool divisible = true;
            for (std::size_t i = t + 1; i < r && divisible; ++i)
                for (std::size_t j = t + 1; j < c && divisible; ++j)
                    if (A(i, j) % A(t, t) != 0) {
                        row_op(t, i, Z(1));
                        divisible = false;
                    }
            if (divisible) break;
        }
        if (A(t, t) < 0) {
            for (std::size_t j = 0; j < c; ++j) A(t, j) = -A(t, j);
            for (std::size_t i = 0; i < r; ++i) U(i, t) = -U(i, t);
        }
    }
    return {U, A, V};
}

std::vector<Z> invariant_factors(const ZMat& m) {
    SmithForm s = smith_normal_form(m);
    std::vector<Z> out;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
        if (s.S(i, i) != 0) out.push_back(s.S(i, i));
    return out;
}

// ---- Hermite normal form ----

HermiteForm hermite_normal_form(const ZMat& m) {
    ZMat A = m;
    const std::size_t rows = A.rows(), cols = A.cols();
    ZMat W = ZMat::identity(rows), U = ZMat::identity(rows);

    auto row_op = [&](std::size_t i, std::size_t j, const Z& k) {
        if (k == 0) return;
        A.add_row(i, j, k);
        W.add_row(i, j, k);
        U.add_col(j, i, -k);
    };
    auto swap_r = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        A.swap_rows(i, j);
        W.swap_rows(i, j);
        U.swap_cols(i, j);
    };

    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        bool has_pivot = false;
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (A(i, j) != 0 && (best == rows || abs(A(i, j)) < abs(A(best, j)))) best = i;
            if (best == rows) break;
            has_pivot = true;
            swap_r(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (A(i, j) == 0) continue;
                Z q;
                mpz_fdiv_q(q.get_mpz_t(), A(i, j).get_mpz_t(), A(r, j).get_mpz_t());
                row_op(i, r, -q);
                if (A(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (!has_pivot) continue;
        if (A(r, j) < 0) {
            for (std::size_t k = 0; k < cols; ++k) A(r, k) = -A(r, k);
            for (std::size_t k = 0; k < rows; ++k) W(r, k) = -W(r, k);
            for (std::size_t k = 0; k < rows; ++k) U(k, r) = -U(k, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Z q;
            mpz_fdiv_q(q.get_mpz_t(), A(i, j).get_mpz_t(), A(r, j).get_mpz_t());
            row_op(i, r, -q);
        }
        ++r;
    }
    return {A, U, W};
}

// ---- Subspace ----

Subspace::Subspace(std::size_t ambient, const CoefficientRing& field, const std::vector<QVec>& gens)
    : n_(ambient), field_(field) {
    require_field(field);
    if (gens.empty()) return;
    QMat m = QMat::from_rows(gens, ambient);
    pivots_ = rref(m, field);
    for (std::size_t i = 0; i < pivots_.size(); ++i) basis_.push_back(m.row(i));
}

Subspace Subspace::whole(std::size_t n, const CoefficientRing& field) {
    std::vector<QVec> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(unit_vector(n, i));
    return Subspace(n, field, gens);
}

namespace {

// v minus its projection along the echelon rows
QVec reduce_against(const QVec& v, const std::vector<QVec>& basis, const std::vector<std::size_t>& pivots,
                    const CoefficientRing& f) {
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = f.normalize(v[i]);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Q c = r[pivots[k]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < r.size(); ++j)
            if (basis[k][j] != 0) r[j] = f.normalize(r[j] - c * basis[k][j]);
    }
    return r;
}

} // namespace

bool Subspace::contains(const QVec& v) const {
    if (v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "subspace membership");
    return dgo::is_zero(reduce_against(v, basis_, pivots_, field_));
}

bool Subspace::contains(const Subspace& o) const {
    for (const auto& v : o.basis_)
        if (!contains(v)) return false;
    return true;
}

std::optional<QVec> Subspace::coordinates(const QVec& v) const {
    if (!contains(v)) return std::nullopt;
    QVec c(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = field_.normalize(v[pivots_[k]]);
    return c;
}

bool Subspace::insert(const QVec& v) {
    if (v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "subspace insert");
    QVec r = reduce_against(v, basis_, pivots_, field_);
    std::size_t p = 0;
    while (p < n_ && r[p] == 0) ++p;
    if (p == n_) return false;
    Q inv = field_.inverse(r[p]);
    for (auto& x : r) x = field_.normalize(x * inv);
    for (auto& row : basis_) {
        Q c = row[p];
        if (c == 0) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (r[j] != 0) row[j] = field_.normalize(row[j] - c * r[j]);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    basis_.insert(basis_.begin() + pos, std::move(r));
    return true;
}

Subspace Subspace::operator+(const Subspace& o) const {
    Subspace s = *this;
    for (const auto& v : o.basis_) s.insert(v);
    return s;
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (basis_.empty() || o.basis_.empty()) return Subspace(n_, field_);
    // x * B1 = y * B2
    QMat stacked(basis_.size() + o.basis_.size(), n_);
    for (std::size_t i = 0; i < basis_.size(); ++i) stacked.set_row(i, basis_[i]);
    for (std::size_t i = 0; i < o.basis_.size(); ++i) {
        QVec neg(n_);
        for (std::size_t j = 0; j < n_; ++j) neg[j] = -o.basis_[i][j];
        stacked.set_row(basis_.size() + i, neg);
    }
    std::vector<QVec> gens;
    for (const auto& k : kernel_basis(stacked.transpose(), field_)) {
        QVec v(n_, Q(0));
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (k[i] != 0)
                for (std::size_t j = 0; j < n_; ++j) v[j] += k[i] * basis_[i][j];
        gens.push_back(v);
    }
    return Subspace(n_, field_, gens);
}

bool operator<(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.n_; ++j)
            if (a.basis_[i][j] != b.basis_[i][j]) return a.basis_[i][j] < b.basis_[i][j];
    return false;
}

std::vector<QVec> complement_basis(const Subspace& sub, const Subspace& whole) {
    Subspace s = sub;
    std::vector<QVec> out;
    for (const auto& v : whole.basis())
        if (s.insert(v)) out.push_back(v);
    return out;
}

} // namespace dgo
