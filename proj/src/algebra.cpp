#include "dgorder/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dgo {

GradedAlgebra::GradedAlgebra(CoefficientRing ring, std::vector<std::string> names, std::vector<int> degrees)
    : ring_(ring), names_(std::move(names)), degrees_(std::move(degrees)) {
    if (names_.size() != degrees_.size()) throw Error(ErrorCode::DimensionMismatch, "names and degrees differ in length");
    c_.assign(dim() * dim() * dim(), Q(0));
    unit_.assign(dim(), Q(0));
}

std::vector<int> GradedAlgebra::degree_set() const {
    std::set<int> s(degrees_.begin(), degrees_.end());
    return {s.begin(), s.end()};
}

std::vector<std::size_t> GradedAlgebra::indices_of_degree(int d) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i)
        if (degrees_[i] == d) out.push_back(i);
    return out;
}

void GradedAlgebra::set_constant(std::size_t i, std::size_t j, std::size_t k, const Q& v) {
    c_.at((i * dim() + j) * dim() + k) = ring_.normalize(v);
}

QVec GradedAlgebra::normalize(const QVec& v) const {
    if (!ring_.is_finite()) return v;
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = ring_.normalize(v[i]);
    return r;
}

QVec GradedAlgebra::multiply(const QVec& a, const QVec& b) const {
    const std::size_t n = dim();
    if (a.size() != n || b.size() != n) throw Error(ErrorCode::DimensionMismatch, "algebra product");
    QVec r(n, Q(0));
    Q t;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            t = a[i] * b[j];
            const Q* row = &c_[(i * n + j) * n];
            for (std::size_t k = 0; k < n; ++k)
                if (row[k] != 0) r[k] += t * row[k];
        }
    }
    return normalize(r);
}

QVec GradedAlgebra::basis_product(std::size_t i, std::size_t j) const {
    const std::size_t n = dim();
    return QVec(c_.begin() + (i * n + j) * n, c_.begin() + (i * n + j + 1) * n);
}

QMat GradedAlgebra::left_multiplication(const QVec& a) const {
    QMat m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, multiply(a, unit_vector(dim(), j)));
    return m;
}

QMat GradedAlgebra::right_multiplication(const QVec& a) const {
    QMat m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, multiply(unit_vector(dim(), j), a));
    return m;
}

bool GradedAlgebra::detect_unit() {
    const std::size_t n = dim();
    // u * b_j = b_j and b_j * u = b_j, linear in u
    QMat sys(2 * n * n, n);
    QVec rhs(2 * n * n, Q(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                sys(j * n + k, i) = constant(i, j, k);
                sys(n * n + j * n + k, i) = constant(j, i, k);
            }
            rhs[j * n + k] = rhs[n * n + j * n + k] = (j == k) ? 1 : 0;
        }
    auto u = solve(sys, rhs, ring_.fraction_field());
    if (!u || !std::all_of(u->begin(), u->end(), [&](const Q& x) { return ring_.contains(x); })) return false;
    unit_ = normalize(*u);
    return true;
}

std::optional<int> GradedAlgebra::homogeneous_degree(const QVec& v) const {
    std::optional<int> deg;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (v[i] == 0) continue;
        if (deg && *deg != degrees_[i]) return std::nullopt;
        deg = degrees_[i];
    }
    return deg;
}

// ---- reports ----

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* VerificationReport::failure() const {
    for (const auto& c : checks)
        if (!c.passed) return &c;
    return nullptr;
}

const AxiomCheck* VerificationReport::find(const std::string& axiom) const {
    for (const auto& c : checks)
        if (c.axiom == axiom) return &c;
    return nullptr;
}

std::string VerificationReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << c.axiom << ": " << (c.passed ? "pass" : "FAIL");
        if (!c.passed) {
            os << " witness (";
            for (std::size_t i = 0; i < c.witness.size(); ++i) os << (i ? "," : "") << c.witness[i];
            os << ")";
            if (!c.detail.empty()) os << " " << c.detail;
        }
        os << '\n';
    }
    return os.str();
}


VerificationReport verify_dg_algebra(const GradedAlgebra& a, const QMat& d) {
    const std::size_t n = a.dim();
    if (d.rows() != n || d.cols() != n)
        throw Error(ErrorCode::DimensionMismatch, "differential is " + std::to_string(d.rows()) + "x" +
                                                      std::to_string(d.cols()) + ", algebra has dimension " +
                                                      std::to_string(n));
    const auto& ring = a.ring();
    VerificationReport rep;

    AxiomCheck coeff("coefficients");
    for (std::size_t i = 0; i < n && coeff.passed; ++i)
        for (std::size_t j = 0; j < n && coeff.passed; ++j) {
            if (!ring.contains(d(i, j))) {
                coeff.passed = false;
                coeff.witness = {j, i};
                coeff.detail = "differential entry outside " + ring.name();
            }
            for (std::size_t k = 0; k < n && coeff.passed; ++k)
                if (!ring.contains(a.constant(i, j, k))) {
                    coeff.passed = false;
                    coeff.witness = {i, j, k};
                    coeff.detail = "structure constant outside " + ring.name();
                }
        }
    rep.checks.push_back(coeff);
    if (!coeff.passed) return rep; // later checks reduce in the ring

    std::vector<QVec> prod(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = a.basis_product(i, j);

    AxiomCheck assoc("associativity");
    for (std::size_t i = 0; i < n && assoc.passed; ++i)
        for (std::size_t j = 0; j < n && assoc.passed; ++j)
            for (std::size_t k = 0; k < n && assoc.passed; ++k) {
                QVec lhs = a.multiply(prod[i * n + j], unit_vector(n, k));
                QVec rhs = a.multiply(unit_vector(n, i), prod[j * n + k]);
                if (lhs != rhs) {
                    assoc.passed = false;
                    assoc.witness = {i, j, k};
                }
            }
    rep.checks.push_back(assoc);

    AxiomCheck unit("unit");
    for (std::size_t i = 0; i < n && unit.passed; ++i) {
        QVec b = unit_vector(n, i);
        if (a.multiply(a.unit(), b) != b || a.multiply(b, a.unit()) != b) {
            unit.passed = false;
            unit.witness = {i};
        }
    }
    rep.checks.push_back(unit);

    AxiomCheck grading("grading");
    for (std::size_t i = 0; i < n && grading.passed; ++i)
        for (std::size_t j = 0; j < n && grading.passed; ++j)
            for (std::size_t k = 0; k < n && grading.passed; ++k)
                if (a.constant(i, j, k) != 0 && a.degree(k) != a.degree(i) + a.degree(j)) {
                    grading.passed = false;
                    grading.witness = {i, j, k};
                }
    rep.checks.push_back(grading);

    AxiomCheck deg1("degree+1");
    for (std::size_t i = 0; i < n && deg1.passed; ++i)
        for (std::size_t j = 0; j < n && deg1.passed; ++j)
            if (ring.normalize(d(j, i)) != 0 && a.degree(j) != a.degree(i) + 1) {
                deg1.passed = false;
                deg1.witness = {i, j};
                deg1.detail = "d(" + a.names()[i] + ") has a component on " + a.names()[j];
            }
    rep.checks.push_back(deg1);

    AxiomCheck square("square-zero");
    QMat d2 = d * d;
    for (std::size_t i = 0; i < n && square.passed; ++i)
        for (std::size_t j = 0; j < n && square.passed; ++j)
            if (ring.normalize(d2(j, i)) != 0) {
                square.passed = false;
                square.witness = {i};
            }
    rep.checks.push_back(square);

    AxiomCheck leibniz("Leibniz");
    std::vector<QVec> db(n);
    for (std::size_t i = 0; i < n; ++i) db[i] = a.normalize(d.col(i));
    for (std::size_t i = 0; i < n && leibniz.passed; ++i)
        for (std::size_t j = 0; j < n && leibniz.passed; ++j) {
            QVec lhs = a.normalize(d * prod[i * n + j]);
            QVec rhs = a.multiply(db[i], unit_vector(n, j));
            QVec t = a.multiply(unit_vector(n, i), db[j]);
            rhs = a.normalize(parity_sign(a.degree(i)) == 1 ? rhs + t : rhs - t);
            if (lhs != rhs) {
                leibniz.passed = false;
                leibniz.witness = {i, j};
            }
        }
    rep.checks.push_back(leibniz);

    AxiomCheck d1("d(1)=0");
    if (!is_zero(a.normalize(d * a.unit()))) d1.passed = false;
    rep.checks.push_back(d1);
    return rep;
}

// ---- subalgebras ----

std::vector<QVec> homogeneous_basis(const GradedAlgebra& a, const std::vector<QVec>& vectors) {
    CoefficientRing f = a.ring().fraction_field();
    std::vector<QVec> out;
    for (int deg : a.degree_set()) {
        auto idx = a.indices_of_degree(deg);
        std::vector<QVec> parts;
        for (const auto& v : vectors) {
            QVec p(a.dim(), Q(0));
            for (auto i : idx) p[i] = v[i];
            if (!is_zero(p)) parts.push_back(p);
        }
        Subspace s(a.dim(), f, parts);
        for (const auto& b : s.basis()) out.push_back(b);
    }
    return out;
}

EmbeddedAlgebra restrict_to_subalgebra(const DgAlgebra& a, const std::vector<QVec>& basis, const QVec& unit) {
    const std::size_t n = a.dim(), k = basis.size();
    const GradedAlgebra& A = a.algebra;
    CoefficientRing f = A.ring().fraction_field();
    QMat emb = QMat::from_cols(basis, n);
    auto coords = [&](const QVec& v) {
        auto x = solve(emb, A.normalize(v), f);
        if (!x) throw Error(ErrorCode::PreconditionFailed, "span is not closed");
        for (const auto& c : *x)
            if (!A.ring().contains(c)) throw Error(ErrorCode::PreconditionFailed, "coordinates leave the coefficient ring");
        return A.normalize(*x);
    };
    std::vector<std::string> names;
    std::vector<int> degs;
    for (std::size_t i = 0; i < k; ++i) {
        auto d = A.homogeneous_degree(basis[i]);
        if (!d) throw Error(ErrorCode::PreconditionFailed, "basis vector is not homogeneous");
        degs.push_back(*d);
        names.push_back("z" + std::to_string(i));
    }
    GradedAlgebra sub(A.ring(), names, degs);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            QVec c = coords(A.multiply(basis[i], basis[j]));
            for (std::size_t l = 0; l < k; ++l)
                if (c[l] != 0) sub.set_constant(i, j, l, c[l]);
        }
    sub.set_unit(coords(unit));
    QMat dsub(k, k);
    for (std::size_t i = 0; i < k; ++i) dsub.set_col(i, coords(a.d(basis[i])));
    return {DgAlgebra{sub, dsub}, emb};
}

namespace {

// Reorders a basis of a lattice/subspace so that `v` is the first vector.
std::vector<QVec> basis_starting_with(const std::vector<QVec>& basis, const QVec& v, const CoefficientRing& ring) {
    const std::size_t n = v.size(), k = basis.size();
    QMat b = QMat::from_rows(basis, n);
    auto c = solve_left(b, v, ring.fraction_field());
    if (!c) throw Error(ErrorCode::PreconditionFailed, "vector outside span");
    if (ring.is_field()) {
        Subspace s(n, ring);
        s.insert(v);
        std::vector<QVec> out{v};
        for (const auto& w : basis)
            if (s.insert(w)) out.push_back(w);
        return out;
    }
    // integral case: complete the primitive coordinate row to a unimodular matrix
    ZMat row(1, k);
    for (std::size_t i = 0; i < k; ++i) row(0, i) = (*c)[i].get_num();
    SmithForm s = smith_normal_form(row);
    if (s.S(0, 0) != 1) throw Error(ErrorCode::PreconditionFailed, "vector is not primitive");
    QMat vb = to_rational(s.V) * b;
    std::vector<QVec> out = vb.row_list();
    out[0] = v;
    return out;
}

} // namespace

EmbeddedAlgebra cycles_subalgebra(const DgAlgebra& a) {
    const GradedAlgebra& A = a.algebra;
    std::vector<QVec> basis;
    for (int deg : A.degree_set()) {
        auto idx = A.indices_of_degree(deg);
        QMat dcols = a.differential.select_cols(idx);
        std::vector<QVec> ker;
        for (const auto& k : kernel_basis(dcols, A.ring().is_field() ? A.ring() : CoefficientRing::integers())) {
            QVec v(A.dim(), Q(0));
            for (std::size_t t = 0; t < idx.size(); ++t) v[idx[t]] = k[t];
            ker.push_back(v);
        }
        if (deg == 0 && !ker.empty()) ker = basis_starting_with(ker, A.unit(), A.ring());
        basis.insert(basis.end(), ker.begin(), ker.end());
    }
    return restrict_to_subalgebra(a, basis, A.unit());
}

DgAlgebra opposite_dg_algebra(const DgAlgebra& a) {
    const GradedAlgebra& A = a.algebra;
    GradedAlgebra op(A.ring(), A.names(), A.degrees());
    const std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int s = parity_sign(A.degree(i) * A.degree(j));
            for (std::size_t k = 0; k < n; ++k)
                if (A.constant(j, i, k) != 0) op.set_constant(i, j, k, s * A.constant(j, i, k));
        }
    op.set_unit(A.unit());
    return {op, a.differential};
}

DgAlgebra direct_product(const DgAlgebra& a, const DgAlgebra& b) {
    if (!(a.ring() == b.ring())) throw Error(ErrorCode::PreconditionFailed, "factors over different rings");
    const std::size_t n = a.dim(), m = b.dim();
    std::vector<std::string> names;
    std::vector<int> degs;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("L." + a.algebra.names()[i]);
        degs.push_back(a.algebra.degree(i));
    }
    for (std::size_t i = 0; i < m; ++i) {
        names.push_back("R." + b.algebra.names()[i]);
        degs.push_back(b.algebra.degree(i));
    }
    GradedAlgebra p(a.ring(), names, degs);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (a.algebra.constant(i, j, k) != 0) p.set_constant(i, j, k, a.algebra.constant(i, j, k));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                if (b.algebra.constant(i, j, k) != 0) p.set_constant(n + i, n + j, n + k, b.algebra.constant(i, j, k));
    QVec u(n + m);
    for (std::size_t i = 0; i < n; ++i) u[i] = a.algebra.unit()[i];
    for (std::size_t i = 0; i < m; ++i) u[n + i] = b.algebra.unit()[i];
    p.set_unit(u);
    QMat d(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d(i, j) = a.differential(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) d(n + i, n + j) = b.differential(i, j);
    return {p, d};
}

// ---- center and idempotents ----

std::vector<Q> minimal_polynomial(const GradedAlgebra& a, const QVec& x, const QVec& e) {
    CoefficientRing f = a.ring().fraction_field();
    std::vector<QVec> powers{e};
    Subspace span(a.dim(), f);
    span.insert(e);
    for (;;) {
        QVec next = a.multiply(x, powers.back());
        if (span.contains(next)) {
            QMat m = QMat::from_cols(powers, a.dim());
            auto c = solve(m, next, f);
            std::vector<Q> poly(powers.size() + 1);
            for (std::size_t i = 0; i < powers.size(); ++i) poly[i] = f.normalize(-(*c)[i]);
            poly.back() = 1;
            return poly;
        }
        span.insert(next);
        powers.push_back(next);
    }
}

std::vector<QVec> center_degree_zero(const GradedAlgebra& a) {
    const std::size_t n = a.dim();
    auto idx = a.indices_of_degree(0);
    CoefficientRing f = a.ring().fraction_field();
    QMat sys(n * n, idx.size());
    for (std::size_t t = 0; t < idx.size(); ++t) {
        std::size_t z = idx[t];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) sys(i * n + k, t) = a.constant(z, i, k) - a.constant(i, z, k);
    }
    std::vector<QVec> out;
    for (const auto& k : kernel_basis(sys, f)) {
        QVec v(n, Q(0));
        for (std::size_t t = 0; t < idx.size(); ++t) v[idx[t]] = k[t];
        out.push_back(v);
    }
    return out;
}

namespace {

std::vector<Z> divisors(Z n) {
    n = abs(n);
    std::vector<Z> out;
    for (Z d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    return out;
}

std::vector<Q> field_roots(const std::vector<Q>& poly, const CoefficientRing& f) {
    auto eval = [&](const Q& x) {
        Q v = 0;
        for (std::size_t i = poly.size(); i-- > 0;) v = f.normalize(v * x + poly[i]);
        return v;
    };
    std::vector<Q> roots;
    if (f.is_finite()) {
        for (long r = 0; r < f.modulus(); ++r)
            if (eval(Q(r)) == 0) roots.emplace_back(r);
        return roots;
    }
    Z den = 1;
    for (const auto& c : poly) den = lcm(den, c.get_den());
    std::vector<Z> ip;
    for (const auto& c : poly) ip.push_back(Q(c * den).get_num());
    std::size_t low = 0;
    while (low < ip.size() && ip[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    if (low + 1 >= ip.size()) return roots;
    // rational root test; skip huge constant terms
    if (abs(ip[low]) > Z("1000000000000") || abs(ip.back()) > Z("1000000000000")) return roots;
    for (const auto& p : divisors(ip[low]))
        for (const auto& q : divisors(ip.back()))
            for (int s : {1, -1}) {
                Q r(Z(s * p), q);
                r.canonicalize();
                if (eval(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
            }
    return roots;
}

QVec eval_poly(const GradedAlgebra& a, const std::vector<Q>& poly, const QVec& x, const QVec& e) {
    QVec r(a.dim(), Q(0));
    for (std::size_t i = poly.size(); i-- > 0;) r = a.normalize(a.multiply(x, r) + poly[i] * e);
    return r;
}

// splits e using root r of the minimal polynomial of x on Ae
std::optional<QVec> split_off(const GradedAlgebra& a, const QVec& x, const QVec& e, const std::vector<Q>& m,
                              const Q& r, const CoefficientRing& f) {
    // q = m / (t - r)
    std::vector<Q> q(m.size() - 1);
    Q carry = 0;
    for (std::size_t i = m.size() - 1; i-- > 0;) {
        carry = f.normalize(m[i + 1] + carry * r);
        q[i] = carry;
    }
    Q qr = 0;
    for (std::size_t i = q.size(); i-- > 0;) qr = f.normalize(qr * r + q[i]);
    if (qr == 0) return std::nullopt;
    QVec g = a.normalize(f.inverse(qr) * eval_poly(a, q, x, e));
    if (g == e || is_zero(g) || a.multiply(g, g) != g) return std::nullopt;
    return g;
}

std::vector<QVec> enumerate_idempotents(const GradedAlgebra& a, const std::vector<QVec>& center) {
    const long p = a.ring().modulus();
    double count = 1;
    for (std::size_t i = 0; i < center.size(); ++i) count *= static_cast<double>(p);
    if (count > 1e6) throw Error(ErrorCode::DimensionTooLarge, "center too large to enumerate");
    std::vector<QVec> idem;
    std::vector<long> digits(center.size(), 0);
    for (;;) {
        QVec v(a.dim(), Q(0));
        for (std::size_t i = 0; i < center.size(); ++i)
            if (digits[i]) v = v + Q(digits[i]) * center[i];
        v = a.normalize(v);
        if (!is_zero(v) && a.multiply(v, v) == v) idem.push_back(v);
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    std::vector<QVec> prim;
    for (const auto& e : idem) {
        bool primitive = true;
        for (const auto& g : idem)
            if (g != e && a.multiply(g, e) == g) primitive = false;
        if (primitive) prim.push_back(e);
    }
    return prim;
}

} // namespace

std::vector<QVec> primitive_central_idempotents(const DgAlgebra& da) {
    const GradedAlgebra& a = da.algebra;
    if (a.ring().characteristic() == 2) throw Error(ErrorCode::CharTwo, "characteristic 2");
    if (a.ring().kind() == RingKind::ResidueRing) throw Error(ErrorCode::UnsupportedRing, "idempotents over " + a.ring().name());
    CoefficientRing f = a.ring().fraction_field();
    auto center = center_degree_zero(a);
    std::vector<QVec> prim;
    if (f.is_finite() && center.size() <= 8) {
        prim = enumerate_idempotents(a, center);
    } else {
        std::vector<QVec> cands = center;
        for (std::size_t i = 0; i + 1 < center.size(); ++i) cands.push_back(center[i] + Q(2) * center[i + 1]);
        prim = {a.unit()};
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t t = 0; t < prim.size() && !changed; ++t) {
                const QVec e = prim[t];
                for (const auto& c : cands) {
                    QVec x = a.multiply(c, e);
                    auto m = minimal_polynomial(a, x, e);
                    if (m.size() <= 2) continue;
                    for (const auto& r : field_roots(m, f)) {
                        auto g = split_off(a, x, e, m, r, f);
                        if (!g) continue;
                        prim[t] = *g;
                        prim.push_back(a.normalize(e - *g));
                        changed = true;
                        break;
                    }
                    if (changed) break;
                }
            }
        }
    }
    std::sort(prim.begin(), prim.end());
    for (const auto& e : prim)
        if (!is_zero(da.d(e))) throw std::logic_error("central idempotent with nonzero differential");
    return prim;
}

std::vector<QVec> central_homogeneous_idempotents(const DgAlgebra& a) {
    auto prim = primitive_central_idempotents(a);
    std::vector<QVec> all;
    for (std::size_t mask = 0; mask < (std::size_t{1} << prim.size()); ++mask) {
        QVec v(a.dim(), Q(0));
        for (std::size_t i = 0; i < prim.size(); ++i)
            if (mask & (std::size_t{1} << i)) v = v + prim[i];
        all.push_back(a.algebra.normalize(v));
    }
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<Block> block_decompose(const DgAlgebra& a) {
    std::vector<Block> out;
    for (const auto& e : primitive_central_idempotents(a)) {
        std::vector<QVec> gens;
        for (std::size_t i = 0; i < a.dim(); ++i) gens.push_back(a.algebra.multiply(unit_vector(a.dim(), i), e));
        auto basis = homogeneous_basis(a.algebra, gens);
        auto emb = restrict_to_subalgebra(a, basis, e);
        out.push_back({emb.algebra, emb.embedding, e});
    }
    return out;
}

} // namespace dgo
