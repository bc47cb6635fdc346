#include "dgorder/module.hpp"

#include "dgorder/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

namespace dgo {

namespace {

QMat normalized(const QMat& m, const CoefficientRing& ring) {
    QMat out = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = ring.normalize(m(i, j));
    return out;
}

QVec flatten(const QMat& m) {
    QVec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

CoefficientRing linear_ring(const CoefficientRing& r) {
    if (r.is_field() || r.kind() == RingKind::Integers) return r;
    throw Error(ErrorCode::UnsupportedRing, "linear systems over " + r.name());
}

} // namespace

// ---- DgModule ----

DgModule::DgModule(AlgebraRef parent, std::vector<int> degrees, std::vector<QMat> action, QMat delta)
    : parent_(std::move(parent)), degrees_(std::move(degrees)), action_(std::move(action)), delta_(std::move(delta)) {
    const std::size_t m = degrees_.size();
    if (action_.size() != parent_->dim()) throw Error(ErrorCode::DimensionMismatch, "one action matrix per algebra basis element");
    for (const auto& a : action_)
        if (a.rows() != m || a.cols() != m) throw Error(ErrorCode::DimensionMismatch, "action matrix size");
    if (delta_.rows() != m || delta_.cols() != m) throw Error(ErrorCode::DimensionMismatch, "module differential size");
}

std::vector<int> DgModule::degree_set() const {
    std::set<int> s(degrees_.begin(), degrees_.end());
    return {s.begin(), s.end()};
}

std::vector<std::size_t> DgModule::indices_of_degree(int d) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i)
        if (degrees_[i] == d) out.push_back(i);
    return out;
}

std::optional<int> DgModule::homogeneous_degree(const QVec& v) const {
    std::optional<int> d;
    for (std::size_t i = 0; i < dim(); ++i)
        if (v[i] != 0) {
            if (d && *d != degrees_[i]) return std::nullopt;
            d = degrees_[i];
        }
    return d;
}

QVec DgModule::normalize(const QVec& v) const {
    QVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = ring().normalize(v[i]);
    return out;
}

QMat DgModule::action_of(const QVec& a) const {
    QMat m(dim(), dim());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) m = m + a[i] * action_[i];
    return normalized(m, ring());
}

bool operator==(const DgModule& a, const DgModule& b) {
    return *a.parent_ == *b.parent_ && a.degrees_ == b.degrees_ && a.action_ == b.action_ && a.delta_ == b.delta_;
}

VerificationReport verify_dg_module(const DgModule& m) {
    const DgAlgebra& A = m.parent();
    const auto& ring = m.ring();
    const std::size_t n = A.dim(), k = m.dim();
    VerificationReport rep;

    AxiomCheck coeff("coefficients");
    auto check_entries = [&](const QMat& x, std::size_t tag) {
        for (std::size_t r = 0; r < k && coeff.passed; ++r)
            for (std::size_t c = 0; c < k && coeff.passed; ++c)
                if (!ring.contains(x(r, c))) {
                    coeff.passed = false;
                    coeff.witness = {tag, c, r};
                    coeff.detail = "entry outside " + ring.name();
                }
    };
    for (std::size_t i = 0; i < n; ++i) check_entries(m.action(i), i);
    check_entries(m.delta(), n);
    rep.checks.push_back(coeff);
    if (!coeff.passed) return rep;

    AxiomCheck assoc("associativity");
    for (std::size_t i = 0; i < n && assoc.passed; ++i)
        for (std::size_t j = 0; j < n && assoc.passed; ++j) {
            QMat lhs = normalized(m.action(i) * m.action(j), ring);
            if (lhs != m.action_of(A.algebra.basis_product(i, j))) {
                assoc.passed = false;
                assoc.witness = {i, j};
                assoc.detail = "b_i (b_j m) != (b_i b_j) m";
            }
        }
    rep.checks.push_back(assoc);

    AxiomCheck unit("unit");
    if (m.action_of(A.algebra.unit()) != QMat::identity(k)) {
        unit.passed = false;
        unit.detail = "the unit does not act as the identity";
    }
    rep.checks.push_back(unit);

    AxiomCheck grading("grading");
    for (std::size_t i = 0; i < n && grading.passed; ++i)
        for (std::size_t j = 0; j < k && grading.passed; ++j)
            for (std::size_t r = 0; r < k && grading.passed; ++r)
                if (m.action(i)(r, j) != 0 && m.degree(r) != A.algebra.degree(i) + m.degree(j)) {
                    grading.passed = false;
                    grading.witness = {i, j, r};
                    grading.detail = "action does not add degrees";
                }
    rep.checks.push_back(grading);

    AxiomCheck deg1("degree+1");
    for (std::size_t j = 0; j < k && deg1.passed; ++j)
        for (std::size_t r = 0; r < k && deg1.passed; ++r)
            if (m.delta()(r, j) != 0 && m.degree(r) != m.degree(j) + 1) {
                deg1.passed = false;
                deg1.witness = {j, r};
                deg1.detail = "Delta does not raise degree by one";
            }
    rep.checks.push_back(deg1);

    AxiomCheck square("square-zero");
    QMat sq = normalized(m.delta() * m.delta(), ring);
    for (std::size_t j = 0; j < k && square.passed; ++j)
        for (std::size_t r = 0; r < k && square.passed; ++r)
            if (sq(r, j) != 0) {
                square.passed = false;
                square.witness = {j};
                square.detail = "Delta^2 != 0";
            }
    rep.checks.push_back(square);

    // Delta(b m) = d(b) m + (-1)^{|b|} b Delta(m)
    AxiomCheck leibniz("Leibniz");
    for (std::size_t i = 0; i < n && leibniz.passed; ++i) {
        const QMat& rho = m.action(i);
        QMat lhs = normalized(m.delta() * rho, ring);
        QMat db = m.action_of(A.d(unit_vector(n, i)));
        QMat rhs = parity_sign(A.algebra.degree(i)) == 1 ? db + rho * m.delta() : db - rho * m.delta();
        rhs = normalized(rhs, ring);
        for (std::size_t j = 0; j < k && leibniz.passed; ++j)
            if (lhs.col(j) != rhs.col(j)) {
                leibniz.passed = false;
                leibniz.witness = {i, j};
                leibniz.detail = "Delta(b_i m_j) differs from d(b_i) m_j + (-1)^|b_i| b_i Delta(m_j)";
            }
    }
    rep.checks.push_back(leibniz);
    return rep;
}

DgModule regular_module(const AlgebraRef& a) {
    std::vector<QMat> action;
    for (std::size_t i = 0; i < a->dim(); ++i) action.push_back(a->algebra.left_multiplication(unit_vector(a->dim(), i)));
    return DgModule(a, a->algebra.degrees(), std::move(action), a->differential);
}

DgModule zero_module(const AlgebraRef& a) {
    return DgModule(a, {}, std::vector<QMat>(a->dim(), QMat(0, 0)), QMat(0, 0));
}

DgModule column_module(const AlgebraRef& a, const QVec& delta_element, int top) {
    const std::size_t n2 = a->dim();
    std::size_t n = 0;
    while (n * n < n2) ++n;
    if (n * n != n2) throw Error(ErrorCode::PreconditionFailed, "not a full matrix algebra");
    std::vector<int> degs(n);
    for (std::size_t i = 0; i < n; ++i) degs[i] = top - a->algebra.degree(matrix_unit(n, 0, i));
    std::vector<QMat> action;
    for (std::size_t b = 0; b < n2; ++b) {
        QMat r(n, n);
        r(b / n, b % n) = 1; // e_ij m_j = m_i
        action.push_back(r);
    }
    QMat delta(n, n);
    for (std::size_t b = 0; b < n2; ++b)
        if (delta_element[b] != 0) delta = delta + delta_element[b] * action[b];
    return DgModule(a, degs, std::move(action), normalized(delta, a->ring()));
}

DgModule shift(const DgModule& m, int k) {
    std::vector<int> degs = m.degrees();
    for (auto& d : degs) d -= k;
    return DgModule(m.parent_ref(), degs, m.actions(), m.delta());
}

DgModule direct_sum(const DgModule& a, const DgModule& b) {
    if (!(a.parent() == b.parent())) throw Error(ErrorCode::PreconditionFailed, "modules over different algebras");
    const std::size_t p = a.dim(), q = b.dim();
    auto block = [&](const QMat& x, const QMat& y) {
        QMat z(p + q, p + q);
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j) z(i, j) = x(i, j);
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j) z(p + i, p + j) = y(i, j);
        return z;
    };
    std::vector<int> degs = a.degrees();
    degs.insert(degs.end(), b.degrees().begin(), b.degrees().end());
    std::vector<QMat> action;
    for (std::size_t i = 0; i < a.parent().dim(); ++i) action.push_back(block(a.action(i), b.action(i)));
    return DgModule(a.parent_ref(), degs, std::move(action), block(a.delta(), b.delta()));
}

// ---- submodules and quotients ----

std::optional<ClosureWitness> submodule_violation(const DgModule& m, const std::vector<QVec>& basis) {
    CoefficientRing f = m.ring().fraction_field();
    Subspace span(m.dim(), f, basis);
    for (const auto& v : span.basis()) {
        // homogeneous components must lie in the span
        for (int d : m.degree_set()) {
            QVec part(m.dim(), Q(0));
            for (auto i : m.indices_of_degree(d)) part[i] = v[i];
            if (!span.contains(part)) return ClosureWitness{std::nullopt, part};
        }
        QVec dv = m.differential(v);
        if (!span.contains(dv)) return ClosureWitness{std::nullopt, v};
        for (std::size_t i = 0; i < m.parent().dim(); ++i)
            if (!span.contains(m.normalize(m.action(i) * v))) return ClosureWitness{i, v};
    }
    return std::nullopt;
}

EmbeddedModule submodule(const DgModule& m, const std::vector<QVec>& basis) {
    if (!m.ring().is_field()) throw Error(ErrorCode::UnsupportedRing, "submodules are taken over a field");
    if (auto w = submodule_violation(m, basis)) throw Error(ErrorCode::NotSubmodule, "span is not a dg-submodule");
    const CoefficientRing& f = m.ring();
    std::vector<QVec> hb;
    const bool keep = Subspace(m.dim(), f, basis).dim() == basis.size() &&
                      std::all_of(basis.begin(), basis.end(), [&](const QVec& v) { return m.homogeneous_degree(v).has_value(); });
    if (keep) hb = basis;
    for (int d : keep ? std::vector<int>{} : m.degree_set()) {
        std::vector<QVec> parts;
        for (const auto& v : basis) {
            QVec part(m.dim(), Q(0));
            for (auto i : m.indices_of_degree(d)) part[i] = v[i];
            if (!is_zero(part)) parts.push_back(part);
        }
        Subspace part_span(m.dim(), f, parts);
        hb.insert(hb.end(), part_span.basis().begin(), part_span.basis().end());
    }
    const std::size_t k = hb.size();
    QMat emb = QMat::from_cols(hb, m.dim());
    auto coords = [&](const QVec& v) { return *solve(emb, v, f); };
    std::vector<int> degs;
    for (const auto& b : hb) degs.push_back(*m.homogeneous_degree(b));
    std::vector<QMat> action;
    for (std::size_t i = 0; i < m.parent().dim(); ++i) {
        QMat r(k, k);
        for (std::size_t j = 0; j < k; ++j) r.set_col(j, coords(m.normalize(m.action(i) * hb[j])));
        action.push_back(r);
    }
    QMat delta(k, k);
    for (std::size_t j = 0; j < k; ++j) delta.set_col(j, coords(m.differential(hb[j])));
    return {DgModule(m.parent_ref(), degs, std::move(action), delta), emb};
}

QuotientModule quotient_dg_module(const DgModule& m, const std::vector<QVec>& basis) {
    if (!m.ring().is_field()) throw Error(ErrorCode::UnsupportedRing, "quotients are taken over a field");
    if (auto w = submodule_violation(m, basis)) {
        std::string what = w->algebra_index ? "action of basis element " + std::to_string(*w->algebra_index)
                                            : std::string("Delta or grading");
        throw Error(ErrorCode::NotSubmodule, "span is not closed under " + what);
    }
    const CoefficientRing& f = m.ring();
    Subspace sub(m.dim(), f, basis);
    std::vector<QVec> comp = complement_basis(sub, Subspace::whole(m.dim(), f));
    const std::size_t k = comp.size();
    // change of basis [sub | comp]; the quotient coordinates are the last k
    std::vector<QVec> all = sub.basis();
    all.insert(all.end(), comp.begin(), comp.end());
    QMat inv = *inverse(QMat::from_cols(all, m.dim()), f);
    QMat proj(k, m.dim());
    for (std::size_t r = 0; r < k; ++r) proj.set_row(r, inv.row(sub.dim() + r));
    std::vector<int> degs;
    for (const auto& c : comp) degs.push_back(*m.homogeneous_degree(c));
    auto induced = [&](const QMat& x) {
        QMat r(k, k);
        for (std::size_t j = 0; j < k; ++j) r.set_col(j, m.normalize(proj * (x * comp[j])));
        return r;
    };
    std::vector<QMat> action;
    for (std::size_t i = 0; i < m.parent().dim(); ++i) action.push_back(induced(m.action(i)));
    return {DgModule(m.parent_ref(), degs, std::move(action), induced(m.delta())), proj};
}

// ---- Hom complexes ----

QMat HomComplex::as_map(const QVec& coords) const {
    QMat f = maps.empty() ? QMat() : QMat(maps[0].rows(), maps[0].cols());
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) f = f + coords[i] * maps[i];
    return f;
}

std::optional<QVec> HomComplex::coordinates(const QMat& f) const {
    if (maps.empty()) return is_zero(flatten(f)) ? std::optional<QVec>(QVec{}) : std::nullopt;
    std::vector<QVec> cols;
    for (const auto& m : maps) cols.push_back(flatten(m));
    return solve(QMat::from_cols(cols, cols[0].size()), flatten(f), complex.ring().fraction_field());
}

HomComplex hom_complex(const DgModule& m, const DgModule& n) {
    if (!(m.parent() == n.parent())) throw Error(ErrorCode::PreconditionFailed, "modules over different algebras");
    const CoefficientRing& ring = m.ring();
    const CoefficientRing lin = linear_ring(ring);
    const DgAlgebra& A = m.parent();
    const std::size_t a = A.dim(), p = m.dim(), q = n.dim();

    std::set<int> ks;
    for (int dm : m.degrees())
        for (int dn : n.degrees()) ks.insert(dn - dm);

    HomComplex h;
    std::vector<int> degs;
    for (int k : ks) {
        std::vector<std::pair<std::size_t, std::size_t>> unknowns; // (row in N, col in M)
        for (std::size_t r = 0; r < q; ++r)
            for (std::size_t c = 0; c < p; ++c)
                if (n.degree(r) == m.degree(c) + k) unknowns.emplace_back(r, c);
        // F rho_M(b) - (-1)^{|b| k} rho_N(b) F = 0
        QMat sys(a * q * p, unknowns.size());
        for (std::size_t i = 0; i < a; ++i) {
            const QMat& rm = m.action(i);
            const QMat& rn = n.action(i);
            const int s = parity_sign(A.algebra.degree(i) * k);
            for (std::size_t u = 0; u < unknowns.size(); ++u) {
                auto [r0, c0] = unknowns[u];
                // contribution of F(r0,c0) to (F rm)(r0, c) and (rn F)(r, c0)
                for (std::size_t c = 0; c < p; ++c)
                    if (rm(c0, c) != 0) sys((i * q + r0) * p + c, u) += rm(c0, c);
                for (std::size_t r = 0; r < q; ++r)
                    if (rn(r, r0) != 0) sys((i * q + r) * p + c0, u) -= s * rn(r, r0);
            }
        }
        for (const auto& v : kernel_basis(normalized(sys, ring), lin)) {
            QMat f(q, p);
            for (std::size_t u = 0; u < unknowns.size(); ++u) f(unknowns[u].first, unknowns[u].second) = v[u];
            h.maps.push_back(f);
            degs.push_back(k);
        }
    }
    const std::size_t dim = h.maps.size();
    QMat dhom(dim, dim);
    std::vector<QVec> cols;
    for (const auto& f : h.maps) cols.push_back(flatten(f));
    QMat basis_mat = dim ? QMat::from_cols(cols, p * q) : QMat();
    for (std::size_t j = 0; j < dim; ++j) {
        const int k = degs[j];
        QMat g = n.delta() * h.maps[j];
        QMat t = h.maps[j] * m.delta();
        g = normalized(k % 2 == 0 ? g - t : g + t, ring);
        auto c = solve(basis_mat, flatten(g), ring.fraction_field());
        if (!c) throw std::logic_error("d_Hom leaves the Hom complex");
        dhom.set_col(j, *c);
    }
    AlgebraRef base = share(ground_algebra(ring));
    h.complex = DgModule(base, degs, {QMat::identity(dim)}, dhom);
    return h;
}

// ---- endomorphism dg-algebra ----

EndomorphismAlgebra endomorphism_dg_algebra(const ChainComplex& l) {
    const CoefficientRing& ring = l.ring;
    if (l.ranks.empty()) throw Error(ErrorCode::NotAComplex, "empty complex");
    if (l.maps.size() + 1 != l.ranks.size()) throw Error(ErrorCode::NotAComplex, "need one map between consecutive degrees");
    std::vector<int> bdeg;
    std::vector<std::size_t> offset;
    for (std::size_t t = 0; t < l.ranks.size(); ++t) {
        offset.push_back(bdeg.size());
        for (std::size_t i = 0; i < l.ranks[t]; ++i) bdeg.push_back(l.low + static_cast<int>(t));
    }
    const std::size_t n = bdeg.size();
    QMat delta(n, n);
    for (std::size_t t = 0; t < l.maps.size(); ++t) {
        const QMat& f = l.maps[t];
        if (f.rows() != l.ranks[t + 1] || f.cols() != l.ranks[t])
            throw Error(ErrorCode::NotAComplex, "map " + std::to_string(t) + " has the wrong size");
        for (std::size_t r = 0; r < f.rows(); ++r)
            for (std::size_t c = 0; c < f.cols(); ++c) delta(offset[t + 1] + r, offset[t] + c) = ring.normalize(f(r, c));
    }
    if (!normalized(delta * delta, ring).is_zero())
        throw Error(ErrorCode::NotAComplex, "delta^2 != 0");

    EndomorphismAlgebra out;
    out.basis_degrees = bdeg;
    std::vector<std::tuple<int, std::size_t, std::size_t>> order;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) order.emplace_back(bdeg[j] - bdeg[i], i, j);
    std::sort(order.begin(), order.end());
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    std::vector<std::string> names;
    std::vector<int> degs;
    for (const auto& [d, i, j] : order) {
        index[{i, j}] = names.size();
        names.push_back("E" + std::to_string(i) + "_" + std::to_string(j));
        degs.push_back(d);
        out.source.push_back(i);
        out.target.push_back(j);
    }
    GradedAlgebra a(ring, names, degs);
    QVec unit(n * n, Q(0));
    for (std::size_t i = 0; i < n; ++i) {
        unit[index[{i, i}]] = 1;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) a.set_constant(index[{i, j}], index[{j, k}], index[{i, k}], Q(1));
    }
    a.set_unit(unit);
    // Delta as an element: coefficient of E_ij is the coefficient of b_j in delta(b_i)
    QVec d_elem(n * n, Q(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d_elem[index[{i, j}]] = delta(j, i);
    out.algebra = DgAlgebra{a, inner_differential(a, d_elem)};
    return out;
}

// ---- cone ----

ConeTensor cone_tensor(const DgModule& s) {
    const std::size_t m = s.dim();
    std::vector<int> degs = s.degrees();
    for (std::size_t i = 0; i < m; ++i) degs.push_back(s.degree(i) - 1);
    auto doubled = [&](const QMat& x) {
        QMat z(2 * m, 2 * m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) z(i, j) = z(m + i, m + j) = x(i, j);
        return z;
    };
    std::vector<QMat> action;
    for (const auto& a : s.actions()) action.push_back(doubled(a));
    // Delta(u (x) c_a) = delta(u) (x) c_a + (-1)^{|u|} u (x) c_b
    QMat delta = doubled(s.delta());
    for (std::size_t j = 0; j < m; ++j) delta(j, m + j) = s.ring().normalize(Q(parity_sign(s.degree(j))));
    ConeTensor out{DgModule(s.parent_ref(), degs, std::move(action), delta), QMat(2 * m, m), QMat(m, 2 * m)};
    for (std::size_t i = 0; i < m; ++i) {
        out.inclusion(i, i) = 1;
        out.projection(i, m + i) = 1;
    }
    return out;
}

// ---- isomorphism searches ----

namespace {

std::map<int, std::size_t> degree_profile(const std::vector<int>& degs) {
    std::map<int, std::size_t> prof;
    for (int d : degs) ++prof[d];
    return prof;
}

bool is_invertible(const QMat& f, const CoefficientRing& ring) {
    if (f.rows() != f.cols()) return false;
    if (ring.kind() == RingKind::Integers) {
        Q det = determinant(f, CoefficientRing::rationals());
        return det == 1 || det == -1;
    }
    return determinant(f, ring.fraction_field()) != 0;
}

} // namespace

ModuleIsomorphismSearch find_module_isomorphism(const DgModule& m, const DgModule& n) {
    ModuleIsomorphismSearch out;
    if (m.dim() != n.dim() || degree_profile(m.degrees()) != degree_profile(n.degrees())) {
        out.exhaustive = true;
        return out;
    }
    if (m.dim() == 0) {
        out.isomorphism = QMat(0, 0);
        return out;
    }
    const CoefficientRing& ring = m.ring();
    HomComplex h = hom_complex(m, n);
    std::vector<std::size_t> deg0 = h.complex.indices_of_degree(0);
    QMat dcols = h.complex.delta().select_cols(deg0);
    std::vector<QMat> cycles;
    for (const auto& k : kernel_basis(dcols, linear_ring(ring))) {
        QVec coords(h.maps.size(), Q(0));
        for (std::size_t t = 0; t < deg0.size(); ++t) coords[deg0[t]] = k[t];
        cycles.push_back(normalized(h.as_map(coords), ring));
    }
    const std::size_t z = cycles.size();
    auto combo = [&](const std::vector<long>& c) {
        QMat f(n.dim(), m.dim());
        for (std::size_t i = 0; i < z; ++i)
            if (c[i]) f = f + Q(c[i]) * cycles[i];
        return normalized(f, ring);
    };
    if (z == 0) {
        out.exhaustive = true;
        return out;
    }
    for (const auto& f : cycles)
        if (is_invertible(f, ring)) {
            out.isomorphism = f;
            return out;
        }
    if (ring.is_finite()) {
        const long p = ring.modulus();
        double total = 1;
        for (std::size_t i = 0; i < z; ++i) total *= static_cast<double>(p);
        if (total <= 2e5) {
            std::vector<long> c(z, 0);
            for (;;) {
                std::size_t i = 0;
                while (i < z && ++c[i] == p) c[i++] = 0;
                if (i == z) break;
                QMat f = combo(c);
                if (is_invertible(f, ring)) {
                    out.isomorphism = f;
                    return out;
                }
            }
            out.exhaustive = true;
            return out;
        }
    }
    std::mt19937 gen(12345);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int trial = 0; trial < 256; ++trial) {
        std::vector<long> c(z);
        for (auto& x : c) x = coef(gen);
        QMat f = combo(c);
        if (is_invertible(f, ring)) {
            out.isomorphism = f;
            return out;
        }
    }
    return out;
}

VerificationReport verify_dg_algebra_map(const DgAlgebra& a, const DgAlgebra& b, const QMat& phi) {
    VerificationReport rep;
    const auto& ring = b.ring();
    const std::size_t n = a.dim();
    if (phi.rows() != b.dim() || phi.cols() != n) throw Error(ErrorCode::DimensionMismatch, "map size");
    auto image = [&](const QVec& v) { return b.algebra.normalize(phi * v); };

    AxiomCheck degree("degree-0");
    for (std::size_t i = 0; i < n && degree.passed; ++i) {
        QVec v = image(unit_vector(n, i));
        auto d = b.algebra.homogeneous_degree(v);
        if (!is_zero(v) && (!d || *d != a.algebra.degree(i))) {
            degree.passed = false;
            degree.witness = {i};
        }
    }
    rep.checks.push_back(degree);

    AxiomCheck unit("unit");
    unit.passed = image(a.algebra.unit()) == b.algebra.unit();
    rep.checks.push_back(unit);

    AxiomCheck mult("multiplicative");
    for (std::size_t i = 0; i < n && mult.passed; ++i)
        for (std::size_t j = 0; j < n && mult.passed; ++j) {
            QVec lhs = image(a.algebra.basis_product(i, j));
            QVec rhs = b.algebra.multiply(image(unit_vector(n, i)), image(unit_vector(n, j)));
            if (lhs != rhs) {
                mult.passed = false;
                mult.witness = {i, j};
            }
        }
    rep.checks.push_back(mult);

    AxiomCheck chain("commutes-with-d");
    QMat l = normalized(b.differential * phi, ring), r = normalized(phi * a.differential, ring);
    for (std::size_t i = 0; i < n && chain.passed; ++i)
        if (l.col(i) != r.col(i)) {
            chain.passed = false;
            chain.witness = {i};
        }
    rep.checks.push_back(chain);

    AxiomCheck bij("bijective");
    bij.passed = b.dim() == n && rank(phi, ring.fraction_field()) == n;
    rep.checks.push_back(bij);
    return rep;
}

namespace {

// A acting on V = A e, with the induced differential on V.
struct MatrixModel {
    std::vector<QMat> rho;      // rho[i] = action of b_i on V
    std::vector<int> degrees;   // degrees of the V basis
    QMat delta;                 // differential on V
};

std::optional<MatrixModel> matrix_model(const DgAlgebra& da) {
    const GradedAlgebra& a = da.algebra;
    const CoefficientRing& f = a.ring();
    const std::size_t n = a.dim();
    for (auto i : a.indices_of_degree(0)) {
        QVec e = unit_vector(n, i);
        if (a.multiply(e, e) != e) continue;
        std::vector<QVec> gens;
        for (std::size_t j = 0; j < n; ++j) gens.push_back(a.multiply(unit_vector(n, j), e));
        std::vector<QVec> basis = homogeneous_basis(a, gens);
        const std::size_t k = basis.size();
        if (k * k != n) continue;
        QMat emb = QMat::from_cols(basis, n);
        MatrixModel mm;
        for (const auto& v : basis) mm.degrees.push_back(*a.homogeneous_degree(v));
        for (std::size_t b = 0; b < n; ++b) {
            QMat r(k, k);
            for (std::size_t t = 0; t < k; ++t) r.set_col(t, *solve(emb, a.multiply(unit_vector(n, b), basis[t]), f));
            mm.rho.push_back(r);
        }
        std::vector<QVec> flat;
        for (const auto& r : mm.rho) flat.push_back(flatten(r));
        if (rank(QMat::from_cols(flat, k * k), f) != n) continue;
        // delta rho(b) - (-1)^{|b|} rho(b) delta = rho(d b)
        std::vector<std::pair<std::size_t, std::size_t>> unknowns;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c)
                if (mm.degrees[r] == mm.degrees[c] + 1) unknowns.emplace_back(r, c);
        QMat sys(n * k * k, unknowns.size());
        QVec rhs(n * k * k, Q(0));
        for (std::size_t b = 0; b < n; ++b) {
            const QMat& rb = mm.rho[b];
            const int s = parity_sign(a.degree(b));
            QVec target = flatten(normalized([&] {
                QMat t(k, k);
                QVec db = da.d(unit_vector(n, b));
                for (std::size_t c = 0; c < n; ++c)
                    if (db[c] != 0) t = t + db[c] * mm.rho[c];
                return t;
            }(), f));
            for (std::size_t x = 0; x < k * k; ++x) rhs[b * k * k + x] = target[x];
            for (std::size_t u = 0; u < unknowns.size(); ++u) {
                auto [r0, c0] = unknowns[u];
                for (std::size_t c = 0; c < k; ++c) sys(b * k * k + r0 * k + c, u) += rb(c0, c);
                for (std::size_t r = 0; r < k; ++r) sys(b * k * k + r * k + c0, u) -= s * rb(r, r0);
            }
        }
        auto sol = solve(normalized(sys, f), rhs, f);
        if (!sol) continue;
        mm.delta = QMat(k, k);
        for (std::size_t u = 0; u < unknowns.size(); ++u) mm.delta(unknowns[u].first, unknowns[u].second) = (*sol)[u];
        if (!normalized(mm.delta * mm.delta, f).is_zero()) continue;
        return mm;
    }
    return std::nullopt;
}

// Columns: per degree ascending, images of the previous complement, homology
// representatives, then a complement of the cycles.
struct AdaptedBasis {
    QMat basis;
    std::map<int, std::array<std::size_t, 3>> counts;
};

AdaptedBasis adapted_basis(const QMat& delta, const std::vector<int>& degrees, const CoefficientRing& f) {
    const std::size_t k = degrees.size();
    std::set<int> degset(degrees.begin(), degrees.end());
    AdaptedBasis out;
    std::vector<QVec> cols, prev_c;
    for (int d : degset) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < k; ++i)
            if (degrees[i] == d) idx.push_back(i);
        std::vector<QVec> bvecs;
        for (const auto& c : prev_c) {
            QVec v = delta * c;
            for (auto& x : v) x = f.normalize(x);
            bvecs.push_back(v);
        }
        std::vector<QVec> zvecs;
        for (const auto& z : kernel_basis(delta.select_cols(idx), f)) {
            QVec v(k, Q(0));
            for (std::size_t t = 0; t < idx.size(); ++t) v[idx[t]] = z[t];
            zvecs.push_back(v);
        }
        Subspace s(k, f, bvecs);
        std::vector<QVec> hvecs;
        for (const auto& z : zvecs)
            if (s.insert(z)) hvecs.push_back(z);
        Subspace zs(k, f, zvecs);
        std::vector<QVec> cvecs;
        for (auto i : idx)
            if (zs.insert(unit_vector(k, i))) cvecs.push_back(unit_vector(k, i));
        out.counts[d] = {bvecs.size(), hvecs.size(), cvecs.size()};
        for (auto* part : {&bvecs, &hvecs, &cvecs}) cols.insert(cols.end(), part->begin(), part->end());
        prev_c = cvecs;
    }
    out.basis = QMat::from_cols(cols, k);
    return out;
}

} // namespace

std::optional<AlgebraIsomorphism> find_dg_isomorphism(const DgAlgebra& a, const DgAlgebra& b) {
    if (!(a.ring() == b.ring()) || !a.ring().is_field() || a.dim() != b.dim()) return std::nullopt;
    const CoefficientRing& f = a.ring();
    auto ma = matrix_model(a), mb = matrix_model(b);
    if (!ma || !mb) return std::nullopt;
    auto pa = adapted_basis(ma->delta, ma->degrees, f);
    auto pb = adapted_basis(mb->delta, mb->degrees, f);
    if (pa.counts.size() != pb.counts.size()) return std::nullopt;
    // the complexes agree up to a shift of degrees
    const int s = pb.counts.begin()->first - pa.counts.begin()->first;
    for (const auto& [d, c] : pa.counts) {
        auto it = pb.counts.find(d + s);
        if (it == pb.counts.end() || it->second != c) return std::nullopt;
    }
    QMat g = pb.basis * *inverse(pa.basis, f);
    QMat ginv = *inverse(g, f);
    const std::size_t n = a.dim(), k = ma->degrees.size();
    std::vector<QVec> flat;
    for (const auto& r : mb->rho) flat.push_back(flatten(r));
    QMat rho_b = QMat::from_cols(flat, k * k);
    QMat phi(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        QMat conj = normalized(g * ma->rho[i] * ginv, f);
        auto c = solve(rho_b, flatten(conj), f);
        if (!c) return std::nullopt;
        phi.set_col(i, *c);
    }
    AlgebraIsomorphism out{phi, verify_dg_algebra_map(a, b, phi)};
    return out;
}

} // namespace dgo
