#include "dgorder/homology.hpp"

#include <random>
#include <sstream>

namespace dgo {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

Q reduce_mod(const Q& c, const Z& s) {
    if (c.get_den() != 1) throw std::logic_error("non-integral homology coordinate");
    Z r = c.get_num() % s;
    if (r < 0) r += s;
    return Q(r);
}

} // namespace

HomologyPresentation homology(const DgModule& m) {
    const CoefficientRing& ring = m.ring();
    if (!ring.is_field() && ring.kind() != RingKind::Integers)
        throw Error(ErrorCode::UnsupportedRing, "homology over " + ring.name());
    const CoefficientRing qf = ring.fraction_field();
    const std::size_t dim = m.dim();
    HomologyPresentation h;
    h.ring = ring;
    h.delta_ = m.delta();

    for (int n : m.degree_set()) {
        HomologyPresentation::DegreeData dd;
        dd.indices = m.indices_of_degree(n);
        std::vector<QVec> cycles;
        for (const auto& k : kernel_basis(m.delta().select_cols(dd.indices), ring)) {
            QVec v(dim, Q(0));
            for (std::size_t t = 0; t < dd.indices.size(); ++t) v[dd.indices[t]] = k[t];
            cycles.push_back(v);
        }
        std::vector<QVec> boundaries;
        for (auto j : m.indices_of_degree(n - 1)) {
            QVec b = m.normalize(m.delta().col(j));
            if (!is_zero(b)) boundaries.push_back(b);
        }
        std::vector<QVec> rows;
        if (ring.is_field()) {
            Subspace bsp(dim, ring, boundaries);
            rows = bsp.basis();
            dd.orders.assign(rows.size(), Z(1));
            for (const auto& r : complement_basis(bsp, Subspace(dim, ring, cycles))) {
                rows.push_back(r);
                dd.orders.push_back(Z(0));
            }
        } else if (!cycles.empty()) {
            QMat zmat = QMat::from_rows(cycles, dim);
            const std::size_t z = cycles.size();
            ZMat coords(boundaries.size(), z);
            for (std::size_t r = 0; r < boundaries.size(); ++r) {
                auto c = solve_left(zmat, boundaries[r], qf);
                if (!c) throw std::logic_error("boundary is not a cycle");
                for (std::size_t t = 0; t < z; ++t) {
                    if ((*c)[t].get_den() != 1) throw std::logic_error("cycle basis is not saturated");
                    coords(r, t) = (*c)[t].get_num();
                }
            }
            SmithForm s = smith_normal_form(coords);
            QMat rebased = to_rational(s.V) * zmat;
            rows = rebased.row_list();
            for (std::size_t t = 0; t < z; ++t) {
                Z st = t < std::min(s.S.rows(), s.S.cols()) ? Z(abs(s.S(t, t))) : Z(0);
                dd.orders.push_back(st);
            }
        }
        DegreeHomology g;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Z& o = dd.orders[r];
            if (o == 1) {
                dd.generator.push_back(npos);
                continue;
            }
            dd.generator.push_back(h.generators.size());
            h.generators.push_back({n, rows[r], o});
            if (o == 0)
                ++g.free_rank;
            else
                g.torsion.push_back(o);
        }
        dd.cycle_basis = rows.empty() ? QMat(0, dim) : QMat::from_rows(rows, dim);
        h.groups[n] = g;
        h.data_[n] = std::move(dd);
    }
    return h;
}

std::optional<QVec> HomologyPresentation::coordinates(const QVec& v) const {
    QVec dv = delta_ * v;
    for (auto& x : dv) x = ring.normalize(x);
    if (!dgo::is_zero(dv)) return std::nullopt;
    QVec out(generators.size(), Q(0));
    for (const auto& [n, dd] : data_) {
        QVec part(v.size(), Q(0));
        bool any = false;
        for (auto i : dd.indices)
            if (ring.normalize(v[i]) != 0) {
                part[i] = ring.normalize(v[i]);
                any = true;
            }
        if (!any) continue;
        auto y = solve_left(dd.cycle_basis, part, ring.fraction_field());
        if (!y) return std::nullopt;
        for (std::size_t r = 0; r < dd.generator.size(); ++r) {
            if (dd.generator[r] == npos) continue;
            const Z& o = dd.orders[r];
            out[dd.generator[r]] = o > 0 ? reduce_mod((*y)[r], o) : ring.normalize((*y)[r]);
        }
    }
    return out;
}

bool HomologyPresentation::is_zero() const { return generators.empty(); }

std::string HomologyPresentation::summary() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, g] : groups) {
        if (g.is_zero()) continue;
        if (!first) os << ';';
        first = false;
        os << n << ':';
        if (ring.is_field()) {
            os << g.free_rank;
            continue;
        }
        bool sep = false;
        for (std::size_t i = 0; i < g.free_rank; ++i, sep = true) os << (sep ? "," : "") << "Z";
        for (const auto& t : g.torsion) {
            os << (sep ? "," : "") << "Z/" << t;
            sep = true;
        }
    }
    return first ? "0" : os.str();
}

HomologyPresentation homology_ring(const AlgebraRef& a) {
    HomologyPresentation h = homology(regular_module(a));
    const GradedAlgebra& A = a->algebra;
    const std::size_t g = h.generators.size();
    h.products.assign(g, std::vector<QVec>(g));
    std::mt19937 gen(2024);
    std::uniform_int_distribution<int> coef(-2, 2);
    // representative plus a random boundary
    auto perturbed = [&](const HomologyGenerator& x) {
        QVec v = x.representative;
        for (std::size_t j = 0; j < A.dim(); ++j)
            if (A.degree(j) == x.degree - 1) v = v + Q(coef(gen)) * a->d(unit_vector(A.dim(), j));
        if (x.order > 0) v = v + Q(x.order * coef(gen)) * x.representative;
        return A.normalize(v);
    };
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            auto c = h.coordinates(A.multiply(h.generators[i].representative, h.generators[j].representative));
            if (!c) throw std::logic_error("product of cycles is not a cycle");
            h.products[i][j] = *c;
            for (int t = 0; t < 2; ++t) {
                auto c2 = h.coordinates(A.multiply(perturbed(h.generators[i]), perturbed(h.generators[j])));
                if (!c2 || *c2 != *c) throw std::logic_error("homology product depends on representatives");
            }
        }
    return h;
}

HomologyPresentation homology_module(const DgModule& m, const HomologyPresentation& rh) {
    HomologyPresentation h = homology(m);
    h.action.assign(rh.generators.size(), std::vector<QVec>(h.generators.size()));
    for (std::size_t i = 0; i < rh.generators.size(); ++i)
        for (std::size_t j = 0; j < h.generators.size(); ++j) {
            auto c = h.coordinates(m.act(rh.generators[i].representative, h.generators[j].representative));
            if (!c) throw std::logic_error("action of a cycle on a cycle is not a cycle");
            h.action[i][j] = *c;
        }
    return h;
}

// ---- Jacobson radical ----

namespace {

QMat left_mult_lifted(const GradedAlgebra& a, const QVec& x) {
    QMat l = a.left_multiplication(x);
    for (std::size_t i = 0; i < l.rows(); ++i)
        for (std::size_t j = 0; j < l.cols(); ++j) l(i, j) = a.ring().normalize(l(i, j));
    return l;
}

// tr(lift(L_z)^{p^i}) / p^i mod p
long trace_power(const QMat& l, long p, int i) {
    Z pi = 1;
    for (int t = 0; t < i; ++t) pi *= p;
    const Z mod = pi * p;
    const std::size_t n = l.rows();
    ZMat base(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) base(r, c) = l(r, c).get_num();
    auto mulmod = [&](const ZMat& x, const ZMat& y) {
        ZMat z = x * y;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                z(r, c) %= mod;
                if (z(r, c) < 0) z(r, c) += mod;
            }
        return z;
    };
    ZMat acc = ZMat::identity(n);
    Z e = pi;
    while (e > 0) {
        if (e % 2 == 1) acc = mulmod(acc, base);
        base = mulmod(base, base);
        e /= 2;
    }
    Z tr = 0;
    for (std::size_t r = 0; r < n; ++r) tr += acc(r, r);
    tr %= mod;
    if (tr % pi != 0) throw std::logic_error("trace power not divisible");
    Z v = (tr / pi) % p;
    return v.get_si();
}

} // namespace

std::vector<QVec> jacobson_radical(const GradedAlgebra& a) {
    const std::size_t n = a.dim();
    if (n > 64) throw Error(ErrorCode::DimensionTooLarge, "radical computation is capped at dimension 64");
    if (a.ring().kind() == RingKind::ResidueRing && !a.ring().is_field())
        throw Error(ErrorCode::UnsupportedRing, "radical over " + a.ring().name());
    const CoefficientRing f = a.ring().fraction_field();
    if (n == 0) return {};
    if (!f.is_finite()) {
        QVec t(n);
        for (std::size_t k = 0; k < n; ++k) {
            QMat l = a.left_multiplication(unit_vector(n, k));
            Q tr = 0;
            for (std::size_t i = 0; i < n; ++i) tr += l(i, i);
            t[k] = tr;
        }
        QMat form(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Q s = 0;
                for (std::size_t k = 0; k < n; ++k)
                    if (a.constant(i, j, k) != 0) s += a.constant(i, j, k) * t[k];
                form(i, j) = s;
            }
        Subspace rad(n, f, kernel_basis(form, f));
        return rad.basis();
    }
    const long p = f.modulus();
    std::vector<QVec> ideal;
    for (std::size_t i = 0; i < n; ++i) ideal.push_back(unit_vector(n, i));
    Z bound = 1;
    for (int i = 0; bound <= Z(static_cast<long>(n)) && !ideal.empty(); ++i, bound *= p) {
        QMat g(n, ideal.size());
        for (std::size_t b = 0; b < ideal.size(); ++b)
            for (std::size_t j = 0; j < n; ++j)
                g(j, b) = trace_power(left_mult_lifted(a, a.multiply(ideal[b], unit_vector(n, j))), p, i);
        std::vector<QVec> next;
        for (const auto& c : kernel_basis(g, f)) {
            QVec v(n, Q(0));
            for (std::size_t b = 0; b < ideal.size(); ++b)
                if (c[b] != 0) v = v + c[b] * ideal[b];
            next.push_back(a.normalize(v));
        }
        ideal = Subspace(n, f, next).basis();
    }
    return ideal;
}

bool algebra_semisimplicity(const GradedAlgebra& a) { return jacobson_radical(a).empty(); }

// ---- semisimple category criterion ----

SemisimpleCategoryReport semisimple_category_test(const DgAlgebra& a) {
    const CoefficientRing& f = a.ring();
    if (!f.is_field()) throw Error(ErrorCode::UnsupportedRing, "criterion needs field coefficients");
    const GradedAlgebra& A = a.algebra;
    SemisimpleCategoryReport rep;
    auto idx = A.indices_of_degree(-1);
    if (!idx.empty()) {
        auto z = solve(a.differential.select_cols(idx), A.unit(), f);
        if (z) {
            QVec w(A.dim(), Q(0));
            for (std::size_t t = 0; t < idx.size(); ++t) w[idx[t]] = (*z)[t];
            rep.witness = w;
            rep.acyclic = true;
        }
    }
    EmbeddedAlgebra cyc = cycles_subalgebra(a);
    rep.cycles = cyc.embedding.col_list();
    rep.cycles_semisimple = algebra_semisimplicity(cyc.algebra.algebra);
    if (rep.witness) {
        for (const auto& c : rep.cycles) rep.cycles_times_witness.push_back(A.multiply(c, *rep.witness));
        std::vector<QVec> all = rep.cycles;
        all.insert(all.end(), rep.cycles_times_witness.begin(), rep.cycles_times_witness.end());
        rep.direct_sum = all.size() == A.dim() && Subspace(A.dim(), f, all).dim() == A.dim();
    }
    rep.verdict = rep.acyclic && rep.cycles_semisimple;
    return rep;
}

} // namespace dgo
