#include "dgorder/radicals.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace dgo {

namespace {

constexpr double kPointCap = 2e5;

void require_field(const CoefficientRing& r) {
    if (!r.is_field()) throw Error(ErrorCode::UnsupportedRing, "needs field coefficients, got " + r.name());
}

void require_exhaustive(const DgModule& m) {
    const auto& r = m.ring();
    if (!r.is_finite() || !r.is_field()) throw Error(ErrorCode::UnsupportedRing, "exhaustive search needs F_p");
    if (r.modulus() > 7 || m.dim() > 12)
        throw Error(ErrorCode::DimensionTooLarge, "exhaustive regime is p <= 7 and dimension <= 12");
}

// one nonzero vector per line in the span of `basis`
std::vector<QVec> projective_points(const std::vector<QVec>& basis, std::size_t n, long p) {
    const std::size_t k = basis.size();
    double count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= static_cast<double>(p);
    if (count > kPointCap) throw Error(ErrorCode::DimensionTooLarge, "too many points to enumerate");
    std::vector<QVec> out;
    std::vector<long> c(k, 0);
    for (;;) {
        std::size_t i = 0;
        while (i < k && ++c[i] == p) c[i++] = 0;
        if (i == k) break;
        // keep the representative whose last nonzero coefficient is 1
        std::size_t last = k;
        while (last > 0 && c[last - 1] == 0) --last;
        if (c[last - 1] != 1) continue;
        QVec v(n, Q(0));
        for (std::size_t t = 0; t < k; ++t)
            if (c[t]) v = v + Q(c[t]) * basis[t];
        for (auto& x : v) {
            Z r = Z(x.get_num()) % p;
            if (r < 0) r += p;
            x = Q(r);
        }
        out.push_back(v);
    }
    return out;
}

std::vector<QVec> homogeneous_parts(const DgModule& m, const QVec& v) {
    std::vector<QVec> out;
    for (int d : m.degree_set()) {
        QVec part(m.dim(), Q(0));
        bool any = false;
        for (auto i : m.indices_of_degree(d))
            if (v[i] != 0) {
                part[i] = v[i];
                any = true;
            }
        if (any) out.push_back(part);
    }
    return out;
}

std::vector<QVec> degree_slice_basis(const DgModule& m, int d) {
    std::vector<QVec> out;
    for (auto i : m.indices_of_degree(d)) out.push_back(unit_vector(m.dim(), i));
    return out;
}

std::vector<QVec> cycle_basis_in_degree(const DgModule& m, int d) {
    auto idx = m.indices_of_degree(d);
    std::vector<QVec> out;
    for (const auto& k : kernel_basis(m.delta().select_cols(idx), m.ring())) {
        QVec v(m.dim(), Q(0));
        for (std::size_t t = 0; t < idx.size(); ++t) v[idx[t]] = k[t];
        out.push_back(v);
    }
    return out;
}

Subspace intersect_all(const std::vector<Subspace>& spaces, std::size_t n, const CoefficientRing& f) {
    Subspace out = Subspace::whole(n, f);
    for (const auto& s : spaces) out = out.intersect(s);
    return out;
}

std::vector<Subspace> maximal_proper(const std::vector<Subspace>& lattice, std::size_t n) {
    std::vector<Subspace> proper;
    for (const auto& s : lattice)
        if (s.dim() < n) proper.push_back(s);
    std::vector<Subspace> out;
    for (const auto& s : proper) {
        bool maximal = true;
        for (const auto& t : proper)
            if (t.dim() > s.dim() && t.contains(s)) maximal = false;
        if (maximal) out.push_back(s);
    }
    return out;
}

} // namespace

Subspace spin(const DgModule& m, const std::vector<QVec>& generators) {
    require_field(m.ring());
    Subspace s(m.dim(), m.ring());
    std::deque<QVec> work;
    auto push = [&](const QVec& v) {
        QVec w = m.normalize(v);
        if (s.insert(w)) work.push_back(w);
    };
    for (const auto& g : generators)
        for (const auto& part : homogeneous_parts(m, m.normalize(g))) push(part);
    while (!work.empty()) {
        QVec v = work.front();
        work.pop_front();
        push(m.delta() * v);
        for (const auto& a : m.actions()) push(a * v);
    }
    return s;
}

bool is_dg_submodule(const DgModule& m, const Subspace& s) { return !submodule_violation(m, s.basis()).has_value(); }

bool is_twosided_dg_ideal(const DgAlgebra& a, const Subspace& s) {
    const GradedAlgebra& A = a.algebra;
    for (const auto& v : s.basis()) {
        if (!s.contains(a.d(v))) return false;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            QVec b = unit_vector(a.dim(), i);
            if (!s.contains(A.multiply(b, v)) || !s.contains(A.multiply(v, b))) return false;
        }
        for (int d : A.degree_set()) {
            QVec part(a.dim(), Q(0));
            for (auto i : A.indices_of_degree(d)) part[i] = v[i];
            if (!s.contains(part)) return false;
        }
    }
    return true;
}

SimplicityResult is_dg_simple(const DgModule& m) {
    require_field(m.ring());
    if (m.dim() == 0) throw Error(ErrorCode::ZeroModule, "the zero module is not simple");
    SimplicityResult res;
    auto proper = [&](const QVec& u) -> bool {
        Subspace s = spin(m, {u});
        if (s.dim() < m.dim()) {
            res.verdict = Simplicity::NotSimple;
            res.witness = s;
            return true;
        }
        return false;
    };
    if (m.ring().is_finite()) {
        for (int d : m.degree_set())
            for (const auto& u : projective_points(cycle_basis_in_degree(m, d), m.dim(), m.ring().modulus()))
                if (proper(u)) return res;
        res.verdict = Simplicity::Simple;
        return res;
    }
    std::mt19937 gen(99);
    std::uniform_int_distribution<int> coef(-5, 5);
    bool certified = true;
    for (int d : m.degree_set()) {
        auto zb = cycle_basis_in_degree(m, d);
        if (zb.size() > 1) certified = false;
        for (const auto& u : zb)
            if (proper(u)) return res;
        if (zb.size() > 1)
            for (int t = 0; t < 64; ++t) {
                QVec u(m.dim(), Q(0));
                for (const auto& z : zb) u = u + Q(coef(gen)) * z;
                if (!is_zero(u) && proper(u)) return res;
            }
    }
    res.verdict = certified ? Simplicity::Simple : Simplicity::Unknown;
    return res;
}

std::vector<Subspace> dg_submodule_lattice(const DgModule& m) {
    require_exhaustive(m);
    const long p = m.ring().modulus();
    std::set<Subspace> lattice;
    lattice.insert(Subspace(m.dim(), m.ring()));
    const Subspace cycles(m.dim(), m.ring(), kernel_basis(m.delta(), m.ring()));
    for (int d : m.degree_set())
        for (const auto& u : projective_points(degree_slice_basis(m, d), m.dim(), p)) {
            Subspace s = spin(m, {u});
            // u or Delta(u) is a nonzero homogeneous cycle in s
            if (s.intersect(cycles).is_zero()) throw std::logic_error("dg-submodule without cycles");
            lattice.insert(s);
        }
    std::vector<Subspace> all(lattice.begin(), lattice.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Subspace sum = all[i] + all[j];
            if (lattice.insert(sum).second) {
                all.push_back(sum);
                if (all.size() > 100000) throw Error(ErrorCode::DimensionTooLarge, "submodule lattice too large");
            }
        }
    return {lattice.begin(), lattice.end()};
}

std::vector<Subspace> dg_maximal_left_ideals(const AlgebraRef& a) {
    return maximal_proper(dg_submodule_lattice(regular_module(a)), a->dim());
}

Subspace annihilator(const DgModule& m) {
    const auto& f = m.ring();
    require_field(f);
    const std::size_t n = m.parent().dim(), k = m.dim();
    QMat sys(k * k, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) sys(r * k + c, i) = m.action(i)(r, c);
    return Subspace(n, f, kernel_basis(sys, f));
}

DgRadicals dg_radicals(const AlgebraRef& a) {
    const auto& f = a->ring();
    DgRadicals r;
    DgModule reg = regular_module(a);
    r.maximal_left = dg_maximal_left_ideals(a);
    r.maximal_right = dg_maximal_left_ideals(share(opposite_dg_algebra(*a)));
    r.left = intersect_all(r.maximal_left, a->dim(), f);
    r.right = intersect_all(r.maximal_right, a->dim(), f);
    std::vector<Subspace> anns;
    for (const auto& i : r.maximal_left) anns.push_back(annihilator(quotient_dg_module(reg, i.basis()).module));
    r.two = intersect_all(anns, a->dim(), f);
    return r;
}

NakayamaReport check_nakayama(const DgRadicals& radicals, const DgModule& m) {
    NakayamaReport rep;
    std::vector<QVec> gens;
    for (const auto& r : radicals.two.basis()) {
        QMat act = m.action_of(r);
        for (std::size_t j = 0; j < m.dim(); ++j) gens.push_back(m.normalize(act.col(j)));
    }
    rep.radical_times_module = Subspace(m.dim(), m.ring(), gens);
    const std::size_t rm = rep.radical_times_module.dim();
    if (rm == m.dim() && m.dim() != 0) rep.passed = false;
    std::set<Subspace> subs;
    for (std::size_t j = 0; j < m.dim(); ++j) subs.insert(spin(m, {unit_vector(m.dim(), j)}));
    for (const auto& n : subs) {
        ++rep.submodules_checked;
        if ((n + rep.radical_times_module).dim() == m.dim() && n.dim() != m.dim()) rep.passed = false;
    }
    return rep;
}

Decomposition dg_semisimple_decomposition(const DgModule& m) {
    Decomposition out;
    const auto& f = m.ring();
    // current piece, embedded in M by `emb`
    DgModule piece = m;
    QMat emb = QMat::identity(m.dim());
    auto to_outer = [&](const Subspace& s) {
        std::vector<QVec> vs;
        for (const auto& v : s.basis()) vs.push_back(piece.normalize(emb * v));
        return Subspace(m.dim(), f, vs);
    };
    while (piece.dim() > 0) {
        auto lattice = dg_submodule_lattice(piece);
        std::optional<Subspace> simple;
        for (const auto& s : lattice) {
            if (s.is_zero()) continue;
            bool minimal = std::none_of(lattice.begin(), lattice.end(), [&](const Subspace& t) {
                return !t.is_zero() && t.dim() < s.dim() && s.contains(t);
            });
            if (minimal && (!simple || s.dim() < simple->dim())) simple = s;
        }
        std::optional<Subspace> complement;
        for (const auto& c : lattice)
            if (c.dim() + simple->dim() == piece.dim() && c.intersect(*simple).is_zero()) {
                complement = c;
                break;
            }
        if (!complement) {
            out.obstruction = to_outer(*simple);
            DgModule s = submodule(piece, simple->basis()).module;
            out.cone_type = find_module_isomorphism(piece, cone_tensor(s).module).isomorphism.has_value();
            return out;
        }
        out.summands.push_back(to_outer(*simple));
        EmbeddedModule next = submodule(piece, complement->basis());
        emb = emb * next.embedding;
        piece = next.module;
    }
    out.success = true;
    return out;
}

PrimitivityReport is_dg_primitive(const AlgebraRef& a) {
    PrimitivityReport rep;
    DgRadicals r = dg_radicals(a);
    DgModule reg = regular_module(a);
    std::vector<Subspace> anns;
    for (const auto& i : r.maximal_left) {
        Subspace ann = annihilator(quotient_dg_module(reg, i.basis()).module);
        if (ann.is_zero() && !rep.primitive) {
            rep.primitive = true;
            rep.witness = i;
        }
        anns.push_back(ann);
    }
    rep.subdirect_injective = intersect_all(anns, a->dim(), a->ring()) == r.two;
    return rep;
}

std::vector<DgModule> dg_simple_modules(const AlgebraRef& a) {
    DgModule reg = regular_module(a);
    std::vector<DgModule> out;
    for (const auto& i : dg_maximal_left_ideals(a)) {
        DgModule s = quotient_dg_module(reg, i.basis()).module;
        bool seen = false;
        for (const auto& t : out) {
            if (t.dim() != s.dim()) continue;
            int k = *std::min_element(s.degrees().begin(), s.degrees().end()) -
                    *std::min_element(t.degrees().begin(), t.degrees().end());
            // t[-k] has the same lowest degree as s
            if (find_module_isomorphism(s, shift(t, -k)).isomorphism) {
                seen = true;
                break;
            }
        }
        if (!seen) out.push_back(s);
    }
    return out;
}

} // namespace dgo
