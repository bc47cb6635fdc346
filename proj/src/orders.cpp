#include "dgorder/orders.hpp"

#include <algorithm>
#include <set>

namespace dgo {

namespace {

const CoefficientRing kQ = CoefficientRing::rationals();

QMat basis_columns(const ZLattice& l) { return l.basis().transpose(); }

QMat coordinate_map(const ZLattice& l) {
    auto inv = inverse(basis_columns(l), kQ);
    if (!inv) throw Error(ErrorCode::NotFull, "lattice of rank " + std::to_string(l.rank()));
    return *inv;
}

void require_rational(const DgAlgebra& a) {
    if (a.ring().kind() != RingKind::Rationals)
        throw Error(ErrorCode::UnsupportedRing, "orders live in algebras over Q, got " + a.ring().name());
}

void require_full(const DgAlgebra& a, const ZLattice& l) {
    if (l.ambient_dim() != a.dim() || !l.is_full())
        throw Error(ErrorCode::NotFull, "lattice of rank " + std::to_string(l.rank()) + " in dimension " +
                                            std::to_string(a.dim()));
}

ZLattice graded_part(const GradedAlgebra& a, const ZLattice& l) {
    ZLattice out(l.ambient_dim());
    for (int d : a.degree_set()) out = out + coordinate_slice(l, a.indices_of_degree(d));
    return out;
}

// Structure constants of the lattice basis (columns of b), reduced into `ring`.
GradedAlgebra lattice_algebra(const GradedAlgebra& a, const QMat& b, const CoefficientRing& ring,
                              const std::vector<int>& degrees) {
    const std::size_t n = b.cols();
    QMat binv = *inverse(b, kQ);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("l" + std::to_string(i));
    GradedAlgebra out(ring, names, degrees);
    auto cols = b.col_list();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QVec c = binv * a.multiply(cols[i], cols[j]);
            if (!is_integral(c)) throw Error(ErrorCode::PreconditionFailed, "lattice is not closed under products");
            for (std::size_t k = 0; k < n; ++k)
                if (c[k] != 0) out.set_constant(i, j, k, ring.normalize(c[k]));
        }
    QVec u = binv * a.unit();
    if (!is_integral(u)) throw Error(ErrorCode::PreconditionFailed, "lattice does not contain 1");
    out.set_unit(u);
    return out;
}

ZLattice conductor(const GradedAlgebra& a, const ZLattice& l, bool left) {
    const std::size_t n = a.dim();
    if (l.ambient_dim() != n || !l.is_full()) throw Error(ErrorCode::NotFull, "conductor of a lattice that is not full");
    QMat binv = coordinate_map(l);
    QMat m(n, n * n);
    auto cols = basis_columns(l).col_list();
    for (std::size_t j = 0; j < n; ++j) {
        // coordinates of lambda b_j (left) or b_j lambda (right) as a function of lambda
        QMat c = binv * (left ? a.right_multiplication(cols[j]) : a.left_multiplication(cols[j]));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s) m(r, j * n + s) = c(s, r);
    }
    return integral_preimage(m);
}

DgOrder conductor_order(const DgAlgebra& a, const ZLattice& l, bool left) {
    require_rational(a);
    require_full(a, l);
    if (!homogeneous_lattice_basis(a.algebra, l)) throw Error(ErrorCode::NotDgLattice, "lattice is not graded");
    for (const auto& b : l.basis_vectors())
        if (!l.contains(a.d(b))) throw Error(ErrorCode::NotDgLattice, "D(L) is not contained in L");
    ZLattice o = conductor(a.algebra, l, left);
    auto check = is_dg_order(a, o);
    if (!check.order) throw std::logic_error("conductor failed order checks: " + check.report.summary());
    return *check.order;
}

} // namespace

std::optional<std::vector<QVec>> homogeneous_lattice_basis(const GradedAlgebra& a, const ZLattice& lattice) {
    std::vector<QVec> out;
    for (int d : a.degree_set())
        for (const auto& v : coordinate_slice(lattice, a.indices_of_degree(d)).basis_vectors()) out.push_back(v);
    if (out.size() != lattice.rank() || !(ZLattice(lattice.ambient_dim(), out) == lattice)) return std::nullopt;
    return out;
}

IntegralForm integral_form(const DgAlgebra& a, const ZLattice& order) {
    require_full(a, order);
    auto hb = homogeneous_lattice_basis(a.algebra, order);
    if (!hb) throw Error(ErrorCode::NotDgLattice, "lattice is not graded");
    const std::size_t n = a.dim();
    QMat b = QMat::from_cols(*hb, n);
    std::vector<int> degrees;
    for (const auto& v : *hb) degrees.push_back(*a.algebra.homogeneous_degree(v));
    GradedAlgebra g = lattice_algebra(a.algebra, b, CoefficientRing::integers(), degrees);
    QMat dz = *inverse(b, kQ) * a.differential * b;
    if (!is_integral(dz)) throw Error(ErrorCode::NotDgLattice, "D(L) is not contained in L");
    return {DgAlgebra{g, dz}, b};
}

OrderVerification is_dg_order(const DgAlgebra& a, const ZLattice& lattice, std::optional<BlockLayout> blocks) {
    require_rational(a);
    OrderVerification out;
    auto& checks = out.report.checks;
    const std::size_t n = a.dim();

    AxiomCheck rank("rank");
    out.flags.full = lattice.ambient_dim() == n && lattice.is_full();
    if (!out.flags.full) {
        rank.passed = false;
        rank.witness = {lattice.rank()};
        rank.detail = "rank " + std::to_string(lattice.rank()) + " in dimension " + std::to_string(n);
        checks.push_back(rank);
        return out;
    }
    checks.push_back(rank);
    const auto basis = lattice.basis_vectors();

    AxiomCheck graded("graded");
    out.flags.graded = homogeneous_lattice_basis(a.algebra, lattice).has_value();
    if (!out.flags.graded) {
        graded.passed = false;
        graded.detail = "the homogeneous slices do not span the lattice";
    }
    checks.push_back(graded);

    AxiomCheck unit("unit");
    out.flags.unital = lattice.contains(a.algebra.unit());
    if (!out.flags.unital) {
        unit.passed = false;
        unit.detail = "1 is not in the lattice";
    }
    checks.push_back(unit);

    AxiomCheck closed("ring-closed");
    for (std::size_t i = 0; i < n && closed.passed; ++i)
        for (std::size_t j = 0; j < n && closed.passed; ++j)
            if (!lattice.contains(a.algebra.multiply(basis[i], basis[j]))) {
                closed.passed = false;
                closed.witness = {i, j};
                closed.detail = "product of lattice basis vectors " + std::to_string(i) + ", " + std::to_string(j);
            }
    out.flags.ring_closed = closed.passed;
    checks.push_back(closed);

    AxiomCheck stable("d-stability");
    for (std::size_t i = 0; i < n && stable.passed; ++i)
        if (!lattice.contains(a.d(basis[i]))) {
            stable.passed = false;
            stable.witness = {i};
            stable.detail = "D of lattice basis vector " + std::to_string(i) + " leaves the lattice";
        }
    out.flags.d_stable = stable.passed;
    checks.push_back(stable);

    AxiomCheck integral("integrality");
    for (std::size_t i = 0; i < n && integral.passed; ++i)
        for (const auto& c : characteristic_polynomial(a.algebra.left_multiplication(basis[i])))
            if (c.get_den() != 1) {
                integral.passed = false;
                integral.witness = {i};
                integral.detail = "characteristic polynomial of basis vector " + std::to_string(i) + " is not integral";
                break;
            }
    out.flags.integral = integral.passed;
    checks.push_back(integral);

    if (!out.report.passed()) return out;
    IntegralForm f = integral_form(a, lattice);
    out.homology = homology(share(f.algebra));
    out.flags.proper = std::all_of(out.homology->groups.begin(), out.homology->groups.end(),
                                   [](const auto& g) { return g.second.torsion.empty(); });
    out.order = DgOrder{a, lattice, out.flags, std::move(blocks)};
    return out;
}

DgOrder certify(const OrderExample& ex) {
    auto v = is_dg_order(ex.algebra, ex.order, ex.blocks);
    if (!v.order) throw Error(ErrorCode::PreconditionFailed, "not a dg-order: " + v.report.summary());
    return *v.order;
}

ZLattice classical_left_order(const GradedAlgebra& a, const ZLattice& lattice) { return conductor(a, lattice, true); }
ZLattice classical_right_order(const GradedAlgebra& a, const ZLattice& lattice) { return conductor(a, lattice, false); }

DgOrder left_order(const DgAlgebra& a, const ZLattice& lattice) { return conductor_order(a, lattice, true); }
DgOrder right_order(const DgAlgebra& a, const ZLattice& lattice) { return conductor_order(a, lattice, false); }

ZLattice largest_d_stable_sublattice(const QMat& d, const ZLattice& lattice) {
    QMat binv = coordinate_map(lattice);
    return integral_preimage_in(lattice, (binv * d).transpose());
}

// ---- local data ----

namespace {

long max_denominator_valuation(const QMat& m, long p) {
    long a = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) a = std::max(a, -valuation(m(i, j), p));
    return a;
}

Q prime_power(long p, long e) {
    Z r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(std::abs(e)));
    return e >= 0 ? Q(r) : Q(1) / Q(r);
}

} // namespace

ZLattice replace_at_prime(const ZLattice& global, long p, const ZLattice& local) {
    if (!global.is_full() || !local.is_full() || global.ambient_dim() != local.ambient_dim())
        throw Error(ErrorCode::InconsistentLocalData, "local data must be full lattices of equal dimension");
    if (!is_prime(p)) throw Error(ErrorCode::InconsistentLocalData, std::to_string(p) + " is not prime");
    // local within p^{-a} global and p^b global within local, at p
    long a = max_denominator_valuation(local.basis() * *inverse(global.basis(), kQ), p);
    long b = max_denominator_valuation(global.basis() * *inverse(local.basis(), kQ), p);
    return lattice_intersect(local, global.scaled(prime_power(p, -a))) + global.scaled(prime_power(p, b));
}

LocalLattice localize(const ZLattice& lattice, long p) {
    if (!lattice.is_full()) throw Error(ErrorCode::InconsistentLocalData, "localizing a lattice that is not full");
    return {p, replace_at_prime(ZLattice::standard(lattice.ambient_dim()), p, lattice)};
}

ZLattice globalize(const std::vector<LocalLattice>& data, const ZLattice& default_lattice) {
    ZLattice out = default_lattice;
    std::set<long> seen;
    for (const auto& d : data) {
        if (!seen.insert(d.prime).second)
            throw Error(ErrorCode::InconsistentLocalData, "prime " + std::to_string(d.prime) + " given twice");
        out = replace_at_prime(out, d.prime, d.lattice);
    }
    return out;
}

std::vector<long> differing_primes(const ZLattice& a, const ZLattice& b) {
    if (!a.is_full() || !b.is_full()) throw Error(ErrorCode::NotFull, "comparing lattices that are not full");
    QMat c = a.basis() * *inverse(b.basis(), kQ);
    Z den = common_denominator(c);
    std::vector<Z> factors = invariant_factors(to_integer(c * Q(den)));
    std::set<long> candidates;
    for (long p : prime_divisors(den)) candidates.insert(p);
    for (const auto& s : factors)
        for (long p : prime_divisors(s)) candidates.insert(p);
    std::vector<long> out;
    for (long p : candidates)
        for (const auto& s : factors)
            if (valuation(Q(s) / Q(den), p) != 0) {
                out.push_back(p);
                break;
            }
    return out;
}

// ---- maximal orders ----

Q reduced_discriminant(const DgAlgebra& a, const BlockLayout& blocks, const ZLattice& lattice) {
    if (blocks.dim() != a.dim()) throw Error(ErrorCode::NotSplit, "block layout does not match the algebra");
    require_full(a, lattice);
    auto trd = [&](const QVec& v) {
        Q t = 0;
        for (std::size_t k = 0; k < blocks.sizes.size(); ++k)
            for (std::size_t i = 0; i < blocks.sizes[k]; ++i) t += v[blocks.index(k, i, i)];
        return t;
    };
    const auto basis = lattice.basis_vectors();
    const std::size_t n = basis.size();
    QMat gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram(i, j) = trd(a.algebra.multiply(basis[i], basis[j]));
    return determinant(gram, kQ);
}

bool is_classically_maximal(const DgAlgebra& a, const BlockLayout& blocks, const ZLattice& lattice) {
    return abs(reduced_discriminant(a, blocks, lattice)) == 1;
}

namespace {

struct ResidueAlgebra {
    GradedAlgebra algebra; // L/pL in the lattice basis
    QMat basis;            // columns
    std::vector<QVec> radical;
};

ResidueAlgebra residue_algebra(const DgAlgebra& a, const ZLattice& order, long p) {
    require_full(a, order);
    QMat b = basis_columns(order);
    GradedAlgebra r = lattice_algebra(a.algebra, b, CoefficientRing::residue(p), std::vector<int>(a.dim(), 0));
    auto rad = jacobson_radical(r);
    return {std::move(r), std::move(b), std::move(rad)};
}

ZLattice lift(const ResidueAlgebra& r, long p, const std::vector<QVec>& residues) {
    const std::size_t n = r.basis.rows();
    std::vector<QVec> gens;
    for (const auto& v : r.basis.col_list()) gens.push_back(Q(p) * v);
    for (const auto& v : residues) gens.push_back(r.basis * v);
    return ZLattice(n, gens);
}

} // namespace

ZLattice p_radical(const DgAlgebra& a, const ZLattice& order, long p) {
    ResidueAlgebra r = residue_algebra(a, order, p);
    return lift(r, p, r.radical);
}

std::vector<ZLattice> maximal_ideals_over(const DgAlgebra& a, const ZLattice& order, long p) {
    ResidueAlgebra r = residue_algebra(a, order, p);
    const GradedAlgebra& b = r.algebra;
    const CoefficientRing& f = b.ring();
    const std::size_t n = b.dim();
    const Subspace rad(n, f, r.radical);
    // coordinates modulo the radical
    std::vector<QVec> cols = complement_basis(rad, Subspace::whole(n, f));
    const std::size_t k = cols.size();
    cols.insert(cols.end(), rad.basis().begin(), rad.basis().end());
    QMat modulo = inverse(QMat::from_cols(cols, n), f)->submatrix(0, 0, k, n);
    auto reduce = [&](const QVec& v) { return b.normalize(modulo * v); };

    QMat commutators(0, n);
    for (std::size_t j = 0; j < n; ++j) {
        QVec bj = unit_vector(n, j);
        commutators = QMat::vstack(commutators, modulo * (b.right_multiplication(bj) - b.left_multiplication(bj)));
    }
    std::vector<QVec> central = complement_basis(rad, Subspace(n, f, kernel_basis(commutators, f)));
    double count = 1;
    for (std::size_t i = 0; i < central.size(); ++i) count *= static_cast<double>(p);
    if (count > 2e5) throw Error(ErrorCode::TooLarge, "center modulo the radical has too many elements");

    std::vector<QVec> idem;
    std::vector<long> digits(central.size(), 0);
    for (;;) {
        QVec z(n, Q(0));
        for (std::size_t i = 0; i < central.size(); ++i)
            if (digits[i]) z = z + Q(digits[i]) * central[i];
        z = b.normalize(z);
        if (!is_zero(reduce(z)) && is_zero(reduce(b.multiply(z, z) - z))) idem.push_back(z);
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    std::vector<ZLattice> out;
    for (const auto& e : idem) {
        bool primitive = true;
        for (const auto& g : idem)
            if (reduce(g) != reduce(e) && is_zero(reduce(b.multiply(g, e) - g))) primitive = false;
        if (!primitive) continue;
        if (is_zero(reduce(b.unit() - e))) return {};
        std::vector<QVec> gens = r.radical;
        QVec complement = b.normalize(b.unit() - e);
        for (std::size_t j = 0; j < n; ++j) gens.push_back(b.multiply(unit_vector(n, j), complement));
        out.push_back(lift(r, p, gens));
    }
    return out;
}

HullResult dg_maximal_hull(const DgOrder& order) {
    if (!order.blocks) throw Error(ErrorCode::NotSplit, "the hull search needs a product of matrix algebras over Q");
    const DgAlgebra& a = order.ambient;
    const BlockLayout& blocks = *order.blocks;
    HullResult out;
    ZLattice current = order.lattice;
    for (int round = 0; round < 64; ++round) {
        Q disc = reduced_discriminant(a, blocks, current);
        if (abs(disc) == 1) break;
        bool moved = false;
        for (long p : prime_divisors(disc.get_num() * disc.get_den())) {
            std::vector<std::pair<std::string, ZLattice>> ideals{{"radical", p_radical(a, current, p)}};
            for (auto& m : maximal_ideals_over(a, current, p)) ideals.emplace_back("maximal", std::move(m));
            for (const auto& [kind, ideal] : ideals) {
                for (bool left : {true, false}) {
                    ZLattice next = conductor(a.algebra, ideal, left);
                    next = largest_d_stable_sublattice(a.differential, graded_part(a.algebra, next));
                    if (!next.contains(current)) throw std::logic_error("hull move lost the current order");
                    Q index = lattice_index(current, next);
                    if (index > 1) {
                        out.trace.push_back({p, left ? "left" : "right", kind, index});
                        current = next;
                        moved = true;
                        break;
                    }
                }
                if (moved) break;
            }
            if (moved) break;
        }
        if (!moved) break;
    }
    auto check = is_dg_order(a, current, order.blocks);
    if (!check.order) throw std::logic_error("hull is not a dg-order: " + check.report.summary());
    out.order = *check.order;
    out.classically_maximal = is_classically_maximal(a, blocks, current);
    return out;
}

// ---- lattices in dg-modules ----

ZLattice dg_lattice_in_module(const DgOrder& order, const DgModule& v) {
    if (!(v.parent() == order.ambient)) throw Error(ErrorCode::PreconditionFailed, "module over a different algebra");
    const std::size_t n = v.dim();
    auto hb = homogeneous_lattice_basis(order.ambient.algebra, order.lattice);
    if (!hb) throw Error(ErrorCode::NotDgLattice, "order is not graded");
    std::vector<QVec> positive;
    for (const auto& l : *hb)
        if (*order.ambient.algebra.homogeneous_degree(l) > 0) positive.push_back(l);

    ZLattice built(n);
    auto degrees = v.degree_set();
    for (auto it = degrees.rbegin(); it != degrees.rend(); ++it) {
        std::vector<QVec> slab;
        for (auto i : v.indices_of_degree(*it)) slab.push_back(unit_vector(n, i));
        // scale so that Delta and the positive part of the order land in what is built
        Z r = 1;
        auto absorb = [&](const QVec& w) {
            if (is_zero(w)) return;
            auto c = built.rational_coordinates(w);
            if (!c) throw std::logic_error("image outside the higher degrees");
            r = lcm(r, common_denominator(*c));
        };
        for (const auto& s : slab) {
            absorb(v.differential(s));
            for (const auto& l : positive) absorb(v.act(l, s));
        }
        for (auto& s : slab) s = Q(r) * s;
        built = built + ZLattice(n, slab);
    }
    std::vector<QVec> gens;
    for (const auto& l : *hb)
        for (const auto& m : built.basis_vectors()) gens.push_back(v.act(l, m));
    return ZLattice(n, gens);
}

LatticeCheck check_dg_lattice(const DgOrder& order, const DgModule& v, const ZLattice& lattice) {
    LatticeCheck out;
    out.full = lattice.ambient_dim() == v.dim() && lattice.is_full();
    const auto basis = lattice.basis_vectors();
    out.delta_stable = std::all_of(basis.begin(), basis.end(), [&](const QVec& m) { return lattice.contains(v.differential(m)); });
    out.action_stable = true;
    for (const auto& l : order.lattice.basis_vectors())
        for (const auto& m : basis)
            if (!lattice.contains(v.act(l, m))) out.action_stable = false;
    return out;
}

} // namespace dgo
