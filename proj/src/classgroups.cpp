#include "dgorder/classgroups.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace dgo {

namespace {

const CoefficientRing kQ = CoefficientRing::rationals();
const CoefficientRing kZ = CoefficientRing::integers();

long mod(long a, long m) { return ((a % m) + m) % m; }

long to_long(const Q& x) {
    if (x.get_den() != 1 || !x.get_num().fits_slong_p()) throw Error(ErrorCode::TooLarge, "entry does not fit a machine word");
    return x.get_num().get_si();
}

long det_mod_prime(std::vector<std::vector<long>> a, long p) {
    const std::size_t n = a.size();
    long det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && mod(a[piv][c], p) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = mod(-det, p);
        }
        long inv = mod_inverse(mod(a[c][c], p), p);
        det = mod(det * mod(a[c][c], p), p);
        for (std::size_t r = c + 1; r < n; ++r) {
            long f = mod(a[r][c] * inv, p);
            if (f == 0) continue;
            for (std::size_t k = c; k < n; ++k) a[r][k] = mod(a[r][k] - f * mod(a[c][k], p), p);
        }
    }
    return det;
}

Z det_integral(const QMat& m) { return determinant(m, kQ).get_num(); }

// integer kernel of a rational map restricted to a lattice, as vectors of the lattice
std::vector<QVec> lattice_kernel(const std::vector<QVec>& basis, const QMat& map) {
    if (basis.empty()) return {};
    const std::size_t n = basis.front().size();
    QMat images(map.rows(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) images.set_col(j, map * basis[j]);
    images = images * Q(common_denominator(images));
    std::vector<QVec> out;
    for (const auto& k : kernel_basis(images, kZ)) {
        QVec v(n, Q(0));
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (k[j] != 0) v = v + k[j] * basis[j];
        out.push_back(v);
    }
    return out;
}

// degree-0 cycles of a graded lattice
std::vector<QVec> degree_zero_cycles(const DgAlgebra& a, const ZLattice& l) {
    ZLattice slice = coordinate_slice(l, a.algebra.indices_of_degree(0));
    return ZLattice(a.dim(), lattice_kernel(slice.basis_vectors(), a.differential)).basis_vectors();
}

QMat coordinates_matrix(const ZLattice& target, const std::vector<QVec>& vectors) {
    QMat out(vectors.size(), target.rank());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        auto c = target.rational_coordinates(vectors[i]);
        if (!c) throw std::logic_error("vector outside the lattice span");
        out.set_row(i, *c);
    }
    return out;
}

std::optional<QVec> algebra_inverse(const GradedAlgebra& a, const QVec& z) {
    auto y = solve(a.left_multiplication(z), a.unit(), a.ring().fraction_field());
    if (!y) return std::nullopt;
    if (a.multiply(*y, z) != a.unit()) return std::nullopt;
    return y;
}

// primes where freeness of a lattice over the order is worth testing residues
std::vector<long> residue_primes(const DgAlgebra& a, const ZLattice& order, const ZLattice& l) {
    std::set<long> out;
    for (long p : differing_primes(order, l)) out.insert(p);
    const auto basis = order.basis_vectors();
    const std::size_t n = basis.size();
    QMat gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QMat lm = a.algebra.left_multiplication(a.algebra.multiply(basis[i], basis[j]));
            Q t = 0;
            for (std::size_t k = 0; k < lm.rows(); ++k) t += lm(k, k);
            gram(i, j) = t;
        }
    Q disc = determinant(gram, kQ);
    if (disc == 0) throw Error(ErrorCode::ConductorNotComputed, "trace form of the order is degenerate");
    for (long p : prime_divisors(abs(disc.get_num() * disc.get_den()))) out.insert(p);
    return {out.begin(), out.end()};
}

std::string join(const std::vector<long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

} // namespace

// ---- finite abelian groups ----

Z FiniteAbelianGroup::order() const {
    Z o = 1;
    for (const auto& d : invariants) o *= d;
    return o;
}

std::string FiniteAbelianGroup::str() const {
    if (invariants.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < invariants.size(); ++i) s += (i ? " x Z/" : "Z/") + invariants[i].get_str();
    return s;
}

FiniteAbelianGroup abelian_group_from_orders(const std::vector<Z>& element_orders) {
    const Z total = static_cast<unsigned long>(element_orders.size());
    std::vector<std::vector<long>> exponents; // per prime, descending
    std::vector<long> primes = total > 1 ? prime_divisors(total) : std::vector<long>{};
    for (long q : primes) {
        // N_k = log_q #{x : ord(x) divides q^k}
        std::vector<long> logs{0};
        Z qk = 1;
        for (;;) {
            qk *= q;
            std::size_t count = 0;
            for (const auto& o : element_orders)
                if (qk % o == 0) ++count;
            long lg = 0;
            for (std::size_t c = count; c > 1; c /= static_cast<std::size_t>(q)) ++lg;
            logs.push_back(lg);
            if (logs.back() == logs[logs.size() - 2]) break;
        }
        std::vector<long> e;
        // r_k = N_k - N_{k-1} factors have exponent at least k
        for (std::size_t k = 1; k + 1 < logs.size(); ++k) {
            long r = logs[k] - logs[k - 1];
            long r_next = logs[k + 1] - logs[k];
            for (long t = 0; t < r - r_next; ++t) e.push_back(static_cast<long>(k));
        }
        std::sort(e.rbegin(), e.rend());
        exponents.push_back(e);
    }
    std::size_t width = 0;
    for (const auto& e : exponents) width = std::max(width, e.size());
    std::vector<Z> inv;
    for (std::size_t i = 0; i < width; ++i) {
        Z d = 1;
        for (std::size_t t = 0; t < primes.size(); ++t)
            if (i < exponents[t].size())
                for (long k = 0; k < exponents[t][i]; ++k) d *= primes[t];
        inv.push_back(d);
    }
    std::reverse(inv.begin(), inv.end());
    return {inv};
}

// ---- finite rings ----

FiniteRing::FiniteRing(const GradedAlgebra& a, const ZLattice& order, long modulus) : n_(a.dim()), m_(modulus) {
    if (modulus < 2) throw Error(ErrorCode::PreconditionFailed, "residue modulus must be at least 2");
    if (order.ambient_dim() != n_ || !order.is_full()) throw Error(ErrorCode::NotFull, "residue ring of a lattice that is not full");
    basis_ = order.basis().transpose();
    inverse_ = *inverse(basis_, kQ);
    auto cols = basis_.col_list();
    c_.assign(n_ * n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            QVec c = inverse_ * a.multiply(cols[i], cols[j]);
            if (!is_integral(c)) throw Error(ErrorCode::PreconditionFailed, "lattice is not closed under products");
            for (std::size_t k = 0; k < n_; ++k) {
                Z r = c[k].get_num() % m_;
                c_[(i * n_ + j) * n_ + k] = mod(r.get_si(), m_);
            }
        }
    one_ = reduce(a.unit());
    primes_ = prime_divisors(m_);
}

std::uint64_t FiniteRing::size() const {
    Z s = 1;
    for (std::size_t i = 0; i < n_; ++i) s *= m_;
    if (s > Z("4611686018427387904")) throw Error(ErrorCode::TooLarge, "residue ring too large");
    return std::stoull(s.get_str());
}

FiniteRing::Element FiniteRing::multiply(const Element& x, const Element& y) const {
    Element out(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (y[j] == 0) continue;
            const long xy = x[i] * y[j] % m_;
            const long* c = &c_[(i * n_ + j) * n_];
            for (std::size_t k = 0; k < n_; ++k)
                if (c[k]) out[k] = (out[k] + xy * c[k]) % m_;
        }
    }
    return out;
}

FiniteRing::Element FiniteRing::add(const Element& x, const Element& y) const {
    Element out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = (x[i] + y[i]) % m_;
    return out;
}

bool FiniteRing::is_unit(const Element& x) const {
    for (long p : primes_) {
        std::vector<std::vector<long>> l(n_, std::vector<long>(n_, 0));
        for (std::size_t i = 0; i < n_; ++i) {
            if (x[i] % p == 0) continue;
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) l[k][j] = (l[k][j] + x[i] * c_[(i * n_ + j) * n_ + k]) % p;
        }
        if (det_mod_prime(l, p) == 0) return false;
    }
    return true;
}

FiniteRing::Element FiniteRing::power(Element x, std::uint64_t e) const {
    Element r = one_;
    while (e) {
        if (e & 1) r = multiply(r, x);
        x = multiply(x, x);
        e >>= 1;
    }
    return r;
}

FiniteRing::Element FiniteRing::reduce(const QVec& v) const {
    QVec c = inverse_ * v;
    if (!is_integral(c)) throw Error(ErrorCode::PreconditionFailed, "element outside the order");
    Element out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        Z r = c[i].get_num() % m_;
        if (r < 0) r += m_;
        out[i] = r.get_si();
    }
    return out;
}

QVec FiniteRing::lift(const Element& x) const {
    QVec c(n_);
    for (std::size_t i = 0; i < n_; ++i) c[i] = x[i];
    return basis_ * c;
}

std::uint64_t FiniteRing::code(const Element& x) const {
    std::uint64_t c = 0;
    for (std::size_t i = n_; i-- > 0;) c = c * static_cast<std::uint64_t>(m_) + static_cast<std::uint64_t>(x[i]);
    return c;
}

FiniteRing::Element FiniteRing::decode(std::uint64_t c) const {
    Element x(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        x[i] = static_cast<long>(c % static_cast<std::uint64_t>(m_));
        c /= static_cast<std::uint64_t>(m_);
    }
    return x;
}

// ---- unit groups ----

FiniteUnitGroup::FiniteUnitGroup(FiniteRing ring, const std::function<bool(const Element&)>& member)
    : ring_(std::move(ring)) {
    const std::uint64_t size = ring_.size();
    if (size > 2000000) throw Error(ErrorCode::TooLarge, "unit enumeration capped at 2e6 ring elements");
    member_.assign(size, false);
    for (std::uint64_t c = 0; c < size; ++c) {
        Element x = ring_.decode(c);
        if (member && !member(x)) continue;
        if (!ring_.is_unit(x)) continue;
        member_[c] = true;
        elements_.push_back(std::move(x));
    }
    std::vector<bool> covered(size, false);
    for (const auto& x : elements_) {
        if (covered[ring_.code(x)]) continue;
        generators_.push_back(x);
        for (auto c : closure(generators_)) covered[c] = true;
    }
}

bool FiniteUnitGroup::contains(const Element& x) const { return member_[ring_.code(x)]; }

FiniteUnitGroup::Element FiniteUnitGroup::inverse(const Element& x) const {
    return ring_.power(x, static_cast<std::uint64_t>(order()) - 1);
}

std::vector<std::uint64_t> FiniteUnitGroup::closure(const std::vector<Element>& gens) const {
    std::vector<bool> seen(member_.size(), false);
    std::vector<std::uint64_t> out;
    std::deque<Element> queue{ring_.one()};
    seen[ring_.code(ring_.one())] = true;
    while (!queue.empty()) {
        Element x = std::move(queue.front());
        queue.pop_front();
        out.push_back(ring_.code(x));
        for (const auto& g : gens) {
            Element y = ring_.multiply(x, g);
            auto c = ring_.code(y);
            if (!seen[c]) {
                seen[c] = true;
                queue.push_back(std::move(y));
            }
        }
    }
    return out;
}

FiniteAbelianGroup FiniteUnitGroup::quotient(const std::vector<Element>& extra) const {
    std::vector<Element> gens;
    for (const auto& x : extra) {
        if (!contains(x)) throw Error(ErrorCode::NotUnit, "relation outside the unit group");
        gens.push_back(x);
    }
    std::vector<Element> inv;
    for (const auto& g : generators_) inv.push_back(inverse(g));
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t j = 0; j < generators_.size(); ++j)
            if (i != j)
                gens.push_back(ring_.multiply(ring_.multiply(generators_[i], generators_[j]), ring_.multiply(inv[i], inv[j])));
    // normal closure
    std::vector<bool> in_n(member_.size(), false);
    std::vector<std::uint64_t> n_codes;
    for (bool changed = true; changed;) {
        changed = false;
        n_codes = closure(gens);
        std::fill(in_n.begin(), in_n.end(), false);
        for (auto c : n_codes) in_n[c] = true;
        const std::size_t count = gens.size();
        for (std::size_t i = 0; i < generators_.size(); ++i)
            for (std::size_t t = 0; t < count; ++t) {
                Element c = ring_.multiply(ring_.multiply(generators_[i], gens[t]), inv[i]);
                if (!in_n[ring_.code(c)]) {
                    gens.push_back(c);
                    changed = true;
                }
            }
    }
    std::vector<bool> marked(member_.size(), false);
    std::vector<Z> orders;
    for (const auto& x : elements_) {
        if (marked[ring_.code(x)]) continue;
        for (auto c : n_codes) marked[ring_.code(ring_.multiply(x, ring_.decode(c)))] = true;
        long k = 1;
        for (Element y = x; !in_n[ring_.code(y)]; y = ring_.multiply(y, x)) ++k;
        orders.push_back(k);
    }
    return abelian_group_from_orders(orders);
}

// ---- class groups ----

std::vector<QVec> block_global_units(const BlockLayout& blocks) {
    const std::size_t n = blocks.dim();
    QVec one(n, Q(0));
    for (std::size_t k = 0; k < blocks.sizes.size(); ++k)
        for (std::size_t i = 0; i < blocks.sizes[k]; ++i) one[blocks.index(k, i, i)] = 1;
    std::vector<QVec> out;
    for (std::size_t k = 0; k < blocks.sizes.size(); ++k) {
        const std::size_t s = blocks.sizes[k];
        QVec sign = one;
        sign[blocks.index(k, 0, 0)] = -1;
        out.push_back(sign);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j)
                if (i != j) {
                    QVec e = one;
                    e[blocks.index(k, i, j)] = 1;
                    out.push_back(e);
                }
    }
    return out;
}

Z conductor_exponent(const ZLattice& lambda, const ZLattice& gamma) {
    if (!gamma.contains(lambda)) throw Error(ErrorCode::PreconditionFailed, "Lambda is not contained in Gamma");
    QMat c = lambda.basis() * *inverse(gamma.basis(), kQ);
    auto f = invariant_factors(to_integer(c));
    return f.empty() ? Z(1) : f.back();
}

ClassGroupResult class_group_conductor_square(const GradedAlgebra& a, const ZLattice& lambda, const ZLattice& gamma,
                                              const std::vector<QVec>& global_units) {
    ClassGroupResult out;
    out.caveats = {"class group of Gamma asserted trivial", "Eichler condition asserted"};
    Z m = conductor_exponent(lambda, gamma);
    if (m == 1) return out;
    if (!m.fits_slong_p()) throw Error(ErrorCode::TooLarge, "conductor exponent");
    out.modulus = m.get_si();
    FiniteRing ring(a, gamma, out.modulus);
    FiniteUnitGroup big(ring);

    // image of Lambda in Gamma / m Gamma, as an additive subgroup
    std::vector<bool> in_lambda(ring.size(), false);
    std::deque<FiniteRing::Element> queue{FiniteRing::Element(ring.dim(), 0)};
    in_lambda[0] = true;
    std::vector<FiniteRing::Element> gens;
    for (const auto& v : lambda.basis_vectors()) gens.push_back(ring.reduce(v));
    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            auto y = ring.add(x, g);
            if (!in_lambda[ring.code(y)]) {
                in_lambda[ring.code(y)] = true;
                queue.push_back(y);
            }
        }
    }
    FiniteUnitGroup small(ring, [&](const FiniteRing::Element& x) { return in_lambda[ring.code(x)]; });

    std::vector<FiniteRing::Element> relations = small.generators();
    for (const auto& u : global_units) relations.push_back(ring.reduce(u));
    out.group = big.quotient(relations);
    out.gamma_units = big.order();
    out.lambda_units = small.order();
    return out;
}

ClassGroupResult classical_class_group(const DgOrder& order) {
    if (!order.blocks) throw Error(ErrorCode::NotSplit, "classical class group needs a product of matrix algebras");
    const ZLattice gamma = ZLattice::standard(order.ambient.dim());
    return class_group_conductor_square(order.ambient.algebra, order.lattice, gamma, block_global_units(*order.blocks));
}

DgClassGroupReport dg_idele_class_group(const DgOrder& order) {
    const DgAlgebra& a = order.ambient;
    const GradedAlgebra& A = a.algebra;
    DgClassGroupReport out;
    out.caveats = {"Phi surjects onto Cl(Lambda,d); its injectivity is not known",
                   "finiteness of dg class groups is not known in general", "Eichler condition asserted"};

    const bool trivial_grading = std::all_of(A.degrees().begin(), A.degrees().end(), [](int d) { return d == 0; });
    if (a.differential.is_zero() && trivial_grading) {
        if (!order.blocks || !ZLattice::standard(a.dim()).contains(order.lattice))
            throw Error(ErrorCode::UnsupportedCycleOrder, "classical case needs the standard maximal order");
        out.cycle_order = "the order itself (D = 0, trivial grading)";
        out.computation = classical_class_group(order);
    } else {
        std::vector<QVec> cycles = lattice_kernel(order.lattice.basis_vectors(), a.differential);
        for (const auto& x : cycles)
            for (const auto& y : cycles)
                if (A.multiply(x, y) != A.multiply(y, x))
                    throw Error(ErrorCode::UnsupportedCycleOrder, "cycle order is not commutative");
        ZLattice zl(a.dim(), cycles);
        auto hb = homogeneous_lattice_basis(A, zl);
        if (!hb) throw std::logic_error("cycle order is not graded");
        EmbeddedAlgebra c = restrict_to_subalgebra(a, *hb, A.unit());
        const GradedAlgebra& C = c.algebra.algebra;
        const std::size_t r = C.dim();
        // semisimple quotient C / nil(C)
        const Subspace nil(r, kQ, jacobson_radical(C));
        std::vector<QVec> reps = complement_basis(nil, Subspace::whole(r, kQ));
        const std::size_t k = reps.size();
        std::vector<QVec> all = reps;
        all.insert(all.end(), nil.basis().begin(), nil.basis().end());
        QMat modulo = inverse(QMat::from_cols(all, r), kQ)->submatrix(0, 0, k, r);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < k; ++i) names.push_back("s" + std::to_string(i));
        GradedAlgebra S(kQ, names, std::vector<int>(k, 0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                QVec prod = modulo * C.multiply(reps[i], reps[j]);
                for (std::size_t t = 0; t < k; ++t)
                    if (prod[t] != 0) S.set_constant(i, j, t, prod[t]);
            }
        S.set_unit(modulo * C.unit());
        auto idem = primitive_central_idempotents(DgAlgebra{S, QMat(k, k)});
        if (idem.size() != k)
            throw Error(ErrorCode::UnsupportedCycleOrder, "semisimple part of the cycle algebra is not split");
        // coordinates along the idempotents
        QMat to_split = *inverse(QMat::from_cols(idem, k), kQ);
        std::vector<QVec> images;
        for (std::size_t i = 0; i < r; ++i) images.push_back(to_split * (modulo * unit_vector(r, i)));
        // the cycle order in C coordinates is spanned by the basis used for C
        ZLattice split_order(k, images);
        GradedAlgebra product(kQ, std::vector<std::string>(k, "q"), std::vector<int>(k, 0));
        QVec ones(k, Q(1));
        for (std::size_t i = 0; i < k; ++i) product.set_constant(i, i, i, Q(1));
        product.set_unit(ones);
        std::vector<QVec> signs;
        for (std::size_t i = 0; i < k; ++i) {
            QVec s = ones;
            s[i] = -1;
            signs.push_back(s);
        }
        if (!ZLattice::standard(k).contains(split_order))
            throw std::logic_error("cycle order is not integral in the split quotient");
        out.cycle_order = "commutative; modulo its nilradical an order in Q^" + std::to_string(k);
        out.computation = class_group_conductor_square(product, split_order, ZLattice::standard(k), signs);
    }
    out.upper_bound = out.computation.group;
    out.exact = out.upper_bound.trivial();
    return out;
}

// ---- ideles ----

Idele principal_idele(const DgOrder& order, const QVec& z, bool dg) {
    auto zi = algebra_inverse(order.ambient.algebra, z);
    if (!zi) throw Error(ErrorCode::NonUnitComponent, "z is not invertible");
    Z den = 1;
    for (const auto& v : {z, *zi}) {
        auto c = order.lattice.rational_coordinates(v);
        den = lcm(den, common_denominator(*c));
    }
    Idele out;
    out.dg = dg;
    std::set<long> primes;
    if (den != 1)
        for (long p : prime_divisors(den)) primes.insert(p);
    Q vol = determinant(order.ambient.algebra.right_multiplication(z), kQ);
    for (long p : prime_divisors(abs(vol.get_num() * vol.get_den()))) primes.insert(p);
    for (long p : primes) out.components[p] = z;
    return out;
}

FractionalDgIdeal ideal_from_idele(const DgOrder& order, const Idele& alpha) {
    const DgAlgebra& a = order.ambient;
    ZLattice l = order.lattice;
    for (const auto& [p, comp] : alpha.components) {
        if (!algebra_inverse(a.algebra, comp)) throw Error(ErrorCode::NonUnitComponent, "component at " + std::to_string(p));
        if (alpha.dg) {
            auto deg = a.algebra.homogeneous_degree(comp);
            if (!deg || *deg != 0 || !is_zero(a.d(comp)))
                throw Error(ErrorCode::PreconditionFailed, "dg idele component at " + std::to_string(p) + " is not a degree-0 cycle");
        }
        l = replace_at_prime(l, p, order.lattice.mapped(a.algebra.right_multiplication(comp)));
    }
    FractionalDgIdeal out{l, alpha, true};
    for (const auto& v : l.basis_vectors())
        if (!l.contains(a.d(v))) out.delta_stable = false;
    return out;
}

FreenessResult is_free_rank_one(const DgOrder& order, const ZLattice& lattice, long box) {
    const DgAlgebra& a = order.ambient;
    const GradedAlgebra& A = a.algebra;
    const auto lam = order.lattice.basis_vectors();
    for (const auto& x : lam)
        for (const auto& v : lattice.basis_vectors())
            if (!lattice.contains(A.multiply(x, v)))
                throw Error(ErrorCode::PreconditionFailed, "lattice is not a left module over the order");
    FreenessResult out;
    const std::vector<QVec> w = degree_zero_cycles(a, lattice);
    const std::size_t r = w.size();
    if (r == 0) {
        out.verdict = Freeness::NotFree;
        out.certificate = "no nonzero degree-0 cycles";
        return out;
    }
    // M_i: coordinates of lambda_j w_i in the lattice basis; Lambda z = L iff det(sum c_i M_i) = +-1
    std::vector<QMat> mats;
    for (const auto& wi : w) {
        std::vector<QVec> imgs;
        for (const auto& x : lam) imgs.push_back(A.multiply(x, wi));
        mats.push_back(coordinates_matrix(lattice, imgs));
    }
    const std::size_t n = lam.size();
    auto combine = [&](const std::vector<long>& c) {
        QMat m(n, n);
        for (std::size_t i = 0; i < r; ++i)
            if (c[i] != 0) m = m + mats[i] * Q(c[i]);
        return m;
    };

    std::vector<long> primes = residue_primes(a, order.lattice, lattice);
    long modulus = 1;
    double classes = 1;
    std::vector<long> used;
    for (long p : primes) {
        double next = classes;
        for (std::size_t i = 0; i < r; ++i) next *= static_cast<double>(p);
        if (next > 2e5) continue;
        classes = next;
        modulus *= p;
        used.push_back(p);
    }
    // |det_k z| = vol(Gamma L e_k)^(1/s_k) on each matrix block when Lambda lies in the standard maximal order
    struct BlockNorm {
        std::size_t size;
        std::vector<std::size_t> slots; // row-major
        Q target;
    };
    std::vector<BlockNorm> norms;
    if (order.blocks && order.blocks->dim() == a.dim() && ZLattice::standard(a.dim()).contains(order.lattice)) {
        std::vector<QVec> prods;
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (const auto& v : lattice.basis_vectors()) prods.push_back(A.multiply(unit_vector(a.dim(), i), v));
        const ZLattice gl(a.dim(), prods);
        const BlockLayout& bl = *order.blocks;
        for (std::size_t k = 0; k < bl.sizes.size(); ++k) {
            BlockNorm bn{bl.sizes[k], {}, Q(0)};
            for (std::size_t i = 0; i < bn.size; ++i)
                for (std::size_t j = 0; j < bn.size; ++j) bn.slots.push_back(bl.index(k, i, j));
            QMat sl = coordinate_slice(gl, bn.slots).basis().select_cols(bn.slots);
            Q vol = abs(determinant(sl, kQ));
            Z num, den;
            bool exact = mpz_root(num.get_mpz_t(), vol.get_num().get_mpz_t(), bn.size) != 0 &&
                         mpz_root(den.get_mpz_t(), vol.get_den().get_mpz_t(), bn.size) != 0;
            if (!exact) {
                norms.clear();
                break;
            }
            bn.target = Q(num) / Q(den);
            bn.target.canonicalize();
            norms.push_back(std::move(bn));
        }
    }
    auto residue = [](const Q& x, long p) -> std::optional<long> {
        if (x.get_den() % p == 0) return std::nullopt;
        long nu = Z(x.get_num() % p).get_si(), de = Z(x.get_den() % p).get_si();
        return mod(mod(nu, p) * mod_inverse(mod(de, p), p), p);
    };

    if (modulus > 1) {
        out.modulus = modulus;
        // residues of the M_i and of the block entries of the w_i, per used prime
        struct PrimeData {
            long p;
            std::vector<std::vector<long>> mats; // r matrices, row-major n x n
            std::vector<std::optional<long>> targets;
            std::vector<std::optional<std::vector<long>>> blocks; // per block: r x s^2 entries, empty if not p-integral
        };
        std::vector<PrimeData> data;
        for (long p : used) {
            PrimeData pd{p, {}, {}, {}};
            for (const auto& m : mats) {
                std::vector<long> e(n * n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) e[i * n + j] = mod(to_long(m(i, j)), p);
                pd.mats.push_back(std::move(e));
            }
            for (const BlockNorm& bn : norms) {
                pd.targets.push_back(residue(bn.target, p));
                std::vector<long> entries;
                bool integral = true;
                for (std::size_t i = 0; i < r && integral; ++i)
                    for (auto slot : bn.slots) {
                        auto e = residue(w[i][slot], p);
                        integral = integral && e.has_value();
                        entries.push_back(e.value_or(0));
                    }
                pd.blocks.push_back(integral ? std::optional(entries) : std::nullopt);
            }
            data.push_back(std::move(pd));
        }
        bool survivor = false;
        std::vector<long> c(r, 0);
        for (;;) {
            std::optional<QVec> z;
            auto exact_z = [&]() -> const QVec& {
                if (!z) {
                    z = QVec(a.dim(), Q(0));
                    for (std::size_t i = 0; i < r; ++i)
                        if (c[i]) *z = *z + Q(c[i]) * w[i];
                }
                return *z;
            };
            bool plus = true, minus = true;
            std::vector<char> block_plus(norms.size(), 1), block_minus(norms.size(), 1);
            for (const PrimeData& pd : data) {
                const long p = pd.p;
                std::vector<std::vector<long>> rows(n, std::vector<long>(n, 0));
                for (std::size_t t = 0; t < r; ++t) {
                    const long ct = mod(c[t], p);
                    if (ct == 0) continue;
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t j = 0; j < n; ++j) rows[i][j] = (rows[i][j] + ct * pd.mats[t][i * n + j]) % p;
                }
                long d = det_mod_prime(rows, p);
                plus = plus && d == 1 % p;
                minus = minus && d == mod(-1, p);
                for (std::size_t k = 0; k < norms.size(); ++k) {
                    const BlockNorm& bn = norms[k];
                    const auto& t = pd.targets[k];
                    if (!t) continue;
                    const std::size_t s2 = bn.size * bn.size;
                    std::vector<std::vector<long>> blk(bn.size, std::vector<long>(bn.size, 0));
                    bool defined = true;
                    if (pd.blocks[k]) {
                        for (std::size_t i = 0; i < r; ++i) {
                            const long ci = mod(c[i], p);
                            if (ci == 0) continue;
                            for (std::size_t e = 0; e < s2; ++e)
                                blk[e / bn.size][e % bn.size] = (blk[e / bn.size][e % bn.size] + ci * (*pd.blocks[k])[i * s2 + e]) % p;
                        }
                    } else {
                        const QVec& zz = exact_z();
                        for (std::size_t e = 0; e < s2 && defined; ++e) {
                            auto v = residue(zz[bn.slots[e]], p);
                            defined = v.has_value();
                            if (v) blk[e / bn.size][e % bn.size] = *v;
                        }
                    }
                    if (!defined) continue;
                    long dk = det_mod_prime(blk, p);
                    block_plus[k] = block_plus[k] && dk == *t;
                    block_minus[k] = block_minus[k] && dk == mod(-*t, p);
                }
            }
            bool ok = plus || minus;
            for (std::size_t k = 0; k < norms.size(); ++k) ok = ok && (block_plus[k] || block_minus[k]);
            if (ok) {
                survivor = true;
                break;
            }
            std::size_t i = 0;
            while (i < r && ++c[i] == modulus) c[i++] = 0;
            if (i == r) break;
        }
        if (!survivor) {
            out.verdict = Freeness::NotFree;
            out.certificate = "no degree-0 cycle class modulo " + std::to_string(modulus) + " (primes " + join(used) +
                              ") has the index and reduced norms of a generator";
            return out;
        }
    }
    long b = box;
    while (b > 0) {
        double count = 1;
        for (std::size_t i = 0; i < r; ++i) count *= static_cast<double>(2 * b + 1);
        if (count <= 2e5) break;
        --b;
    }
    std::vector<long> c(r, -b);
    for (;;) {
        if (std::any_of(c.begin(), c.end(), [](long x) { return x != 0; })) {
            Z d = det_integral(combine(c));
            if (d == 1 || d == -1) {
                QVec z(a.dim(), Q(0));
                for (std::size_t i = 0; i < r; ++i) z = z + Q(c[i]) * w[i];
                out.verdict = Freeness::Free;
                out.generator = z;
                out.certificate = "generator found in the coefficient box of radius " + std::to_string(b);
                return out;
            }
        }
        std::size_t i = 0;
        while (i < r && ++c[i] > b) c[i++] = -b;
        if (i == r) break;
    }
    out.verdict = Freeness::Unknown;
    out.certificate = "residue test passed; no generator in the coefficient box of radius " + std::to_string(b);
    return out;
}

// ---- Mayer-Vietoris ----

PullbackData pullback_data(const DgOrder& order, const QVec& e) {
    const DgAlgebra& a = order.ambient;
    const GradedAlgebra& A = a.algebra;
    const std::size_t n = a.dim();
    auto deg = A.homogeneous_degree(e);
    bool central = A.multiply(e, e) == e && deg && *deg == 0 && is_zero(a.d(e));
    for (std::size_t i = 0; i < n && central; ++i) central = A.multiply(e, unit_vector(n, i)) == A.multiply(unit_vector(n, i), e);
    if (!central) throw Error(ErrorCode::NotCentralIdempotent, "e is not a central degree-0 cycle idempotent");
    PullbackData out;
    out.e = e;
    out.f = A.unit() - e;
    const auto basis = order.lattice.basis_vectors();
    out.lambda_e = order.lattice.mapped(A.right_multiplication(out.e));
    out.lambda_f = order.lattice.mapped(A.right_multiplication(out.f));
    out.ideal_e = ZLattice(n, lattice_kernel(basis, A.right_multiplication(out.f)));
    out.ideal_f = ZLattice(n, lattice_kernel(basis, A.right_multiplication(out.e)));
    return out;
}

namespace {

bool unit_modulo(const GradedAlgebra& A, const ZLattice& ring, const ZLattice& ideal, const QVec& u) {
    return ring.mapped(A.left_multiplication(u)) + ideal == ring;
}

} // namespace

FractionalDgIdeal mv_pullback_lattice(const DgOrder& order, const QVec& e, const QVec& u) {
    const DgAlgebra& a = order.ambient;
    const GradedAlgebra& A = a.algebra;
    PullbackData pd = pullback_data(order, e);
    if (!pd.lambda_e.contains(u)) throw Error(ErrorCode::NotUnit, "u is not in Lambda e");
    auto deg = A.homogeneous_degree(u);
    if ((deg && *deg != 0) || !pd.ideal_e.contains(a.d(u)) || !unit_modulo(A, pd.lambda_e, pd.ideal_e, u))
        throw Error(ErrorCode::NotUnit, "u is not a degree-0 cycle unit modulo Lambda cap Ae");
    const QVec w = u + pd.f;
    QMat coords = *inverse(order.lattice.basis().transpose(), kQ) * A.right_multiplication(w);
    ZLattice l = integral_preimage_in(pd.lambda_e + pd.lambda_f, coords.transpose());
    FractionalDgIdeal out{l, std::nullopt, true};
    for (const auto& v : l.basis_vectors())
        if (!l.contains(a.d(v))) out.delta_stable = false;
    return out;
}

MvExactnessReport mv_exactness_check(const DgOrder& order, const QVec& e) {
    const DgAlgebra& a = order.ambient;
    const GradedAlgebra& A = a.algebra;
    const std::size_t n = a.dim();
    PullbackData pd = pullback_data(order, e);
    MvExactnessReport rep;

    // Lambda e / (Lambda cap Ae) = sum Z/s_i v_i
    const auto le = pd.lambda_e.basis_vectors();
    const std::size_t r = le.size();
    QMat c = coordinates_matrix(pd.lambda_e, pd.ideal_e.basis_vectors());
    SmithForm snf = smith_normal_form(to_integer(c));
    std::vector<QVec> adapted;
    std::vector<long> moduli;
    for (std::size_t i = 0; i < r; ++i) {
        QVec v(n, Q(0));
        for (std::size_t j = 0; j < r; ++j)
            if (snf.V(i, j) != 0) v = v + Q(snf.V(i, j)) * le[j];
        adapted.push_back(v);
        Z s = i < snf.S.rows() && i < snf.S.cols() ? Z(abs(snf.S(i, i))) : Z(0);
        if (s == 0) throw std::logic_error("Lambda cap Ae is not of full rank in Lambda e");
        moduli.push_back(s.get_si());
    }
    const QMat adapted_rows = QMat::from_rows(adapted, n);
    auto class_of = [&](const QVec& v) {
        auto k = *solve_left(adapted_rows, v, kQ);
        std::vector<long> out(r);
        for (std::size_t i = 0; i < r; ++i) out[i] = mod(to_long(k[i]), moduli[i]);
        return out;
    };
    auto rep_of = [&](const std::vector<long>& k) {
        QVec v(n, Q(0));
        for (std::size_t i = 0; i < r; ++i)
            if (k[i]) v = v + Q(k[i]) * adapted[i];
        return v;
    };

    // the degree-0 cycle unit classes
    double total = 1;
    for (long s : moduli) total *= static_cast<double>(s);
    if (total > 2e5) throw Error(ErrorCode::TooLarge, "common quotient has too many elements");
    std::vector<std::vector<long>> units;
    std::vector<long> k(r, 0);
    const auto zero_idx = A.indices_of_degree(0);
    for (;;) {
        QVec v = rep_of(k);
        QVec v0(n, Q(0));
        for (auto i : zero_idx) v0[i] = v[i];
        if (pd.ideal_e.contains(v - v0) && pd.ideal_e.contains(a.d(v0)) && unit_modulo(A, pd.lambda_e, pd.ideal_e, v0))
            units.push_back(k);
        std::size_t i = 0;
        while (i < r && ++k[i] == moduli[i]) k[i++] = 0;
        if (i == r) break;
    }
    rep.units_checked = units.size();

    // images of global degree-0 cycle units of Lambda e and Lambda f, from a coefficient box
    auto box_units = [&](const ZLattice& ring) {
        std::vector<QVec> out;
        auto w = degree_zero_cycles(a, ring);
        const long b = w.size() <= 4 ? 2 : 1;
        std::vector<long> t(w.size(), -b);
        for (;;) {
            QVec z(n, Q(0));
            for (std::size_t i = 0; i < w.size(); ++i)
                if (t[i]) z = z + Q(t[i]) * w[i];
            if (!is_zero(z) && ring.mapped(A.left_multiplication(z)) == ring) out.push_back(z);
            std::size_t i = 0;
            while (i < t.size() && ++t[i] > b) t[i++] = -b;
            if (i == t.size()) break;
        }
        return out;
    };
    // the element of Lambda e glued to b in Lambda f
    const auto lam = order.lattice.basis_vectors();
    std::vector<QVec> lam_f;
    for (const auto& x : lam) lam_f.push_back(A.multiply(x, pd.f));
    ZMat gen_rows(lam.size(), n);
    Z den = common_denominator(QMat::from_rows(lam_f, n));
    for (std::size_t i = 0; i < lam.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) gen_rows(i, j) = Q(lam_f[i][j] * den).get_num();
    HermiteForm hf = hermite_normal_form(gen_rows);
    auto glue = [&](const QVec& b) {
        QVec target = Q(den) * b;
        // y H = target, then k = y W
        std::vector<Q> y;
        std::size_t rows = 0;
        while (rows < hf.H.rows()) {
            bool nz = false;
            for (std::size_t j = 0; j < n; ++j) nz = nz || hf.H(rows, j) != 0;
            if (!nz) break;
            ++rows;
        }
        QMat h = to_rational(hf.H).submatrix(0, 0, rows, n);
        auto sol = solve_left(h, target, kQ);
        if (!sol || !is_integral(*sol)) throw std::logic_error("b is not in Lambda f");
        QVec lambda(n, Q(0));
        for (std::size_t t = 0; t < rows; ++t)
            for (std::size_t i = 0; i < lam.size(); ++i)
                if (hf.W(t, i) != 0) lambda = lambda + ((*sol)[t] * Q(hf.W(t, i))) * lam[i];
        return A.multiply(lambda, pd.e);
    };

    std::set<std::vector<long>> generators;
    for (const auto& z : box_units(pd.lambda_e)) generators.insert(class_of(z));
    for (const auto& z : box_units(pd.lambda_f)) generators.insert(class_of(glue(z)));
    auto close = [&](const std::set<std::vector<long>>& gens) {
        std::set<std::vector<long>> group{class_of(pd.e)};
        std::deque<std::vector<long>> queue{class_of(pd.e)};
        while (!queue.empty()) {
            auto x = queue.front();
            queue.pop_front();
            for (const auto& g : gens) {
                auto y = class_of(A.multiply(rep_of(x), rep_of(g)));
                if (group.insert(y).second) queue.push_back(y);
            }
        }
        return group;
    };
    std::set<std::vector<long>> image = close(generators);

    // composites: global units of Lambda land on the trivial class
    rep.composites_vanish = true;
    for (const auto& z : box_units(order.lattice)) {
        QVec ze = A.multiply(z, pd.e);
        QVec glued = glue(A.multiply(z, pd.f));
        // (z e)^{-1} glue(z f) is trivial: both sides agree modulo Lambda cap Ae
        if (!pd.ideal_e.contains(ze - glued)) rep.composites_vanish = false;
    }

    rep.exact_at_units = true;
    rep.restriction_trivial = true;
    for (const auto& u : units) {
        QVec v = rep_of(u);
        QVec u0(n, Q(0));
        for (auto i : zero_idx) u0[i] = v[i];
        FractionalDgIdeal l = mv_pullback_lattice(order, pd.e, u0);
        if (!(l.lattice.mapped(A.right_multiplication(pd.e)) == pd.lambda_e) ||
            !(l.lattice.mapped(A.right_multiplication(pd.f)) == pd.lambda_f))
            rep.restriction_trivial = false;
        FreenessResult fr = is_free_rank_one(order, l.lattice);
        if (fr.verdict == Freeness::Unknown) {
            ++rep.inconclusive;
            continue;
        }
        const bool in_image = image.count(u) > 0;
        if (fr.verdict == Freeness::Free && !in_image) {
            // a generator yields component units whose image contains u
            QVec ze = A.multiply(*fr.generator, pd.e);
            QVec zf = A.multiply(*fr.generator, pd.f);
            generators.insert(class_of(ze));
            generators.insert(class_of(glue(zf)));
            image = close(generators);
        }
        if ((fr.verdict == Freeness::Free) != (image.count(u) > 0)) rep.exact_at_units = false;
    }
    rep.image_size = image.size();
    return rep;
}

// ---- homology classes ----

std::map<int, std::vector<Z>> homology_torsion(const DgAlgebra& a, const ZLattice& lattice) {
    std::map<int, std::vector<Z>> out;
    const GradedAlgebra& A = a.algebra;
    for (int k : A.degree_set()) {
        ZLattice slice = coordinate_slice(lattice, A.indices_of_degree(k));
        ZLattice cycles(a.dim(), lattice_kernel(slice.basis_vectors(), a.differential));
        std::vector<QVec> bounds;
        for (const auto& v : coordinate_slice(lattice, A.indices_of_degree(k - 1)).basis_vectors()) {
            QVec dv = a.d(v);
            if (!is_zero(dv)) bounds.push_back(dv);
        }
        std::vector<Z> t;
        if (!bounds.empty() && cycles.rank() > 0) {
            for (const auto& s : invariant_factors(to_integer(coordinates_matrix(cycles, bounds))))
                if (s > 1) t.push_back(s);
        }
        out[k] = t;
    }
    return out;
}

HomologyClassReport homology_class_map(const DgOrder& order, const ZLattice& lattice) {
    const DgAlgebra& a = order.ambient;
    HomologyClassReport rep;
    rep.torsion_matches = homology_torsion(a, lattice) == homology_torsion(a, order.lattice);
    if (a.differential.is_zero()) {
        // H(Lambda)/t = Lambda and H(L)/t = L
        rep.freeness = is_free_rank_one(order, lattice);
        rep.trivial_class = rep.freeness->verdict == Freeness::Free;
        return rep;
    }
    HomologyPresentation h = homology_ring(share(a));
    if (h.is_zero()) {
        rep.target_trivial = true;
        rep.trivial_class = true;
        return rep;
    }
    const std::size_t k = h.generators.size();
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (std::size_t i = 0; i < k; ++i) {
        names.push_back("h" + std::to_string(i));
        degrees.push_back(h.generators[i].degree);
    }
    GradedAlgebra H(kQ, names, degrees);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t t = 0; t < k; ++t)
                if (h.products[i][j][t] != 0) H.set_constant(i, j, t, h.products[i][j][t]);
    H.set_unit(*h.coordinates(a.algebra.unit()));
    if (!algebra_semisimplicity(H)) throw Error(ErrorCode::HomologyNotSemisimple, "H(A,d) is not semisimple");
    auto image = [&](const ZLattice& l) {
        std::vector<QVec> imgs;
        for (const auto& z : lattice_kernel(l.basis_vectors(), a.differential)) imgs.push_back(*h.coordinates(z));
        return ZLattice(k, imgs);
    };
    DgAlgebra hd{H, QMat(k, k)};
    auto hbar = is_dg_order(hd, image(order.lattice));
    if (!hbar.order) throw std::logic_error("H(Lambda)/torsion is not an order: " + hbar.report.summary());
    rep.freeness = is_free_rank_one(*hbar.order, image(lattice));
    rep.trivial_class = rep.freeness->verdict == Freeness::Free;
    return rep;
}

UnitLiftingReport unit_lifting_across_nilpotent(const FiniteRing& b, const std::vector<FiniteRing::Element>& nil_ideal) {
    const std::uint64_t size = b.size();
    if (size > 4000) throw Error(ErrorCode::TooLarge, "unit lifting enumeration capped at 4000 elements");
    std::vector<bool> in_n(size, false);
    std::deque<FiniteRing::Element> queue{FiniteRing::Element(b.dim(), 0)};
    in_n[0] = true;
    std::vector<FiniteRing::Element> ideal{FiniteRing::Element(b.dim(), 0)};
    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        for (const auto& g : nil_ideal) {
            auto y = b.add(x, g);
            if (!in_n[b.code(y)]) {
                in_n[b.code(y)] = true;
                ideal.push_back(y);
                queue.push_back(y);
            }
        }
    }
    for (const auto& x : ideal)
        if (!in_n[b.code(b.power(x, size))]) throw Error(ErrorCode::PreconditionFailed, "ideal is not nilpotent");
    UnitLiftingReport rep;
    std::vector<bool> done(size, false);
    for (std::uint64_t c = 0; c < size; ++c) {
        if (done[c]) continue;
        FiniteRing::Element x = b.decode(c);
        std::vector<FiniteRing::Element> coset;
        for (const auto& n : ideal) {
            auto y = b.add(x, n);
            done[b.code(y)] = true;
            coset.push_back(y);
        }
        bool unit_mod = false;
        for (std::uint64_t d = 0; d < size && !unit_mod; ++d) {
            auto prod = b.multiply(x, b.decode(d));
            FiniteRing::Element diff(b.dim());
            for (std::size_t i = 0; i < b.dim(); ++i) diff[i] = mod(prod[i] - b.one()[i], b.modulus());
            unit_mod = in_n[b.code(diff)];
        }
        if (!unit_mod) continue;
        ++rep.units_checked;
        if (std::any_of(coset.begin(), coset.end(), [&](const auto& y) { return b.is_unit(y); })) ++rep.lifted;
    }
    return rep;
}

UnitLiftingReport unit_lifting_to_cycles(const DgAlgebra& a) {
    const CoefficientRing& f = a.ring();
    if (!f.is_finite() || !f.is_field()) throw Error(ErrorCode::UnsupportedRing, "unit lifting enumerates F_p");
    UnitLiftingReport rep;
    HomologyPresentation h = homology_ring(share(a));
    if (h.is_zero()) {
        rep.vacuous = true;
        return rep;
    }
    const long p = f.modulus();
    const std::size_t k = h.generators.size();
    std::vector<QVec> bounds = Subspace(a.dim(), f, a.differential.col_list()).basis();
    double count = 1;
    for (std::size_t i = 0; i < k + bounds.size(); ++i) count *= static_cast<double>(p);
    if (count > 2e5) throw Error(ErrorCode::TooLarge, "homology too large to enumerate");
    auto invertible = [&](const QVec& z) { return rank(a.algebra.left_multiplication(z), f) == a.dim(); };
    std::vector<long> c(k, 0);
    for (;;) {
        QVec rep_h(a.dim(), Q(0));
        for (std::size_t i = 0; i < k; ++i)
            if (c[i]) rep_h = rep_h + Q(c[i]) * h.generators[i].representative;
        rep_h = a.algebra.normalize(rep_h);
        // a class is a unit if its left multiplication on H is invertible
        QMat lm(k, k);
        for (std::size_t j = 0; j < k; ++j) lm.set_col(j, *h.coordinates(a.algebra.multiply(rep_h, h.generators[j].representative)));
        if (rank(lm, f) == k) {
            ++rep.units_checked;
            std::vector<long> t(bounds.size(), 0);
            for (;;) {
                QVec z = rep_h;
                for (std::size_t i = 0; i < bounds.size(); ++i)
                    if (t[i]) z = z + Q(t[i]) * bounds[i];
                if (invertible(a.algebra.normalize(z))) {
                    ++rep.lifted;
                    break;
                }
                std::size_t i = 0;
                while (i < t.size() && ++t[i] == p) t[i++] = 0;
                if (i == t.size()) break;
            }
        }
        std::size_t i = 0;
        while (i < k && ++c[i] == p) c[i++] = 0;
        if (i == k) break;
    }
    return rep;
}

UnitCycleReport unit_cycle_identity(const DgOrder& order, long box) {
    const DgAlgebra& a = order.ambient;
    const GradedAlgebra& A = a.algebra;
    UnitCycleReport rep;
    const ZLattice cyc(a.dim(), lattice_kernel(order.lattice.basis_vectors(), a.differential));
    const auto w = cyc.basis_vectors();
    std::vector<long> c(w.size(), -box);
    const QMat lam_inv = *inverse(order.lattice.basis(), kQ);
    for (;;) {
        QVec z(a.dim(), Q(0));
        for (std::size_t i = 0; i < w.size(); ++i)
            if (c[i]) z = z + Q(c[i]) * w[i];
        if (!is_zero(z)) {
            ++rep.candidates;
            QMat lz = A.left_multiplication(z);
            Z big = det_integral(order.lattice.basis() * lz.transpose() * lam_inv);
            std::vector<QVec> imgs;
            for (const auto& x : w) imgs.push_back(lz * x);
            Z small = det_integral(coordinates_matrix(cyc, imgs));
            const bool unit_big = big == 1 || big == -1;
            const bool unit_small = small == 1 || small == -1;
            if (unit_big) ++rep.units;
            if (unit_big != unit_small) rep.passed = false;
        }
        std::size_t i = 0;
        while (i < c.size() && ++c[i] > box) c[i++] = -box;
        if (i == c.size()) break;
    }
    return rep;
}

} // namespace dgo
