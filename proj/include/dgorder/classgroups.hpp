#pragma once

#include "dgorder/orders.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dgo {

// Finite abelian group in invariant-factor form d_1 | d_2 | ..., all d_i > 1.
struct FiniteAbelianGroup {
    std::vector<Z> invariants;
    Z order() const;
    bool trivial() const { return invariants.empty(); }
    // "1" or "Z/2 x Z/4"
    std::string str() const;
    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
};

// Abelian group from the orders of all its elements.
FiniteAbelianGroup abelian_group_from_orders(const std::vector<Z>& element_orders);

// Gamma / m Gamma for a full order Gamma in a Q-algebra, coordinates in the lattice basis.
class FiniteRing {
public:
    using Element = std::vector<long>;

    FiniteRing(const GradedAlgebra& a, const ZLattice& order, long modulus);

    std::size_t dim() const noexcept { return n_; }
    long modulus() const noexcept { return m_; }
    // number of elements; throws TooLarge above 2^62
    std::uint64_t size() const;

    Element one() const { return one_; }
    Element multiply(const Element& x, const Element& y) const;
    Element add(const Element& x, const Element& y) const;
    bool is_unit(const Element& x) const;
    Element power(Element x, std::uint64_t e) const;

    // residue of an element of the order given in algebra coordinates
    Element reduce(const QVec& v) const;
    // representative in algebra coordinates with lattice coordinates in [0, m)
    QVec lift(const Element& x) const;

    std::uint64_t code(const Element& x) const;
    Element decode(std::uint64_t c) const;

private:
    std::size_t n_ = 0;
    long m_ = 1;
    std::vector<long> c_; // c_[(i n + j) n + k]
    Element one_;
    QMat basis_;   // columns
    QMat inverse_; // algebra coordinates -> lattice coordinates
    std::vector<long> primes_;
};

// Units of a finite ring, optionally restricted to a subring by a membership test.
class FiniteUnitGroup {
public:
    using Element = FiniteRing::Element;
    // Enumerates the whole ring; throws TooLarge above 2e6 elements.
    explicit FiniteUnitGroup(FiniteRing ring, const std::function<bool(const Element&)>& member = {});

    const FiniteRing& ring() const noexcept { return ring_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<Element>& elements() const noexcept { return elements_; }
    const std::vector<Element>& generators() const noexcept { return generators_; }
    bool contains(const Element& x) const;
    Element inverse(const Element& x) const;

    // the subgroup generated by `gens` (as codes)
    std::vector<std::uint64_t> closure(const std::vector<Element>& gens) const;
    FiniteAbelianGroup abelianization() const { return quotient({}); }
    // G / <[G, G], extra>
    FiniteAbelianGroup quotient(const std::vector<Element>& extra) const;

private:
    FiniteRing ring_;
    std::vector<Element> elements_;
    std::vector<bool> member_;
    std::vector<Element> generators_;
};

// generators of GL_n(Z) in each block (elementary matrices and sign changes)
std::vector<QVec> block_global_units(const BlockLayout& blocks);

// smallest m > 0 with m Gamma inside Lambda
Z conductor_exponent(const ZLattice& lambda, const ZLattice& gamma);

struct ClassGroupResult {
    FiniteAbelianGroup group;
    long modulus = 1;               // f = m Gamma
    std::size_t gamma_units = 1;    // |(Gamma/f)^x|
    std::size_t lambda_units = 1;   // |(Lambda/f)^x|
    std::vector<std::string> caveats;
};

// Cl(Lambda) = (Gamma/f)^x modulo commutators, (Lambda/f)^x and the global units of Gamma,
// for Gamma with trivial class group (asserted) and the Eichler condition (asserted).
ClassGroupResult class_group_conductor_square(const GradedAlgebra& a, const ZLattice& lambda, const ZLattice& gamma,
                                              const std::vector<QVec>& global_units);

// Classical class group of an order in a product of matrix algebras, Gamma = the standard maximal order.
ClassGroupResult classical_class_group(const DgOrder& order);

struct DgClassGroupReport {
    FiniteAbelianGroup upper_bound;
    std::string label = "upper bound realized by Phi";
    bool exact = false;              // the dg class group is known to equal the bound
    std::string cycle_order;         // how the cycle order was reduced
    ClassGroupResult computation;
    std::vector<std::string> caveats;
};
DgClassGroupReport dg_idele_class_group(const DgOrder& order);

// ---- ideles and fractional ideals ----

struct Idele {
    std::map<long, QVec> components; // other primes: 1
    bool dg = false;
};

// the principal idele of a global unit z at the primes where z or z^{-1} leaves the order
Idele principal_idele(const DgOrder& order, const QVec& z, bool dg);

struct FractionalDgIdeal {
    ZLattice lattice;
    std::optional<Idele> provenance;
    bool delta_stable = false;
};

FractionalDgIdeal ideal_from_idele(const DgOrder& order, const Idele& alpha);

enum class Freeness { Free, NotFree, Unknown };

struct FreenessResult {
    Freeness verdict = Freeness::Unknown;
    std::optional<QVec> generator; // homogeneous degree-0 cycle z with order * z = L
    long modulus = 0;              // residue modulus of the exhaustive part
    std::string certificate;
};

// Searches degree-0 cycles z in L with Lambda z = L. NotFree is a proof: no residue class of z
// modulo the relevant primes has the index of a generator (and, inside the standard maximal
// order of a block layout, its reduced norms). Free comes with z.
FreenessResult is_free_rank_one(const DgOrder& order, const ZLattice& lattice, long box = 3);

// ---- Mayer-Vietoris ----

struct PullbackData {
    QVec e, f;          // central idempotents, e + f = 1
    ZLattice lambda_e;  // projection of Lambda to Ae
    ZLattice lambda_f;
    ZLattice ideal_e;   // Lambda cap Ae
    ZLattice ideal_f;
};
PullbackData pullback_data(const DgOrder& order, const QVec& e);

// L_u = {v in Lambda e + Lambda f : v (u + f) in Lambda}, u in Lambda e a unit modulo Lambda cap Ae
FractionalDgIdeal mv_pullback_lattice(const DgOrder& order, const QVec& e, const QVec& u);

struct MvExactnessReport {
    bool composites_vanish = false;
    bool exact_at_units = false;   // L_u free exactly for u in the image of the component units
    bool restriction_trivial = false; // every L_u restricts to free modules over Lambda e, Lambda f
    std::size_t units_checked = 0;
    std::size_t image_size = 0;
    std::size_t inconclusive = 0;
    bool passed() const { return composites_vanish && exact_at_units && restriction_trivial && inconclusive == 0; }
};
MvExactnessReport mv_exactness_check(const DgOrder& order, const QVec& e);

// ---- homology classes ----

// torsion invariants of the homology of a Delta-stable lattice, per degree
std::map<int, std::vector<Z>> homology_torsion(const DgAlgebra& a, const ZLattice& lattice);

struct HomologyClassReport {
    bool target_trivial = false;   // H(Lambda)/torsion is zero
    bool torsion_matches = false;  // t(H(L)) = t(H(Lambda))
    std::optional<FreenessResult> freeness; // of H(L)/t over H(Lambda)/t
    bool trivial_class = false;
};
HomologyClassReport homology_class_map(const DgOrder& order, const ZLattice& lattice);

struct UnitLiftingReport {
    std::size_t units_checked = 0;
    std::size_t lifted = 0;
    bool vacuous = false;
    bool passed() const { return lifted == units_checked; }
};
// units of B/N lift to units of B for a nilpotent ideal N (both residues of `order` mod m)
UnitLiftingReport unit_lifting_across_nilpotent(const FiniteRing& b, const std::vector<FiniteRing::Element>& nil_ideal);
// units of H(A) lift to units of ker(d) (finite field coefficients; vacuous when H = 0)
UnitLiftingReport unit_lifting_to_cycles(const DgAlgebra& a);

struct UnitCycleReport {
    std::size_t candidates = 0;
    std::size_t units = 0;
    bool passed = true;
};
// z a cycle in the order: z in Lambda^x iff z in (ker D cap Lambda)^x, over a coefficient box
UnitCycleReport unit_cycle_identity(const DgOrder& order, long box);

} // namespace dgo
