#pragma once

#include "dgorder/catalog.hpp"
#include "dgorder/homology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dgo {

struct OrderFlags {
    bool full = false;
    bool graded = false;
    bool unital = false;
    bool ring_closed = false;
    bool d_stable = false;
    bool integral = false;
    bool proper = false; // H(Lambda) over Z is torsion-free
};

// A full Z-lattice in a rational dg-algebra, certified as a dg-order.
struct DgOrder {
    DgAlgebra ambient;
    ZLattice lattice;
    OrderFlags flags;
    std::optional<BlockLayout> blocks;
};

struct OrderVerification {
    VerificationReport report; // checks: rank, graded, unit, ring-closed, d-stability, integrality
    OrderFlags flags;
    std::optional<HomologyPresentation> homology; // over Z, when the order checks pass
    std::optional<DgOrder> order;
};

OrderVerification is_dg_order(const DgAlgebra& a, const ZLattice& lattice,
                              std::optional<BlockLayout> blocks = std::nullopt);
// throws PreconditionFailed with the failing check when `ex` is not a dg-order
DgOrder certify(const OrderExample& ex);

// Homogeneous basis of a graded lattice (the slices L cap A_d), or nullopt.
std::optional<std::vector<QVec>> homogeneous_lattice_basis(const GradedAlgebra& a, const ZLattice& lattice);

// The order as a dg-algebra over Z in a homogeneous lattice basis (columns of `basis`).
struct IntegralForm {
    DgAlgebra algebra;
    QMat basis; // dim(A) x rank
};
IntegralForm integral_form(const DgAlgebra& a, const ZLattice& order);

// {lambda : lambda L in L} and {lambda : L lambda in L}
DgOrder left_order(const DgAlgebra& a, const ZLattice& lattice);
DgOrder right_order(const DgAlgebra& a, const ZLattice& lattice);
// the classical conductor, without the graded and d-stability preconditions
ZLattice classical_left_order(const GradedAlgebra& a, const ZLattice& lattice);
ZLattice classical_right_order(const GradedAlgebra& a, const ZLattice& lattice);

// {x in L : D x in L}
ZLattice largest_d_stable_sublattice(const QMat& d, const ZLattice& lattice);

// ---- local data ----

// Representative of Z_(p) L: agrees with L at p and with Z^n at every other prime.
struct LocalLattice {
    long prime = 0;
    ZLattice lattice;
};

// the lattice equal to `local` at p and to `global` at every other prime
ZLattice replace_at_prime(const ZLattice& global, long p, const ZLattice& local);
LocalLattice localize(const ZLattice& lattice, long p);
ZLattice globalize(const std::vector<LocalLattice>& data, const ZLattice& default_lattice);
// primes at which two full lattices differ
std::vector<long> differing_primes(const ZLattice& a, const ZLattice& b);

// ---- maximal orders ----

// det of the reduced trace form on the lattice basis; throws NotSplit without blocks
Q reduced_discriminant(const DgAlgebra& a, const BlockLayout& blocks, const ZLattice& lattice);
bool is_classically_maximal(const DgAlgebra& a, const BlockLayout& blocks, const ZLattice& lattice);

// preimage of the Jacobson radical of L/pL
ZLattice p_radical(const DgAlgebra& a, const ZLattice& order, long p);
// preimages of the maximal two-sided ideals of L/pL; empty when L/rad_p is simple.
// Throws TooLarge when the center of L/rad_p has more than 2e5 elements.
std::vector<ZLattice> maximal_ideals_over(const DgAlgebra& a, const ZLattice& order, long p);

struct HullMove {
    long prime = 0;
    std::string side;  // "left" or "right"
    std::string ideal; // "radical" or "maximal"
    Q index;          // [new : old]
};

struct HullResult {
    DgOrder order;
    std::vector<HullMove> trace;
    bool classically_maximal = false;
    std::string certificate = "maximal under move set";
};
HullResult dg_maximal_hull(const DgOrder& order);

// ---- lattices in dg-modules ----

// Full Z-lattice in V stable under Delta and under the order, in V coordinates.
ZLattice dg_lattice_in_module(const DgOrder& order, const DgModule& v);

struct LatticeCheck {
    bool full = false;
    bool delta_stable = false;
    bool action_stable = false;
    bool passed() const { return full && delta_stable && action_stable; }
};
LatticeCheck check_dg_lattice(const DgOrder& order, const DgModule& v, const ZLattice& lattice);

} // namespace dgo
