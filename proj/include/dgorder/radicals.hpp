#pragma once

#include "dgorder/module.hpp"

#include <optional>
#include <vector>

namespace dgo {

// Smallest dg-submodule containing the generators (and their homogeneous parts).
Subspace spin(const DgModule& m, const std::vector<QVec>& generators);

bool is_dg_submodule(const DgModule& m, const Subspace& s);
// two-sided, Delta-closed and graded
bool is_twosided_dg_ideal(const DgAlgebra& a, const Subspace& s);

enum class Simplicity { Simple, NotSimple, Unknown };
struct SimplicityResult {
    Simplicity verdict = Simplicity::Unknown;
    std::optional<Subspace> witness; // proper nonzero dg-submodule
};
// Exhaustive over F_p; over Q spins of basis cycles and 64 pseudorandom combinations.
SimplicityResult is_dg_simple(const DgModule& m);

// Every dg-submodule of M (including 0 and M), sorted. Exhaustive regime only:
// F_p with p <= 7 and dim <= 12, else DimensionTooLarge.
std::vector<Subspace> dg_submodule_lattice(const DgModule& m);

std::vector<Subspace> dg_maximal_left_ideals(const AlgebraRef& a);

// {lambda : lambda M = 0}
Subspace annihilator(const DgModule& m);

struct DgRadicals {
    Subspace left, right, two;
    std::vector<Subspace> maximal_left, maximal_right;
};
DgRadicals dg_radicals(const AlgebraRef& a);

struct NakayamaReport {
    bool passed = true;
    Subspace radical_times_module;
    std::size_t submodules_checked = 0;
};
NakayamaReport check_nakayama(const DgRadicals& radicals, const DgModule& m);

struct Decomposition {
    bool success = false;
    std::vector<Subspace> summands;   // in coordinates of M
    std::optional<Subspace> obstruction; // a dg-submodule without complement
    bool cone_type = false;           // the non-split piece is cone_tensor(obstruction)
};
Decomposition dg_semisimple_decomposition(const DgModule& m);

struct PrimitivityReport {
    bool primitive = false;
    std::optional<Subspace> witness;  // maximal left ideal I with A/I faithful
    bool subdirect_injective = false; // kernel of A -> prod A/ann(A/I) equals dgrad_2
};
PrimitivityReport is_dg_primitive(const AlgebraRef& a);

// dg-simple modules up to isomorphism and shift, as quotients A/I
std::vector<DgModule> dg_simple_modules(const AlgebraRef& a);

} // namespace dgo
