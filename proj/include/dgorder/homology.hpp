#pragma once

#include "dgorder/module.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dgo {

struct DegreeHomology {
    std::size_t free_rank = 0;  // over a field: the dimension
    std::vector<Z> torsion;     // invariant factors > 1, dividing chain
    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

struct HomologyGenerator {
    int degree = 0;
    QVec representative; // a cycle in module coordinates
    Z order;             // 0 for a free (or field) generator
};

class HomologyPresentation {
public:
    CoefficientRing ring;
    std::map<int, DegreeHomology> groups; // every degree of the module
    std::vector<HomologyGenerator> generators;
    // products[i][j] = class of rep_i * rep_j (homology rings only)
    std::vector<std::vector<QVec>> products;
    // action[i][j] = class of (ring generator i) * (generator j) (homology modules only)
    std::vector<std::vector<QVec>> action;

    // class of a cycle in generator coordinates, reduced modulo the orders;
    // nullopt if v is not a cycle
    std::optional<QVec> coordinates(const QVec& v) const;
    bool is_zero() const;
    // "d:Z,Z/2;..." over Z, "d:dim;..." over a field, "0" when everything vanishes
    std::string summary() const;

private:
    friend HomologyPresentation homology(const DgModule& m);
    struct DegreeData {
        std::vector<std::size_t> indices;
        QMat cycle_basis;            // rows, in module coordinates
        std::vector<Z> orders;       // per row: 1 = boundary, 0 = free, s = torsion
        std::vector<std::size_t> generator; // per row: global generator index, or npos
    };
    std::map<int, DegreeData> data_;
    QMat delta_;
};

HomologyPresentation homology(const DgModule& m);
inline HomologyPresentation homology(const AlgebraRef& a) { return homology(regular_module(a)); }
// homology with products; throws std::logic_error if products depend on representatives
HomologyPresentation homology_ring(const AlgebraRef& a);
// homology of M with the action of the generators of homology_ring(parent)
HomologyPresentation homology_module(const DgModule& m, const HomologyPresentation& ring_homology);

// Basis of the Jacobson radical, ignoring the grading. Trace form in characteristic 0,
// iterated trace powers over F_p. Throws DimensionTooLarge above 64.
std::vector<QVec> jacobson_radical(const GradedAlgebra& a);
bool algebra_semisimplicity(const GradedAlgebra& a);

struct SemisimpleCategoryReport {
    bool acyclic = false;
    std::optional<QVec> witness;           // z with d(z) = 1
    bool cycles_semisimple = false;
    std::vector<QVec> cycles;              // basis of ker d
    std::vector<QVec> cycles_times_witness; // basis of ker(d) z
    bool direct_sum = false;
    bool verdict = false;
};
SemisimpleCategoryReport semisimple_category_test(const DgAlgebra& a);

} // namespace dgo
