#pragma once

#include "dgorder/algebra.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dgo {

using AlgebraRef = std::shared_ptr<const DgAlgebra>;

inline AlgebraRef share(DgAlgebra a) { return std::make_shared<const DgAlgebra>(std::move(a)); }

// Left dg-module over a dg-algebra: b_i * m_j = sum_k action(i)(k, j) m_k,
// Delta(m_j) = sum_k delta(k, j) m_k.
class DgModule {
public:
    DgModule() = default;
    DgModule(AlgebraRef parent, std::vector<int> degrees, std::vector<QMat> action, QMat delta);

    const DgAlgebra& parent() const { return *parent_; }
    const AlgebraRef& parent_ref() const noexcept { return parent_; }
    const CoefficientRing& ring() const { return parent_->ring(); }
    std::size_t dim() const noexcept { return degrees_.size(); }
    int degree(std::size_t j) const { return degrees_.at(j); }
    const std::vector<int>& degrees() const noexcept { return degrees_; }
    std::vector<int> degree_set() const;
    std::vector<std::size_t> indices_of_degree(int d) const;
    std::optional<int> homogeneous_degree(const QVec& v) const;

    const QMat& action(std::size_t i) const { return action_.at(i); }
    const std::vector<QMat>& actions() const noexcept { return action_; }
    const QMat& delta() const noexcept { return delta_; }

    QVec normalize(const QVec& v) const;
    // matrix of left multiplication by an algebra element
    QMat action_of(const QVec& a) const;
    QVec act(const QVec& a, const QVec& m) const { return normalize(action_of(a) * m); }
    QVec differential(const QVec& m) const { return normalize(delta_ * m); }

    friend bool operator==(const DgModule& a, const DgModule& b);

private:
    AlgebraRef parent_;
    std::vector<int> degrees_;
    std::vector<QMat> action_;
    QMat delta_;
};

VerificationReport verify_dg_module(const DgModule& m);

DgModule regular_module(const AlgebraRef& a);
DgModule zero_module(const AlgebraRef& a);

// Columns K^n of a full matrix algebra (standard basis e_ij) whose differential is
// inner by `delta_element`; e_ij m_j = m_i, Delta(m) = delta_element * m.
// The first column vector m_1 sits in degree `top`.
DgModule column_module(const AlgebraRef& matrix_algebra, const QVec& delta_element, int top);

// (M[k])_n = M_{k+n}; the differential is unchanged
DgModule shift(const DgModule& m, int k);

DgModule direct_sum(const DgModule& a, const DgModule& b);

// Closure failure of a candidate submodule: algebra basis index and offending vector.
struct ClosureWitness {
    std::optional<std::size_t> algebra_index; // empty for a Delta violation
    QVec vector;
};
std::optional<ClosureWitness> submodule_violation(const DgModule& m, const std::vector<QVec>& basis);

// The dg-submodule as a module in its own right (field case). A homogeneous
// independent `basis` is kept as given; otherwise it is regrouped by degree.
struct EmbeddedModule {
    DgModule module;
    QMat embedding; // dim(M) x dim(N)
};
EmbeddedModule submodule(const DgModule& m, const std::vector<QVec>& basis);

struct QuotientModule {
    DgModule module;
    QMat projection; // dim(M/N) x dim(M)
};
// Throws NotSubmodule if the span is not closed under the action and Delta.
QuotientModule quotient_dg_module(const DgModule& m, const std::vector<QVec>& basis);

// ---- maps and Hom ----

struct DgMap {
    std::shared_ptr<const DgModule> source, target;
    QMat matrix; // dim(target) x dim(source)
    int degree = 0;
};

// Homogeneous maps F of degree k with F(b m) = (-1)^{|b| k} b F(m);
// d_Hom(F) = Delta_N F - (-1)^k F Delta_M.
struct HomComplex {
    DgModule complex;        // over the base ring, graded by map degree
    std::vector<QMat> maps;  // maps[i] is basis element i
    QMat as_map(const QVec& coords) const;
    // coordinates of a map in the span of `maps`
    std::optional<QVec> coordinates(const QMat& f) const;
};
HomComplex hom_complex(const DgModule& m, const DgModule& n);

// Bounded complex of free modules over the base ring, given degree by degree.
struct ChainComplex {
    CoefficientRing ring;
    int low = 0;                      // degree of ranks[0]
    std::vector<std::size_t> ranks;
    std::vector<QMat> maps;           // maps[t]: degree low+t -> low+t+1, size ranks[t+1] x ranks[t]
};

struct EndomorphismAlgebra {
    DgAlgebra algebra;
    std::vector<int> basis_degrees;   // degrees of the complex basis b_0..b_{n-1}
    // basis element k is E_{source[k], target[k]}: b_source -> b_target
    std::vector<std::size_t> source, target;
};
// Graded endomorphisms written on the right: E_ij E_jl = E_il, E_ij of degree deg b_j - deg b_i,
// d(g) = Delta g - (-1)^{|g|} g Delta. Basis ordered by degree. Throws NotAComplex.
EndomorphismAlgebra endomorphism_dg_algebra(const ChainComplex& l);

// Total complex of S with the cone of the identity (c_a in degree -1, c_b in degree 0).
// Basis: S (x) c_b first, then S (x) c_a.
struct ConeTensor {
    DgModule module;
    QMat inclusion;  // S -> cone, onto S (x) c_b
    QMat projection; // cone -> S[1]
};
ConeTensor cone_tensor(const DgModule& s);

// ---- isomorphism searches ----

struct ModuleIsomorphismSearch {
    std::optional<QMat> isomorphism; // degree-0 invertible cycle of Hom(M, N)
    bool exhaustive = false;         // a negative answer is a proof
};
ModuleIsomorphismSearch find_module_isomorphism(const DgModule& m, const DgModule& n);

struct AlgebraIsomorphism {
    QMat map; // dim(B) x dim(A)
    VerificationReport report;
};
// Degree-0 isomorphism of dg-algebras commuting with the differentials, for algebras
// that are full graded matrix algebras with inner differential over a field.
std::optional<AlgebraIsomorphism> find_dg_isomorphism(const DgAlgebra& a, const DgAlgebra& b);
VerificationReport verify_dg_algebra_map(const DgAlgebra& a, const DgAlgebra& b, const QMat& phi);

} // namespace dgo
