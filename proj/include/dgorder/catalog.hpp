#pragma once

#include "dgorder/algebra.hpp"
#include "dgorder/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dgo {

// Mat_n with e_ij in degree deg(j) - deg(i); basis e_11, e_12, ..., e_nn.
GradedAlgebra graded_matrix_algebra(const CoefficientRing& ring, const std::vector<int>& vertex_degrees);
std::size_t matrix_unit(std::size_t n, std::size_t i, std::size_t j);

// d(a) = delta a - (-1)^{|a|} a delta for a homogeneous degree-1 element delta
QMat inner_differential(const GradedAlgebra& a, const QVec& delta);

DgAlgebra mat2_dx(const Q& x, const CoefficientRing& ring = CoefficientRing::rationals());
DgAlgebra mat3_complex(const Q& a11, const Q& a21, const CoefficientRing& ring = CoefficientRing::rationals());
DgAlgebra dual_numbers(const CoefficientRing& ring = CoefficientRing::rationals());
// the base ring as a dg-algebra concentrated in degree 0
DgAlgebra ground_algebra(const CoefficientRing& ring);

// Product of matrix blocks over Q, block k of size n_k in the standard basis;
// a differential d_x may be put on 2x2 blocks. Used for the order examples.
struct BlockLayout {
    std::vector<std::size_t> sizes;
    std::size_t dim() const;
    // offset of block k in the basis
    std::size_t offset(std::size_t k) const;
    std::size_t index(std::size_t block, std::size_t i, std::size_t j) const;
};

struct OrderExample {
    DgAlgebra algebra;
    ZLattice order;
    std::optional<BlockLayout> blocks; // ambient is a product of full matrix algebras
};

// blocks of size 1 or 2; x_values[k] is the d_x parameter on a 2x2 block (0 for none)
DgAlgebra block_algebra(const BlockLayout& layout, const std::vector<Q>& x_values);

OrderExample mat2_order(const Q& x);                  // Mat2(Z) with d_x
OrderExample zp_order(long p, const Q& x);           // Z + p Mat2(Z) with d_x
OrderExample lambda2_order(const Q& x);              // [[Z, xZ], [(1/x)Z, Z]] with d_x
OrderExample s3_order(long p, const Q& x);           // fiber-product shape in Q x Mat2(Q) x Q
OrderExample green_order(std::size_t factors, long p, const Q& x);

struct ExampleDescriptor {
    std::string name;
    std::map<std::string, std::string> params;
    std::map<std::string, std::string> expected;
};

struct BuiltExample {
    ExampleDescriptor descriptor;
    DgAlgebra algebra;
    std::optional<ZLattice> order;
    std::optional<BlockLayout> blocks;
};

std::vector<std::string> example_names();
BuiltExample build_example(const std::string& name, const std::map<std::string, std::string>& params);

} // namespace dgo
