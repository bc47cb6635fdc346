#include "doctest.h"

#include "dgorder/catalog.hpp"

#include <set>

using namespace dgo;

namespace {

const CoefficientRing QQ = CoefficientRing::rationals();
const CoefficientRing ZZ = CoefficientRing::integers();

// Brute-force Leibniz check on basis pairs, written directly from the sign rule.
bool leibniz_holds(const DgAlgebra& a) {
    const auto& A = a.algebra;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            QVec x = unit_vector(a.dim(), i), y = unit_vector(a.dim(), j);
            QVec lhs = a.d(A.multiply(x, y));
            Q s = A.degree(i) % 2 == 0 ? Q(1) : Q(-1);
            QVec rhs = A.normalize(A.multiply(a.d(x), y) + s * A.multiply(x, a.d(y)));
            if (lhs != rhs) return false;
        }
    return true;
}

} // namespace

TEST_CASE("matrix algebra with inner differential verifies") {
    for (Q x : {Q(0), Q(1), Q(2), Q(1, 2), Q(-3)}) {
        DgAlgebra a = mat2_dx(x);
        auto rep = verify_dg_algebra(a);
        CHECK_MESSAGE(rep.passed(), rep.summary());
        CHECK(leibniz_holds(a));
    }
    auto f5 = mat2_dx(Q(7), CoefficientRing::prime_field(5));
    CHECK(verify_dg_algebra(f5).passed());
    CHECK(f5.differential(1, 0) == Q(3)); // d(e11) = -x e12 = 3 e12 mod 5
}

TEST_CASE("rational x fails the integral coefficient check") {
    CHECK_THROWS_AS(mat2_dx(Q(1, 2), ZZ), Error);
    DgAlgebra a = mat2_dx(Q(1), ZZ);
    a.differential(1, 0) = Q(1, 2);
    auto rep = verify_dg_algebra(a);
    CHECK_FALSE(rep.passed());
    CHECK(rep.failure()->axiom == "coefficients");
}

TEST_CASE("degree-preserving map fails degree+1") {
    DgAlgebra a = mat2_dx(Q(0));
    a.differential(0, 1) = 1; // d(e12) = e11
    auto rep = verify_dg_algebra(a);
    CHECK_FALSE(rep.find("degree+1")->passed);
    CHECK(rep.find("degree+1")->witness == (std::vector<std::size_t>{1, 0}));
}

TEST_CASE("square-zero and Leibniz failures are reported") {
    DgAlgebra a = dual_numbers(QQ);
    CHECK(verify_dg_algebra(a).passed());
    a.differential(0, 1) = 2; // d(X) = 2 still fine
    CHECK(verify_dg_algebra(a).passed());
    DgAlgebra m = mat2_dx(Q(1));
    m.differential(1, 0) = 5; // breaks Leibniz on e11 * e11
    CHECK_FALSE(verify_dg_algebra(m).find("Leibniz")->passed);
    CHECK_THROWS_AS(verify_dg_algebra(m.algebra, QMat(3, 3)), Error);
}

TEST_CASE("mat3 complex") {
    for (auto [a11, a21] : {std::pair{1, 0}, {0, 1}, {2, 3}, {0, 0}}) {
        auto a = mat3_complex(Q(a11), Q(a21));
        CHECK(verify_dg_algebra(a).passed());
        CHECK(leibniz_holds(a));
    }
    auto c = cycles_subalgebra(mat3_complex(Q(0), Q(1)));
    CHECK(c.algebra.dim() == 5);
    CHECK(verify_dg_algebra(c.algebra).passed());
}

TEST_CASE("opposite algebra") {
    auto a = mat2_dx(Q(1));
    auto op = opposite_dg_algebra(a);
    CHECK(verify_dg_algebra(op).passed());
    // e12 *op e21 = (-1)^{1*(-1)} e21 e12 = -e22
    QVec p = op.algebra.multiply(unit_vector(4, 1), unit_vector(4, 2));
    CHECK(p == QVec{0, 0, 0, -1});
    CHECK(opposite_dg_algebra(op) == a);
}

TEST_CASE("cycles of Mat2 with d_x form dual numbers") {
    auto c = cycles_subalgebra(mat2_dx(Q(1)));
    REQUIRE(c.algebra.dim() == 2);
    const auto& z = c.algebra.algebra;
    CHECK(z.unit() == QVec{1, 0});
    CHECK(z.degree(1) == 1);
    CHECK(is_zero(z.basis_product(1, 1)));
    auto cz = cycles_subalgebra(mat2_dx(Q(3), ZZ));
    CHECK(cz.algebra.dim() == 2);
    CHECK(verify_dg_algebra(cz.algebra).passed());
}

TEST_CASE("central idempotents and blocks") {
    auto g = ground_algebra(QQ);
    auto prod = direct_product(direct_product(g, mat2_dx(Q(1))), g);
    CHECK(verify_dg_algebra(prod).passed());
    CHECK(central_homogeneous_idempotents(prod).size() == 8);
    auto blocks = block_decompose(prod);
    CHECK(blocks.size() == 3);
    std::multiset<std::size_t> dims;
    for (const auto& b : blocks) {
        dims.insert(b.algebra.dim());
        CHECK(verify_dg_algebra(b.algebra).passed());
    }
    CHECK(dims == std::multiset<std::size_t>{1, 1, 4});
    CHECK(block_decompose(mat2_dx(Q(1))).size() == 1);
    CHECK(block_decompose(dual_numbers(QQ)).size() == 1);

    auto prod5 = direct_product(ground_algebra(CoefficientRing::prime_field(5)),
                                mat2_dx(Q(1), CoefficientRing::prime_field(5)));
    CHECK(primitive_central_idempotents(prod5).size() == 2);
    CHECK_THROWS_AS(primitive_central_idempotents(mat2_dx(Q(1), CoefficientRing::residue(9))), Error);
}

TEST_CASE("order examples are well formed") {
    for (const auto& name : example_names()) {
        auto ex = build_example(name, {});
        CHECK_MESSAGE(verify_dg_algebra(ex.algebra).passed(), name);
        if (ex.order) CHECK(ex.order->is_full());
    }
    auto s3 = s3_order(3, Q(1));
    CHECK(s3.order.rank() == 6);
    CHECK(s3.order.contains(s3.algebra.algebra.unit()));
    CHECK(abs(s3.order.volume()) == 27);
    auto green = green_order(2, 3, Q(1));
    CHECK(green.algebra.dim() == 10);
    CHECK(abs(green.order.volume()) == 243);
    CHECK(abs(zp_order(5, Q(1)).order.volume()) == 125);
    CHECK_THROWS_AS(build_example("nope", {}), Error);
}
