#include "doctest.h"

#include "dgorder/catalog.hpp"
#include "dgorder/module.hpp"

using namespace dgo;

namespace {

const CoefficientRing QQ = CoefficientRing::rationals();
const CoefficientRing F5 = CoefficientRing::prime_field(5);

QVec delta_element(const Q& x) { return {0, x, 0, 0}; }

DgModule column(const AlgebraRef& a, const Q& x, int top) { return column_module(a, delta_element(x), top); }

ChainComplex two_term(const Q& x, const CoefficientRing& ring) {
    QMat f(1, 1);
    f(0, 0) = x;
    return {ring, 0, {1, 1}, {f}};
}

} // namespace

TEST_CASE("regular and column modules verify") {
    for (Q x : {Q(0), Q(1), Q(2), Q(1, 2)}) {
        auto a = share(mat2_dx(x));
        CHECK(verify_dg_module(regular_module(a)).passed());
        for (int top : {0, 1, 5}) {
            DgModule c = column(a, x, top);
            CHECK(c.degree(0) == top);
            CHECK(c.degree(1) == top - 1);
            CHECK(c.delta()(0, 1) == x); // delta(p, q) = (x q, 0)
            CHECK(verify_dg_module(c).passed());
        }
    }
}

TEST_CASE("column module with zero differential fails Leibniz when x != 0") {
    auto a = share(mat2_dx(Q(3)));
    DgModule c = column_module(a, QVec(4, Q(0)), 0);
    auto rep = verify_dg_module(c);
    CHECK_FALSE(rep.find("Leibniz")->passed);
    auto a0 = share(mat2_dx(Q(0)));
    CHECK(verify_dg_module(column_module(a0, QVec(4, Q(0)), 0)).passed());
}

TEST_CASE("module checker catches bad degrees and square") {
    auto g = share(ground_algebra(QQ));
    QMat d(2, 2);
    d(1, 0) = 1;
    CHECK(verify_dg_module(DgModule(g, {0, 1}, {QMat::identity(2)}, d)).passed());
    CHECK_FALSE(verify_dg_module(DgModule(g, {0, 0}, {QMat::identity(2)}, d)).find("degree+1")->passed);
    CHECK_FALSE(verify_dg_module(DgModule(g, {0, 1}, {QMat(2, 2)}, d)).find("unit")->passed);
    CHECK_THROWS_AS(DgModule(g, {0, 1}, {QMat::identity(3)}, d), Error);
}

TEST_CASE("shift") {
    auto a = share(mat2_dx(Q(1)));
    DgModule c = column(a, Q(1), 0);
    CHECK(shift(c, 0) == c);
    CHECK(shift(shift(c, 2), -2) == c);
    // the family of column modules is the shift orbit of one of them
    for (int k : {-2, 1, 3}) CHECK(shift(c, k) == column(a, Q(1), -k));
    CHECK(verify_dg_module(shift(regular_module(a), 3)).passed());
}

TEST_CASE("quotients") {
    auto a = share(mat2_dx(Q(1)));
    DgModule reg = regular_module(a);
    auto q0 = quotient_dg_module(reg, {});
    CHECK(q0.module == reg);
    CHECK(quotient_dg_module(reg, QMat::identity(4).row_list()).module.dim() == 0);
    // (A e + A d(e)) / A d(e) with e = e11
    std::vector<QVec> second_col{unit_vector(4, 1), unit_vector(4, 3)};
    auto l = quotient_dg_module(reg, second_col);
    CHECK(l.module.dim() == 2);
    CHECK(verify_dg_module(l.module).passed());
    CHECK(l.module == column(a, Q(1), 0));
    CHECK_THROWS_AS(quotient_dg_module(reg, {unit_vector(4, 0)}), Error);
    try {
        quotient_dg_module(reg, {unit_vector(4, 0)});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotSubmodule);
    }
    auto sub = submodule(reg, second_col);
    CHECK(verify_dg_module(sub.module).passed());
    CHECK(sub.module == column(a, Q(1), 1));
}

TEST_CASE("hom complexes") {
    auto k = share(ground_algebra(QQ));
    DgModule stalk(k, {0}, {QMat::identity(1)}, QMat(1, 1));
    auto h = hom_complex(stalk, stalk);
    CHECK(h.complex.dim() == 1);
    CHECK(h.complex.delta().is_zero());

    // L1 = (M -> M) in degrees 0, 1 and L2 = (N -> N) in degrees -1, 0 with identity maps
    auto id_complex = [&](std::size_t r, int low) {
        QMat d(2 * r, 2 * r);
        std::vector<int> degs;
        for (std::size_t i = 0; i < r; ++i) degs.push_back(low);
        for (std::size_t i = 0; i < r; ++i) {
            degs.push_back(low + 1);
            d(r + i, i) = 1;
        }
        return DgModule(k, degs, {QMat::identity(2 * r)}, d);
    };
    DgModule l1 = id_complex(2, 0), l2 = id_complex(3, -1);
    auto cycles0 = [](const HomComplex& hc) {
        auto idx = hc.complex.indices_of_degree(0);
        return kernel_basis(hc.complex.delta().select_cols(idx), QQ).size();
    };
    CHECK(cycles0(hom_complex(l1, l2)) == 6);
    CHECK(cycles0(hom_complex(l2, l1)) == 0);

    // degree-0 cycles are exactly the chain maps
    auto a = share(mat2_dx(Q(1)));
    DgModule reg = regular_module(a);
    DgModule col = column(a, Q(1), 1);
    auto hc = hom_complex(col, reg);
    for (std::size_t i = 0; i < hc.maps.size(); ++i) {
        bool cycle = hc.complex.differential(unit_vector(hc.maps.size(), i)) == QVec(hc.maps.size(), Q(0));
        bool chain = reg.delta() * hc.maps[i] == hc.maps[i] * col.delta();
        if (hc.complex.degree(i) == 0) CHECK(cycle == chain);
    }
    CHECK(verify_dg_module(hc.complex).passed());

    // Hom(M, N[k]) = Hom(M, N)[k] as graded spaces
    auto hs = hom_complex(col, shift(reg, 2));
    std::vector<int> shifted = hc.complex.degrees();
    for (auto& d : shifted) d -= 2;
    std::sort(shifted.begin(), shifted.end());
    std::vector<int> got = hs.complex.degrees();
    std::sort(got.begin(), got.end());
    CHECK(got == shifted);
}

TEST_CASE("endomorphism dg-algebras") {
    auto stalk = endomorphism_dg_algebra({QQ, 0, {1}, {}});
    CHECK(stalk.algebra.dim() == 1);
    CHECK(stalk.algebra.differential.is_zero());

    for (Q x : {Q(1), Q(2), Q(-1, 3)}) {
        auto e = endomorphism_dg_algebra(two_term(x, QQ));
        CHECK(verify_dg_algebra(e.algebra).passed());
        auto iso = find_dg_isomorphism(e.algebra, mat2_dx(x));
        REQUIRE(iso.has_value());
        CHECK_MESSAGE(iso->report.passed(), iso->report.summary());
    }
    // x = 0 is not isomorphic to x = 1: one is acyclic, one is not
    CHECK_FALSE(find_dg_isomorphism(endomorphism_dg_algebra(two_term(Q(0), QQ)).algebra, mat2_dx(Q(1))).has_value());

    QMat f(1, 2);
    f(0, 0) = 2;
    f(0, 1) = 3;
    auto m3 = endomorphism_dg_algebra({QQ, 0, {2, 1}, {f}});
    CHECK(verify_dg_algebra(m3.algebra).passed());
    auto iso3 = find_dg_isomorphism(m3.algebra, mat3_complex(Q(2), Q(3)));
    REQUIRE(iso3.has_value());
    CHECK(iso3->report.passed());

    QMat one(1, 1);
    one(0, 0) = 1;
    CHECK_THROWS_AS(endomorphism_dg_algebra({QQ, 0, {1, 1, 1}, {one, one}}), Error);
}

TEST_CASE("cone tensor") {
    auto k = share(ground_algebra(QQ));
    DgModule stalk(k, {0}, {QMat::identity(1)}, QMat(1, 1));
    auto c = cone_tensor(stalk);
    CHECK(verify_dg_module(c.module).passed());
    CHECK(rank(c.module.delta(), QQ) == 1); // acyclic on a 2-dimensional space

    auto a = share(mat2_dx(Q(1), F5));
    DgModule s = column_module(a, {0, 1, 0, 0}, 1);
    auto ct = cone_tensor(s);
    CHECK(ct.module.dim() == 4);
    CHECK(verify_dg_module(ct.module).passed());
    // 0 -> S -> cone -> S[1] -> 0
    auto image = ct.inclusion.col_list();
    auto q = quotient_dg_module(ct.module, image);
    CHECK(q.module == shift(s, 1));
    CHECK(q.projection == ct.projection);
    CHECK(submodule(ct.module, image).module == s);

    // the regular module is this extension, and it does not split
    DgModule reg = regular_module(a);
    auto found = find_module_isomorphism(reg, ct.module);
    CHECK(found.isomorphism.has_value());
    auto split = find_module_isomorphism(reg, direct_sum(s, shift(s, 1)));
    CHECK_FALSE(split.isomorphism.has_value());
    CHECK(split.exhaustive);
}
