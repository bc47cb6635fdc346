#include "doctest.h"
#include "oracles.hpp"

#include "dgorder/lattice.hpp"
#include "dgorder/linalg.hpp"

using namespace dgo;

namespace {

const CoefficientRing QQ = CoefficientRing::rationals();
const CoefficientRing ZZ = CoefficientRing::integers();

ZMat zmat(std::vector<std::vector<long>> rows) {
    ZMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

QVec qv(std::vector<long> v) {
    QVec out;
    for (auto x : v) out.emplace_back(x);
    return out;
}

void check_smith(const ZMat& m) {
    SmithForm s = smith_normal_form(m);
    CHECK(s.U * s.S * s.V == m);
    CHECK(abs(oracle::det(s.U)) == 1);
    CHECK(abs(oracle::det(s.V)) == 1);
    std::vector<Z> diag;
    for (std::size_t i = 0; i < s.S.rows(); ++i)
        for (std::size_t j = 0; j < s.S.cols(); ++j)
            if (i != j) CHECK(s.S(i, j) == 0);
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
        if (s.S(i, i) != 0) diag.push_back(s.S(i, i));
    for (std::size_t i = 1; i < diag.size(); ++i) CHECK(diag[i] % diag[i - 1] == 0);
    CHECK(diag == oracle::determinantal_invariants(m));
}

} // namespace

TEST_CASE("smith normal form of diag(2,3)") {
    ZMat m = zmat({{2, 0}, {0, 3}});
    check_smith(m);
    CHECK(smith_normal_form(m).S == zmat({{1, 0}, {0, 6}}));
}

TEST_CASE("smith normal form trivial cases") {
    CHECK(smith_normal_form(ZMat(2, 2)).S == ZMat(2, 2));
    CHECK(smith_normal_form(ZMat::identity(3)).S == ZMat::identity(3));
}

TEST_CASE("smith normal form on random matrices") {
    std::mt19937 rng(7);
    for (int t = 0; t < 60; ++t) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        check_smith(oracle::random_int_matrix(rng, r, c, -6, 6));
    }
}

TEST_CASE("hermite normal form examples") {
    CHECK(hermite_normal_form(zmat({{2, 0}, {0, 2}})).H == zmat({{2, 0}, {0, 2}}));
    auto swap = hermite_normal_form(zmat({{0, 1}, {1, 0}}));
    CHECK(swap.H == ZMat::identity(2));
    CHECK(abs(oracle::det(zmat({{0, 1}, {1, 0}}))) == 1);
    CHECK(hermite_normal_form(zmat({{2, 4}, {0, 0}})).H == zmat({{2, 4}, {0, 0}}));
}

TEST_CASE("hermite normal form invariants on random matrices") {
    std::mt19937 rng(11);
    for (int t = 0; t < 60; ++t) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        ZMat m = oracle::random_int_matrix(rng, r, c, -5, 5);
        HermiteForm h = hermite_normal_form(m);
        CHECK(h.U * h.H == m);
        CHECK(h.W * m == h.H);
        CHECK(abs(oracle::det(h.U)) == 1);
        // echelon shape, positive pivots, reduced above
        std::size_t last = 0;
        bool first = true;
        for (std::size_t i = 0; i < h.H.rows(); ++i) {
            std::size_t p = 0;
            while (p < c && h.H(i, p) == 0) ++p;
            if (p == c) continue;
            if (!first) CHECK(p > last);
            first = false;
            last = p;
            CHECK(h.H(i, p) > 0);
            for (std::size_t k = 0; k < i; ++k) {
                CHECK(h.H(k, p) >= 0);
                CHECK(h.H(k, p) < h.H(i, p));
            }
        }
    }
}

TEST_CASE("kernel bases") {
    CHECK(kernel_basis(QMat::identity(3), QQ).empty());
    auto k0 = kernel_basis(QMat(2, 2), QQ);
    CHECK(k0.size() == 2);
    QMat row(1, 2);
    row(0, 0) = 1;
    row(0, 1) = 1;
    auto k = kernel_basis(row, QQ);
    REQUIRE(k.size() == 1);
    // solved by hand: x + y = 0
    CHECK(k[0][0] == -k[0][1]);
    CHECK(k[0][0] != 0);
}

TEST_CASE("integer kernel is saturated and rank-complementary") {
    std::mt19937 rng(3);
    for (int t = 0; t < 40; ++t) {
        std::size_t r = 1 + rng() % 3, c = 2 + rng() % 3;
        QMat m = to_rational(oracle::random_int_matrix(rng, r, c, -4, 4));
        auto kz = kernel_basis(m, ZZ);
        auto kq = kernel_basis(m, QQ);
        CHECK(kz.size() == kq.size());
        CHECK(kz.size() + rank(m, QQ) == c);
        for (const auto& v : kz) CHECK(is_zero(m * v));
        // saturation: every rational kernel vector scaled to be integral lies in the lattice
        ZLattice lat(c, kz);
        for (const auto& v : kq) {
            Q d(common_denominator(v));
            QVec w = d * v;
            Z g = 0;
            for (auto& x : w) g = gcd(g, x.get_num());
            if (g != 0) CHECK(lat.contains(Q(1, g) * w));
        }
    }
}

TEST_CASE("finite field elimination") {
    CoefficientRing f5 = CoefficientRing::prime_field(5);
    QMat m(2, 2);
    m(0, 0) = 1; m(0, 1) = 2;
    m(1, 0) = 3; m(1, 1) = 1; // det = -5 = 0 mod 5
    CHECK(rank(m, f5) == 1);
    CHECK(rank(m, QQ) == 2);
    auto k = kernel_basis(m, f5);
    REQUIRE(k.size() == 1);
    for (std::size_t i = 0; i < 2; ++i) CHECK(f5.normalize(m(i, 0) * k[0][0] + m(i, 1) * k[0][1]) == 0);
}

TEST_CASE("coefficient rings") {
    CHECK_THROWS_AS(CoefficientRing::prime_field(2), Error);
    CHECK_THROWS_AS(CoefficientRing::prime_field(9), Error);
    CHECK_THROWS_AS(CoefficientRing::residue(1), Error);
    auto z5 = CoefficientRing::localized(5);
    CHECK(z5.contains(Q(1, 3)));
    CHECK_FALSE(z5.contains(Q(1, 5)));
    auto f7 = CoefficientRing::prime_field(7);
    CHECK(f7.normalize(Q(1, 2)) == 4);
    CHECK(f7.normalize(Q(-1)) == 6);
}

TEST_CASE("lattice intersection examples") {
    ZLattice two(2, {qv({2, 0}), qv({0, 2})});
    ZLattice three(2, {qv({3, 0}), qv({0, 3})});
    ZLattice six = lattice_intersect(two, three);
    CHECK(six == ZLattice(2, {qv({6, 0}), qv({0, 6})}));
    // elementwise divisibility oracle on a box
    for (long a = -12; a <= 12; ++a)
        for (long b = -12; b <= 12; ++b) {
            bool expect = (a % 2 == 0 && b % 2 == 0) && (a % 3 == 0 && b % 3 == 0);
            CHECK(six.contains(qv({a, b})) == expect);
        }

    ZLattice l1(2, {qv({1, 0}), qv({0, 2})});
    ZLattice l2(2, {qv({2, 0}), qv({0, 1})});
    CHECK(lattice_intersect(l1, l2) == ZLattice(2, {qv({2, 0}), qv({0, 2})}));
    CHECK(lattice_intersect(l1, l1) == l1);
}

TEST_CASE("lattice intersection is commutative, associative, idempotent") {
    std::mt19937 rng(5);
    auto random_lattice = [&] {
        ZMat m = oracle::random_int_matrix(rng, 4, 4, -4, 4);
        for (std::size_t i = 0; i < 4; ++i) m(i, i) += 9; // keep full rank
        return ZLattice(to_rational(m));
    };
    for (int t = 0; t < 25; ++t) {
        ZLattice a = random_lattice(), b = random_lattice(), c = random_lattice();
        CHECK(lattice_intersect(a, b) == lattice_intersect(b, a));
        CHECK(lattice_intersect(lattice_intersect(a, b), c) == lattice_intersect(a, lattice_intersect(b, c)));
        CHECK(lattice_intersect(a, a) == a);
        ZLattice ab = lattice_intersect(a, b);
        CHECK(a.contains(ab));
        CHECK(b.contains(ab));
    }
}

TEST_CASE("rational lattices and preimages") {
    ZLattice half(2, {qv({1, 0}), {Q(0), Q(1, 2)}});
    CHECK(half.volume() == Q(1, 2));
    CHECK(half.contains({Q(3), Q(-1, 2)}));
    CHECK_FALSE(half.contains({Q(1, 2), Q(0)}));
    // {x : x * diag(2, 1/3) integral} = (1/2)Z + 3Z
    QMat m(2, 2);
    m(0, 0) = 2;
    m(1, 1) = Q(1, 3);
    CHECK(integral_preimage(m) == ZLattice(2, {{Q(1, 2), Q(0)}, qv({0, 3})}));
}

TEST_CASE("subspaces") {
    Subspace s(3, QQ, {qv({1, 1, 0}), qv({2, 2, 0})});
    CHECK(s.dim() == 1);
    CHECK(s.contains(qv({-3, -3, 0})));
    Subspace t(3, QQ, {qv({0, 1, 0}), qv({0, 0, 1})});
    CHECK((s + t).dim() == 3);
    CHECK(s.intersect(t).dim() == 0);
    Subspace u(3, QQ, {qv({1, 0, 0}), qv({0, 1, 0})});
    CHECK(u.intersect(t) == Subspace(3, QQ, {qv({0, 5, 0})}));
}
