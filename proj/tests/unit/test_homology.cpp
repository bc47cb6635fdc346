#include "doctest.h"

#include "dgorder/catalog.hpp"
#include "dgorder/homology.hpp"

using namespace dgo;

namespace {

const CoefficientRing QQ = CoefficientRing::rationals();
const CoefficientRing ZZ = CoefficientRing::integers();

// K[x]/(f) for monic f given low to high (without the leading 1), basis 1, x, ..., x^{k-1}
GradedAlgebra truncated_polynomials(const CoefficientRing& ring, const std::vector<long>& f) {
    const std::size_t k = f.size();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back("x" + std::to_string(i));
    GradedAlgebra a(ring, names, std::vector<int>(k, 0));
    // x^m for m < 2k-1 reduced modulo f
    std::vector<QVec> powers;
    for (std::size_t m = 0; m < 2 * k; ++m) {
        QVec v(k, Q(0));
        if (m < k) {
            v[m] = 1;
        } else {
            const QVec& prev = powers[m - 1];
            Q top = prev[k - 1];
            for (std::size_t i = k - 1; i > 0; --i) v[i] = prev[i - 1];
            v[0] = 0;
            for (std::size_t i = 0; i < k; ++i) v[i] = ring.normalize(v[i] - top * f[i]);
        }
        powers.push_back(v);
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l)
                if (powers[i + j][l] != 0) a.set_constant(i, j, l, powers[i + j][l]);
    a.set_unit(unit_vector(k, 0));
    return a;
}

GradedAlgebra upper_triangular(const CoefficientRing& ring) {
    GradedAlgebra a(ring, {"e11", "e12", "e22"}, {0, 0, 0});
    a.set_constant(0, 0, 0, Q(1));
    a.set_constant(0, 1, 1, Q(1));
    a.set_constant(1, 2, 1, Q(1));
    a.set_constant(2, 2, 2, Q(1));
    a.set_unit({Q(1), Q(0), Q(1)});
    return a;
}

// x is in the radical iff x*y is nilpotent for every y; exhaustive over a small F_p
std::size_t brute_radical_size(const GradedAlgebra& a) {
    const long p = a.ring().modulus();
    const std::size_t n = a.dim();
    std::vector<QVec> elems;
    std::vector<long> c(n, 0);
    for (;;) {
        QVec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = c[i];
        elems.push_back(v);
        std::size_t i = 0;
        while (i < n && ++c[i] == p) c[i++] = 0;
        if (i == n) break;
    }
    auto nilpotent = [&](const QVec& z) {
        QVec w = z;
        for (std::size_t t = 0; t < n; ++t) w = a.multiply(w, z);
        return is_zero(w);
    };
    std::size_t count = 0;
    for (const auto& x : elems) {
        bool in = true;
        for (const auto& y : elems)
            if (!nilpotent(a.multiply(x, y))) {
                in = false;
                break;
            }
        if (in) ++count;
    }
    return count;
}

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace

TEST_CASE("homology of Mat2(Z) with d_x") {
    for (long x : {2, 3, 6}) {
        auto a = share(mat2_dx(Q(x), ZZ));
        auto h = homology_ring(a);
        CHECK(h.summary() == "0:Z/" + std::to_string(x) + ";1:Z/" + std::to_string(x));
        REQUIRE(h.generators.size() == 2);
        const auto& g0 = h.generators[0];
        const auto& g1 = h.generators[1];
        CHECK(g0.degree == 0);
        CHECK(g1.degree == 1);
        CHECK(g0.order == x);
        CHECK(g1.order == x);
        // the unit generates degree 0, epsilon squares to zero, 1 * eps = eps
        auto unit = *h.coordinates(a->algebra.unit());
        CHECK(gcd(unit[0].get_num(), Z(x)) == 1);
        CHECK(is_zero(h.products[1][1]));
        auto ue = h.coordinates(a->algebra.multiply(a->algebra.unit(), g1.representative));
        CHECK(*ue == QVec{0, 1});
        CHECK(h.products[0][1][0] == 0);
        CHECK(h.products[0][0][1] == 0);
    }
    CHECK(homology(share(mat2_dx(Q(1), ZZ))).is_zero());
    CHECK(homology(share(mat2_dx(Q(-1), ZZ))).summary() == "0");
}

TEST_CASE("homology of the Mat3 example") {
    auto hq = homology(share(mat3_complex(Q(1), Q(1))));
    CHECK(hq.groups[0].free_rank == 1);
    CHECK(hq.groups[1].is_zero());
    CHECK(hq.groups[-1].is_zero());
    auto hz = homology(share(mat3_complex(Q(2), Q(2), ZZ)));
    CHECK(hz.groups[1].free_rank == 0);
    CHECK(hz.groups[1].torsion == std::vector<Z>{2, 2});
}

TEST_CASE("zero differential and Euler characteristic") {
    auto a = share(mat3_complex(Q(0), Q(0)));
    auto h = homology(a);
    for (const auto& [d, g] : h.groups) CHECK(g.free_rank == a->algebra.indices_of_degree(d).size());

    std::vector<AlgebraRef> fixtures{share(mat2_dx(Q(1))), share(mat2_dx(Q(0))), share(mat3_complex(Q(0), Q(1))),
                                     share(mat3_complex(Q(1), Q(3), CoefficientRing::prime_field(3))),
                                     share(dual_numbers(QQ)), share(mat2_dx(Q(2), CoefficientRing::prime_field(5)))};
    for (const auto& f : fixtures) {
        auto hf = homology(f);
        long chi_h = 0, chi_m = 0;
        for (const auto& [d, g] : hf.groups) {
            long s = d % 2 == 0 ? 1 : -1;
            chi_h += s * static_cast<long>(g.free_rank);
            chi_m += s * static_cast<long>(f->algebra.indices_of_degree(d).size());
        }
        CHECK(chi_h == chi_m);
    }
}

TEST_CASE("homology rings and modules over fields") {
    auto a = share(mat2_dx(Q(1)));
    CHECK(homology_ring(a).is_zero());
    auto d0 = share(mat2_dx(Q(0)));
    auto h0 = homology_ring(d0);
    CHECK(h0.generators.size() == 4);
    auto col = column_module(a, {0, 1, 0, 0}, 0);
    CHECK(homology_module(col, homology_ring(a)).is_zero());
    auto hm = homology_module(regular_module(d0), h0);
    CHECK(hm.action == h0.products);
}

TEST_CASE("Jacobson radical") {
    CHECK(algebra_semisimplicity(mat2_dx(Q(1)).algebra));
    auto eps = cycles_subalgebra(mat2_dx(Q(1)));
    CHECK(jacobson_radical(eps.algebra.algebra).size() == 1);
    auto m3 = cycles_subalgebra(mat3_complex(Q(0), Q(1)));
    CHECK_FALSE(algebra_semisimplicity(m3.algebra.algebra));
    CHECK(algebra_semisimplicity(truncated_polynomials(QQ, {-1, 0})));   // x^2 = 1
    CHECK(jacobson_radical(truncated_polynomials(QQ, {0, 0, 0})).size() == 2);

    const auto F3 = CoefficientRing::prime_field(3);
    const auto F5 = CoefficientRing::prime_field(5);
    std::vector<GradedAlgebra> small{
        truncated_polynomials(F3, {0, 0, 0}),    // x^3
        truncated_polynomials(F3, {-1, 0, 0}),   // x^3 - 1 = (x - 1)^3
        truncated_polynomials(F3, {-1, 0}),      // x^2 - 1, split semisimple
        truncated_polynomials(F3, {1, 0}),       // x^2 + 1, a field
        truncated_polynomials(F3, {0, 1, 0}),    // x^3 + x^2
        truncated_polynomials(F5, {0, 0}),
        truncated_polynomials(F5, {-1, 0, 0}),   // x^3 - 1 over F5: separable
        upper_triangular(F3),
        mat2_dx(Q(1), F3).algebra,
    };
    for (const auto& alg : small) CHECK(ipow(alg.ring().modulus(), jacobson_radical(alg).size()) == brute_radical_size(alg));
    CHECK(jacobson_radical(truncated_polynomials(F3, {-1, 0, 0})).size() == 2);
}

TEST_CASE("semisimple category criterion") {
    auto dual = semisimple_category_test(dual_numbers(QQ));
    CHECK(dual.acyclic);
    CHECK(*dual.witness == QVec{0, 1});
    CHECK(dual.cycles_semisimple);
    CHECK(dual.direct_sum);
    CHECK(dual.verdict);

    auto mat = semisimple_category_test(mat2_dx(Q(1)));
    CHECK(mat.acyclic);
    CHECK(*mat.witness == QVec{0, 0, 1, 0});
    CHECK_FALSE(mat.cycles_semisimple);
    CHECK_FALSE(mat.verdict);

    auto zero = semisimple_category_test(mat2_dx(Q(0)));
    CHECK_FALSE(zero.acyclic);
    CHECK_FALSE(zero.verdict);
}

TEST_CASE("H0 of Hom is chain maps modulo homotopies") {
    auto k = share(ground_algebra(QQ));
    // two-term complexes V0 -> V1 in degrees 0, 1
    auto complex = [&](const QMat& f) {
        const std::size_t r0 = f.cols(), r1 = f.rows();
        std::vector<int> degs(r0, 0);
        degs.insert(degs.end(), r1, 1);
        QMat d(r0 + r1, r0 + r1);
        for (std::size_t i = 0; i < r1; ++i)
            for (std::size_t j = 0; j < r0; ++j) d(r0 + i, j) = f(i, j);
        return DgModule(k, degs, {QMat::identity(r0 + r1)}, d);
    };
    std::vector<QMat> maps;
    maps.push_back(QMat::from_rows({{Q(1), Q(0)}}, 2));
    maps.push_back(QMat::from_rows({{Q(0), Q(0)}}, 2));
    maps.push_back(QMat::from_rows({{Q(1), Q(2)}, {Q(2), Q(4)}}, 2));
    maps.push_back(QMat::identity(2));
    for (const auto& f : maps)
        for (const auto& g : maps) {
            DgModule m = complex(f), n = complex(g);
            auto h = homology(hom_complex(m, n).complex);
            std::size_t h0 = h.groups.count(0) ? h.groups[0].free_rank : 0;
            // brute force: all degree-0 maps commuting with Delta, modulo Delta h + h Delta
            const std::size_t p = m.dim(), q = n.dim();
            std::vector<QVec> chain, homotopic;
            std::vector<std::pair<std::size_t, std::size_t>> slots0, slots1;
            for (std::size_t r = 0; r < q; ++r)
                for (std::size_t c = 0; c < p; ++c) {
                    if (n.degree(r) == m.degree(c)) slots0.emplace_back(r, c);
                    if (n.degree(r) == m.degree(c) - 1) slots1.emplace_back(r, c);
                }
            QMat sys(q * p, slots0.size());
            for (std::size_t u = 0; u < slots0.size(); ++u) {
                QMat e(q, p);
                e(slots0[u].first, slots0[u].second) = 1;
                QMat comm = n.delta() * e - e * m.delta();
                for (std::size_t r = 0; r < q; ++r)
                    for (std::size_t c = 0; c < p; ++c) sys(r * p + c, u) = comm(r, c);
            }
            std::size_t chain_dim = kernel_basis(sys, QQ).size();
            for (const auto& [r, c] : slots1) {
                QMat e(q, p);
                e(r, c) = 1;
                QMat b = n.delta() * e + e * m.delta();
                QVec v;
                for (std::size_t i = 0; i < q; ++i)
                    for (std::size_t j = 0; j < p; ++j) v.push_back(b(i, j));
                homotopic.push_back(v);
            }
            std::size_t null_dim = Subspace(q * p, QQ, homotopic).dim();
            CHECK(h0 == chain_dim - null_dim);
        }
}
