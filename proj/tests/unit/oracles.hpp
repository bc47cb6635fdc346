#pragma once

// Small independent reference computations used by the unit tests.

#include "dgorder/matrix.hpp"

#include <functional>
#include <random>
#include <vector>

namespace oracle {

using dgo::Q;
using dgo::QMat;
using dgo::Z;
using dgo::ZMat;

// Laplace expansion
inline Z det(const ZMat& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Z total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0) continue;
        ZMat minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, k = 0; j < n; ++j)
                if (j != c) minor(i - 1, k++) = m(i, j);
        Z term = m(0, c) * det(minor);
        total += (c % 2 == 0) ? term : Z(-term);
    }
    return total;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            f(idx);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

// invariant factors through gcds of k x k minors
inline std::vector<Z> determinantal_invariants(const ZMat& m) {
    std::vector<Z> d{Z(1)};
    std::vector<Z> out;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        Z g = 0;
        subsets(m.rows(), k, [&](const std::vector<std::size_t>& rs) {
            subsets(m.cols(), k, [&](const std::vector<std::size_t>& cs) {
                g = gcd(g, det(m.select_rows(rs).select_cols(cs)));
            });
        });
        if (g == 0) break;
        out.push_back(g / d.back());
        d.push_back(g);
    }
    return out;
}

inline ZMat random_int_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    ZMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    return m;
}

} // namespace oracle
