#pragma once

// Independent oracles used only by the tests.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "fracfactor/graph.hpp"

namespace fracfactor::testing {

/// Perfect matching by exhaustive search: match the lowest free vertex with
/// each free neighbour in turn.
inline bool has_perfect_matching(const Graph& g)
{
    const int n = g.order();
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<bool()> go = [&]() -> bool {
        int v = 0;
        while (v < n && used[static_cast<std::size_t>(v)])
            ++v;
        if (v == n)
            return true;
        used[static_cast<std::size_t>(v)] = true;
        for (Vertex u = v + 1; u < n; ++u)
            if (!used[static_cast<std::size_t>(u)] && g.adjacent(u, v)) {
                used[static_cast<std::size_t>(u)] = true;
                if (go())
                    return true;
                used[static_cast<std::size_t>(u)] = false;
            }
        used[static_cast<std::size_t>(v)] = false;
        return false;
    };
    return go();
}

/// Fractional [lower, upper]-factor by trying every weighting in
/// {0, 1/2, 1}^E. Half-integral weightings suffice, so this is exact.
inline bool has_half_integral_factor(const Graph& g, const std::vector<int>& lower, const std::vector<int>& upper)
{
    const auto edges = g.edges();
    const int n = g.order();
    std::vector<int> halves(static_cast<std::size_t>(n), 0);
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i == edges.size()) {
            for (int v = 0; v < n; ++v)
                if (halves[static_cast<std::size_t>(v)] < 2 * lower[static_cast<std::size_t>(v)] ||
                    halves[static_cast<std::size_t>(v)] > 2 * upper[static_cast<std::size_t>(v)])
                    return false;
            return true;
        }
        auto [u, v] = edges[i];
        for (int w = 0; w <= 2; ++w) {
            halves[static_cast<std::size_t>(u)] += w;
            halves[static_cast<std::size_t>(v)] += w;
            const bool over = halves[static_cast<std::size_t>(u)] > 2 * upper[static_cast<std::size_t>(u)] ||
                              halves[static_cast<std::size_t>(v)] > 2 * upper[static_cast<std::size_t>(v)];
            const bool found = !over && go(i + 1);
            halves[static_cast<std::size_t>(u)] -= w;
            halves[static_cast<std::size_t>(v)] -= w;
            if (found)
                return true;
        }
        return false;
    };
    return go(0);
}

/// det(xI - B) for a 3x3 matrix.
inline double char_poly_3(const double b[3][3], double x)
{
    const double m[3][3] = {{x - b[0][0], -b[0][1], -b[0][2]},
                            {-b[1][0], x - b[1][1], -b[1][2]},
                            {-b[2][0], -b[2][1], x - b[2][2]}};
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Largest real root of det(xI - B) in [lo, hi] by bisection, assuming the
/// polynomial is positive at hi and changes sign once above lo.
inline double largest_root_3(const double b[3][3], double lo, double hi)
{
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (char_poly_3(b, mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

inline std::vector<Graph> random_corpus(std::size_t count, int n_lo, int n_hi, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order(n_lo, n_hi);
    std::uniform_real_distribution<double> prob(0.1, 0.9);
    std::vector<Graph> out;
    for (std::size_t i = 0; i < count; ++i) {
        const int n = order(rng);
        out.push_back(random_graph(n, prob(rng), rng));
    }
    return out;
}

}  // namespace fracfactor::testing
