#include <bit>

#include "fracfactor/factor_oracle.hpp"

namespace fracfactor {

namespace {

struct LovaszKernel {
    std::vector<std::uint64_t> rows;
    std::vector<int> lower;
    std::vector<int> upper;
    std::uint64_t full;

    LovaszKernel(const Graph& g, const FactorBounds& bounds)
        : rows(g.row_masks()), full(g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1)
    {
        for (Vertex v = 0; v < g.order(); ++v) {
            lower.push_back(bounds.lower(v));
            upper.push_back(bounds.upper(v));
        }
    }

    [[nodiscard]] int odd_components(std::uint64_t s, std::uint64_t t) const
    {
        std::uint64_t unseen = full & ~(s | t);
        int count = 0;
        while (unseen != 0) {
            std::uint64_t comp = unseen & (~unseen + 1);
            std::uint64_t frontier = comp;
            while (frontier != 0) {
                const auto v = static_cast<std::size_t>(std::countr_zero(frontier));
                frontier &= frontier - 1;
                const std::uint64_t fresh = rows[v] & unseen & ~comp;
                comp |= fresh;
                frontier |= fresh;
            }
            unseen &= ~comp;

            bool tight = true;
            long parity = 0;
            for (std::uint64_t x = comp; x != 0; x &= x - 1) {
                const auto v = static_cast<std::size_t>(std::countr_zero(x));
                tight = tight && lower[v] == upper[v];
                parity += upper[v] + std::popcount(rows[v] & t);
            }
            if (tight && (parity & 1) != 0)
                ++count;
        }
        return count;
    }

    [[nodiscard]] long slack(std::uint64_t s, std::uint64_t t) const
    {
        long value = 0;
        for (std::uint64_t x = s; x != 0; x &= x - 1)
            value += upper[static_cast<std::size_t>(std::countr_zero(x))];
        for (std::uint64_t x = t; x != 0; x &= x - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(x));
            value += std::popcount(rows[v] & ~s) - lower[v];
        }
        return value - odd_components(s, t);
    }
};

}  // namespace

int lovasz_odd_components(const Graph& g, const VertexSet& s, const VertexSet& t, const FactorBounds& bounds)
{
    if (!disjoint(s, t))
        throw std::invalid_argument("S and T must be disjoint");
    bounds.check_order(g.order());
    return LovaszKernel(g, bounds).odd_components(s.mask(), t.mask());
}

bool has_gf_factor_lovasz(const Graph& g, const FactorBounds& bounds, int max_n)
{
    const int n = g.order();
    if (n < 1)
        throw std::invalid_argument("Lovász oracle needs n >= 1");
    const int limit = std::min(max_n, 20);
    if (n > limit)
        throw SizeGuardError("Lovász oracle", n, limit);
    bounds.check_order(n);
    const LovaszKernel kernel(g, bounds);

    // Each vertex is in S, T or neither: walk all 3^n assignments as a
    // base-3 counter.
    std::vector<int> digit(static_cast<std::size_t>(n), 0);
    std::uint64_t s = 0;
    std::uint64_t t = 0;
    while (true) {
        if (kernel.slack(s, t) < 0)
            return false;
        int i = 0;
        while (i < n && digit[static_cast<std::size_t>(i)] == 2) {
            digit[static_cast<std::size_t>(i)] = 0;
            t &= ~(std::uint64_t{1} << i);
            ++i;
        }
        if (i == n)
            return true;
        if (++digit[static_cast<std::size_t>(i)] == 1) {
            s |= std::uint64_t{1} << i;
        } else {
            s &= ~(std::uint64_t{1} << i);
            t |= std::uint64_t{1} << i;
        }
    }
}

}  // namespace fracfactor
