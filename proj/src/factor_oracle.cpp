#include "fracfactor/factor_oracle.hpp"

#include <bit>

#include "subset_search.hpp"

namespace fracfactor {

namespace detail {

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * static_cast<unsigned>(n - k + i) /
                                       static_cast<unsigned>(i));
    return r;
}

std::uint64_t unrank_combination(int n, int k, std::uint64_t rank)
{
    std::uint64_t mask = 0;
    int x = 0;
    for (int remaining = k; remaining > 0; ++x) {
        const std::uint64_t starting_here = binomial(n - x - 1, remaining - 1);
        if (rank < starting_here) {
            mask |= std::uint64_t{1} << x;
            --remaining;
        } else {
            rank -= starting_here;
        }
    }
    return mask;
}

bool next_combination(std::vector<int>& members, int n)
{
    const int k = static_cast<int>(members.size());
    int i = k - 1;
    while (i >= 0 && members[static_cast<std::size_t>(i)] == n - k + i)
        --i;
    if (i < 0)
        return false;
    ++members[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
        members[static_cast<std::size_t>(j)] = members[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

}  // namespace detail

FactorBounds FactorBounds::constant(int a, int b)
{
    if (a < 1 || a > b)
        throw std::invalid_argument("constant bounds need 1 <= a <= b (a=" + std::to_string(a) +
                                    ", b=" + std::to_string(b) + ")");
    FactorBounds fb;
    fb.a_ = a;
    fb.b_ = b;
    return fb;
}

FactorBounds FactorBounds::per_vertex(std::vector<int> g, std::vector<int> f)
{
    if (g.size() != f.size())
        throw std::invalid_argument("g and f must have equal length");
    for (std::size_t v = 0; v < g.size(); ++v)
        if (g[v] < 0 || g[v] > f[v])
            throw std::invalid_argument("need 0 <= g(v) <= f(v) at vertex " + std::to_string(v));
    FactorBounds fb;
    fb.constant_ = false;
    fb.g_ = std::move(g);
    fb.f_ = std::move(f);
    return fb;
}

void FactorBounds::check_order(int n) const
{
    if (!constant_ && static_cast<int>(g_.size()) != n)
        throw std::invalid_argument("per-vertex bounds sized " + std::to_string(g_.size()) + " for a graph of order " +
                                    std::to_string(n));
}

SizeGuardError::SizeGuardError(const std::string& oracle, int n, int limit)
    : std::runtime_error(oracle + " refuses n=" + std::to_string(n) + " (limit " + std::to_string(limit) +
                         "; raise the limit explicitly or use the flow-based check)")
{
}

int epsilon(const Graph& g, const VertexSet& s, const VertexSet& t)
{
    if (!disjoint(s, t))
        throw std::invalid_argument("S and T must be disjoint");
    if (induced_edge_count(g, t) > 0)
        return 2;
    for (Vertex v : t)
        for (Vertex u : g.neighbors(v))
            if (!s.contains(u) && !t.contains(u))
                return 1;
    return 0;
}

long theta(const Graph& g, const VertexSet& s, const VertexSet& t, int a, int b)
{
    if (a < 1 || a > b)
        throw std::invalid_argument("theta needs 1 <= a <= b");
    return static_cast<long>(b) * static_cast<long>(s.size()) + degree_sum_minus(g, s, t) -
           static_cast<long>(a) * static_cast<long>(t.size());
}

VertexSet derived_t(const Graph& g, const VertexSet& s, const FactorBounds& bounds, WitnessRule rule)
{
    std::vector<Vertex> t;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (s.contains(v))
            continue;
        int d = g.degree(v);
        for (Vertex u : s)
            d -= g.adjacent(u, v) ? 1 : 0;
        const bool in_t = rule == WitnessRule::deleted ? d <= bounds.lower(v) : d < bounds.lower(v);
        if (in_t)
            t.push_back(v);
    }
    return VertexSet(std::move(t));
}

DeficiencyWitness evaluate_witness(const Graph& g, const VertexSet& s, const VertexSet& t,
                                   const FactorBounds& bounds, WitnessRule rule)
{
    bounds.check_order(g.order());
    DeficiencyWitness w{s, t, 0, 0, true, rule};
    long value = degree_sum_minus(g, s, t);
    for (Vertex v : s)
        value += bounds.upper(v);
    for (Vertex v : t)
        value -= bounds.lower(v);
    w.theta = value;
    w.epsilon = rule == WitnessRule::deleted ? epsilon(g, s, t) : 0;
    w.satisfied = w.theta >= w.epsilon;
    return w;
}

namespace {

void guard(const Graph& g, const OracleOptions& opts, const char* name)
{
    if (g.order() < 1)
        throw std::invalid_argument(std::string(name) + " needs n >= 1");
    const int limit = std::min(opts.max_n, 63);
    if (g.order() > limit)
        throw SizeGuardError(name, g.order(), limit);
}

// Bitmask kernels evaluated once per S.
struct FactorKernel {
    std::vector<std::uint64_t> rows;
    std::vector<int> lower;
    std::vector<int> upper;
    std::uint64_t full;

    FactorKernel(const Graph& g, const FactorBounds& bounds)
        : rows(g.row_masks()), full(g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1)
    {
        for (Vertex v = 0; v < g.order(); ++v) {
            lower.push_back(bounds.lower(v));
            upper.push_back(bounds.upper(v));
        }
    }

    [[nodiscard]] bool violates(std::uint64_t s) const
    {
        const std::uint64_t rest = full & ~s;
        long value = 0;
        for (std::uint64_t x = s; x != 0; x &= x - 1)
            value += upper[static_cast<std::size_t>(std::countr_zero(x))];
        for (std::uint64_t x = rest; x != 0; x &= x - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(x));
            const int d = std::popcount(rows[v] & rest);
            if (d < lower[v])
                value += d - lower[v];
        }
        return value < 0;
    }
};

struct DeletedKernel {
    std::vector<std::uint64_t> rows;
    int a;
    int b;
    std::uint64_t full;

    DeletedKernel(const Graph& g, int a_, int b_)
        : rows(g.row_masks()), a(a_), b(b_),
          full(g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1)
    {
    }

    [[nodiscard]] bool violates(std::uint64_t s) const
    {
        const std::uint64_t rest = full & ~s;
        std::uint64_t t = 0;
        long value = static_cast<long>(b) * std::popcount(s);
        for (std::uint64_t x = rest; x != 0; x &= x - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(x));
            const int d = std::popcount(rows[v] & rest);
            if (d <= a) {
                t |= std::uint64_t{1} << v;
                value += d - a;
            }
        }
        int eps = 0;
        const std::uint64_t outside = rest & ~t;
        for (std::uint64_t x = t; x != 0 && eps < 2; x &= x - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(x));
            if (rows[v] & t)
                eps = 2;
            else if (rows[v] & outside)
                eps = 1;
        }
        return value < eps;
    }
};

template <bool Parallel, class Kernel>
std::optional<std::uint64_t> search(int n, const Kernel& kernel)
{
    auto pred = [&kernel](std::uint64_t s) { return kernel.violates(s); };
    if constexpr (Parallel)
        return detail::first_violation_parallel(n, pred);
    else
        return detail::first_violation_serial(n, pred);
}

template <bool Parallel>
OracleVerdict factor_impl(const Graph& g, const FactorBounds& bounds, const OracleOptions& opts)
{
    guard(g, opts, "fractional factor oracle");
    bounds.check_order(g.order());
    const auto hit = search<Parallel>(g.order(), FactorKernel(g, bounds));
    if (!hit)
        return {};
    const VertexSet s = VertexSet::from_mask(*hit);
    return {false, evaluate_witness(g, s, derived_t(g, s, bounds, WitnessRule::factor), bounds, WitnessRule::factor)};
}

template <bool Parallel>
OracleVerdict deleted_impl(const Graph& g, int a, int b, const OracleOptions& opts)
{
    const FactorBounds bounds = FactorBounds::constant(a, b);
    guard(g, opts, "deleted-graph oracle");
    // With no edge to delete the property holds vacuously; the set criterion
    // only characterises it when e(G) >= 1.
    if (g.size() == 0)
        return {};
    const auto hit = search<Parallel>(g.order(), DeletedKernel(g, a, b));
    if (!hit)
        return {};
    const VertexSet s = VertexSet::from_mask(*hit);
    return {false,
            evaluate_witness(g, s, derived_t(g, s, bounds, WitnessRule::deleted), bounds, WitnessRule::deleted)};
}

}  // namespace

OracleVerdict has_fractional_gf_factor(const Graph& g, const FactorBounds& bounds, OracleOptions opts)
{
    return factor_impl<true>(g, bounds, opts);
}

OracleVerdict is_fractional_ab_deleted(const Graph& g, int a, int b, OracleOptions opts)
{
    return deleted_impl<true>(g, a, b, opts);
}

bool is_fractional_ab_deleted_by_edges(const Graph& g, int a, int b, OracleOptions opts)
{
    const FactorBounds bounds = FactorBounds::constant(a, b);
    guard(g, opts, "per-edge deleted-graph oracle");
    for (auto [u, v] : g.edges())
        if (!has_fractional_gf_factor(delete_edge(g, u, v), bounds, opts).holds)
            return false;
    return true;
}

namespace reference {

OracleVerdict has_fractional_gf_factor(const Graph& g, const FactorBounds& bounds, OracleOptions opts)
{
    return factor_impl<false>(g, bounds, opts);
}

OracleVerdict is_fractional_ab_deleted(const Graph& g, int a, int b, OracleOptions opts)
{
    return deleted_impl<false>(g, a, b, opts);
}

}  // namespace reference

}  // namespace fracfactor
