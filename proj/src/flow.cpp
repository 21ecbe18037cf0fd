#include <algorithm>
#include <limits>
#include <queue>

#include "fracfactor/factor_oracle.hpp"

namespace fracfactor {

namespace {

// Dinic max-flow on integer capacities.
class FlowNetwork {
public:
    explicit FlowNetwork(int nodes) : adj_(static_cast<std::size_t>(nodes)), level_(adj_.size()), next_(adj_.size()) {}

    /// Returns the arc id; its flow is read back with flow(id).
    int add_arc(int from, int to, long capacity)
    {
        const int id = static_cast<int>(arcs_.size());
        arcs_.push_back({to, capacity});
        adj_[static_cast<std::size_t>(from)].push_back(id);
        arcs_.push_back({from, 0});
        adj_[static_cast<std::size_t>(to)].push_back(id + 1);
        capacity_.push_back(capacity);
        capacity_.push_back(0);
        return id;
    }

    [[nodiscard]] long flow(int arc) const
    {
        return capacity_[static_cast<std::size_t>(arc)] - arcs_[static_cast<std::size_t>(arc)].residual;
    }

    long max_flow(int source, int sink)
    {
        long total = 0;
        while (bfs(source, sink)) {
            std::fill(next_.begin(), next_.end(), 0);
            while (long pushed = dfs(source, sink, std::numeric_limits<long>::max()))
                total += pushed;
        }
        return total;
    }

private:
    struct Arc {
        int to;
        long residual;
    };

    bool bfs(int source, int sink)
    {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> queue;
        level_[static_cast<std::size_t>(source)] = 0;
        queue.push(source);
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop();
            for (int id : adj_[static_cast<std::size_t>(x)]) {
                const Arc& arc = arcs_[static_cast<std::size_t>(id)];
                if (arc.residual > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
                    level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(x)] + 1;
                    queue.push(arc.to);
                }
            }
        }
        return level_[static_cast<std::size_t>(sink)] >= 0;
    }

    long dfs(int x, int sink, long limit)
    {
        if (x == sink)
            return limit;
        auto& edges = adj_[static_cast<std::size_t>(x)];
        for (int& i = next_[static_cast<std::size_t>(x)]; i < static_cast<int>(edges.size()); ++i) {
            const int id = edges[static_cast<std::size_t>(i)];
            Arc& arc = arcs_[static_cast<std::size_t>(id)];
            if (arc.residual <= 0 || level_[static_cast<std::size_t>(arc.to)] != level_[static_cast<std::size_t>(x)] + 1)
                continue;
            if (long pushed = dfs(arc.to, sink, std::min(limit, arc.residual))) {
                arc.residual -= pushed;
                arcs_[static_cast<std::size_t>(id ^ 1)].residual += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<Arc> arcs_;
    std::vector<long> capacity_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> level_;
    std::vector<int> next_;
};

// Circulation with lower bounds: each bounded arc x->y with [lo,hi] becomes an
// arc of capacity hi-lo plus demand bookkeeping; a super source/sink pair then
// saturates the demands iff the original circulation is feasible.
class BoundedCirculation {
public:
    explicit BoundedCirculation(int nodes)
        : net_(nodes + 2), excess_(static_cast<std::size_t>(nodes), 0), super_source_(nodes), super_sink_(nodes + 1)
    {
    }

    int add_arc(int from, int to, long lower, long upper)
    {
        excess_[static_cast<std::size_t>(to)] += lower;
        excess_[static_cast<std::size_t>(from)] -= lower;
        const int id = net_.add_arc(from, to, upper - lower);
        lower_.emplace_back(id, lower);
        return static_cast<int>(lower_.size()) - 1;
    }

    bool solve()
    {
        long demand = 0;
        for (std::size_t x = 0; x < excess_.size(); ++x) {
            if (excess_[x] > 0) {
                net_.add_arc(super_source_, static_cast<int>(x), excess_[x]);
                demand += excess_[x];
            } else if (excess_[x] < 0) {
                net_.add_arc(static_cast<int>(x), super_sink_, -excess_[x]);
            }
        }
        return net_.max_flow(super_source_, super_sink_) == demand;
    }

    [[nodiscard]] long flow(int handle) const
    {
        const auto& [id, lower] = lower_[static_cast<std::size_t>(handle)];
        return lower + net_.flow(id);
    }

private:
    FlowNetwork net_;
    std::vector<long> excess_;
    std::vector<std::pair<int, long>> lower_;
    int super_source_;
    int super_sink_;
};

}  // namespace

std::vector<int> FractionalAssignment::vertex_halves(int n) const
{
    std::vector<int> sum(static_cast<std::size_t>(n), 0);
    for (const Entry& e : weights) {
        sum[static_cast<std::size_t>(e.u)] += e.halves;
        sum[static_cast<std::size_t>(e.v)] += e.halves;
    }
    return sum;
}

bool is_valid_assignment(const Graph& g, const FactorBounds& bounds, const FractionalAssignment& h)
{
    for (const auto& e : h.weights) {
        if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v))
            return false;
        if (e.halves < 0 || e.halves > 2)
            return false;
    }
    const auto sums = h.vertex_halves(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        const int s = sums[static_cast<std::size_t>(v)];
        if (s < 2 * bounds.lower(v) || s > 2 * bounds.upper(v))
            return false;
    }
    return true;
}

std::optional<FractionalAssignment> find_fractional_factor(const Graph& g, const FactorBounds& bounds)
{
    const int n = g.order();
    if (n < 1)
        throw std::invalid_argument("fractional factor search needs n >= 1");
    bounds.check_order(n);

    // Nodes: left copies 0..n-1, right copies n..2n-1, source 2n, sink 2n+1.
    const int source = 2 * n;
    const int sink = 2 * n + 1;
    BoundedCirculation circ(2 * n + 2);
    for (Vertex v = 0; v < n; ++v) {
        circ.add_arc(source, v, bounds.lower(v), bounds.upper(v));
        circ.add_arc(n + v, sink, bounds.lower(v), bounds.upper(v));
    }
    struct Crossing {
        Vertex u;
        Vertex v;
        int forward;   // u -> v'
        int backward;  // v -> u'
    };
    std::vector<Crossing> crossings;
    for (auto [u, v] : g.edges())
        crossings.push_back({u, v, circ.add_arc(u, n + v, 0, 1), circ.add_arc(v, n + u, 0, 1)});
    circ.add_arc(sink, source, 0, std::numeric_limits<int>::max());

    if (!circ.solve())
        return std::nullopt;

    FractionalAssignment h;
    for (const Crossing& c : crossings)
        h.weights.push_back({c.u, c.v, static_cast<int>(circ.flow(c.forward) + circ.flow(c.backward))});
    return h;
}

bool is_fractional_ab_deleted_by_flow(const Graph& g, int a, int b)
{
    const FactorBounds bounds = FactorBounds::constant(a, b);
    for (auto [u, v] : g.edges())
        if (!find_fractional_factor(delete_edge(g, u, v), bounds))
            return false;
    return true;
}

}  // namespace fracfactor
