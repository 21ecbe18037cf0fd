#include "fracfactor/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace fracfactor {

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.front() < 0)
        throw std::invalid_argument("vertex set contains a negative label");
}

VertexSet VertexSet::from_mask(std::uint64_t mask)
{
    VertexSet s;
    s.members_.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask != 0) {
        s.members_.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return s;
}

bool VertexSet::contains(Vertex v) const
{
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::uint64_t VertexSet::mask() const
{
    std::uint64_t m = 0;
    for (Vertex v : members_) {
        if (v >= 64)
            throw std::invalid_argument("vertex set mask needs labels below 64");
        m |= std::uint64_t{1} << v;
    }
    return m;
}

bool disjoint(const VertexSet& s, const VertexSet& t)
{
    auto i = s.begin();
    auto j = t.begin();
    while (i != s.end() && j != t.end()) {
        if (*i == *j)
            return false;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return true;
}

Graph::Graph(int n) : n_(n)
{
    if (n < 0)
        throw std::invalid_argument("graph order must be non-negative");
    std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    bits_.assign((pairs + 63) / 64, 0);
    degree_.assign(static_cast<std::size_t>(n), 0);
}

std::size_t Graph::pair_index(Vertex u, Vertex v) noexcept
{
    if (u > v)
        std::swap(u, v);
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(v - 1) / 2 + static_cast<std::size_t>(u);
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        return false;
    return bit(pair_index(u, v));
}

int Graph::degree(Vertex v) const
{
    check_vertex(v);
    return degree_[static_cast<std::size_t>(v)];
}

int Graph::min_degree() const
{
    if (n_ == 0)
        return 0;
    return *std::min_element(degree_.begin(), degree_.end());
}

int Graph::max_degree() const
{
    if (n_ == 0)
        return 0;
    return *std::max_element(degree_.begin(), degree_.end());
}

std::vector<Vertex> Graph::neighbors(Vertex v) const
{
    check_vertex(v);
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(degree_[static_cast<std::size_t>(v)]));
    for (Vertex u = 0; u < n_; ++u)
        if (u != v && bit(pair_index(u, v)))
            out.push_back(u);
    return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (bit(pair_index(u, v)))
                out.emplace_back(u, v);
    return out;
}

bool Graph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    std::size_t i = pair_index(u, v);
    if (bit(i))
        return false;
    bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
    ++degree_[static_cast<std::size_t>(u)];
    ++degree_[static_cast<std::size_t>(v)];
    ++edges_;
    return true;
}

bool Graph::remove_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        return false;
    std::size_t i = pair_index(u, v);
    if (!bit(i))
        return false;
    bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    --degree_[static_cast<std::size_t>(u)];
    --degree_[static_cast<std::size_t>(v)];
    --edges_;
    return true;
}

std::vector<std::uint64_t> Graph::row_masks() const
{
    if (n_ > 64)
        throw std::invalid_argument("row masks need n <= 64");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 1; v < n_; ++v)
        for (Vertex u = 0; u < v; ++u)
            if (bit(pair_index(u, v))) {
                rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
                rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
            }
    return rows;
}

Graph complete(int n)
{
    Graph g(n);
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle needs n >= 3");
    Graph g(n);
    for (Vertex v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int n)
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph star(int leaves)
{
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2)
{
    const int n1 = g1.order();
    Graph g(n1 + g2.order());
    for (auto [u, v] : g1.edges())
        g.add_edge(u, v);
    for (auto [u, v] : g2.edges())
        g.add_edge(u + n1, v + n1);
    return g;
}

Graph join(const Graph& g1, const Graph& g2)
{
    Graph g = disjoint_union(g1, g2);
    const int n1 = g1.order();
    for (Vertex u = 0; u < n1; ++u)
        for (Vertex v = 0; v < g2.order(); ++v)
            g.add_edge(u, n1 + v);
    return g;
}

Graph extremal(int n, int a)
{
    if (a < 1)
        throw std::invalid_argument("extremal graph needs a >= 1");
    if (n < a + 2)
        throw std::invalid_argument("extremal graph needs n >= a + 2 (n=" + std::to_string(n) +
                                    ", a=" + std::to_string(a) + ")");
    return join(complete(a), disjoint_union(complete(n - a - 1), complete(1)));
}

Graph complement(const Graph& g)
{
    Graph c(g.order());
    for (Vertex v = 1; v < g.order(); ++v)
        for (Vertex u = 0; u < v; ++u)
            if (!g.adjacent(u, v))
                c.add_edge(u, v);
    return c;
}

Graph delete_edge(const Graph& g, Vertex u, Vertex v)
{
    Graph h = g;
    if (!h.remove_edge(u, v))
        throw std::invalid_argument("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    return h;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s)
{
    InducedSubgraph out;
    out.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (s.contains(v))
            continue;
        out.old_to_new[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    }
    for (Vertex v : s)
        if (v >= g.order())
            throw std::out_of_range("deleted vertex " + std::to_string(v) + " not in graph");
    out.graph = Graph(static_cast<int>(out.new_to_old.size()));
    for (auto [u, v] : g.edges()) {
        Vertex nu = out.old_to_new[static_cast<std::size_t>(u)];
        Vertex nv = out.old_to_new[static_cast<std::size_t>(v)];
        if (nu >= 0 && nv >= 0)
            out.graph.add_edge(nu, nv);
    }
    return out;
}

Graph permute(const Graph& g, std::span<const Vertex> perm)
{
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("permutation length differs from graph order");
    std::vector<Vertex> check(perm.begin(), perm.end());
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < check.size(); ++i)
        if (check[i] != static_cast<Vertex>(i))
            throw std::invalid_argument("not a permutation of 0..n-1");
    Graph h(g.order());
    for (auto [u, v] : g.edges())
        h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return h;
}

namespace {

void require_disjoint(const Graph& g, const VertexSet& s, const VertexSet& t)
{
    if (!disjoint(s, t))
        throw std::invalid_argument("S and T must be disjoint");
    for (const VertexSet* x : {&s, &t})
        if (!x->empty() && x->members().back() >= g.order())
            throw std::out_of_range("vertex set exceeds graph order");
}

}  // namespace

int cut_count(const Graph& g, const VertexSet& s, const VertexSet& t)
{
    require_disjoint(g, s, t);
    int count = 0;
    for (Vertex u : s)
        for (Vertex v : t)
            count += g.adjacent(u, v) ? 1 : 0;
    return count;
}

long degree_sum_minus(const Graph& g, const VertexSet& s, const VertexSet& t)
{
    require_disjoint(g, s, t);
    long total = 0;
    for (Vertex v : t) {
        int d = g.degree(v);
        for (Vertex u : s)
            d -= g.adjacent(u, v) ? 1 : 0;
        total += d;
    }
    return total;
}

int induced_edge_count(const Graph& g, const VertexSet& s)
{
    int count = 0;
    const auto& m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            count += g.adjacent(m[i], m[j]) ? 1 : 0;
    return count;
}

std::vector<VertexSet> components(const Graph& g)
{
    const int n = g.order();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < n; ++root) {
        if (label[static_cast<std::size_t>(root)] >= 0)
            continue;
        const int id = static_cast<int>(out.size());
        std::vector<Vertex> members;
        stack.push_back(root);
        label[static_cast<std::size_t>(root)] = id;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (Vertex u : g.neighbors(v))
                if (label[static_cast<std::size_t>(u)] < 0) {
                    label[static_cast<std::size_t>(u)] = id;
                    stack.push_back(u);
                }
        }
        out.emplace_back(std::move(members));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

}  // namespace fracfactor
