#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fracfactor {

using Vertex = int;

/// Sorted, duplicate-free subset of 0..n-1.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members);
    explicit VertexSet(std::vector<Vertex> members);

    /// Members of a bitmask, ascending.
    static VertexSet from_mask(std::uint64_t mask);

    [[nodiscard]] const std::vector<Vertex>& members() const noexcept { return members_; }
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    [[nodiscard]] bool contains(Vertex v) const;
    [[nodiscard]] auto begin() const noexcept { return members_.begin(); }
    [[nodiscard]] auto end() const noexcept { return members_.end(); }

    /// Bitmask form; every member must be < 64.
    [[nodiscard]] std::uint64_t mask() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

bool disjoint(const VertexSet& s, const VertexSet& t);

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is one bit per unordered pair {u,v}, u < v, packed in the
/// column-major upper-triangle order that graph6 uses: pair (u,v) lives at
/// bit v(v-1)/2 + u.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] int size() const noexcept { return edges_; }

    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;
    [[nodiscard]] int degree(Vertex v) const;
    [[nodiscard]] int min_degree() const;
    [[nodiscard]] int max_degree() const;
    [[nodiscard]] std::vector<Vertex> neighbors(Vertex v) const;
    [[nodiscard]] std::vector<int> degrees() const { return degree_; }
    [[nodiscard]] std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Returns false if the edge was already present. Loops throw.
    bool add_edge(Vertex u, Vertex v);
    /// Returns false if the edge was absent.
    bool remove_edge(Vertex u, Vertex v);

    /// Neighbourhood bitmasks; requires n <= 64.
    [[nodiscard]] std::vector<std::uint64_t> row_masks() const;

    /// Index of pair (u,v) in the packed upper triangle.
    static std::size_t pair_index(Vertex u, Vertex v) noexcept;

    friend bool operator==(const Graph& x, const Graph& y) noexcept
    {
        return x.n_ == y.n_ && x.bits_ == y.bits_;
    }

private:
    void check_vertex(Vertex v) const;
    [[nodiscard]] bool bit(std::size_t index) const noexcept
    {
        return (bits_[index >> 6] >> (index & 63)) & 1U;
    }

    int n_ = 0;
    int edges_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> degree_;
};

/// Result of G - S: the induced subgraph plus the label maps.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> old_to_new;  // -1 for deleted vertices
    std::vector<Vertex> new_to_old;
};

// Constructors.
Graph complete(int n);
Graph empty_graph(int n);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);

/// K_a ∨ (K_{n-a-1} ∪ K_1). Labels: K_a is 0..a-1, K_{n-a-1} is a..n-2 and
/// the K_1 vertex is n-1.
Graph extremal(int n, int a);

Graph complement(const Graph& g);
Graph delete_edge(const Graph& g, Vertex u, Vertex v);
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s);
/// Vertex v of g becomes perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

// Set queries.
int cut_count(const Graph& g, const VertexSet& s, const VertexSet& t);
/// d_{G-S}(T): sum over v in T of the number of neighbours of v outside S.
long degree_sum_minus(const Graph& g, const VertexSet& s, const VertexSet& t);
int induced_edge_count(const Graph& g, const VertexSet& s);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

// Text formats.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset);
    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class EdgeListError : public std::runtime_error {
public:
    EdgeListError(const std::string& what, std::size_t line);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Accepts an optional ">>graph6<<" header and a trailing newline.
/// sparse6 (':') and digraph6 ('&') inputs are rejected.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

/// First token n, then whitespace-separated pairs. Duplicate pairs collapse.
Graph parse_edge_list(std::string_view text);

template <class Rng>
Graph random_graph(int n, double p, Rng& rng)
{
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

}  // namespace fracfactor
