#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracfactor/graph.hpp"

namespace fracfactor {

/// Degree bounds for a factor: constant [a,b] or per-vertex (g,f).
class FactorBounds {
public:
    /// 1 <= a <= b.
    static FactorBounds constant(int a, int b);
    /// 0 <= g(v) <= f(v), equal lengths.
    static FactorBounds per_vertex(std::vector<int> g, std::vector<int> f);

    [[nodiscard]] bool is_constant() const noexcept { return constant_; }
    [[nodiscard]] int lower(Vertex v) const { return constant_ ? a_ : g_.at(static_cast<std::size_t>(v)); }
    [[nodiscard]] int upper(Vertex v) const { return constant_ ? b_ : f_.at(static_cast<std::size_t>(v)); }
    /// Throws std::invalid_argument if per-vertex vectors are not sized n.
    void check_order(int n) const;

private:
    FactorBounds() = default;
    bool constant_ = true;
    int a_ = 0;
    int b_ = 0;
    std::vector<int> g_;
    std::vector<int> f_;
};

enum class WitnessRule {
    deleted,  // T = {v not in S : d_{G-S}(v) <= a}, theta against epsilon
    factor,   // T = {v not in S : d_{G-S}(v) < g(v)}, deficiency against 0
};

/// A set pair (S,T) with its deficiency. For the deleted rule theta is
/// b|S| + d_{G-S}(T) - a|T|; for the factor rule it is f(S) + d_{G-S}(T) - g(T)
/// and epsilon is 0.
struct DeficiencyWitness {
    VertexSet s;
    VertexSet t;
    long theta = 0;
    int epsilon = 0;
    bool satisfied = true;
    WitnessRule rule = WitnessRule::deleted;

    friend bool operator==(const DeficiencyWitness&, const DeficiencyWitness&) = default;
};

struct OracleVerdict {
    bool holds = true;
    std::optional<DeficiencyWitness> witness;  // first violation when !holds
};

/// Thrown when an exponential oracle is asked to run above its order limit.
class SizeGuardError : public std::runtime_error {
public:
    SizeGuardError(const std::string& oracle, int n, int limit);
};

inline constexpr int kSubsetGuard = 24;
inline constexpr int kLovaszGuard = 12;

struct OracleOptions {
    int max_n = kSubsetGuard;  // never above 63
};

/// ε(S,T): 2 if G[T] has an edge, 1 if T is independent with an edge to
/// V - (S ∪ T), else 0.
int epsilon(const Graph& g, const VertexSet& s, const VertexSet& t);

/// θ_G(S,T) = b|S| + d_{G-S}(T) - a|T|.
long theta(const Graph& g, const VertexSet& s, const VertexSet& t, int a, int b);

/// T derived from S under the given rule.
VertexSet derived_t(const Graph& g, const VertexSet& s, const FactorBounds& bounds, WitnessRule rule);

/// Recomputes theta, epsilon and satisfied from (G, S, T) alone.
DeficiencyWitness evaluate_witness(const Graph& g, const VertexSet& s, const VertexSet& t,
                                   const FactorBounds& bounds, WitnessRule rule);

// Subset-enumeration deciders. S runs over all subsets ordered by (|S|,
// lexicographic); the reported witness is the first violation in that order.
// The default versions split each |S| layer across OpenMP threads.

OracleVerdict has_fractional_gf_factor(const Graph& g, const FactorBounds& bounds, OracleOptions opts = {});
OracleVerdict is_fractional_ab_deleted(const Graph& g, int a, int b, OracleOptions opts = {});
/// Definitional check: every G - e has a fractional [a,b]-factor.
bool is_fractional_ab_deleted_by_edges(const Graph& g, int a, int b, OracleOptions opts = {});

namespace reference {

/// Single-threaded versions of the deciders above, kept as the baseline the
/// parallel kernels are tested and benchmarked against.
OracleVerdict has_fractional_gf_factor(const Graph& g, const FactorBounds& bounds, OracleOptions opts = {});
OracleVerdict is_fractional_ab_deleted(const Graph& g, int a, int b, OracleOptions opts = {});

}  // namespace reference

/// Edge weights h in {0, 1/2, 1}, stored as numerators over 2.
struct FractionalAssignment {
    struct Entry {
        Vertex u;
        Vertex v;
        int halves;  // h(uv) = halves / 2
    };
    std::vector<Entry> weights;

    /// Sum of numerators over edges incident to each vertex.
    [[nodiscard]] std::vector<int> vertex_halves(int n) const;
};

/// Checks the degree constraints exactly: 2g(v) <= sum of halves <= 2f(v),
/// every weight in {0,1,2} and every weighted pair an edge of g.
bool is_valid_assignment(const Graph& g, const FactorBounds& bounds, const FractionalAssignment& h);

/// Half-integral fractional (g,f)-factor via feasible flow with lower bounds
/// on the bipartite double cover. Empty iff none exists. No size guard.
std::optional<FractionalAssignment> find_fractional_factor(const Graph& g, const FactorBounds& bounds);

/// Per-edge deleted check certified by find_fractional_factor.
bool is_fractional_ab_deleted_by_flow(const Graph& g, int a, int b);

/// Integer (g,f)-factor existence by the Lovász criterion over all disjoint
/// (S,T); 3^n cases, guarded at n <= max_n (default 12).
bool has_gf_factor_lovasz(const Graph& g, const FactorBounds& bounds, int max_n = kLovaszGuard);

/// Number of components C of G - (S ∪ T) with g ≡ f on C and f(C) + e_G(C,T) odd.
int lovasz_odd_components(const Graph& g, const VertexSet& s, const VertexSet& t, const FactorBounds& bounds);

}  // namespace fracfactor
