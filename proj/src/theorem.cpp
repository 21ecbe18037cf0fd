#include "fracfactor/theorem.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "subset_search.hpp"

namespace fracfactor {

std::string to_string(TheoremId id)
{
    switch (id) {
    case TheoremId::spectral_radius:
        return "1.4";
    case TheoremId::signless_laplacian:
        return "1.6";
    case TheoremId::size:
        return "1.8";
    }
    return "?";
}

TheoremId parse_theorem_id(const std::string& text)
{
    if (text == "1.4")
        return TheoremId::spectral_radius;
    if (text == "1.6")
        return TheoremId::signless_laplacian;
    if (text == "1.8")
        return TheoremId::size;
    throw std::invalid_argument("unknown theorem '" + text + "' (expected 1.4, 1.6 or 1.8)");
}

std::string to_string(OracleOutcome outcome)
{
    switch (outcome) {
    case OracleOutcome::holds:
        return "true";
    case OracleOutcome::fails:
        return "false";
    case OracleOutcome::skipped:
        return "skipped(size-guard)";
    }
    return "?";
}

double TheoremReport::value(const std::string& name) const
{
    for (const auto& [key, v] : hypothesis_values)
        if (key == name)
            return v;
    throw std::out_of_range("report has no value '" + name + "'");
}

bool side_conditions(int n, int a, int b) { return b >= std::max(a, 3) && n >= std::max(a + 2, 7); }

bool meets_size_bound(const Graph& g, int a)
{
    const long n = g.order();
    return 2L * g.size() >= (n - 1) * (n - 2) + a + 2;
}

ExtremalSpectrum extremal_spectrum(int n, int a, double tol)
{
    const SpectralSummary s = spectral_summary(extremal(n, a), tol);
    return {s.rho, s.q};
}

namespace {

void check_params(int a, int b)
{
    if (a < 1 || a > b)
        throw std::invalid_argument("theorem parameters need 1 <= a <= b (a=" + std::to_string(a) +
                                    ", b=" + std::to_string(b) + ")");
}

TheoremReport start_report(TheoremId id, const Graph& g, int a, int b, const VerifierOptions& opts)
{
    check_params(a, b);
    TheoremReport r;
    r.theorem = id;
    r.n = g.order();
    r.a = a;
    r.b = b;
    r.margin = opts.margin;
    r.applicable = side_conditions(r.n, a, b);
    return r;
}

// Oracle run, consistency and the size chain. Every instance within the
// guard is decided, whether or not the hypothesis holds.
void finish_report(TheoremReport& r, const Graph& g, const VerifierOptions& opts, bool check_chain)
{
    if (g.order() >= 1 && g.order() <= std::min(opts.oracle.max_n, 63)) {
        OracleVerdict v = is_fractional_ab_deleted(g, r.a, r.b, opts.oracle);
        r.oracle = v.holds ? OracleOutcome::holds : OracleOutcome::fails;
        r.witness = std::move(v.witness);
    } else {
        r.oracle = OracleOutcome::skipped;
    }
    r.consistent = !(r.hypothesis_met && r.applicable && r.oracle == OracleOutcome::fails);
    if (check_chain && r.hypothesis_met && r.applicable)
        r.size_chain_ok = meets_size_bound(g, r.a) && g.min_degree() >= r.a + 1;
}

double size_threshold(int n, int a) { return (n - 1.0) * (n - 2.0) / 2.0 + (a + 2.0) / 2.0; }

}  // namespace

TheoremReport eval_theorem_1_8(const Graph& g, int a, int b, const VerifierOptions& opts)
{
    TheoremReport r = start_report(TheoremId::size, g, a, b, opts);
    r.hypothesis_values = {{"e", g.size()}, {"delta", g.min_degree()}, {"size_threshold", size_threshold(r.n, a)}};
    r.hypothesis_met = g.min_degree() >= a + 1 && meets_size_bound(g, a);
    finish_report(r, g, opts, false);
    return r;
}

TheoremReport eval_theorem_1_4(const Graph& g, int a, int b, const VerifierOptions& opts,
                               std::optional<ExtremalSpectrum> extremal_values)
{
    TheoremReport r = start_report(TheoremId::spectral_radius, g, a, b, opts);
    const EigenPair rho = eigen_max_symmetric(adjacency_matrix(g), opts.tol);
    r.hypothesis_values = {{"rho", rho.value}, {"rho_residual", rho.residual}};
    if (r.n >= a + 2) {
        if (!extremal_values)
            extremal_values = extremal_spectrum(r.n, a, opts.tol);
        r.hypothesis_values.emplace_back("rho_extremal", extremal_values->rho);
        r.hypothesis_met = strictly_greater(rho.value, extremal_values->rho, opts.margin);
    }
    r.hypothesis_values.emplace_back("e", g.size());
    r.hypothesis_values.emplace_back("delta", g.min_degree());
    finish_report(r, g, opts, true);
    return r;
}

TheoremReport eval_theorem_1_6(const Graph& g, int a, int b, const VerifierOptions& opts,
                               std::optional<ExtremalSpectrum> extremal_values)
{
    TheoremReport r = start_report(TheoremId::signless_laplacian, g, a, b, opts);
    r.applicable = r.applicable && is_connected(g);
    const EigenPair q = eigen_max_symmetric(signless_laplacian(g), opts.tol);
    r.hypothesis_values = {{"q", q.value}, {"q_residual", q.residual}};
    if (r.n >= 2) {
        const double threshold = 2.0 * r.n - 4.0 + (a + 1.0) / (r.n - 1.0);
        r.hypothesis_values.emplace_back("q_threshold", threshold);
        r.hypothesis_met = strictly_greater(q.value, threshold, opts.margin);
    }
    if (r.n >= a + 2) {
        if (!extremal_values)
            extremal_values = extremal_spectrum(r.n, a, opts.tol);
        r.hypothesis_values.emplace_back("q_extremal", extremal_values->q);
        r.hypothesis_met = r.hypothesis_met && strictly_greater(q.value, extremal_values->q, opts.margin);
    } else {
        r.hypothesis_met = false;
    }
    r.hypothesis_values.emplace_back("e", g.size());
    r.hypothesis_values.emplace_back("delta", g.min_degree());
    finish_report(r, g, opts, true);
    return r;
}

TheoremReport eval_theorem(TheoremId id, const Graph& g, int a, int b, const VerifierOptions& opts,
                           std::optional<ExtremalSpectrum> extremal_values)
{
    switch (id) {
    case TheoremId::spectral_radius:
        return eval_theorem_1_4(g, a, b, opts, extremal_values);
    case TheoremId::signless_laplacian:
        return eval_theorem_1_6(g, a, b, opts, extremal_values);
    case TheoremId::size:
        break;
    }
    return eval_theorem_1_8(g, a, b, opts);
}

SharpnessReport verify_sharpness(int n, int a, int b, const VerifierOptions& opts)
{
    check_params(a, b);
    if (n < std::max(a + 2, 7))
        throw std::invalid_argument("sharpness replay needs n >= max{a+2, 7}");

    auto fail = [&](const std::string& what) {
        return SharpnessViolation("sharpness (n=" + std::to_string(n) + ", a=" + std::to_string(a) +
                                  ", b=" + std::to_string(b) + "): " + what);
    };

    SharpnessReport r;
    r.n = n;
    r.a = a;
    r.b = b;
    const Graph g = extremal(n, a);
    r.graph6 = to_graph6(g);

    std::vector<Vertex> low;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == a)
            low.push_back(v);
    if (low.size() != 1)
        throw fail("expected exactly one vertex of degree a, found " + std::to_string(low.size()));

    const FactorBounds bounds = FactorBounds::constant(a, b);
    r.witness = evaluate_witness(g, VertexSet{}, VertexSet{low.front()}, bounds, WitnessRule::deleted);
    if (r.witness.theta != 0 || r.witness.epsilon != 1)
        throw fail("witness (∅, {" + std::to_string(low.front()) + "}) has theta=" + std::to_string(r.witness.theta) +
                   ", epsilon=" + std::to_string(r.witness.epsilon));

    const OracleVerdict verdict = is_fractional_ab_deleted(g, a, b, opts.oracle);
    r.oracle_holds = verdict.holds;
    if (verdict.holds)
        throw fail("oracle accepts the extremal graph");
    if (!verdict.witness || *verdict.witness != r.witness)
        throw fail("oracle's first witness differs from (∅, {degree-a vertex})");

    // Compare against a relabeled copy so the equality is not just the same
    // floating-point computation run twice.
    std::vector<Vertex> reversed(static_cast<std::size_t>(n));
    std::iota(reversed.rbegin(), reversed.rend(), 0);
    const SpectralSummary mirror = spectral_summary(permute(g, reversed), opts.tol);
    const ExtremalSpectrum ext = extremal_spectrum(n, a, opts.tol);
    r.rho = mirror.rho;
    r.rho_extremal = ext.rho;
    r.q = mirror.q;
    r.q_extremal = ext.q;
    r.rho_hypothesis_met = strictly_greater(r.rho, r.rho_extremal, opts.margin);
    r.q_hypothesis_met = strictly_greater(r.q, r.q_extremal, opts.margin);
    if (std::abs(r.rho - r.rho_extremal) > opts.margin || r.rho_hypothesis_met)
        throw fail("rho hypothesis does not fail at equality");
    if (std::abs(r.q - r.q_extremal) > opts.margin || r.q_hypothesis_met)
        throw fail("q hypothesis does not fail at equality");
    return r;
}

void for_each_dense_graph(int n, int max_missing, const std::function<void(const Graph&)>& visit)
{
    if (n < 1)
        throw std::invalid_argument("dense enumeration needs n >= 1");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            pairs.emplace_back(u, v);
    const int total = static_cast<int>(pairs.size());
    const Graph full = complete(n);
    for (int k = 0; k <= std::min(max_missing, total); ++k) {
        std::vector<int> chosen(static_cast<std::size_t>(k));
        std::iota(chosen.begin(), chosen.end(), 0);
        do {
            Graph g = full;
            for (int i : chosen)
                g.remove_edge(pairs[static_cast<std::size_t>(i)].first, pairs[static_cast<std::size_t>(i)].second);
            visit(g);
        } while (detail::next_combination(chosen, total));
    }
}

}  // namespace fracfactor
