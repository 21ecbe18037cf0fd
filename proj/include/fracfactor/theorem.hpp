#pragma once

#include <chrono>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fracfactor/factor_oracle.hpp"
#include "fracfactor/graph.hpp"
#include "fracfactor/spectral.hpp"

namespace fracfactor {

enum class TheoremId {
    spectral_radius,    // 1.4: ρ(G) > ρ(K_a ∨ (K_{n-a-1} ∪ K_1))
    signless_laplacian, // 1.6: q(G) > 2n-4+(a+1)/(n-1) and q(G) > q(extremal)
    size,               // 1.8: δ(G) >= a+1 and e(G) >= C(n-1,2) + (a+2)/2
};

/// "1.4", "1.6" or "1.8".
std::string to_string(TheoremId id);
TheoremId parse_theorem_id(const std::string& text);

enum class OracleOutcome { holds, fails, skipped };
std::string to_string(OracleOutcome outcome);

struct TheoremReport {
    TheoremId theorem = TheoremId::size;
    int n = 0;
    int a = 0;
    int b = 0;
    /// Named quantities in a fixed order per theorem.
    std::vector<std::pair<std::string, double>> hypothesis_values;
    bool hypothesis_met = false;
    bool applicable = false;
    OracleOutcome oracle = OracleOutcome::skipped;
    std::optional<DeficiencyWitness> witness;
    /// e(G) >= C(n-1,2) + (a+2)/2 and δ >= a+1; checked when a spectral
    /// hypothesis is met on an applicable instance, otherwise vacuously true.
    bool size_chain_ok = true;
    bool consistent = true;
    double margin = kStrictMargin;

    /// Looks up a hypothesis value by name; throws std::out_of_range.
    [[nodiscard]] double value(const std::string& name) const;
    /// A counterexample to the theorem or to its proof chain.
    [[nodiscard]] bool counterexample() const { return !consistent || !size_chain_ok; }
};

struct VerifierOptions {
    OracleOptions oracle{};
    double tol = kDefaultEigenTol;
    double margin = kStrictMargin;
};

/// b >= max{a,3} and n >= max{a+2,7}.
bool side_conditions(int n, int a, int b);

/// 2e(G) >= (n-1)(n-2) + a + 2, the size bound in exact integer form.
bool meets_size_bound(const Graph& g, int a);

/// Spectral radii of the extremal graph, memoised by (n, a) in the caller.
struct ExtremalSpectrum {
    double rho = 0.0;
    double q = 0.0;
};
ExtremalSpectrum extremal_spectrum(int n, int a, double tol = kDefaultEigenTol);

TheoremReport eval_theorem_1_8(const Graph& g, int a, int b, const VerifierOptions& opts = {});
TheoremReport eval_theorem_1_4(const Graph& g, int a, int b, const VerifierOptions& opts = {},
                               std::optional<ExtremalSpectrum> extremal = std::nullopt);
TheoremReport eval_theorem_1_6(const Graph& g, int a, int b, const VerifierOptions& opts = {},
                               std::optional<ExtremalSpectrum> extremal = std::nullopt);
TheoremReport eval_theorem(TheoremId id, const Graph& g, int a, int b, const VerifierOptions& opts = {},
                           std::optional<ExtremalSpectrum> extremal = std::nullopt);

class SharpnessViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SharpnessReport {
    int n = 0;
    int a = 0;
    int b = 0;
    std::string graph6;
    bool oracle_holds = true;
    DeficiencyWitness witness;  // S = ∅, T = {degree-a vertex}
    double rho = 0.0;
    double rho_extremal = 0.0;
    double q = 0.0;
    double q_extremal = 0.0;
    bool rho_hypothesis_met = false;
    bool q_hypothesis_met = false;
};

/// Replays the sharpness construction K_a ∨ (K_{n-a-1} ∪ K_1): the oracle
/// must reject it with witness (∅, {degree-a vertex}, θ=0, ε=1) and both
/// spectral hypotheses must fail at equality. Throws SharpnessViolation.
SharpnessReport verify_sharpness(int n, int a, int b, const VerifierOptions& opts = {});

/// All labeled graphs on n vertices whose complement has at most
/// max_missing edges, in increasing order of the complement's edge subset
/// (by size, then lexicographic over pair indices).
void for_each_dense_graph(int n, int max_missing, const std::function<void(const Graph&)>& visit);

// Scanning.

struct ScanRecord {
    std::size_t line = 0;
    std::string graph6;
    std::optional<TheoremReport> report;
    std::string error;  // non-empty for unparseable lines
    std::chrono::nanoseconds elapsed{0};
};

struct ScanSummary {
    std::size_t lines = 0;
    std::size_t checked = 0;
    std::size_t errors = 0;
    std::size_t applicable = 0;
    std::size_t hypothesis_met = 0;
    std::size_t oracle_skipped = 0;
    std::size_t counterexamples = 0;
    std::string io_error;  // set when reading stopped on a stream failure
};

struct ScanOptions {
    TheoremId theorem = TheoremId::size;
    int a = 1;
    int b = 3;
    VerifierOptions verifier{};
    std::size_t batch = 1024;
};

/// Reads graph6 lines (blank lines ignored), evaluates each on OpenMP
/// workers and hands records to `emit` in input order.
ScanSummary scan(std::istream& in, const ScanOptions& opts, const std::function<void(const ScanRecord&)>& emit);

/// Single-threaded scan with the same output, kept for testing.
ScanSummary scan_serial(std::istream& in, const ScanOptions& opts,
                        const std::function<void(const ScanRecord&)>& emit);

}  // namespace fracfactor
