#include <istream>
#include <map>

#include "fracfactor/theorem.hpp"

namespace fracfactor {

namespace {

struct Pending {
    ScanRecord record;
    std::optional<Graph> graph;
};

bool needs_extremal(TheoremId id) { return id != TheoremId::size; }

// Reads up to `batch` non-blank lines. Returns false at end of input.
bool read_batch(std::istream& in, std::size_t batch, std::size_t& line_no, std::vector<Pending>& out)
{
    out.clear();
    std::string line;
    while (out.size() < batch && std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty())
            continue;
        Pending p;
        p.record.line = line_no;
        p.record.graph6 = line;
        try {
            p.graph = parse_graph6(line);
        } catch (const std::exception& e) {
            p.record.error = e.what();
        }
        out.push_back(std::move(p));
    }
    if (in.bad())
        throw std::runtime_error("read failure after line " + std::to_string(line_no));
    return !out.empty();
}

void evaluate(Pending& p, const ScanOptions& opts, const std::map<int, ExtremalSpectrum>& cache)
{
    if (!p.graph)
        return;
    const auto start = std::chrono::steady_clock::now();
    try {
        std::optional<ExtremalSpectrum> ext;
        if (auto it = cache.find(p.graph->order()); it != cache.end())
            ext = it->second;
        p.record.report = eval_theorem(opts.theorem, *p.graph, opts.a, opts.b, opts.verifier, ext);
    } catch (const std::exception& e) {
        p.record.error = e.what();
    }
    p.record.elapsed = std::chrono::steady_clock::now() - start;
}

void tally(ScanSummary& s, const ScanRecord& r)
{
    ++s.lines;
    if (!r.report) {
        ++s.errors;
        return;
    }
    ++s.checked;
    s.applicable += r.report->applicable ? 1 : 0;
    s.hypothesis_met += r.report->hypothesis_met ? 1 : 0;
    s.oracle_skipped += r.report->oracle == OracleOutcome::skipped ? 1 : 0;
    s.counterexamples += r.report->counterexample() ? 1 : 0;
}

template <bool Parallel>
ScanSummary scan_impl(std::istream& in, const ScanOptions& opts, const std::function<void(const ScanRecord&)>& emit)
{
    if (opts.a < 1 || opts.a > opts.b)
        throw std::invalid_argument("scan needs 1 <= a <= b");
    ScanSummary summary;
    std::map<int, ExtremalSpectrum> cache;
    std::vector<Pending> batch;
    std::size_t line_no = 0;
    while (true) {
        try {
            if (!read_batch(in, std::max<std::size_t>(opts.batch, 1), line_no, batch))
                break;
        } catch (const std::runtime_error& e) {
            summary.io_error = e.what();
            break;
        }
        if (needs_extremal(opts.theorem))
            for (const Pending& p : batch)
                if (p.graph && p.graph->order() >= opts.a + 2 && !cache.contains(p.graph->order()))
                    cache.emplace(p.graph->order(), extremal_spectrum(p.graph->order(), opts.a, opts.verifier.tol));

        const auto count = static_cast<std::int64_t>(batch.size());
        if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
            for (std::int64_t i = 0; i < count; ++i)
                evaluate(batch[static_cast<std::size_t>(i)], opts, cache);
        } else {
            for (std::int64_t i = 0; i < count; ++i)
                evaluate(batch[static_cast<std::size_t>(i)], opts, cache);
        }
        for (const Pending& p : batch) {
            tally(summary, p.record);
            emit(p.record);
        }
    }
    return summary;
}

}  // namespace

ScanSummary scan(std::istream& in, const ScanOptions& opts, const std::function<void(const ScanRecord&)>& emit)
{
    return scan_impl<true>(in, opts, emit);
}

ScanSummary scan_serial(std::istream& in, const ScanOptions& opts, const std::function<void(const ScanRecord&)>& emit)
{
    return scan_impl<false>(in, opts, emit);
}

}  // namespace fracfactor
