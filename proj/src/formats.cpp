#include "fracfactor/graph.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace fracfactor {

Graph6Error::Graph6Error(const std::string& what, std::size_t offset)
    : std::runtime_error("graph6: " + what + " at byte " + std::to_string(offset)), offset_(offset)
{
}

EdgeListError::EdgeListError(const std::string& what, std::size_t line)
    : std::runtime_error("edge list: " + what + " on line " + std::to_string(line)), line_(line)
{
}

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;
constexpr int kMaxShortOrder = 62;
constexpr int kMaxMediumOrder = 258047;

// Offsets in errors are relative to the start of the original line.
int sextet(std::string_view s, std::size_t at, std::size_t base)
{
    if (at >= s.size())
        throw Graph6Error("truncated input", base + at);
    const auto c = static_cast<unsigned char>(s[at]);
    if (c < 63 || c > 126)
        throw Graph6Error("byte " + std::to_string(static_cast<int>(c)) + " outside 63..126", base + at);
    return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line)
{
    std::size_t base = 0;
    if (line.starts_with(kHeader)) {
        base = kHeader.size();
        line.remove_prefix(kHeader.size());
    }
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);

    if (line.empty())
        throw Graph6Error("empty input", base);
    if (line.front() == ':')
        throw Graph6Error("sparse6 input is not supported", base);
    if (line.front() == '&')
        throw Graph6Error("digraph6 input is not supported", base);

    std::size_t pos = 0;
    int n = sextet(line, pos, base);
    if (n == 126 - kBias) {
        if (line.size() > 1 && static_cast<unsigned char>(line[1]) == 126)
            throw Graph6Error("orders above 258047 are not supported", base + 1);
        n = 0;
        for (int k = 0; k < 3; ++k)
            n = (n << 6) | sextet(line, 1 + static_cast<std::size_t>(k), base);
        pos = 4;
        if (n <= kMaxShortOrder)
            throw Graph6Error("non-canonical long size form", base);
    } else {
        pos = 1;
    }
    if (n < 1)
        throw Graph6Error("graph order must be at least 1", base);

    const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const std::size_t payload = (pairs + 5) / 6;
    if (line.size() != pos + payload)
        throw Graph6Error("expected " + std::to_string(pos + payload) + " bytes, found " +
                              std::to_string(line.size()),
                          base + std::min(line.size(), pos + payload));

    Graph g(n);
    std::size_t k = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u, ++k) {
            const int x = sextet(line, pos + k / 6, base);
            if ((x >> (5 - static_cast<int>(k % 6))) & 1)
                g.add_edge(u, v);
        }
    }
    if (pairs % 6 != 0) {
        const std::size_t last = pos + payload - 1;
        const int x = sextet(line, last, base);
        const int pad = 6 - static_cast<int>(pairs % 6);
        if ((x & ((1 << pad) - 1)) != 0)
            throw Graph6Error("padding bits set", base + last);
    }
    return g;
}

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= kMaxShortOrder) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= kMaxMediumOrder) {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        throw std::invalid_argument("graph6 output supports n <= 258047");
    }
    int acc = 0;
    int filled = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph parse_edge_list(std::string_view text)
{
    struct Token {
        std::string_view text;
        std::size_t line;
    };
    std::vector<Token> tokens;
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
        } else {
            std::size_t j = i;
            while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r' && text[j] != '\n')
                ++j;
            tokens.push_back({text.substr(i, j - i), line});
            i = j;
        }
    }

    auto to_int = [](const Token& t) {
        long value = 0;
        auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{} || end != t.text.data() + t.text.size())
            throw EdgeListError("'" + std::string(t.text) + "' is not an integer", t.line);
        return value;
    };

    if (tokens.empty())
        throw EdgeListError("missing vertex count", 1);
    const long n = to_int(tokens[0]);
    if (n < 1 || n > 1'000'000)
        throw EdgeListError("vertex count " + std::to_string(n) + " out of range", tokens[0].line);
    if ((tokens.size() - 1) % 2 != 0)
        throw EdgeListError("dangling endpoint", tokens.back().line);

    Graph g(static_cast<int>(n));
    for (std::size_t k = 1; k + 1 < tokens.size(); k += 2) {
        const long u = to_int(tokens[k]);
        const long v = to_int(tokens[k + 1]);
        for (long x : {u, v})
            if (x < 0 || x >= n)
                throw EdgeListError("vertex " + std::to_string(x) + " outside 0.." + std::to_string(n - 1),
                                    tokens[k].line);
        if (u == v)
            throw EdgeListError("self-loop at vertex " + std::to_string(u), tokens[k].line);
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return g;
}

}  // namespace fracfactor
