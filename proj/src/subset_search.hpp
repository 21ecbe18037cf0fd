#pragma once

// Enumeration of vertex subsets in (|S|, lexicographic) order.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace fracfactor::detail {

/// C(n,k) for n <= 63; fits in 64 bits.
std::uint64_t binomial(int n, int k);

/// Bitmask of the rank-th k-subset of {0..n-1} in lexicographic order of
/// the ascending member lists.
std::uint64_t unrank_combination(int n, int k, std::uint64_t rank);

/// Advances an ascending k-subset of {0..n-1} to its lexicographic successor.
/// Returns false after the last one.
bool next_combination(std::vector<int>& members, int n);

inline std::uint64_t mask_of(const std::vector<int>& members)
{
    std::uint64_t m = 0;
    for (int v : members)
        m |= std::uint64_t{1} << v;
    return m;
}

inline std::vector<int> members_of(std::uint64_t mask)
{
    std::vector<int> out;
    for (int v = 0; mask != 0; ++v, mask >>= 1)
        if (mask & 1)
            out.push_back(v);
    return out;
}

/// First mask (in (|S|, lex) order) for which violates(mask) is true.
template <class Pred>
std::optional<std::uint64_t> first_violation_serial(int n, Pred&& violates)
{
    for (int k = 0; k <= n; ++k) {
        std::vector<int> members(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            members[static_cast<std::size_t>(i)] = i;
        do {
            const std::uint64_t s = mask_of(members);
            if (violates(s))
                return s;
        } while (next_combination(members, n));
    }
    return std::nullopt;
}

/// Same contract as first_violation_serial. Each layer is cut into blocks of
/// consecutive ranks; a block is unranked once, walked with next_combination
/// and abandoned as soon as a smaller violating rank is known.
template <class Pred>
std::optional<std::uint64_t> first_violation_parallel(int n, Pred&& violates)
{
    constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
    constexpr std::uint64_t block = 2048;
    for (int k = 0; k <= n; ++k) {
        const std::uint64_t count = binomial(n, k);
        const auto blocks = static_cast<std::int64_t>((count + block - 1) / block);
        std::atomic<std::uint64_t> best{none};
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t c = 0; c < blocks; ++c) {
            const std::uint64_t first = static_cast<std::uint64_t>(c) * block;
            const std::uint64_t last = std::min(count, first + block);
            if (first >= best.load(std::memory_order_relaxed))
                continue;
            std::vector<int> members = members_of(unrank_combination(n, k, first));
            for (std::uint64_t r = first; r < last; ++r) {
                if (violates(mask_of(members))) {
                    std::uint64_t seen = best.load(std::memory_order_relaxed);
                    while (r < seen && !best.compare_exchange_weak(seen, r, std::memory_order_relaxed)) {
                    }
                    break;
                }
                if ((r & 255) == 255 && r >= best.load(std::memory_order_relaxed))
                    break;
                next_combination(members, n);
            }
        }
        if (best.load() != none)
            return unrank_combination(n, k, best.load());
    }
    return std::nullopt;
}

}  // namespace fracfactor::detail
