#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sspr/overlap_graph.hpp"

namespace sspr {
namespace oracle {

/// Exact shortest-superstring result with an optimal witness.
struct SspResult {
    std::uint64_t length = 0;
    std::string witness;
};

/// Minimum-weight fixed-point-free cover found by exhaustive enumeration.
struct BruteCoverResult {
    std::int64_t weight = 0;
    std::vector<std::vector<int>> cycles;
};

/// Exact optimal superstring via dynamic programming over (subset, last)
/// states. Strings contained in another string are removed first. Throws
/// CapacityError when more than `limit` strings remain (exponential state).
SspResult exact_ssp(std::vector<std::string> strings, std::size_t limit = 12);

/// Definition-level period scan: first p such that s[i] == s[i+p] everywhere.
int naive_period(std::string_view s);

/// Definition-level overlap scan over all candidate lengths.
int naive_overlap(std::string_view u, std::string_view v);

/// Minimum over all fixed-point-free permutations, enumerated exhaustively.
/// Throws CapacityError when g.order() exceeds `limit`.
BruteCoverResult brute_cycle_cover(const PrefixGraph& g, std::size_t limit = 8);

} // namespace oracle
} // namespace sspr
