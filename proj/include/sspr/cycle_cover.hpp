#pragma once

#include <cstdint>
#include <vector>

#include "sspr/overlap_graph.hpp"

namespace sspr {

/// Vertex-disjoint directed cycles covering the graph, every cycle with at
/// least two vertices. The period of a cycle is its total edge weight.
struct CycleCover {
    std::vector<std::vector<int>> cycles;   // each cycle starts at its smallest vertex
    std::vector<std::int64_t> cycle_weights; // aligned with cycles
    std::int64_t total_weight = 0;           // wt(C)
};

/// Cycle indices split at the small/large boundary m*alpha.
struct CycleClassification {
    std::vector<int> small;
    std::vector<int> large;
};

/// Minimum-weight cycle cover with the diagonal forbidden, solved as a
/// min-cost perfect assignment (Hungarian algorithm, O(n^3)). Deterministic:
/// fixed scan order, integer arithmetic. Refuses graphs larger than
/// `max_vertices` (cubic time); use greedy_cover beyond that.
CycleCover exact_cover(const PrefixGraph& g, std::size_t max_vertices = 1024);

/// Greedy cover: commits the largest-overlap edge whose endpoints still have
/// free out/in slots, scanning edges once in (overlap desc, source, target)
/// order. A cycle closes when its closing edge is the best available
/// commitment; at most one open path or one stranded vertex can remain and is
/// folded in afterwards. Weight >= exact_cover's weight.
CycleCover greedy_cover(const PrefixGraph& g);

/// Small iff cycle period <= m*alpha (inclusive boundary, same comparison
/// rule as the period statistics).
CycleClassification classify(const CycleCover& cover, int m, double alpha);

/// Structural and period invariants:
///  - cycles partition the vertices, each with >= 2 of them;
///  - recomputed cycle weights match;
///  - every cycle's period >= the max smallest-period of its reads;
///  - for every i in [1, m], 2 * |{cycles with period <= i}| <= sum of n(k), k <= i.
/// Throws std::logic_error on violation.
void validate_cover(const CycleCover& cover, const PrefixGraph& g);

} // namespace sspr
