#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sspr/cycle_cover.hpp"
#include "sspr/overlap_graph.hpp"
#include "sspr/period_stats.hpp"
#include "sspr/read_io.hpp"

namespace sspr {

enum class CoverBackend { exact, greedy };

struct AssembleOptions {
    std::optional<double> alpha;         // nullopt = auto (minimize beta); values > 1 clamp to 1
    double c = 0.5;                      // compression factor of the executed compression step
    CoverBackend backend = CoverBackend::exact;
    std::size_t max_exact = 1024;        // cap for the exact cover backend
    GraphOptions graph;
    int threads = 0;
};

struct AssemblyStats {
    std::uint64_t n = 0;
    int m = 0;
    double alpha = 0.0;
    double c = 0.0;
    std::int64_t wt_c = 0;
    std::uint64_t cycles_small = 0;
    std::uint64_t cycles_large = 0;
    std::uint64_t w_sigma_len = 0;
    std::uint64_t tau_len = 0;
    double sp_used = 0.0;     // sp at the alpha actually used
    double beta_bound = 0.0;  // 2 + c(1-alpha)/alpha + (c/2) sp m / n, with the executed c
    std::uint64_t contained_dropped = 0; // sigma strings removed by the containment filter
};

struct Assembly {
    std::vector<std::string> sigma_strings;
    std::uint64_t w_sigma_len = 0; // sum of |sigma_i| = wt(C) + (#cycles) * m
    std::string tau;
    AssemblyStats stats;
};

struct VerifyReport {
    bool pass = false;
    std::vector<std::uint32_t> missing; // indices of reads not found in tau
};

/// Representative of a cycle: the vertex with the smallest original index.
int representative(const std::vector<int>& cycle);

/// The cycle unrolled from the representative: the prefix strings around the
/// cycle, then the representative read. |sigma| = period(cycle) + m.
std::string build_sigma(const std::vector<int>& cycle, int rep, const ReadSet& rs);

/// Repeatedly merges the pair with maximum overlap until one string remains.
/// Inputs contained in another input are dropped first (count reported via
/// `contained_dropped`); merging a maximum pair keeps the set substring-free.
/// Ties prefer the lexicographically smallest (source, target) position pair.
std::string greedy_compress(std::vector<std::string> strings,
                            std::uint64_t* contained_dropped = nullptr);

/// Full pipeline on a deduplicated read set with n >= 2: histogram, alpha
/// selection, prefix graph, cycle cover, per-cycle sigma strings, greedy
/// compression into tau.
Assembly assemble(const ReadSet& deduped, const AssembleOptions& options = {});

/// Occurrence check of every read in tau (hashed length-m windows).
VerifyReport verify(std::string_view tau, const ReadSet& rs);

} // namespace sspr
