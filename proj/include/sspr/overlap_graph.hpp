#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sspr/read_io.hpp"

namespace sspr {

struct GraphOptions {
    std::size_t max_vertices = 4096;   // dense n*n matrix; refuse anything larger
    std::size_t indexed_threshold = 64; // build() switches to the indexed backend at this size
    int threads = 0;                    // 0 = all logical cores (naive backend only)
};

/// Complete weighted digraph on the reads, edge (i,j) weighted by
/// |pref(s_i, s_j)| = m - overlap(s_i, s_j). The diagonal is forbidden.
class PrefixGraph {
public:
    static constexpr std::int32_t kForbidden = -1;

    PrefixGraph(int order, int read_length, std::vector<std::uint32_t> labels,
                std::vector<int> read_periods);

    int order() const { return n_; }
    int read_length() const { return m_; }
    std::int32_t weight(int i, int j) const { return w_[static_cast<std::size_t>(i) * n_ + j]; }
    void set_weight(int i, int j, std::int32_t w) { w_[static_cast<std::size_t>(i) * n_ + j] = w; }

    /// Original read index of each vertex.
    const std::vector<std::uint32_t>& labels() const { return labels_; }
    /// Smallest period of each vertex's read (used by cover invariant checks).
    const std::vector<int>& read_periods() const { return periods_; }

private:
    int n_;
    int m_;
    std::vector<std::int32_t> w_;
    std::vector<std::uint32_t> labels_;
    std::vector<int> periods_;
};

/// All n(n-1) weights via pairwise overlap calls, row-parallel. O(n^2 m).
PrefixGraph build_naive(const ReadSet& rs, const GraphOptions& options = {});

/// Same matrix through an all-pairs suffix-prefix pass over a shared keyword
/// trie of the reads (aggregate work near-linear in total text plus output).
PrefixGraph build_indexed(const ReadSet& rs, const GraphOptions& options = {});

/// Dispatches on size: naive below options.indexed_threshold, indexed above.
PrefixGraph build_prefix_graph(const ReadSet& rs, const GraphOptions& options = {});

/// Debug dump: vertex labels and the weight matrix, tab separated.
void dump_graph_tsv(const PrefixGraph& g, std::ostream& out);

} // namespace sspr
