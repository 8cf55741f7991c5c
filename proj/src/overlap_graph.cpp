#include "sspr/overlap_graph.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <thread>
#include <unordered_set>

#include "sspr/core_strings.hpp"
#include "sspr/errors.hpp"

namespace sspr {

PrefixGraph::PrefixGraph(int order, int read_length, std::vector<std::uint32_t> labels,
                         std::vector<int> read_periods)
    : n_(order),
      m_(read_length),
      w_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), kForbidden),
      labels_(std::move(labels)),
      periods_(std::move(read_periods)) {}

namespace {

void check_input(const ReadSet& rs, const GraphOptions& options) {
    if (rs.size() < 2)
        throw InputError("prefix graph needs at least two reads (no length->=2 cycle cover exists)");
    if (rs.size() > options.max_vertices)
        throw CapacityError("prefix graph would have " + std::to_string(rs.size()) +
                            " vertices, above the configured cap of " +
                            std::to_string(options.max_vertices) +
                            " (dense n^2 matrix); raise the cap explicitly to proceed");
    std::unordered_set<std::string_view> seen;
    seen.reserve(rs.size() * 2);
    for (const auto& r : rs.reads())
        if (!seen.insert(r).second)
            throw InputError("duplicate read '" + r + "': the prefix graph expects a deduplicated set");
}

std::vector<int> periods_of(const ReadSet& rs) {
    std::vector<int> periods(rs.size());
    std::vector<int> scratch;
    for (std::size_t i = 0; i < rs.size(); ++i)
        periods[i] = detail::smallest_period_scratch(rs[i], scratch);
    return periods;
}

std::vector<std::uint32_t> identity_labels(std::size_t n) {
    std::vector<std::uint32_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<std::uint32_t>(i);
    return labels;
}

int resolve_threads(int requested, std::size_t rows) {
    unsigned hw = std::thread::hardware_concurrency();
    int t = requested > 0 ? requested : static_cast<int>(hw ? hw : 1);
    return std::max(1, std::min<int>(t, static_cast<int>(rows)));
}

// ---------------------------------------------------------------------------
// Keyword trie with suffix (failure) links over the whole read set, used for
// the all-pairs suffix-prefix computation. Nodes are stored flat; children
// are indexed by a dense symbol code so lookups are a single array access.

struct KeywordTrie {
    int sigma = 0;
    std::array<std::int16_t, 256> code{};
    std::vector<std::int32_t> next;  // nodes * sigma, -1 = absent
    std::vector<std::int32_t> fail;
    std::vector<std::int32_t> depth;
    std::vector<std::int32_t> leaf_read; // -1, or the read ending at this node
    int nodes = 1;

    explicit KeywordTrie(const ReadSet& rs) {
        code.fill(-1);
        for (const auto& r : rs.reads())
            for (unsigned char c : r)
                if (code[c] < 0) code[c] = 0;
        for (int c = 0; c < 256; ++c)
            if (code[static_cast<std::size_t>(c)] == 0) code[static_cast<std::size_t>(c)] = static_cast<std::int16_t>(sigma++);
            else code[static_cast<std::size_t>(c)] = -1;

        const std::size_t cap = rs.size() * rs[0].size() + 1;
        next.assign(cap * static_cast<std::size_t>(sigma), -1);
        fail.assign(cap, 0);
        depth.assign(cap, 0);
        leaf_read.assign(cap, -1);

        for (std::size_t i = 0; i < rs.size(); ++i) {
            int at = 0;
            for (unsigned char ch : rs[i]) {
                const int c = code[ch];
                std::int32_t& slot = next[static_cast<std::size_t>(at) * sigma + c];
                if (slot < 0) {
                    slot = nodes;
                    depth[static_cast<std::size_t>(nodes)] = depth[static_cast<std::size_t>(at)] + 1;
                    ++nodes;
                }
                at = slot;
            }
            leaf_read[static_cast<std::size_t>(at)] = static_cast<std::int32_t>(i);
        }

        // BFS suffix links.
        std::vector<std::int32_t> queue;
        queue.reserve(static_cast<std::size_t>(nodes));
        for (int c = 0; c < sigma; ++c) {
            std::int32_t v = next[static_cast<std::size_t>(c)];
            if (v >= 0) {
                fail[static_cast<std::size_t>(v)] = 0;
                queue.push_back(v);
            }
        }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::int32_t u = queue[head];
            for (int c = 0; c < sigma; ++c) {
                const std::int32_t v = next[static_cast<std::size_t>(u) * sigma + c];
                if (v < 0) continue;
                std::int32_t f = fail[static_cast<std::size_t>(u)];
                while (f != 0 && next[static_cast<std::size_t>(f) * sigma + c] < 0)
                    f = fail[static_cast<std::size_t>(f)];
                const std::int32_t g = next[static_cast<std::size_t>(f) * sigma + c];
                fail[static_cast<std::size_t>(v)] = (g >= 0 && g != v) ? g : 0;
                queue.push_back(v);
            }
        }
    }
};

} // namespace

PrefixGraph build_naive(const ReadSet& rs, const GraphOptions& options) {
    check_input(rs, options);
    const int n = static_cast<int>(rs.size());
    const int m = rs.length();
    PrefixGraph g(n, m, identity_labels(rs.size()), periods_of(rs));

    // Precompute each target's failure function once; each (u, v) pair is
    // then a single automaton scan.
    std::vector<std::vector<int>> failures(rs.size());
    for (std::size_t j = 0; j < rs.size(); ++j) failures[j] = border_array(rs[j]);

    const int t = resolve_threads(options.threads, rs.size());
    auto work = [&](int worker) {
        const int lo = n * worker / t;
        const int hi = n * (worker + 1) / t;
        for (int i = lo; i < hi; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const int ov = detail::overlap_with_failure(
                    rs[static_cast<std::size_t>(i)], rs[static_cast<std::size_t>(j)],
                    failures[static_cast<std::size_t>(j)]);
                g.set_weight(i, j, m - ov);
            }
    };
    if (t == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < t; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    return g;
}

PrefixGraph build_indexed(const ReadSet& rs, const GraphOptions& options) {
    check_input(rs, options);
    const int n = static_cast<int>(rs.size());
    const int m = rs.length();
    PrefixGraph g(n, m, identity_labels(rs.size()), periods_of(rs));

    KeywordTrie trie(rs);

    // Walk each read's suffix-link chain from its leaf: the visited nodes are
    // exactly the trie prefixes that are proper suffixes of that read.
    std::vector<std::vector<std::int32_t>> marks(static_cast<std::size_t>(trie.nodes));
    std::vector<std::int32_t> leaf_of(rs.size(), -1);
    for (std::int32_t node = 0; node < trie.nodes; ++node) {
        const std::int32_t r = trie.leaf_read[static_cast<std::size_t>(node)];
        if (r >= 0) leaf_of[static_cast<std::size_t>(r)] = node;
    }
    for (std::size_t i = 0; i < rs.size(); ++i) {
        std::int32_t v = trie.fail[static_cast<std::size_t>(leaf_of[i])];
        while (v != 0) {
            marks[static_cast<std::size_t>(v)].push_back(static_cast<std::int32_t>(i));
            v = trie.fail[static_cast<std::size_t>(v)];
        }
    }

    // DFS down the trie keeping, per read, the deepest active mark. At a leaf
    // for read j, that value is exactly ov(s_i, s_j) for every i.
    std::vector<std::vector<std::int32_t>> depth_stack(rs.size());
    std::vector<std::int32_t> top(rs.size(), 0);

    struct Frame {
        std::int32_t node;
        int child = 0;
    };
    std::vector<Frame> stack;
    stack.push_back(Frame{0, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.child == 0) { // on first entry
            for (std::int32_t i : marks[static_cast<std::size_t>(f.node)]) {
                depth_stack[static_cast<std::size_t>(i)].push_back(
                    trie.depth[static_cast<std::size_t>(f.node)]);
                top[static_cast<std::size_t>(i)] = trie.depth[static_cast<std::size_t>(f.node)];
            }
            const std::int32_t j = trie.leaf_read[static_cast<std::size_t>(f.node)];
            if (j >= 0) {
                for (int i = 0; i < n; ++i)
                    if (i != j) g.set_weight(i, j, m - top[static_cast<std::size_t>(i)]);
            }
        }
        if (f.child < trie.sigma) {
            const std::int32_t v =
                trie.next[static_cast<std::size_t>(f.node) * trie.sigma + f.child];
            ++f.child;
            if (v >= 0) stack.push_back(Frame{v, 0});
            continue;
        }
        for (std::int32_t i : marks[static_cast<std::size_t>(f.node)]) {
            auto& st = depth_stack[static_cast<std::size_t>(i)];
            st.pop_back();
            top[static_cast<std::size_t>(i)] = st.empty() ? 0 : st.back();
        }
        stack.pop_back();
    }
    return g;
}

PrefixGraph build_prefix_graph(const ReadSet& rs, const GraphOptions& options) {
    if (rs.size() >= options.indexed_threshold) return build_indexed(rs, options);
    return build_naive(rs, options);
}

void dump_graph_tsv(const PrefixGraph& g, std::ostream& out) {
    out << "vertex";
    for (int j = 0; j < g.order(); ++j) out << '\t' << g.labels()[static_cast<std::size_t>(j)];
    out << '\n';
    for (int i = 0; i < g.order(); ++i) {
        out << g.labels()[static_cast<std::size_t>(i)];
        for (int j = 0; j < g.order(); ++j) {
            out << '\t';
            if (i == j)
                out << '-';
            else
                out << g.weight(i, j);
        }
        out << '\n';
    }
}

} // namespace sspr
