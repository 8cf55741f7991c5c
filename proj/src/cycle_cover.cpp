#include "sspr/cycle_cover.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "sspr/errors.hpp"

namespace sspr {

namespace {

// Min-cost perfect assignment, O(n^3) with potentials.
// https://e-maxx.ru/algo/assignment_hungary
std::vector<int> hungarian(const std::vector<std::vector<std::int64_t>>& cost) {
    const int n = static_cast<int>(cost.size());
    const std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> u(static_cast<std::size_t>(n) + 1, 0), v(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> p(static_cast<std::size_t>(n) + 1, 0), way(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<std::int64_t> minv(static_cast<std::size_t>(n) + 1, kInf);
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        do {
            used[static_cast<std::size_t>(j0)] = 1;
            const int i0 = p[static_cast<std::size_t>(j0)];
            int j1 = -1;
            std::int64_t delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) continue;
                const std::int64_t cur =
                    cost[static_cast<std::size_t>(i0) - 1][static_cast<std::size_t>(j) - 1] -
                    u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
                if (cur < minv[static_cast<std::size_t>(j)]) {
                    minv[static_cast<std::size_t>(j)] = cur;
                    way[static_cast<std::size_t>(j)] = j0;
                }
                if (minv[static_cast<std::size_t>(j)] < delta) {
                    delta = minv[static_cast<std::size_t>(j)];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) {
                    u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
                    v[static_cast<std::size_t>(j)] -= delta;
                } else {
                    minv[static_cast<std::size_t>(j)] -= delta;
                }
            }
            j0 = j1;
        } while (p[static_cast<std::size_t>(j0)] != 0);
        do {
            const int j1 = way[static_cast<std::size_t>(j0)];
            p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> assign(static_cast<std::size_t>(n), -1);
    for (int j = 1; j <= n; ++j)
        if (p[static_cast<std::size_t>(j)] > 0) assign[static_cast<std::size_t>(p[static_cast<std::size_t>(j)]) - 1] = j - 1;
    return assign;
}

// Decompose a fixed-point-free permutation into cycles, each rotated to start
// at its smallest vertex, cycles ordered by that vertex.
CycleCover cover_from_successors(const std::vector<int>& succ, const PrefixGraph& g) {
    const int n = static_cast<int>(succ.size());
    CycleCover cover;
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    for (int start = 0; start < n; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cycle;
        std::int64_t weight = 0;
        int at = start;
        do {
            visited[static_cast<std::size_t>(at)] = 1;
            cycle.push_back(at);
            weight += g.weight(at, succ[static_cast<std::size_t>(at)]);
            at = succ[static_cast<std::size_t>(at)];
        } while (at != start);
        cover.cycles.push_back(std::move(cycle));
        cover.cycle_weights.push_back(weight);
        cover.total_weight += weight;
    }
    return cover;
}

} // namespace

CycleCover exact_cover(const PrefixGraph& g, std::size_t max_vertices) {
    const int n = g.order();
    if (n < 2) throw InputError("cycle cover needs at least two vertices");
    if (static_cast<std::size_t>(n) > max_vertices)
        throw CapacityError("exact cycle cover capped at " + std::to_string(max_vertices) +
                            " vertices (cubic assignment); use the greedy backend");

    // Forbidden diagonal: a cost exceeding any real assignment total, so a
    // fixed-point-free permutation (which always exists for n >= 2) wins.
    const std::int64_t big =
        static_cast<std::int64_t>(g.read_length()) * static_cast<std::int64_t>(n) + 1;
    std::vector<std::vector<std::int64_t>> cost(
        static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), big));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g.weight(i, j);

    const std::vector<int> assign = hungarian(cost);
    CycleCover cover = cover_from_successors(assign, g);
    validate_cover(cover, g);
    return cover;
}

CycleCover greedy_cover(const PrefixGraph& g) {
    const int n = g.order();
    if (n < 2) throw InputError("cycle cover needs at least two vertices");

    struct Edge {
        std::int32_t w;
        int i, j;
    };
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) edges.push_back(Edge{g.weight(i, j), i, j});
    // Smallest prefix weight == largest overlap; ties by (source, target).
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.w != b.w) return a.w < b.w;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });

    std::vector<int> succ(static_cast<std::size_t>(n), -1);
    std::vector<char> out_used(static_cast<std::size_t>(n), 0), in_used(static_cast<std::size_t>(n), 0);
    // For an open path, head[tail] and tail[head] are maintained at endpoints.
    std::vector<int> head(static_cast<std::size_t>(n)), tail(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) head[static_cast<std::size_t>(i)] = tail[static_cast<std::size_t>(i)] = i;

    for (const Edge& e : edges) {
        if (out_used[static_cast<std::size_t>(e.i)] || in_used[static_cast<std::size_t>(e.j)]) continue;
        succ[static_cast<std::size_t>(e.i)] = e.j;
        out_used[static_cast<std::size_t>(e.i)] = 1;
        in_used[static_cast<std::size_t>(e.j)] = 1;
        if (head[static_cast<std::size_t>(e.i)] != e.j) {
            // Path merge: i's path gains j's path.
            const int h = head[static_cast<std::size_t>(e.i)];
            const int t = tail[static_cast<std::size_t>(e.j)];
            head[static_cast<std::size_t>(t)] = h;
            tail[static_cast<std::size_t>(h)] = t;
        }
        // Otherwise the edge closes i's path into a cycle.
    }

    // At most one vertex can be left with a free out slot: either the tail of
    // the single remaining open path, or a fully stranded vertex.
    int open_tail = -1;
    for (int i = 0; i < n; ++i)
        if (!out_used[static_cast<std::size_t>(i)]) open_tail = i;
    if (open_tail >= 0) {
        const int h = head[static_cast<std::size_t>(open_tail)];
        if (h != open_tail) {
            succ[static_cast<std::size_t>(open_tail)] = h; // close the last open path
        } else {
            // Stranded vertex: splice into an existing cycle at minimum extra
            // weight; ties prefer the smallest insertion source.
            int best_a = -1;
            std::int64_t best_delta = 0;
            for (int a = 0; a < n; ++a) {
                if (a == open_tail) continue;
                const int b = succ[static_cast<std::size_t>(a)];
                const std::int64_t delta = static_cast<std::int64_t>(g.weight(a, open_tail)) +
                                           g.weight(open_tail, b) - g.weight(a, b);
                if (best_a < 0 || delta < best_delta) {
                    best_a = a;
                    best_delta = delta;
                }
            }
            const int b = succ[static_cast<std::size_t>(best_a)];
            succ[static_cast<std::size_t>(best_a)] = open_tail;
            succ[static_cast<std::size_t>(open_tail)] = b;
        }
    }

    CycleCover cover = cover_from_successors(succ, g);
    validate_cover(cover, g);
    return cover;
}

CycleClassification classify(const CycleCover& cover, int m, double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0) throw std::invalid_argument("alpha must be in (0, 1]");
    CycleClassification split;
    for (std::size_t k = 0; k < cover.cycles.size(); ++k) {
        const std::int64_t period = cover.cycle_weights[k];
        const bool small =
            period <= m && static_cast<double>(period) / static_cast<double>(m) <= alpha;
        (small ? split.small : split.large).push_back(static_cast<int>(k));
    }
    return split;
}

void validate_cover(const CycleCover& cover, const PrefixGraph& g) {
    const int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::int64_t total = 0;
    for (std::size_t k = 0; k < cover.cycles.size(); ++k) {
        const auto& cycle = cover.cycles[k];
        if (cycle.size() < 2) throw std::logic_error("cycle cover: singleton cycle");
        std::int64_t weight = 0;
        int max_read_period = 0;
        for (std::size_t p = 0; p < cycle.size(); ++p) {
            const int a = cycle[p];
            const int b = cycle[(p + 1) % cycle.size()];
            if (a < 0 || a >= n || seen[static_cast<std::size_t>(a)])
                throw std::logic_error("cycle cover: vertices do not partition the graph");
            seen[static_cast<std::size_t>(a)] = 1;
            weight += g.weight(a, b);
            max_read_period = std::max(max_read_period, g.read_periods()[static_cast<std::size_t>(a)]);
        }
        if (weight != cover.cycle_weights[k])
            throw std::logic_error("cycle cover: stored cycle weight does not match the graph");
        // A cycle's period dominates the period of every read on it.
        if (weight < max_read_period)
            throw std::logic_error("cycle cover: cycle period below a member read's period");
        total += weight;
    }
    for (int i = 0; i < n; ++i)
        if (!seen[static_cast<std::size_t>(i)])
            throw std::logic_error("cycle cover: uncovered vertex");
    if (total != cover.total_weight)
        throw std::logic_error("cycle cover: total weight mismatch");

    // Counting bound: cycles of period <= i consume at least two reads of
    // period <= i each.
    const int m = g.read_length();
    std::vector<std::uint64_t> reads_leq(static_cast<std::size_t>(m) + 1, 0);
    for (int p : g.read_periods())
        if (p <= m) ++reads_leq[static_cast<std::size_t>(p)];
    std::vector<std::uint64_t> cycles_leq(static_cast<std::size_t>(m) + 1, 0);
    for (std::int64_t w : cover.cycle_weights)
        if (w <= m) ++cycles_leq[static_cast<std::size_t>(w)];
    std::uint64_t cum_reads = 0, cum_cycles = 0;
    for (int i = 1; i <= m; ++i) {
        cum_reads += reads_leq[static_cast<std::size_t>(i)];
        cum_cycles += cycles_leq[static_cast<std::size_t>(i)];
        if (2 * cum_cycles > cum_reads)
            throw std::logic_error("cycle cover: more small cycles than half the small-period reads");
    }
}

} // namespace sspr
