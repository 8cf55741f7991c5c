#include "sspr/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sspr/core_strings.hpp"
#include "sspr/errors.hpp"

namespace sspr {
namespace oracle {

namespace {

// Same containment rule as the compression step: contained strings are
// redundant for any superstring, and the DP recurrence needs them gone.
std::vector<std::string> filter_contained(std::vector<std::string> strings) {
    const std::size_t k = strings.size();
    std::vector<char> drop(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k && !drop[i]; ++j) {
            if (i == j) continue;
            if (strings[i].size() < strings[j].size()) {
                if (strings[j].find(strings[i]) != std::string::npos) drop[i] = 1;
            } else if (strings[i].size() == strings[j].size() && i > j &&
                       strings[i] == strings[j]) {
                drop[i] = 1;
            }
        }
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < k; ++i)
        if (!drop[i]) kept.push_back(std::move(strings[i]));
    return kept;
}

} // namespace

int naive_period(std::string_view s) {
    if (s.empty()) throw InputError("naive_period: empty sequence");
    const int n = static_cast<int>(s.size());
    for (int p = 1; p < n; ++p) {
        bool ok = true;
        for (int i = 0; i + p < n; ++i)
            if (s[static_cast<std::size_t>(i)] != s[static_cast<std::size_t>(i + p)]) {
                ok = false;
                break;
            }
        if (ok) return p;
    }
    return n;
}

int naive_overlap(std::string_view u, std::string_view v) {
    if (u.empty() || v.empty()) throw InputError("naive_overlap: empty sequence");
    const int max_k = static_cast<int>(std::min(u.size(), v.size()));
    for (int k = max_k; k >= 1; --k)
        if (u.substr(u.size() - static_cast<std::size_t>(k)) == v.substr(0, static_cast<std::size_t>(k)))
            return k;
    return 0;
}

SspResult exact_ssp(std::vector<std::string> strings, std::size_t limit) {
    if (strings.empty()) throw InputError("exact_ssp: empty input");
    for (const auto& s : strings)
        if (s.empty()) throw InputError("exact_ssp: empty string in input");

    std::vector<std::string> set = filter_contained(std::move(strings));
    const std::size_t k = set.size();
    if (k > limit)
        throw CapacityError("exact_ssp: " + std::to_string(k) +
                            " strings after containment filtering, above the limit of " +
                            std::to_string(limit));
    if (k == 1) return SspResult{set[0].size(), set[0]};

    std::vector<std::vector<int>> ov(k, std::vector<int>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j) ov[i][j] = naive_overlap(set[i], set[j]);

    // dp[mask][last]: maximum overlap sum over orderings of `mask` ending at
    // `last`. Minimizing length is maximizing total overlap.
    const std::size_t full = (static_cast<std::size_t>(1) << k) - 1;
    std::vector<std::vector<std::int64_t>> dp(full + 1, std::vector<std::int64_t>(k, -1));
    std::vector<std::vector<int>> parent(full + 1, std::vector<int>(k, -1));
    for (std::size_t i = 0; i < k; ++i) dp[static_cast<std::size_t>(1) << i][i] = 0;

    for (std::size_t mask = 1; mask <= full; ++mask)
        for (std::size_t last = 0; last < k; ++last) {
            const std::int64_t cur = dp[mask][last];
            if (cur < 0) continue;
            for (std::size_t next = 0; next < k; ++next) {
                if (mask & (static_cast<std::size_t>(1) << next)) continue;
                const std::size_t nm = mask | (static_cast<std::size_t>(1) << next);
                const std::int64_t cand = cur + ov[last][next];
                if (cand > dp[nm][next]) {
                    dp[nm][next] = cand;
                    parent[nm][next] = static_cast<int>(last);
                }
            }
        }

    std::size_t best_last = 0;
    for (std::size_t last = 1; last < k; ++last)
        if (dp[full][last] > dp[full][best_last]) best_last = last;

    // Recover the ordering, then merge along it.
    std::vector<std::size_t> order;
    std::size_t mask = full, last = best_last;
    while (true) {
        order.push_back(last);
        const int prev = parent[mask][last];
        if (prev < 0) break;
        mask ^= static_cast<std::size_t>(1) << last;
        last = static_cast<std::size_t>(prev);
    }
    std::reverse(order.begin(), order.end());

    std::string witness = set[order[0]];
    for (std::size_t t = 1; t < order.size(); ++t)
        witness.append(set[order[t]],
                       static_cast<std::size_t>(ov[order[t - 1]][order[t]]), std::string::npos);

    std::uint64_t total = 0;
    for (const auto& s : set) total += s.size();
    return SspResult{total - static_cast<std::uint64_t>(dp[full][best_last]), std::move(witness)};
}

BruteCoverResult brute_cycle_cover(const PrefixGraph& g, std::size_t limit) {
    const int n = g.order();
    if (n < 2) throw InputError("brute_cycle_cover: need at least two vertices");
    if (static_cast<std::size_t>(n) > limit)
        throw CapacityError("brute_cycle_cover: " + std::to_string(n) +
                            " vertices, above the limit of " + std::to_string(limit));

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    std::int64_t best_weight = 0;
    do {
        bool derangement = true;
        std::int64_t weight = 0;
        for (int i = 0; i < n && derangement; ++i) {
            if (perm[static_cast<std::size_t>(i)] == i)
                derangement = false;
            else
                weight += g.weight(i, perm[static_cast<std::size_t>(i)]);
        }
        if (!derangement) continue;
        if (best.empty() || weight < best_weight) {
            best = perm;
            best_weight = weight;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    BruteCoverResult result;
    result.weight = best_weight;
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    for (int start = 0; start < n; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cycle;
        int at = start;
        do {
            visited[static_cast<std::size_t>(at)] = 1;
            cycle.push_back(at);
            at = best[static_cast<std::size_t>(at)];
        } while (at != start);
        result.cycles.push_back(std::move(cycle));
    }
    return result;
}

} // namespace oracle
} // namespace sspr
