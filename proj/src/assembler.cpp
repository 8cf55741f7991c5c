#include "sspr/assembler.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "sspr/core_strings.hpp"
#include "sspr/errors.hpp"

namespace sspr {

int representative(const std::vector<int>& cycle) {
    if (cycle.empty()) throw std::invalid_argument("representative: empty cycle");
    return *std::min_element(cycle.begin(), cycle.end());
}

std::string build_sigma(const std::vector<int>& cycle, int rep, const ReadSet& rs) {
    const auto rep_it = std::find(cycle.begin(), cycle.end(), rep);
    if (rep_it == cycle.end())
        throw std::invalid_argument("build_sigma: representative not on cycle");
    const std::size_t k = cycle.size();
    const std::size_t start = static_cast<std::size_t>(rep_it - cycle.begin());

    std::string sigma;
    for (std::size_t step = 0; step < k; ++step) {
        const int a = cycle[(start + step) % k];
        const int b = cycle[(start + step + 1) % k];
        const std::string& u = rs[static_cast<std::size_t>(a)];
        const std::string& v = rs[static_cast<std::size_t>(b)];
        sigma.append(u, 0, static_cast<std::size_t>(prefix_len(u, v)));
    }
    sigma += rs[static_cast<std::size_t>(rep)];
    return sigma;
}

namespace {

// Drop strings contained in another string; among equal strings the first
// occurrence survives. Containment is transitive, so surviving strings are
// enough to justify every drop.
std::vector<std::string> containment_filter(std::vector<std::string> strings,
                                            std::uint64_t& dropped) {
    const std::size_t k = strings.size();
    std::vector<char> drop(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k && !drop[i]; ++j) {
            if (i == j) continue;
            if (strings[i].size() < strings[j].size()) {
                if (strings[j].find(strings[i]) != std::string::npos) drop[i] = 1;
            } else if (strings[i].size() == strings[j].size() && i > j &&
                       strings[i] == strings[j]) {
                drop[i] = 1;
            }
        }
    }
    std::vector<std::string> kept;
    kept.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        if (!drop[i]) kept.push_back(std::move(strings[i]));
    dropped = k - kept.size();
    return kept;
}

} // namespace

std::string greedy_compress(std::vector<std::string> strings, std::uint64_t* contained_dropped) {
    if (strings.empty()) throw std::invalid_argument("greedy_compress: empty input");
    std::uint64_t dropped = 0;
    std::vector<std::string> cur = containment_filter(std::move(strings), dropped);
    if (contained_dropped) *contained_dropped = dropped;

    std::size_t k = cur.size();
    std::vector<std::vector<int>> failures(k);
    for (std::size_t j = 0; j < k; ++j) failures[j] = border_array(cur[j]);
    std::vector<std::vector<int>> ov(k, std::vector<int>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j) ov[i][j] = detail::overlap_with_failure(cur[i], cur[j], failures[j]);

    while (k > 1) {
        // Maximum overlap; ties resolve to the smallest (source, target)
        // position pair. The merge lands at the source position.
        std::size_t bi = 0, bj = 1;
        int best = -1;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                if (i != j && ov[i][j] > best) {
                    best = ov[i][j];
                    bi = i;
                    bj = j;
                }
            }

        cur[bi].append(cur[bj], static_cast<std::size_t>(best), std::string::npos);
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(bj));
        failures.erase(failures.begin() + static_cast<std::ptrdiff_t>(bj));
        ov.erase(ov.begin() + static_cast<std::ptrdiff_t>(bj));
        for (auto& row : ov) row.erase(row.begin() + static_cast<std::ptrdiff_t>(bj));
        if (bj < bi) --bi;
        --k;

        failures[bi] = border_array(cur[bi]);
        for (std::size_t i = 0; i < k; ++i) {
            if (i == bi) continue;
            ov[i][bi] = detail::overlap_with_failure(cur[i], cur[bi], failures[bi]);
            ov[bi][i] = detail::overlap_with_failure(cur[bi], cur[i], failures[i]);
        }
    }
    return cur.front();
}

Assembly assemble(const ReadSet& rs, const AssembleOptions& options) {
    if (rs.size() < 2) throw InputError("assemble needs at least two distinct reads");
    if (!(options.c > 0.0) || options.c > 1.0)
        throw std::invalid_argument("compression factor c must be in (0, 1]");

    const int m = rs.length();
    const PeriodHistogram hist = histogram(rs, options.threads);

    double alpha;
    if (options.alpha) {
        alpha = *options.alpha;
        if (alpha > 1.0) alpha = 1.0;
        if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    } else {
        alpha = select_alpha(ratio_table(hist, options.c)).alpha;
    }
    const double sp_used = sp(hist, alpha);

    GraphOptions graph_options = options.graph;
    graph_options.threads = options.threads;
    const PrefixGraph graph = build_prefix_graph(rs, graph_options);

    const CycleCover cover = options.backend == CoverBackend::exact
                                 ? exact_cover(graph, options.max_exact)
                                 : greedy_cover(graph);
    const CycleClassification split = classify(cover, m, alpha);

    Assembly out;
    out.sigma_strings.reserve(cover.cycles.size());
    for (const auto& cycle : cover.cycles) {
        out.sigma_strings.push_back(build_sigma(cycle, representative(cycle), rs));
        out.w_sigma_len += out.sigma_strings.back().size();
    }
    // Each sigma is its cycle's prefixes plus one representative read, so
    // |w_sigma| = wt(C) + (#cycles) * m.
    if (out.w_sigma_len != static_cast<std::uint64_t>(cover.total_weight) +
                               cover.cycles.size() * static_cast<std::uint64_t>(m))
        throw std::logic_error("assemble: sigma length bookkeeping is off");

    std::uint64_t contained = 0;
    out.tau = greedy_compress(out.sigma_strings, &contained);

    out.stats.n = rs.size();
    out.stats.m = m;
    out.stats.alpha = alpha;
    out.stats.c = options.c;
    out.stats.wt_c = cover.total_weight;
    out.stats.cycles_small = split.small.size();
    out.stats.cycles_large = split.large.size();
    out.stats.w_sigma_len = out.w_sigma_len;
    out.stats.tau_len = out.tau.size();
    out.stats.sp_used = sp_used;
    out.stats.beta_bound = beta(hist, alpha, options.c);
    out.stats.contained_dropped = contained;
    return out;
}

VerifyReport verify(std::string_view tau, const ReadSet& rs) {
    const std::size_t m = static_cast<std::size_t>(rs.length());
    std::unordered_set<std::string_view> windows;
    if (tau.size() >= m) {
        windows.reserve(tau.size() - m + 2);
        for (std::size_t p = 0; p + m <= tau.size(); ++p) windows.insert(tau.substr(p, m));
    }
    VerifyReport report;
    report.pass = true;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (!windows.contains(std::string_view(rs[i]))) {
            report.pass = false;
            report.missing.push_back(static_cast<std::uint32_t>(i));
        }
    }
    return report;
}

} // namespace sspr
