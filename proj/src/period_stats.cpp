#include "sspr/period_stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "sspr/core_strings.hpp"
#include "sspr/errors.hpp"

namespace sspr {

namespace {

int resolve_threads(int requested, std::size_t work_items) {
    unsigned hw = std::thread::hardware_concurrency();
    int t = requested > 0 ? requested : static_cast<int>(hw ? hw : 1);
    t = std::min<int>(t, static_cast<int>(std::max<std::size_t>(work_items, 1)));
    return std::max(t, 1);
}

void check_alpha(double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument("alpha must be in (0, 1]");
}

void check_c(double c) {
    if (!(c > 0.0) || c > 1.0)
        throw std::invalid_argument("compression factor c must be in (0, 1]");
}

// Shared arithmetic so that ratio_table rows and beta() are bit-identical.
double large_term_of(double alpha, double c) { return 2.0 + c * (1.0 - alpha) / alpha; }

double small_term_of(double sp_value, int m, std::uint64_t n, double c) {
    return 0.5 * c * sp_value * static_cast<double>(m) / static_cast<double>(n);
}

} // namespace

PeriodHistogram histogram(const ReadSet& rs, int threads) {
    const int m = rs.length();
    const std::size_t n = rs.size();
    const int t = resolve_threads(threads, n);

    std::vector<std::vector<std::uint64_t>> partial(
        static_cast<std::size_t>(t), std::vector<std::uint64_t>(static_cast<std::size_t>(m) + 1, 0));

    auto work = [&](int worker) {
        std::vector<int> scratch;
        const std::size_t lo = n * static_cast<std::size_t>(worker) / static_cast<std::size_t>(t);
        const std::size_t hi = n * (static_cast<std::size_t>(worker) + 1) / static_cast<std::size_t>(t);
        auto& counts = partial[static_cast<std::size_t>(worker)];
        for (std::size_t i = lo; i < hi; ++i)
            ++counts[static_cast<std::size_t>(detail::smallest_period_scratch(rs[i], scratch))];
    };

    if (t == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(t));
        for (int w = 0; w < t; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    PeriodHistogram h;
    h.m = m;
    h.n = n;
    h.counts.assign(static_cast<std::size_t>(m) + 1, 0);
    for (const auto& counts : partial)
        for (std::size_t i = 0; i <= static_cast<std::size_t>(m); ++i) h.counts[i] += counts[i];
    return h;
}

int small_period_cutoff(int m, double alpha) {
    check_alpha(alpha);
    for (int i = m; i >= 1; --i)
        if (static_cast<double>(i) / static_cast<double>(m) <= alpha) return i;
    return 0;
}

double sp(const PeriodHistogram& h, double alpha) {
    const int cutoff = small_period_cutoff(h.m, alpha);
    double acc = 0.0;
    for (int i = 1; i <= cutoff; ++i)
        acc += static_cast<double>(h.counts[static_cast<std::size_t>(i)]) / static_cast<double>(i);
    return acc;
}

double beta(const PeriodHistogram& h, double alpha, double c) {
    check_alpha(alpha);
    check_c(c);
    if (h.n == 0) throw std::invalid_argument("beta: empty histogram");
    return large_term_of(alpha, c) + small_term_of(sp(h, alpha), h.m, h.n, c);
}

std::vector<RatioRow> ratio_table(const PeriodHistogram& h, double c, bool suppress_empty) {
    check_c(c);
    if (h.n == 0) throw std::invalid_argument("ratio_table: empty histogram");

    std::vector<RatioRow> rows;
    rows.reserve(static_cast<std::size_t>(h.m));
    std::uint64_t cum = 0;
    double sp_acc = 0.0;
    for (int i = 1; i <= h.m; ++i) {
        const std::uint64_t nb = h.counts[static_cast<std::size_t>(i)];
        cum += nb;
        sp_acc += static_cast<double>(nb) / static_cast<double>(i);

        RatioRow r;
        r.period = i;
        r.nbseq = nb;
        r.cum_nbseq = cum;
        r.alpha = static_cast<double>(i) / static_cast<double>(h.m);
        r.sp = sp_acc;
        r.naive_bound = 1.0 + 1.0 / r.alpha;
        r.large_term = large_term_of(r.alpha, c);
        r.small_term = small_term_of(sp_acc, h.m, h.n, c);
        r.beta = r.large_term + r.small_term;
        r.c = c;

        if (i == h.m && r.small_term < 0.5 * c - 1e-9)
            throw std::logic_error("small_term at alpha=1 fell below the c/2 floor; "
                                   "the histogram is inconsistent (sp >= n/m must hold)");
        if (!suppress_empty || nb > 0) rows.push_back(r);
    }
    return rows;
}

RatioRow select_alpha(const std::vector<RatioRow>& table) {
    if (table.empty()) throw std::invalid_argument("select_alpha: empty table");
    const RatioRow* best = nullptr;
    for (const auto& row : table) {
        if (row.nbseq == 0) continue;
        if (!best || row.beta < best->beta ||
            (row.beta == best->beta && row.alpha > best->alpha))
            best = &row;
    }
    if (!best) {
        // Degenerate synthetic tables only: fall back to all rows.
        for (const auto& row : table) {
            if (!best || row.beta < best->beta ||
                (row.beta == best->beta && row.alpha > best->alpha))
                best = &row;
        }
    }
    return *best;
}

std::vector<PlotRow> plot_data(const PeriodHistogram& h, const RatioRow& selected) {
    std::vector<PlotRow> rows;
    rows.reserve(static_cast<std::size_t>(h.m));
    const double v_line = static_cast<double>(selected.period); // = m * alpha of the selected row
    const double h_line = 0.02 * static_cast<double>(h.n) / static_cast<double>(h.m);
    double cum_sp = 0.0;
    for (int i = 1; i <= h.m; ++i) {
        const std::uint64_t nb = h.counts[static_cast<std::size_t>(i)];
        cum_sp += static_cast<double>(nb) / static_cast<double>(i);
        rows.push_back(PlotRow{i, nb, cum_sp, v_line, h_line});
    }
    return rows;
}

} // namespace sspr
