#pragma once

#include <cstdint>
#include <vector>

#include "sspr/read_io.hpp"

namespace sspr {

/// Counts n(i) of reads by smallest period, 1 <= i <= m.
struct PeriodHistogram {
    int m = 0;
    std::uint64_t n = 0;
    std::vector<std::uint64_t> counts; // counts[i] = n(i); index 0 unused

    std::uint64_t count(int period) const { return counts[static_cast<std::size_t>(period)]; }
};

/// One row of the ratio table: the guaranteed-ratio bound evaluated at alpha = period/m.
struct RatioRow {
    int period = 0;
    std::uint64_t nbseq = 0;     // n(period)
    std::uint64_t cum_nbseq = 0; // sum of n(k) for k <= period
    double alpha = 0.0;          // period / m
    double sp = 0.0;             // sum of n(k)/k for k <= period
    double naive_bound = 0.0;    // 1 + 1/alpha
    double large_term = 0.0;     // 2 + c(1-alpha)/alpha
    double small_term = 0.0;     // (c/2) * sp * m / n
    double beta = 0.0;           // large_term + small_term
    double c = 0.0;              // compression factor used
};

/// Record of counts and cumulative mass per period, plus the reference lines
/// used when plotting (vertical at m*alpha of the selected row, horizontal at 0.02*n/m).
struct PlotRow {
    int period = 0;
    std::uint64_t count = 0;
    double cum_sp = 0.0;
    double v_line = 0.0;
    double h_line = 0.0;
};

/// Period histogram of a read set. Reads are partitioned across `threads`
/// workers (0 = all logical cores); partial counts merge by addition, so the
/// result is independent of the thread count.
PeriodHistogram histogram(const ReadSet& rs, int threads = 0);

/// Largest period i in [0, m] that counts as "small" at this alpha,
/// i.e. the largest i with i/m <= alpha. The division form keeps the
/// boundary consistent with rows whose alpha was produced as i/m.
int small_period_cutoff(int m, double alpha);

/// sp(alpha) = sum over periods i <= m*alpha of n(i)/i. Monotone in alpha.
double sp(const PeriodHistogram& h, double alpha);

/// Guaranteed approximation ratio 2 + c(1-alpha)/alpha + (c/2)*sp*m/n.
double beta(const PeriodHistogram& h, double alpha, double c);

/// One row per period 1..m (alpha = i/m). Rows with n(i) = 0 are emitted
/// unless `suppress_empty`. Enforces the small_term(alpha=1) >= c/2 floor,
/// which holds for every histogram because each read contributes at least
/// 1/m to sp.
std::vector<RatioRow> ratio_table(const PeriodHistogram& h, double c, bool suppress_empty = false);

/// Row minimizing beta among rows with nbseq > 0; ties break toward larger
/// alpha. Falls back to all rows if every row is empty.
RatioRow select_alpha(const std::vector<RatioRow>& table);

/// Per-period data behind the count/cumulative-sp plots.
std::vector<PlotRow> plot_data(const PeriodHistogram& h, const RatioRow& selected);

} // namespace sspr
