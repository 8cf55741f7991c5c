"""Period statistics and cycle-cover superstring assembly for uniform-length reads.

The heavy lifting lives in the C++ extension module; this package re-exports it.
"""

from ._core import (
    Assembly,
    AssemblyStats,
    CapacityError,
    CycleCover,
    InputError,
    PeriodHistogram,
    PrefixGraph,
    RatioRow,
    ReadSet,
    assemble,
    beta,
    border_array,
    brute_cycle_cover,
    build_prefix_graph,
    dedupe,
    exact_cover,
    exact_ssp,
    greedy_compress,
    greedy_cover,
    histogram,
    naive_overlap,
    naive_period,
    overlap,
    parse_reads_file,
    prefix_len,
    ratio_table,
    select_alpha,
    smallest_period,
    sp,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "Assembly",
    "AssemblyStats",
    "CapacityError",
    "CycleCover",
    "InputError",
    "PeriodHistogram",
    "PrefixGraph",
    "RatioRow",
    "ReadSet",
    "assemble",
    "beta",
    "border_array",
    "brute_cycle_cover",
    "build_prefix_graph",
    "dedupe",
    "exact_cover",
    "exact_ssp",
    "greedy_compress",
    "greedy_cover",
    "histogram",
    "naive_overlap",
    "naive_period",
    "overlap",
    "parse_reads_file",
    "prefix_len",
    "ratio_table",
    "select_alpha",
    "smallest_period",
    "sp",
    "verify",
]
