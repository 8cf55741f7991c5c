#include <doctest.h>

#include <random>
#include <sstream>

#include "sspr/errors.hpp"
#include "sspr/oracle.hpp"
#include "sspr/overlap_graph.hpp"
#include "test_util.hpp"

using namespace sspr;

namespace {

bool graphs_equal(const PrefixGraph& a, const PrefixGraph& b) {
    if (a.order() != b.order()) return false;
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j)
            if (a.weight(i, j) != b.weight(i, j)) return false;
    return true;
}

void check_against_oracle(const PrefixGraph& g, const ReadSet& rs) {
    const int m = rs.length();
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j) {
            if (i == j) {
                CHECK(g.weight(i, j) == PrefixGraph::kForbidden);
            } else {
                const int ov = oracle::naive_overlap(rs[static_cast<std::size_t>(i)],
                                                     rs[static_cast<std::size_t>(j)]);
                CHECK(g.weight(i, j) == m - ov);
                CHECK(g.weight(i, j) + ov == m); // decomposition identity
                CHECK(g.weight(i, j) >= 1);      // distinct equal-length reads
                CHECK(g.weight(i, j) <= m);
            }
        }
}

} // namespace

TEST_CASE("naive graph on fixed read sets") {
    SUBCASE("two conjugate periodic reads") {
        const ReadSet rs = test_util::make_reads({"abab", "baba"});
        const PrefixGraph g = build_naive(rs);
        CHECK(g.weight(0, 1) == 1);
        CHECK(g.weight(1, 0) == 1);
        check_against_oracle(g, rs);
    }
    SUBCASE("disjoint alphabets give full weight") {
        const ReadSet rs = test_util::make_reads({"abc", "xyz"});
        const PrefixGraph g = build_naive(rs);
        CHECK(g.weight(0, 1) == 3);
        CHECK(g.weight(1, 0) == 3);
    }
    SUBCASE("rotations") {
        const ReadSet rs = test_util::make_reads({"abc", "bca", "cab"});
        const PrefixGraph g = build_naive(rs);
        check_against_oracle(g, rs); // forward edges weight 1, backward weight 2
        CHECK(g.weight(0, 1) == 1);
        CHECK(g.weight(1, 2) == 1);
        CHECK(g.weight(2, 0) == 1);
    }
}

TEST_CASE("graph stores the read periods for invariant checks") {
    const ReadSet rs = test_util::make_reads({"abab", "abcd"});
    const PrefixGraph g = build_naive(rs);
    CHECK(g.read_periods() == std::vector<int>{2, 4});
}

TEST_CASE("indexed backend equals naive entrywise") {
    SUBCASE("exhaustive over binary read sets, m <= 3, n <= 4") {
        for (int m = 1; m <= 3; ++m) {
            const int universe = 1 << m;
            for (int mask = 0; mask < (1 << universe); ++mask) {
                const int n = __builtin_popcount(static_cast<unsigned>(mask));
                if (n < 2 || n > 4) continue;
                std::vector<std::string> reads;
                for (int s = 0; s < universe; ++s) {
                    if (!(mask & (1 << s))) continue;
                    std::string r(static_cast<std::size_t>(m), 'a');
                    for (int b = 0; b < m; ++b)
                        if (s & (1 << b)) r[static_cast<std::size_t>(b)] = 'b';
                    reads.push_back(std::move(r));
                }
                const ReadSet rs = test_util::make_reads(reads);
                CHECK(graphs_equal(build_naive(rs), build_indexed(rs)));
            }
        }
    }
    SUBCASE("random read sets across alphabets") {
        std::mt19937 rng(1101);
        const int sigmas[] = {2, 4, 26};
        for (int iter = 0; iter < 20; ++iter) {
            std::uniform_int_distribution<int> nd(2, 60), md(8, 30);
            const int n = nd(rng), m = md(rng);
            const ReadSet rs =
                test_util::make_reads(test_util::random_distinct_reads(rng, n, m, sigmas[iter % 3]));
            const PrefixGraph naive = build_naive(rs);
            const PrefixGraph indexed = build_indexed(rs);
            CHECK(graphs_equal(naive, indexed));
            check_against_oracle(indexed, rs);
        }
    }
}

TEST_CASE("row-parallel construction matches single-threaded") {
    std::mt19937 rng(1102);
    const ReadSet rs = test_util::make_reads(test_util::random_distinct_reads(rng, 50, 20, 4));
    GraphOptions one, four;
    one.threads = 1;
    four.threads = 4;
    CHECK(graphs_equal(build_naive(rs, one), build_naive(rs, four)));
}

TEST_CASE("build dispatches on the indexed threshold") {
    std::mt19937 rng(1103);
    const ReadSet rs = test_util::make_reads(test_util::random_distinct_reads(rng, 70, 15, 4));
    GraphOptions options;
    options.indexed_threshold = 64;
    CHECK(graphs_equal(build_prefix_graph(rs, options), build_naive(rs)));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(build_naive(test_util::make_reads({"ab"})), InputError);
    CHECK_THROWS_AS(build_naive(test_util::make_reads({"ab", "ab", "cd"})), InputError);
    GraphOptions tiny;
    tiny.max_vertices = 2;
    CHECK_THROWS_AS(build_naive(test_util::make_reads({"ab", "cd", "ef"}), tiny), CapacityError);
    CHECK_THROWS_AS(build_indexed(test_util::make_reads({"ab", "cd", "ef"}), tiny), CapacityError);
}

TEST_CASE("debug dump is tab separated with labels") {
    const ReadSet rs = test_util::make_reads({"abc", "xyz"});
    std::ostringstream out;
    dump_graph_tsv(build_naive(rs), out);
    CHECK(out.str() == "vertex\t0\t1\n0\t-\t3\n1\t3\t-\n");
}
