#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "sspr/assembler.hpp"
#include "sspr/errors.hpp"
#include "sspr/oracle.hpp"
#include "test_util.hpp"

using namespace sspr;

TEST_CASE("representative is the smallest vertex on the cycle") {
    CHECK(representative({5, 2, 9}) == 2);
    CHECK(representative({1, 0}) == 0);
    CHECK_THROWS_AS(representative({}), std::invalid_argument);
}

TEST_CASE("sigma strings unroll the cycle from the representative") {
    SUBCASE("rotations") {
        const ReadSet rs = test_util::make_reads({"abc", "bca", "cab"});
        CHECK(build_sigma({0, 1, 2}, 0, rs) == "abcabc");
    }
    SUBCASE("conjugate pair") {
        const ReadSet rs = test_util::make_reads({"abab", "baba"});
        CHECK(build_sigma({0, 1}, 0, rs) == "ababab");
    }
    SUBCASE("zero overlaps concatenate") {
        const ReadSet rs = test_util::make_reads({"abc", "xyz"});
        CHECK(build_sigma({0, 1}, 0, rs) == "abcxyzabc");
    }
    SUBCASE("representative must lie on the cycle") {
        const ReadSet rs = test_util::make_reads({"abc", "xyz"});
        CHECK_THROWS_AS(build_sigma({0, 1}, 2, rs), std::invalid_argument);
    }
    SUBCASE("|sigma| = period + m") {
        std::mt19937 rng(3301);
        const ReadSet rs = test_util::make_reads(test_util::random_distinct_reads(rng, 5, 6, 3));
        const PrefixGraph g = build_naive(rs);
        const CycleCover cover = exact_cover(g);
        for (std::size_t k = 0; k < cover.cycles.size(); ++k) {
            const auto sigma = build_sigma(cover.cycles[k], representative(cover.cycles[k]), rs);
            CHECK(static_cast<std::int64_t>(sigma.size()) ==
                  cover.cycle_weights[k] + rs.length());
        }
    }
}

TEST_CASE("greedy compression") {
    SUBCASE("fixed merges") {
        CHECK(greedy_compress({"abcd", "cdab"}) == "abcdab");
        CHECK(greedy_compress({"ab"}) == "ab");
        CHECK(greedy_compress({"abc", "xyz"}).size() == 6);
    }
    SUBCASE("containment filter runs first") {
        std::uint64_t dropped = 0;
        CHECK(greedy_compress({"abcd", "bc"}, &dropped) == "abcd");
        CHECK(dropped == 1);
        dropped = 0;
        CHECK(greedy_compress({"ab", "ab"}, &dropped) == "ab");
        CHECK(dropped == 1);
    }
    SUBCASE("output is a superstring no longer than the concatenation") {
        std::mt19937 rng(3302);
        for (int iter = 0; iter < 40; ++iter) {
            std::uniform_int_distribution<int> kd(2, 8), md(3, 10);
            std::vector<std::string> strings;
            std::size_t total = 0;
            const int k = kd(rng);
            for (int i = 0; i < k; ++i) {
                strings.push_back(test_util::random_string(rng, md(rng), 3));
                total += strings.back().size();
            }
            const std::string merged = greedy_compress(strings);
            CHECK(merged.size() <= total);
            for (const auto& s : strings)
                CHECK(merged.find(s) != std::string::npos);
        }
    }
    SUBCASE("length is permutation-invariant when nonzero overlaps are distinct") {
        // Over a large alphabet most pairs overlap by 0, which cannot affect
        // the merged length; positive overlaps must be pairwise distinct.
        std::mt19937 rng(3303);
        int tested = 0;
        for (int attempt = 0; attempt < 500 && tested < 10; ++attempt) {
            auto strings = test_util::random_distinct_reads(rng, 5, 8, 26);
            std::set<int> overlaps;
            bool distinct = true;
            for (std::size_t i = 0; i < strings.size() && distinct; ++i)
                for (std::size_t j = 0; j < strings.size() && distinct; ++j) {
                    if (i == j) continue;
                    const int ov = oracle::naive_overlap(strings[i], strings[j]);
                    if (ov > 0 && !overlaps.insert(ov).second) distinct = false;
                }
            if (!distinct) continue;
            ++tested;
            const std::size_t len = greedy_compress(strings).size();
            for (int shuffle = 0; shuffle < 5; ++shuffle) {
                std::shuffle(strings.begin(), strings.end(), rng);
                CHECK(greedy_compress(strings).size() == len);
            }
        }
        CHECK(tested == 10);
    }
}

TEST_CASE("assemble end to end on fixed read sets") {
    SUBCASE("conjugate pair") {
        const ReadSet rs = test_util::make_reads({"abab", "baba"});
        const Assembly a = assemble(rs);
        CHECK(a.tau == "ababab");
        CHECK(a.stats.tau_len == 6);
        CHECK(a.stats.wt_c == 2);
        const auto opt = oracle::exact_ssp(rs.reads());
        CHECK(opt.length == 5); // "ababa"
        CHECK(static_cast<double>(a.stats.tau_len) / static_cast<double>(opt.length) ==
              doctest::Approx(1.2));
        CHECK(verify(a.tau, rs).pass);
    }
    SUBCASE("rotations") {
        const ReadSet rs = test_util::make_reads({"abc", "bca", "cab"});
        const Assembly a = assemble(rs);
        CHECK(a.tau == "abcabc");
        CHECK(oracle::exact_ssp(rs.reads()).length == 5); // "abcab"
        CHECK(verify(a.tau, rs).pass);
    }
    SUBCASE("zero-overlap period-1 reads") {
        const ReadSet rs = test_util::make_reads({"aaa", "bbb", "ccc"});
        const Assembly a = assemble(rs);
        // One forced 3-cycle of weight 9, so w_sigma = 9 + 3 and the single
        // sigma cannot compress further.
        CHECK(a.stats.wt_c == 9);
        CHECK(a.w_sigma_len == 12);
        CHECK(a.stats.tau_len == 12);
        CHECK(oracle::exact_ssp(rs.reads()).length == 9);
        CHECK(verify(a.tau, rs).pass);
    }
}

TEST_CASE("assemble bookkeeping and options") {
    std::mt19937 rng(3304);
    const ReadSet rs = test_util::make_reads(test_util::random_distinct_reads(rng, 6, 5, 3));

    SUBCASE("w_sigma identity and beta bound use the executed c") {
        const Assembly a = assemble(rs);
        CHECK(a.w_sigma_len ==
              static_cast<std::uint64_t>(a.stats.wt_c) +
                  (a.stats.cycles_small + a.stats.cycles_large) *
                      static_cast<std::uint64_t>(a.stats.m));
        const PeriodHistogram h = histogram(rs);
        CHECK(a.stats.beta_bound == beta(h, a.stats.alpha, a.stats.c));
        CHECK(a.stats.sp_used == sp(h, a.stats.alpha));
        CHECK(a.stats.c == 0.5);
    }
    SUBCASE("explicit alpha is used, values above 1 clamp") {
        AssembleOptions options;
        options.alpha = 0.4;
        CHECK(assemble(rs, options).stats.alpha == 0.4);
        options.alpha = 3.0;
        CHECK(assemble(rs, options).stats.alpha == 1.0);
        options.alpha = -1.0;
        CHECK_THROWS_AS(assemble(rs, options), std::invalid_argument);
    }
    SUBCASE("greedy backend assembles a verified superstring too") {
        AssembleOptions options;
        options.backend = CoverBackend::greedy;
        const Assembly a = assemble(rs, options);
        CHECK(verify(a.tau, rs).pass);
    }
    SUBCASE("needs two reads") {
        CHECK_THROWS_AS(assemble(test_util::make_reads({"abc"})), InputError);
    }
}

TEST_CASE("every stage output contains the previous stage") {
    std::mt19937 rng(3306);
    for (int iter = 0; iter < 20; ++iter) {
        std::uniform_int_distribution<int> nd(3, 8), md(3, 8), sd(2, 4);
        const ReadSet rs = test_util::make_reads(
            test_util::random_distinct_reads(rng, nd(rng), md(rng), sd(rng)));
        const PrefixGraph g = build_naive(rs);
        const CycleCover cover = exact_cover(g);
        std::vector<std::string> sigmas;
        for (const auto& cycle : cover.cycles) {
            const std::string sigma = build_sigma(cycle, representative(cycle), rs);
            for (int v : cycle) // each read is a substring of its cycle's sigma
                CHECK(sigma.find(rs[static_cast<std::size_t>(v)]) != std::string::npos);
            sigmas.push_back(sigma);
        }
        const std::string tau = greedy_compress(sigmas);
        for (const auto& sigma : sigmas)
            CHECK(tau.find(sigma) != std::string::npos);
    }
}

TEST_CASE("theorem-style bound holds on random instances with the exact backend") {
    std::mt19937 rng(3305);
    for (int iter = 0; iter < 40; ++iter) {
        std::uniform_int_distribution<int> nd(3, 7), md(3, 8), sd(2, 4);
        const ReadSet rs = test_util::make_reads(
            test_util::random_distinct_reads(rng, nd(rng), md(rng), sd(rng)));
        const Assembly a = assemble(rs);
        REQUIRE(verify(a.tau, rs).pass);
        const double opt = static_cast<double>(oracle::exact_ssp(rs.reads()).length);
        CHECK(opt >= static_cast<double>(rs.size())); // every read adds a base
        const double alpha = a.stats.alpha;
        const double rhs =
            2.0 * opt + 0.5 * ((1.0 - alpha) / alpha) * opt + 0.25 * a.stats.sp_used * a.stats.m;
        CHECK(static_cast<double>(a.stats.tau_len) <= rhs + 1e-9);
    }
}

TEST_CASE("verify") {
    const ReadSet pair = test_util::make_reads({"abab", "baba"});
    CHECK(verify("ababa", pair).pass);

    const VerifyReport fail = verify("abab", test_util::make_reads({"baba"}));
    CHECK(!fail.pass);
    CHECK(fail.missing == std::vector<std::uint32_t>{0});

    std::string concat;
    for (const auto& r : pair.reads()) concat += r;
    CHECK(verify(concat, pair).pass);

    CHECK(!verify("ab", pair).pass); // tau shorter than m
}
