#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "sspr/core_strings.hpp"
#include "sspr/errors.hpp"
#include "sspr/oracle.hpp"
#include "sspr/overlap_graph.hpp"
#include "test_util.hpp"

using namespace sspr;
using namespace sspr::oracle;

namespace {

// Independent reference: try every permutation, merge with maximal overlaps.
std::uint64_t permutation_ssp(std::vector<std::string> strings) {
    // Same containment preprocessing as the DP.
    std::vector<std::string> set;
    for (std::size_t i = 0; i < strings.size(); ++i) {
        bool contained = false;
        for (std::size_t j = 0; j < strings.size() && !contained; ++j) {
            if (i == j) continue;
            if (strings[j].find(strings[i]) != std::string::npos &&
                (strings[i].size() < strings[j].size() || (strings[i] == strings[j] && i > j)))
                contained = true;
        }
        if (!contained) set.push_back(strings[i]);
    }
    std::sort(set.begin(), set.end());
    std::uint64_t best = UINT64_MAX;
    do {
        std::uint64_t len = set[0].size();
        for (std::size_t i = 1; i < set.size(); ++i)
            len += set[i].size() -
                   static_cast<std::uint64_t>(naive_overlap(set[i - 1], set[i]));
        best = std::min(best, len);
    } while (std::next_permutation(set.begin(), set.end()));
    return best;
}

bool is_superstring(const std::string& s, const std::vector<std::string>& strings) {
    return std::all_of(strings.begin(), strings.end(),
                       [&](const std::string& x) { return s.find(x) != std::string::npos; });
}

} // namespace

TEST_CASE("naive primitives") {
    CHECK(naive_period("abab") == 2);
    CHECK(naive_period("a") == 1);
    CHECK(naive_period("abcd") == 4);
    CHECK(naive_overlap("abcab", "cabd") == 3);
    CHECK(naive_overlap("abc", "xyz") == 0);
    CHECK_THROWS_AS(naive_period(""), InputError);
    CHECK_THROWS_AS(naive_overlap("", "a"), InputError);
}

TEST_CASE("exact ssp on fixed instances") {
    const auto rot = exact_ssp({"abc", "bca", "cab"});
    CHECK(rot.length == 5);
    CHECK(rot.witness.size() == 5);
    CHECK(is_superstring(rot.witness, {"abc", "bca", "cab"}));

    CHECK(exact_ssp({"ab"}).length == 2);
    CHECK(exact_ssp({"abc", "xyz"}).length == 6);
    CHECK(exact_ssp({"ab", "b"}).length == 2); // containment filtering
}

TEST_CASE("subset DP equals permutation enumeration up to 7 strings") {
    std::mt19937 rng(4401);
    for (int iter = 0; iter < 40; ++iter) {
        std::uniform_int_distribution<int> kd(2, 7), md(2, 6), sd(2, 3);
        std::vector<std::string> strings;
        const int k = kd(rng);
        for (int i = 0; i < k; ++i)
            strings.push_back(test_util::random_string(rng, md(rng), sd(rng)));
        const auto dp = exact_ssp(strings);
        CHECK(dp.length == permutation_ssp(strings));
        CHECK(dp.witness.size() == dp.length);
        CHECK(is_superstring(dp.witness, strings));
        std::size_t longest = 0;
        for (const auto& s : strings) longest = std::max(longest, s.size());
        CHECK(dp.length >= longest);
    }
}

TEST_CASE("ssp capacity limit") {
    std::mt19937 rng(4402);
    const auto strings = test_util::random_distinct_reads(rng, 13, 8, 4);
    CHECK_THROWS_AS(exact_ssp(strings), CapacityError);
    CHECK_THROWS_AS(exact_ssp({}), InputError);
    CHECK_THROWS_AS(exact_ssp({""}), InputError);
}

TEST_CASE("brute cycle cover") {
    SUBCASE("two vertices have a unique derangement") {
        const PrefixGraph g = build_naive(test_util::make_reads({"abab", "baba"}));
        const auto r = brute_cycle_cover(g);
        CHECK(r.weight == g.weight(0, 1) + g.weight(1, 0));
        CHECK(r.cycles == std::vector<std::vector<int>>{{0, 1}});
    }
    SUBCASE("rotations") {
        const PrefixGraph g = build_naive(test_util::make_reads({"abc", "bca", "cab"}));
        CHECK(brute_cycle_cover(g).weight == 3);
    }
    SUBCASE("cover weight never exceeds the ssp optimum") {
        std::mt19937 rng(4403);
        for (int iter = 0; iter < 20; ++iter) {
            std::uniform_int_distribution<int> nd(3, 6), md(3, 6);
            const auto reads = test_util::random_distinct_reads(rng, nd(rng), md(rng), 3);
            const PrefixGraph g = build_naive(test_util::make_reads(reads));
            const auto cover = brute_cycle_cover(g);
            const auto opt = exact_ssp(reads);
            CHECK(cover.weight <= static_cast<std::int64_t>(opt.length));
            CHECK(opt.length >= reads.size());
        }
    }
}
