#include <doctest.h>

#include <random>

#include "sspr/core_strings.hpp"
#include "sspr/errors.hpp"
#include "sspr/oracle.hpp"
#include "test_util.hpp"

using namespace sspr;

namespace {

// All-border scan straight from the definition.
std::vector<int> naive_border_array(std::string_view s) {
    std::vector<int> out;
    for (std::size_t k = 1; k <= s.size(); ++k) {
        int best = 0;
        for (std::size_t b = 1; b < k; ++b)
            if (s.substr(0, b) == s.substr(k - b, b)) best = static_cast<int>(b);
        out.push_back(best);
    }
    return out;
}

} // namespace

TEST_CASE("border array on fixed strings") {
    CHECK(border_array("aaaa") == std::vector<int>{0, 1, 2, 3});
    CHECK(border_array("abcd") == std::vector<int>{0, 0, 0, 0});
    CHECK(border_array("abaab") == naive_border_array("abaab"));
    CHECK(border_array("abaab") == std::vector<int>{0, 0, 1, 1, 2});
    CHECK_THROWS_AS(border_array(""), InputError);
}

TEST_CASE("smallest period on fixed strings") {
    CHECK(smallest_period("aaaa") == 1);
    CHECK(smallest_period("abcd") == 4);
    CHECK(smallest_period("abaab") == 3);
    CHECK(smallest_period("abab") == 2);
    CHECK(smallest_period("a") == 1);
    CHECK_THROWS_AS(smallest_period(""), InputError);
}

TEST_CASE("overlap and prefix_len on fixed pairs") {
    CHECK(overlap("abcab", "cabd") == 3);
    CHECK(overlap("abc", "xyz") == 0);
    CHECK(overlap("aaa", "aab") == 2);
    CHECK(prefix_len("abcab", "cabd") == 2);
    CHECK(prefix_len("abc", "xyz") == 3);
    CHECK(prefix_len("aaa", "aab") == 1);
    CHECK_THROWS_AS(overlap("", "a"), InputError);
    CHECK_THROWS_AS(overlap("a", ""), InputError);
}

TEST_CASE("period agrees with the naive oracle on random strings") {
    std::mt19937 rng(7001);
    std::uniform_int_distribution<int> len(1, 64);
    const int sigmas[] = {2, 4, 26};
    for (int iter = 0; iter < 2000; ++iter) {
        const std::string s = test_util::random_string(rng, len(rng), sigmas[iter % 3]);
        const int p = smallest_period(s);
        CHECK(p == oracle::naive_period(s));
        CHECK(p >= 1);
        CHECK(p <= static_cast<int>(s.size()));
        CHECK(p == static_cast<int>(s.size()) - border_array(s).back());
    }
}

TEST_CASE("overlap agrees with the naive oracle and decomposes u") {
    std::mt19937 rng(7002);
    std::uniform_int_distribution<int> len(1, 64);
    const int sigmas[] = {2, 4, 26};
    for (int iter = 0; iter < 2000; ++iter) {
        const int sigma = sigmas[iter % 3];
        const std::string u = test_util::random_string(rng, len(rng), sigma);
        const std::string v = test_util::random_string(rng, len(rng), sigma);
        const int ov = overlap(u, v);
        CHECK(ov == oracle::naive_overlap(u, v));
        CHECK(static_cast<int>(u.size()) == prefix_len(u, v) + ov);
        // u = pref(u,v) . ov(u,v), where the overlap string is v's prefix.
        CHECK(u == u.substr(0, u.size() - static_cast<std::size_t>(ov)) +
                       v.substr(0, static_cast<std::size_t>(ov)));
        // Full overlap exactly when u is a prefix of v.
        const bool u_prefix_of_v = u.size() <= v.size() && v.substr(0, u.size()) == u;
        CHECK((ov == static_cast<int>(u.size())) == u_prefix_of_v);
    }
}

TEST_CASE("overlap handles self and nested repetition") {
    CHECK(overlap("abab", "abab") == 4);
    CHECK(overlap("aaaa", "aa") == 2);
    CHECK(overlap("aa", "aaaa") == 2);
    CHECK(overlap("ababab", "bababa") == 5);
}

TEST_CASE("normalize_read folds case and validates the alphabet") {
    CHECK(normalize_read("acgt", Alphabet::dna()) == "ACGT");
    CHECK_THROWS_AS(normalize_read("acgn", Alphabet::dna()), InputError);
    CHECK(normalize_read("acgn", Alphabet::dna_n()) == "ACGN");
    CHECK(normalize_read("xyz", Alphabet::letters()) == "XYZ");
    CHECK_THROWS_AS(normalize_read("a b", Alphabet::any()), InputError);
    CHECK_THROWS_AS(Alphabet::by_name("proteins"), InputError);
}
