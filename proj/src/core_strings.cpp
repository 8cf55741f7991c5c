#include "sspr/core_strings.hpp"

#include <cctype>

#include "sspr/errors.hpp"

namespace sspr {

Alphabet::Alphabet(std::string name, std::string_view symbols) : name_(std::move(name)) {
    for (unsigned char c : symbols) allowed_[c] = true;
}

const Alphabet& Alphabet::dna() {
    static const Alphabet a("dna", "ACGT");
    return a;
}

const Alphabet& Alphabet::dna_n() {
    static const Alphabet a("dna-n", "ACGTN");
    return a;
}

const Alphabet& Alphabet::letters() {
    static const Alphabet a("letters", "ABCDEFGHIJKLMNOPQRSTUVWXYZ");
    return a;
}

const Alphabet& Alphabet::any() {
    static const Alphabet a("any", [] {
        std::string s;
        for (int c = 0; c < 256; ++c)
            if (std::isprint(c) && !std::isspace(c)) s.push_back(static_cast<char>(c));
        return s;
    }());
    return a;
}

const Alphabet& Alphabet::by_name(std::string_view name) {
    if (name == "dna") return dna();
    if (name == "dna-n") return dna_n();
    if (name == "letters") return letters();
    if (name == "any") return any();
    throw InputError("unknown alphabet: " + std::string(name));
}

std::string normalize_read(std::string s, const Alphabet& alphabet) {
    for (char& ch : s) {
        ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        if (!alphabet.contains(static_cast<unsigned char>(ch)))
            throw InputError(std::string("symbol '") + ch + "' not in alphabet " + alphabet.name());
    }
    return s;
}

static void fill_border_array(std::string_view s, std::vector<int>& b) {
    b.assign(s.size(), 0);
    for (std::size_t k = 1; k < s.size(); ++k) {
        int j = b[k - 1];
        while (j > 0 && s[k] != s[static_cast<std::size_t>(j)]) j = b[static_cast<std::size_t>(j) - 1];
        if (s[k] == s[static_cast<std::size_t>(j)]) ++j;
        b[k] = j;
    }
}

std::vector<int> border_array(std::string_view s) {
    if (s.empty()) throw InputError("border_array: empty sequence");
    std::vector<int> b;
    fill_border_array(s, b);
    return b;
}

int smallest_period(std::string_view s) {
    if (s.empty()) throw InputError("smallest_period: empty sequence");
    std::vector<int> scratch;
    return detail::smallest_period_scratch(s, scratch);
}

int overlap(std::string_view u, std::string_view v) {
    if (u.empty() || v.empty()) throw InputError("overlap: empty sequence");
    return detail::overlap_with_failure(u, v, border_array(v));
}

int prefix_len(std::string_view u, std::string_view v) {
    return static_cast<int>(u.size()) - overlap(u, v);
}

namespace detail {

int smallest_period_scratch(std::string_view s, std::vector<int>& scratch) {
    fill_border_array(s, scratch);
    return static_cast<int>(s.size()) - scratch.back();
}

int overlap_with_failure(std::string_view u, std::string_view v, const std::vector<int>& f) {
    // Run the matching automaton of v over u. The state after consuming all
    // of u is the longest prefix of v that is a suffix of u; a full match of
    // v strictly inside u falls back through the failure links and keeps
    // scanning, so the result is capped at min(|u|, |v|).
    const int n = static_cast<int>(v.size());
    int state = 0;
    for (char c : u) {
        if (state == n) state = f[static_cast<std::size_t>(state) - 1];
        while (state > 0 && v[static_cast<std::size_t>(state)] != c)
            state = f[static_cast<std::size_t>(state) - 1];
        if (v[static_cast<std::size_t>(state)] == c) ++state;
    }
    return state;
}

} // namespace detail

} // namespace sspr
