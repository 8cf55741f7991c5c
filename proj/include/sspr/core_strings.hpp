#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace sspr {

/// Set of admissible read symbols. Validation always happens on
/// upper-cased input, so the tables only contain upper-case letters.
class Alphabet {
public:
    /// DNA bases A, C, G, T.
    static const Alphabet& dna();
    /// DNA bases plus the ambiguity code N (common in real runs).
    static const Alphabet& dna_n();
    /// The 26 letters A..Z (protein sequences).
    static const Alphabet& letters();
    /// Any printable, non-whitespace byte.
    static const Alphabet& any();
    /// Lookup by name ("dna", "dna-n", "letters", "any"); throws InputError on unknown names.
    static const Alphabet& by_name(std::string_view name);

    bool contains(unsigned char c) const { return allowed_[c]; }
    const std::string& name() const { return name_; }

private:
    Alphabet(std::string name, std::string_view symbols);

    std::string name_;
    std::array<bool, 256> allowed_{};
};

/// Upper-cases `s` and checks every symbol against `alphabet`.
/// Throws InputError naming the first offending byte.
std::string normalize_read(std::string s, const Alphabet& alphabet);

/// Failure function: entry k is the length of the longest proper border
/// (prefix that is also a suffix) of the prefix of length k+1.
std::vector<int> border_array(std::string_view s);

/// Least p in [1, |s|] with s[i] == s[i+p] for all valid i.
/// Computed as |s| minus the longest border.
int smallest_period(std::string_view s);

/// Length of the longest suffix of `u` that is a prefix of `v`.
int overlap(std::string_view u, std::string_view v);

/// |u| - overlap(u, v): the part of `u` that does not overlap `v`.
int prefix_len(std::string_view u, std::string_view v);

namespace detail {

/// smallest_period with a caller-provided scratch buffer, for tight loops.
int smallest_period_scratch(std::string_view s, std::vector<int>& scratch);

/// overlap with the failure function of `v` precomputed by the caller.
int overlap_with_failure(std::string_view u, std::string_view v, const std::vector<int>& v_failure);

} // namespace detail

} // namespace sspr
