#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sspr/core_strings.hpp"

namespace sspr {

enum class ReadFormat { autodetect, fasta, fastq, raw_lines };

/// What to do with records whose length differs from the rest of the file.
enum class LengthPolicy {
    strict,          // error naming the offending record
    filter_to_modal, // keep reads of the most frequent length, count the rest as dropped
};

ReadFormat format_from_name(std::string_view name);
LengthPolicy length_policy_from_name(std::string_view name);

/// The input universe: n reads of uniform length m, in input order.
/// Immutable after construction.
class ReadSet {
public:
    /// `reads` must be nonempty, with every read nonempty and of equal length.
    /// Symbols are expected to be normalized already (see normalize_read).
    ReadSet(std::vector<std::string> reads, std::string source, std::uint64_t dropped = 0);

    /// Normalizes, validates, and applies the length policy. Entry point for
    /// in-memory read lists (tests, bindings).
    static ReadSet from_strings(std::vector<std::string> reads,
                                const Alphabet& alphabet = Alphabet::any(),
                                LengthPolicy policy = LengthPolicy::strict,
                                std::string source = "<memory>");

    std::size_t size() const { return reads_.size(); }
    int length() const { return m_; }
    const std::string& operator[](std::size_t i) const { return reads_[i]; }
    const std::vector<std::string>& reads() const { return reads_; }
    const std::string& source() const { return source_; }
    /// Reads removed by LengthPolicy::filter_to_modal.
    std::uint64_t dropped() const { return dropped_; }

private:
    std::vector<std::string> reads_;
    std::string source_;
    int m_ = 0;
    std::uint64_t dropped_ = 0;
};

struct ParseOptions {
    ReadFormat format = ReadFormat::autodetect;
    LengthPolicy length_policy = LengthPolicy::strict;
    const Alphabet* alphabet = &Alphabet::any();
};

/// Parses FASTA / FASTQ / raw-lines input. Gzip streams are detected by the
/// 1f 8b magic bytes and inflated on the fly (multi-member files included).
/// FASTQ quality lines are length-checked and then discarded.
ReadSet parse_reads(std::istream& in, const ParseOptions& options = {},
                    std::string source_name = "<stream>");

ReadSet parse_reads_file(const std::string& path, const ParseOptions& options = {});

/// One read per line. Re-parsing the output as raw-lines round-trips the set.
void write_raw_lines(const ReadSet& rs, std::ostream& out);

struct DedupeResult {
    ReadSet reads;                         // distinct reads, first-occurrence order
    std::vector<std::uint64_t> multiplicity; // aligned with reads; sums to the input n
};

DedupeResult dedupe(const ReadSet& rs);

} // namespace sspr
