#include "sspr/read_io.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <unordered_map>
#include <utility>

#include <zlib.h>

#include "sspr/errors.hpp"

namespace sspr {

ReadFormat format_from_name(std::string_view name) {
    if (name == "auto") return ReadFormat::autodetect;
    if (name == "fasta") return ReadFormat::fasta;
    if (name == "fastq") return ReadFormat::fastq;
    if (name == "raw") return ReadFormat::raw_lines;
    throw InputError("unknown format: " + std::string(name));
}

LengthPolicy length_policy_from_name(std::string_view name) {
    if (name == "strict") return LengthPolicy::strict;
    if (name == "filter-to-modal") return LengthPolicy::filter_to_modal;
    throw InputError("unknown length policy: " + std::string(name));
}

ReadSet::ReadSet(std::vector<std::string> reads, std::string source, std::uint64_t dropped)
    : reads_(std::move(reads)), source_(std::move(source)), dropped_(dropped) {
    if (reads_.empty()) throw InputError("no usable reads in " + source_);
    m_ = static_cast<int>(reads_.front().size());
    if (m_ < 1) throw InputError("empty read in " + source_);
    for (std::size_t i = 0; i < reads_.size(); ++i) {
        if (static_cast<int>(reads_[i].size()) != m_)
            throw InputError("read " + std::to_string(i + 1) + " has length " +
                             std::to_string(reads_[i].size()) + ", expected " + std::to_string(m_));
    }
}

namespace {

// ---------------------------------------------------------------------------
// Byte and line sources. Gzip input is inflated incrementally so memory usage
// stays bounded per record even for multi-gigabyte archives.

class ByteSource {
public:
    virtual ~ByteSource() = default;
    virtual std::size_t read(char* dst, std::size_t n) = 0;
};

class StreamByteSource final : public ByteSource {
public:
    StreamByteSource(std::istream& in, std::string preload)
        : in_(in), preload_(std::move(preload)) {}

    std::size_t read(char* dst, std::size_t n) override {
        std::size_t k = 0;
        while (k < n && pos_ < preload_.size()) dst[k++] = preload_[pos_++];
        if (k < n) {
            in_.read(dst + k, static_cast<std::streamsize>(n - k));
            k += static_cast<std::size_t>(in_.gcount());
        }
        return k;
    }

private:
    std::istream& in_;
    std::string preload_;
    std::size_t pos_ = 0;
};

class GzipByteSource final : public ByteSource {
public:
    explicit GzipByteSource(std::unique_ptr<ByteSource> raw) : raw_(std::move(raw)) {
        z_.zalloc = Z_NULL;
        z_.zfree = Z_NULL;
        z_.opaque = Z_NULL;
        z_.next_in = Z_NULL;
        z_.avail_in = 0;
        if (inflateInit2(&z_, 15 + 32) != Z_OK) // zlib or gzip header, auto-detected
            throw InputError("gzip: failed to initialize inflater");
    }

    ~GzipByteSource() override { inflateEnd(&z_); }

    std::size_t read(char* dst, std::size_t n) override {
        z_.next_out = reinterpret_cast<Bytef*>(dst);
        z_.avail_out = static_cast<uInt>(n);
        while (z_.avail_out > 0 && !done_) {
            if (z_.avail_in == 0 && !raw_eof_) {
                const std::size_t got = raw_->read(inbuf_.data(), inbuf_.size());
                raw_eof_ = got == 0;
                z_.next_in = reinterpret_cast<Bytef*>(inbuf_.data());
                z_.avail_in = static_cast<uInt>(got);
            }
            if (member_done_) {
                // Concatenated members (bgzf and friends): reset between them.
                if (z_.avail_in == 0 && raw_eof_) {
                    done_ = true;
                    break;
                }
                if (inflateReset(&z_) != Z_OK) throw InputError("gzip: reset failed");
                member_done_ = false;
            }
            if (z_.avail_in == 0 && raw_eof_) throw InputError("gzip: truncated stream");
            const int rc = inflate(&z_, Z_NO_FLUSH);
            if (rc == Z_STREAM_END)
                member_done_ = true;
            else if (rc != Z_OK && rc != Z_BUF_ERROR)
                throw InputError("gzip: corrupt stream");
            // Z_BUF_ERROR just means no progress was possible; the next pass
            // refills the input or detects truncation.
        }
        return n - z_.avail_out;
    }

private:
    std::unique_ptr<ByteSource> raw_;
    z_stream z_{};
    std::array<char, 64 * 1024> inbuf_{};
    bool raw_eof_ = false;
    bool member_done_ = false;
    bool done_ = false;
};

class LineReader {
public:
    explicit LineReader(ByteSource& src) : src_(src) {}

    // Strips the trailing '\n' and any '\r' before it. Returns false at EOF.
    bool next(std::string& line) {
        line.clear();
        while (true) {
            if (pos_ == len_) {
                len_ = src_.read(buf_.data(), buf_.size());
                pos_ = 0;
                if (len_ == 0) return !line.empty();
            }
            const char* nl = static_cast<const char*>(
                std::memchr(buf_.data() + pos_, '\n', len_ - pos_));
            if (nl) {
                line.append(buf_.data() + pos_, static_cast<std::size_t>(nl - (buf_.data() + pos_)));
                pos_ = static_cast<std::size_t>(nl - buf_.data()) + 1;
                if (!line.empty() && line.back() == '\r') line.pop_back();
                return true;
            }
            line.append(buf_.data() + pos_, len_ - pos_);
            pos_ = len_;
        }
    }

private:
    ByteSource& src_;
    std::array<char, 64 * 1024> buf_{};
    std::size_t pos_ = 0, len_ = 0;
};

// ---------------------------------------------------------------------------
// Record-level parsing.

struct RecordSink {
    const ParseOptions& options;
    std::vector<std::string> reads;
    std::size_t records = 0;

    void add(std::string seq) {
        ++records;
        if (seq.empty()) throw ParseError(records, "empty sequence");
        std::string normalized;
        try {
            normalized = normalize_read(std::move(seq), *options.alphabet);
        } catch (const InputError& e) {
            throw ParseError(records, e.what());
        }
        if (options.length_policy == LengthPolicy::strict && !reads.empty() &&
            normalized.size() != reads.front().size()) {
            throw InputError("record " + std::to_string(records) + ": length " +
                             std::to_string(normalized.size()) + " differs from " +
                             std::to_string(reads.front().size()) +
                             " (length policy strict)");
        }
        reads.push_back(std::move(normalized));
    }
};

void parse_fasta(LineReader& lines, std::string first, RecordSink& sink) {
    std::string line = std::move(first);
    std::string seq;
    bool in_record = false;
    do {
        if (line.empty()) continue;
        if (line[0] == '>') {
            if (in_record) sink.add(std::move(seq));
            seq.clear();
            in_record = true;
        } else {
            if (!in_record) throw ParseError(sink.records + 1, "sequence data before first '>' header");
            seq += line;
        }
    } while (lines.next(line));
    if (in_record) sink.add(std::move(seq));
}

void parse_fastq(LineReader& lines, std::string first, RecordSink& sink) {
    std::string header = std::move(first);
    std::string seq, plus, qual;
    while (true) {
        if (header.empty()) { // tolerate blank lines between records
            if (!lines.next(header)) return;
            continue;
        }
        std::size_t rec = sink.records + 1;
        if (header[0] != '@') throw ParseError(rec, "expected '@' header");
        if (!lines.next(seq)) throw ParseError(rec, "missing sequence line");
        if (!lines.next(plus)) throw ParseError(rec, "missing '+' line");
        if (plus.empty() || plus[0] != '+') throw ParseError(rec, "expected '+' separator");
        if (!lines.next(qual)) throw ParseError(rec, "missing quality line");
        if (qual.size() != seq.size())
            throw ParseError(rec, "quality length " + std::to_string(qual.size()) +
                                      " does not match sequence length " + std::to_string(seq.size()));
        sink.add(std::move(seq)); // quality values are discarded
        if (!lines.next(header)) return;
    }
}

void parse_raw_lines(LineReader& lines, std::string first, RecordSink& sink) {
    std::string line = std::move(first);
    do {
        if (!line.empty()) sink.add(std::move(line));
    } while (lines.next(line));
}

std::vector<std::string> apply_modal_filter(std::vector<std::string> reads, std::uint64_t& dropped) {
    std::map<std::size_t, std::uint64_t> by_length;
    for (const auto& r : reads) ++by_length[r.size()];
    std::size_t modal = 0;
    std::uint64_t best = 0;
    for (const auto& [len, cnt] : by_length) {
        if (cnt > best) { // ties resolve to the smaller length (map order)
            best = cnt;
            modal = len;
        }
    }
    std::vector<std::string> kept;
    kept.reserve(reads.size());
    for (auto& r : reads) {
        if (r.size() == modal) kept.push_back(std::move(r));
    }
    dropped = reads.size() - kept.size();
    return kept;
}

} // namespace

ReadSet parse_reads(std::istream& in, const ParseOptions& options, std::string source_name) {
    // Gzip sniffing: consume up to two bytes and hand them to the byte source.
    std::string magic;
    for (int i = 0; i < 2; ++i) {
        int c = in.get();
        if (c == EOF) break;
        magic.push_back(static_cast<char>(c));
    }
    bool gzipped = magic.size() == 2 && static_cast<unsigned char>(magic[0]) == 0x1f &&
                   static_cast<unsigned char>(magic[1]) == 0x8b;

    std::unique_ptr<ByteSource> source = std::make_unique<StreamByteSource>(in, std::move(magic));
    if (gzipped) source = std::make_unique<GzipByteSource>(std::move(source));

    LineReader lines(*source);
    std::string first;
    while (lines.next(first)) {
        if (!first.empty()) break;
    }
    if (first.empty()) throw InputError("no usable reads in " + source_name);

    ReadFormat format = options.format;
    if (format == ReadFormat::autodetect) {
        if (first[0] == '>')
            format = ReadFormat::fasta;
        else if (first[0] == '@')
            format = ReadFormat::fastq;
        else
            format = ReadFormat::raw_lines;
    }

    RecordSink sink{options, {}, 0};
    switch (format) {
        case ReadFormat::fasta: parse_fasta(lines, std::move(first), sink); break;
        case ReadFormat::fastq: parse_fastq(lines, std::move(first), sink); break;
        case ReadFormat::raw_lines: parse_raw_lines(lines, std::move(first), sink); break;
        case ReadFormat::autodetect: break; // unreachable
    }

    std::uint64_t dropped = 0;
    std::vector<std::string> reads = std::move(sink.reads);
    if (options.length_policy == LengthPolicy::filter_to_modal)
        reads = apply_modal_filter(std::move(reads), dropped);
    if (reads.empty()) throw InputError("no usable reads in " + source_name);
    return ReadSet(std::move(reads), std::move(source_name), dropped);
}

ReadSet parse_reads_file(const std::string& path, const ParseOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    return parse_reads(in, options, path);
}

ReadSet ReadSet::from_strings(std::vector<std::string> reads, const Alphabet& alphabet,
                              LengthPolicy policy, std::string source) {
    RecordSink sink{ParseOptions{ReadFormat::raw_lines, policy, &alphabet}, {}, 0};
    for (auto& r : reads) sink.add(std::move(r));
    std::uint64_t dropped = 0;
    std::vector<std::string> out = std::move(sink.reads);
    if (policy == LengthPolicy::filter_to_modal) out = apply_modal_filter(std::move(out), dropped);
    return ReadSet(std::move(out), std::move(source), dropped);
}

void write_raw_lines(const ReadSet& rs, std::ostream& out) {
    for (const auto& r : rs.reads()) out << r << '\n';
}

DedupeResult dedupe(const ReadSet& rs) {
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(rs.size() * 2);
    std::vector<std::string> distinct;
    std::vector<std::uint64_t> multiplicity;
    for (const auto& r : rs.reads()) {
        auto [it, inserted] = index.try_emplace(r, distinct.size());
        if (inserted) {
            distinct.push_back(r);
            multiplicity.push_back(1);
        } else {
            ++multiplicity[it->second];
        }
    }
    return DedupeResult{ReadSet(std::move(distinct), rs.source(), 0), std::move(multiplicity)};
}

} // namespace sspr
