// sspr: period statistics, guaranteed-ratio analysis, and cycle-cover
// superstring assembly for uniform-length reads.

#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sspr/assembler.hpp"
#include "sspr/core_strings.hpp"
#include "sspr/cycle_cover.hpp"
#include "sspr/errors.hpp"
#include "sspr/oracle.hpp"
#include "sspr/overlap_graph.hpp"
#include "sspr/period_stats.hpp"
#include "sspr/read_io.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;
constexpr int kSchemaVersion = 1;

// Exact rational ("38/63", "1/2") or a plain decimal in (0, 1].
struct Fraction {
    std::string text = "1/2";
    double value = 0.5;
};

Fraction parse_fraction(const std::string& text) {
    Fraction f;
    f.text = text;
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            const long long num = std::stoll(text.substr(0, slash));
            const long long den = std::stoll(text.substr(slash + 1));
            if (den == 0) throw sspr::InputError("zero denominator in " + text);
            f.value = static_cast<double>(num) / static_cast<double>(den);
        } else {
            f.value = std::stod(text);
        }
    } catch (const std::logic_error&) {
        throw sspr::InputError("cannot parse '" + text + "' as a fraction or decimal");
    }
    if (!(f.value > 0.0) || f.value > 1.0)
        throw sspr::InputError("value " + text + " out of range (0, 1]");
    return f;
}

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw sspr::InputError("cannot write " + path);
    return out;
}

void check_distinct_paths(const std::vector<std::string>& paths) {
    std::set<std::string> seen;
    for (const auto& p : paths) {
        if (p.empty()) continue;
        if (!seen.insert(p).second)
            throw sspr::InputError("output/input path used twice: " + p);
    }
}

struct InputFlags {
    std::string path;
    std::string format = "auto";
    std::string length_policy = "strict";
    std::string alphabet = "any";

    void attach(CLI::App* cmd) {
        cmd->add_option("--input", path, "Input read file (gzip auto-detected)")->required();
        cmd->add_option("--format", format, "Input format")
            ->check(CLI::IsMember({"auto", "fasta", "fastq", "raw"}))
            ->capture_default_str();
        cmd->add_option("--length-policy", length_policy,
                        "How to handle reads whose length differs")
            ->check(CLI::IsMember({"strict", "filter-to-modal"}))
            ->capture_default_str();
        cmd->add_option("--alphabet", alphabet, "Symbol validation")
            ->check(CLI::IsMember({"any", "dna", "dna-n", "letters"}))
            ->capture_default_str();
    }

    sspr::ReadSet load() const {
        sspr::ParseOptions options;
        options.format = sspr::format_from_name(format);
        options.length_policy = sspr::length_policy_from_name(length_policy);
        options.alphabet = &sspr::Alphabet::by_name(alphabet);
        return sspr::parse_reads_file(path, options);
    }
};

void write_ratio_table_tsv(const std::vector<sspr::RatioRow>& table, std::ostream& out) {
    out << "period\tnbseq\tcum_nbseq\talpha\tnaive_bound\tlarge_term\tsmall_term\tbeta\n";
    for (const auto& r : table) {
        out << r.period << '\t' << r.nbseq << '\t' << r.cum_nbseq << '\t' << fmt_g(r.alpha)
            << '\t' << fmt_g(r.naive_bound) << '\t' << fmt_g(r.large_term) << '\t'
            << fmt_g(r.small_term) << '\t' << fmt_g(r.beta) << '\n';
    }
}

void write_plot_csv(const std::vector<sspr::PlotRow>& rows, std::ostream& out) {
    out << "period,count,cum_sp,v_line,h_line\n";
    for (const auto& r : rows) {
        out << r.period << ',' << r.count << ',' << fmt_g(r.cum_sp) << ',' << fmt_g(r.v_line)
            << ',' << fmt_g(r.h_line) << '\n';
    }
}

json row_to_json(const sspr::RatioRow& r) {
    return json{{"period", r.period},
                {"nbseq", r.nbseq},
                {"cum_nbseq", r.cum_nbseq},
                {"alpha", r.alpha},
                {"sp", r.sp},
                {"naive_bound", r.naive_bound},
                {"large_term", r.large_term},
                {"small_term", r.small_term},
                {"beta", r.beta}};
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
    InputFlags input;
    std::string c_text = "38/63";
    std::string stats_on = "raw";
    std::string table_path, plot_path, json_path;
    bool suppress_empty = false;
    bool no_timestamp = false;
    int threads = 0;
};

int cmd_analyze(const AnalyzeArgs& args) {
    const Fraction c = parse_fraction(args.c_text);
    check_distinct_paths({args.input.path, args.table_path, args.plot_path, args.json_path});

    const sspr::ReadSet raw = args.input.load();
    std::uint64_t distinct = 0;
    sspr::PeriodHistogram hist;
    if (args.stats_on == "dedup") {
        const auto dd = sspr::dedupe(raw);
        distinct = dd.reads.size();
        hist = sspr::histogram(dd.reads, args.threads);
    } else {
        hist = sspr::histogram(raw, args.threads);
    }

    const auto table = sspr::ratio_table(hist, c.value, args.suppress_empty);
    const auto selected = sspr::select_alpha(table);

    if (!args.table_path.empty()) {
        auto out = open_out(args.table_path);
        write_ratio_table_tsv(table, out);
    }
    if (!args.plot_path.empty()) {
        auto out = open_out(args.plot_path);
        write_plot_csv(sspr::plot_data(hist, selected), out);
    }
    if (!args.json_path.empty()) {
        json report{{"schema_version", kSchemaVersion},
                    {"command", "analyze"},
                    {"input", args.input.path},
                    {"n", hist.n},
                    {"m", hist.m},
                    {"c", c.text},
                    {"c_value", c.value},
                    {"stats_on", args.stats_on},
                    {"dropped_by_length_filter", raw.dropped()},
                    {"selected", row_to_json(selected)}};
        if (args.stats_on == "dedup") report["distinct_reads"] = distinct;
        if (!args.no_timestamp) report["timestamp"] = utc_timestamp();
        auto out = open_out(args.json_path);
        out << report.dump(2) << '\n';
    }

    std::cout << "n=" << hist.n << " m=" << hist.m << " c=" << c.text << '\n';
    std::cout << "selected: period=" << selected.period << " alpha=" << fmt_g(selected.alpha)
              << " beta=" << fmt_g(selected.beta) << " (naive_bound=" << fmt_g(selected.naive_bound)
              << " large_term=" << fmt_g(selected.large_term)
              << " small_term=" << fmt_g(selected.small_term) << ")\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct AssembleArgs {
    InputFlags input;
    std::string alpha_text = "auto";
    std::string c_text = "1/2";
    std::string cover = "auto";
    std::string tau_path, stats_path, dump_graph_path, dump_cover_path;
    bool raw_tau = false;
    bool no_timestamp = false;
    int threads = 0;
    std::size_t max_graph = 4096;
    std::size_t max_exact = 1024;
};

json stats_to_json(const sspr::AssemblyStats& s, const Fraction& c, bool verified) {
    return json{{"schema_version", kSchemaVersion},
                {"n", s.n},
                {"m", s.m},
                {"alpha", s.alpha},
                {"c", c.text},
                {"c_value", s.c},
                {"wt_C", s.wt_c},
                {"cycles_small", s.cycles_small},
                {"cycles_large", s.cycles_large},
                {"w_sigma_len", s.w_sigma_len},
                {"tau_len", s.tau_len},
                {"sp", s.sp_used},
                {"beta_bound", s.beta_bound},
                {"contained_dropped", s.contained_dropped},
                {"verified", verified}};
}

void write_tau(const std::string& tau, const AssembleArgs& args) {
    const bool to_file = !args.tau_path.empty();
    std::ofstream file;
    if (to_file) file = open_out(args.tau_path);
    std::ostream& out = to_file ? static_cast<std::ostream&>(file) : std::cout;
    if (args.raw_tau) {
        out << tau << '\n';
    } else {
        out << ">tau len=" << tau.size() << '\n';
        for (std::size_t at = 0; at < tau.size(); at += 80)
            out << std::string_view(tau).substr(at, 80) << '\n';
    }
}

int cmd_assemble(const AssembleArgs& args) {
    const Fraction c = parse_fraction(args.c_text);
    check_distinct_paths({args.input.path, args.tau_path, args.stats_path, args.dump_graph_path,
                          args.dump_cover_path});

    const sspr::ReadSet raw = args.input.load();
    const sspr::DedupeResult dd = sspr::dedupe(raw);
    const sspr::ReadSet& reads = dd.reads;

    if (reads.size() == 1) {
        // Degenerate after dedup: the single read is its own superstring.
        const std::string& tau = reads[0];
        json stats{{"schema_version", kSchemaVersion},
                   {"n", 1},
                   {"m", reads.length()},
                   {"alpha", 1.0},
                   {"c", c.text},
                   {"c_value", c.value},
                   {"wt_C", 0},
                   {"cycles_small", 0},
                   {"cycles_large", 0},
                   {"w_sigma_len", tau.size()},
                   {"tau_len", tau.size()},
                   {"sp", 0.0},
                   {"beta_bound", 1.0},
                   {"contained_dropped", 0},
                   {"verified", true},
                   {"degenerate", "single distinct read; returned verbatim"}};
        if (!args.no_timestamp) stats["timestamp"] = utc_timestamp();
        if (!args.stats_path.empty()) open_out(args.stats_path) << stats.dump(2) << '\n';
        write_tau(tau, args);
        std::cerr << "note: single distinct read after dedup; tau is the read itself\n";
        return kExitOk;
    }

    sspr::AssembleOptions options;
    options.c = c.value;
    options.threads = args.threads;
    options.graph.max_vertices = args.max_graph;
    options.graph.threads = args.threads;
    options.max_exact = args.max_exact;
    if (args.alpha_text != "auto") {
        try {
            options.alpha = std::stod(args.alpha_text);
        } catch (const std::logic_error&) {
            throw sspr::InputError("--alpha must be 'auto' or a number, got " + args.alpha_text);
        }
    }
    if (args.cover == "exact")
        options.backend = sspr::CoverBackend::exact;
    else if (args.cover == "greedy")
        options.backend = sspr::CoverBackend::greedy;
    else // auto: exact while the cubic solver stays cheap
        options.backend = reads.size() <= 256 ? sspr::CoverBackend::exact
                                              : sspr::CoverBackend::greedy;

    const sspr::Assembly assembly = sspr::assemble(reads, options);
    const sspr::VerifyReport report = sspr::verify(assembly.tau, reads);

    if (!args.dump_graph_path.empty()) {
        auto out = open_out(args.dump_graph_path);
        sspr::dump_graph_tsv(sspr::build_prefix_graph(reads, options.graph), out);
    }
    if (!args.dump_cover_path.empty()) {
        const sspr::PrefixGraph g = sspr::build_prefix_graph(reads, options.graph);
        const sspr::CycleCover cover = options.backend == sspr::CoverBackend::exact
                                           ? sspr::exact_cover(g, options.max_exact)
                                           : sspr::greedy_cover(g);
        json jc{{"total_weight", cover.total_weight},
                {"cycles", cover.cycles},
                {"cycle_weights", cover.cycle_weights}};
        open_out(args.dump_cover_path) << jc.dump(2) << '\n';
    }

    json stats = stats_to_json(assembly.stats, c, report.pass);
    if (!args.no_timestamp) stats["timestamp"] = utc_timestamp();
    if (!args.stats_path.empty()) open_out(args.stats_path) << stats.dump(2) << '\n';

    write_tau(assembly.tau, args);
    std::cerr << "tau_len=" << assembly.stats.tau_len << " wt_C=" << assembly.stats.wt_c
              << " cycles=" << assembly.stats.cycles_small + assembly.stats.cycles_large
              << " alpha=" << fmt_g(assembly.stats.alpha)
              << " beta_bound=" << fmt_g(assembly.stats.beta_bound)
              << " verified=" << (report.pass ? "yes" : "NO") << '\n';
    return report.pass ? kExitOk : kExitVerifyFail;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string superstring_path;
    InputFlags reads;
    std::string json_path;
};

std::string load_superstring(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sspr::InputError("cannot open " + path);
    std::string line, tau;
    bool fasta = false;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first && !line.empty() && line[0] == '>') {
            fasta = true;
            first = false;
            continue;
        }
        first = false;
        if (fasta && !line.empty() && line[0] == '>')
            throw sspr::InputError(path + ": expected a single-record FASTA file");
        tau += line;
    }
    if (tau.empty()) throw sspr::InputError(path + ": empty superstring");
    for (char& ch : tau) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return tau;
}

int cmd_verify(const VerifyArgs& args) {
    const std::string tau = load_superstring(args.superstring_path);
    const sspr::ReadSet reads = args.reads.load();
    const sspr::VerifyReport report = sspr::verify(tau, reads);

    json missing = json::array();
    for (std::uint32_t idx : report.missing)
        missing.push_back(json{{"index", idx}, {"read", reads[idx]}});
    json result{{"schema_version", kSchemaVersion},
                {"pass", report.pass},
                {"n", reads.size()},
                {"tau_len", tau.size()},
                {"missing", missing}};
    if (!args.json_path.empty())
        open_out(args.json_path) << result.dump(2) << '\n';
    else
        std::cout << result.dump(2) << '\n';
    return report.pass ? kExitOk : kExitVerifyFail;
}

// ---------------------------------------------------------------------------

struct OracleArgs {
    InputFlags input;
    std::string mode = "ssp";
    std::size_t limit = 0; // 0 = per-mode default
};

// The ssp oracle accepts strings of any lengths, so raw/fasta inputs bypass
// the uniform-length ReadSet.
std::vector<std::string> load_loose_strings(const InputFlags& flags) {
    sspr::ParseOptions options;
    options.format = sspr::format_from_name(flags.format);
    options.length_policy = sspr::LengthPolicy::strict;
    options.alphabet = &sspr::Alphabet::by_name(flags.alphabet);
    std::ifstream in(flags.path, std::ios::binary);
    if (!in) throw sspr::InputError("cannot open " + flags.path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '>' || line[0] == '@')
            throw sspr::InputError("oracle --mode ssp expects raw-lines input");
        out.push_back(sspr::normalize_read(line, *options.alphabet));
    }
    if (out.empty()) throw sspr::InputError("no usable reads in " + flags.path);
    return out;
}

int cmd_oracle(const OracleArgs& args) {
    json result{{"schema_version", kSchemaVersion}, {"mode", args.mode}};
    if (args.mode == "ssp") {
        const auto strings = load_loose_strings(args.input);
        const auto r = sspr::oracle::exact_ssp(strings, args.limit ? args.limit : 12);
        result["n_input"] = strings.size();
        result["opt_length"] = r.length;
        result["witness"] = r.witness;
    } else { // cycle-cover
        const sspr::ReadSet reads = args.input.load();
        const auto dd = sspr::dedupe(reads);
        const auto g = sspr::build_prefix_graph(dd.reads);
        const auto r = sspr::oracle::brute_cycle_cover(g, args.limit ? args.limit : 8);
        result["n"] = dd.reads.size();
        result["weight"] = r.weight;
        result["cycles"] = r.cycles;
    }
    std::cout << result.dump(2) << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"period statistics and cycle-cover superstring assembly for uniform-length reads"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand(
        "analyze", "Period histogram, guaranteed-ratio table, and alpha selection");
    analyze_args.input.attach(analyze);
    analyze->add_option("--c", analyze_args.c_text, "Compression factor (fraction or decimal)")
        ->capture_default_str();
    analyze->add_option("--stats-on", analyze_args.stats_on,
                        "Compute statistics on the raw multiset or the deduplicated set")
        ->check(CLI::IsMember({"raw", "dedup"}))
        ->capture_default_str();
    analyze->add_option("--out", analyze_args.table_path, "Ratio table TSV output path");
    analyze->add_option("--plot", analyze_args.plot_path, "Plot data CSV output path");
    analyze->add_option("--json", analyze_args.json_path, "JSON report output path");
    analyze->add_flag("--suppress-empty-rows", analyze_args.suppress_empty,
                      "Omit table rows with zero reads");
    analyze->add_flag("--no-timestamp", analyze_args.no_timestamp,
                      "Omit the timestamp field from the JSON report");
    analyze->add_option("--threads", analyze_args.threads, "Worker threads (0 = all cores)");

    AssembleArgs assemble_args;
    auto* assemble = app.add_subcommand("assemble", "Cycle-cover superstring assembly");
    assemble_args.input.attach(assemble);
    assemble->add_option("--alpha", assemble_args.alpha_text,
                         "'auto' (minimize beta) or an explicit value in (0, 1]")
        ->capture_default_str();
    assemble->add_option("--c", assemble_args.c_text,
                         "Compression factor of the executed compression step")
        ->capture_default_str();
    assemble->add_option("--cover", assemble_args.cover, "Cycle cover backend")
        ->check(CLI::IsMember({"auto", "exact", "greedy"}))
        ->capture_default_str();
    assemble->add_option("--out", assemble_args.tau_path,
                         "Superstring output path (default: stdout)");
    assemble->add_flag("--raw-tau", assemble_args.raw_tau, "Write tau as raw text, not FASTA");
    assemble->add_option("--stats", assemble_args.stats_path, "Stats JSON output path");
    assemble->add_option("--dump-graph", assemble_args.dump_graph_path,
                         "Debug: prefix graph TSV output path");
    assemble->add_option("--dump-cover", assemble_args.dump_cover_path,
                         "Debug: cycle cover JSON output path");
    assemble->add_option("--max-graph", assemble_args.max_graph,
                         "Vertex cap for the dense prefix graph")
        ->capture_default_str();
    assemble->add_option("--max-exact", assemble_args.max_exact,
                         "Vertex cap for the exact cover backend")
        ->capture_default_str();
    assemble->add_flag("--no-timestamp", assemble_args.no_timestamp,
                       "Omit the timestamp field from the stats JSON");
    assemble->add_option("--threads", assemble_args.threads, "Worker threads (0 = all cores)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Check that every read occurs in a superstring");
    verify->add_option("--superstring", verify_args.superstring_path,
                       "Superstring file (raw text or single-record FASTA)")
        ->required();
    verify_args.reads.attach(verify);
    verify->get_option("--input")->description("Read file the superstring must cover");
    verify->add_option("--json", verify_args.json_path, "Write the JSON result here instead of stdout");

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "Exact brute-force ground truth (small inputs)");
    oracle_args.input.attach(oracle);
    oracle->add_option("--mode", oracle_args.mode, "ssp = optimal superstring, cycle-cover = optimal cover")
        ->check(CLI::IsMember({"ssp", "cycle-cover"}))
        ->capture_default_str();
    oracle->add_option("--limit", oracle_args.limit,
                       "Max strings/vertices (default 12 for ssp, 8 for cycle-cover)");

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) return cmd_analyze(analyze_args);
        if (assemble->parsed()) return cmd_assemble(assemble_args);
        if (verify->parsed()) return cmd_verify(verify_args);
        if (oracle->parsed()) return cmd_oracle(oracle_args);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    } catch (const sspr::CapacityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const sspr::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}
