#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sspr/assembler.hpp"
#include "sspr/core_strings.hpp"
#include "sspr/cycle_cover.hpp"
#include "sspr/errors.hpp"
#include "sspr/oracle.hpp"
#include "sspr/overlap_graph.hpp"
#include "sspr/period_stats.hpp"
#include "sspr/read_io.hpp"

namespace py = pybind11;

namespace {

sspr::ReadSet read_set_from_list(const std::vector<std::string>& reads,
                                 const std::string& alphabet) {
    return sspr::ReadSet::from_strings(reads, sspr::Alphabet::by_name(alphabet),
                                       sspr::LengthPolicy::strict, "<python>");
}

std::vector<std::vector<int>> weights_of(const sspr::PrefixGraph& g) {
    std::vector<std::vector<int>> w(static_cast<std::size_t>(g.order()),
                                    std::vector<int>(static_cast<std::size_t>(g.order())));
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j)
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g.weight(i, j);
    return w;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Period statistics and cycle-cover superstring assembly for uniform-length reads";

    py::register_exception<sspr::InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<sspr::CapacityError>(m, "CapacityError", PyExc_RuntimeError);

    // String primitives.
    m.def("border_array", &sspr::border_array, py::arg("s"));
    m.def("smallest_period", &sspr::smallest_period, py::arg("s"));
    m.def("overlap", &sspr::overlap, py::arg("u"), py::arg("v"));
    m.def("prefix_len", &sspr::prefix_len, py::arg("u"), py::arg("v"));
    m.def("naive_period", &sspr::oracle::naive_period, py::arg("s"));
    m.def("naive_overlap", &sspr::oracle::naive_overlap, py::arg("u"), py::arg("v"));

    py::class_<sspr::ReadSet>(m, "ReadSet")
        .def(py::init(&read_set_from_list), py::arg("reads"), py::arg("alphabet") = "any")
        .def_property_readonly("n", &sspr::ReadSet::size)
        .def_property_readonly("m", &sspr::ReadSet::length)
        .def_property_readonly("reads", &sspr::ReadSet::reads)
        .def("__len__", &sspr::ReadSet::size)
        .def("__getitem__",
             [](const sspr::ReadSet& rs, std::size_t i) {
                 if (i >= rs.size()) throw py::index_error();
                 return rs[i];
             });

    m.def(
        "parse_reads_file",
        [](const std::string& path, const std::string& format, const std::string& policy,
           const std::string& alphabet) {
            sspr::ParseOptions options;
            options.format = sspr::format_from_name(format);
            options.length_policy = sspr::length_policy_from_name(policy);
            options.alphabet = &sspr::Alphabet::by_name(alphabet);
            return sspr::parse_reads_file(path, options);
        },
        py::arg("path"), py::arg("format") = "auto", py::arg("policy") = "strict",
        py::arg("alphabet") = "any");

    m.def("dedupe", [](const sspr::ReadSet& rs) {
        auto dd = sspr::dedupe(rs);
        return py::make_tuple(std::move(dd.reads), std::move(dd.multiplicity));
    });

    // Period statistics.
    py::class_<sspr::PeriodHistogram>(m, "PeriodHistogram")
        .def_readonly("m", &sspr::PeriodHistogram::m)
        .def_readonly("n", &sspr::PeriodHistogram::n)
        .def_readonly("counts", &sspr::PeriodHistogram::counts)
        .def("count", &sspr::PeriodHistogram::count, py::arg("period"));

    py::class_<sspr::RatioRow>(m, "RatioRow")
        .def_readonly("period", &sspr::RatioRow::period)
        .def_readonly("nbseq", &sspr::RatioRow::nbseq)
        .def_readonly("cum_nbseq", &sspr::RatioRow::cum_nbseq)
        .def_readonly("alpha", &sspr::RatioRow::alpha)
        .def_readonly("sp", &sspr::RatioRow::sp)
        .def_readonly("naive_bound", &sspr::RatioRow::naive_bound)
        .def_readonly("large_term", &sspr::RatioRow::large_term)
        .def_readonly("small_term", &sspr::RatioRow::small_term)
        .def_readonly("beta", &sspr::RatioRow::beta)
        .def_readonly("c", &sspr::RatioRow::c);

    m.def("histogram", &sspr::histogram, py::arg("reads"), py::arg("threads") = 0);
    m.def("sp", &sspr::sp, py::arg("histogram"), py::arg("alpha"));
    m.def("beta", &sspr::beta, py::arg("histogram"), py::arg("alpha"), py::arg("c"));
    m.def("ratio_table", &sspr::ratio_table, py::arg("histogram"), py::arg("c"),
          py::arg("suppress_empty") = false);
    m.def("select_alpha", &sspr::select_alpha, py::arg("table"));

    // Prefix graph and cycle covers.
    py::class_<sspr::PrefixGraph>(m, "PrefixGraph")
        .def_property_readonly("n", &sspr::PrefixGraph::order)
        .def_property_readonly("m", &sspr::PrefixGraph::read_length)
        .def("weight", &sspr::PrefixGraph::weight, py::arg("i"), py::arg("j"))
        .def_property_readonly("weights", &weights_of);

    m.def(
        "build_prefix_graph",
        [](const sspr::ReadSet& rs, const std::string& backend, std::size_t max_vertices) {
            sspr::GraphOptions options;
            options.max_vertices = max_vertices;
            if (backend == "naive") return sspr::build_naive(rs, options);
            if (backend == "indexed") return sspr::build_indexed(rs, options);
            return sspr::build_prefix_graph(rs, options);
        },
        py::arg("reads"), py::arg("backend") = "auto", py::arg("max_vertices") = 4096);

    py::class_<sspr::CycleCover>(m, "CycleCover")
        .def_readonly("cycles", &sspr::CycleCover::cycles)
        .def_readonly("cycle_weights", &sspr::CycleCover::cycle_weights)
        .def_readonly("total_weight", &sspr::CycleCover::total_weight);

    m.def("exact_cover", &sspr::exact_cover, py::arg("graph"), py::arg("max_vertices") = 1024);
    m.def("greedy_cover", &sspr::greedy_cover, py::arg("graph"));

    // Assembly.
    py::class_<sspr::AssemblyStats>(m, "AssemblyStats")
        .def_readonly("n", &sspr::AssemblyStats::n)
        .def_readonly("m", &sspr::AssemblyStats::m)
        .def_readonly("alpha", &sspr::AssemblyStats::alpha)
        .def_readonly("c", &sspr::AssemblyStats::c)
        .def_readonly("wt_C", &sspr::AssemblyStats::wt_c)
        .def_readonly("cycles_small", &sspr::AssemblyStats::cycles_small)
        .def_readonly("cycles_large", &sspr::AssemblyStats::cycles_large)
        .def_readonly("w_sigma_len", &sspr::AssemblyStats::w_sigma_len)
        .def_readonly("tau_len", &sspr::AssemblyStats::tau_len)
        .def_readonly("sp", &sspr::AssemblyStats::sp_used)
        .def_readonly("beta_bound", &sspr::AssemblyStats::beta_bound);

    py::class_<sspr::Assembly>(m, "Assembly")
        .def_readonly("sigma_strings", &sspr::Assembly::sigma_strings)
        .def_readonly("w_sigma_len", &sspr::Assembly::w_sigma_len)
        .def_readonly("tau", &sspr::Assembly::tau)
        .def_readonly("stats", &sspr::Assembly::stats);

    m.def(
        "assemble",
        [](const sspr::ReadSet& deduped, py::object alpha, double c, const std::string& cover) {
            sspr::AssembleOptions options;
            if (!alpha.is_none()) options.alpha = alpha.cast<double>();
            options.c = c;
            options.backend =
                cover == "greedy" ? sspr::CoverBackend::greedy : sspr::CoverBackend::exact;
            return sspr::assemble(deduped, options);
        },
        py::arg("deduped"), py::arg("alpha") = py::none(), py::arg("c") = 0.5,
        py::arg("cover") = "exact");

    m.def("greedy_compress",
          [](std::vector<std::string> strings) { return sspr::greedy_compress(std::move(strings)); },
          py::arg("strings"));

    m.def(
        "verify",
        [](const std::string& tau, const sspr::ReadSet& rs) {
            const auto report = sspr::verify(tau, rs);
            return py::make_tuple(report.pass, report.missing);
        },
        py::arg("tau"), py::arg("reads"));

    // Oracles.
    m.def(
        "exact_ssp",
        [](std::vector<std::string> strings, std::size_t limit) {
            const auto r = sspr::oracle::exact_ssp(std::move(strings), limit);
            return py::make_tuple(r.length, r.witness);
        },
        py::arg("strings"), py::arg("limit") = 12);

    m.def(
        "brute_cycle_cover",
        [](const sspr::PrefixGraph& g, std::size_t limit) {
            const auto r = sspr::oracle::brute_cycle_cover(g, limit);
            return py::make_tuple(r.weight, r.cycles);
        },
        py::arg("graph"), py::arg("limit") = 8);
}
