#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kham/arithmetic.hpp"
#include "kham/cli.hpp"
#include "kham/conditions.hpp"
#include "kham/constructions.hpp"
#include "kham/error.hpp"
#include "kham/graph_io.hpp"
#include "kham/harness.hpp"
#include "kham/isomorphism.hpp"
#include "kham/solver.hpp"

namespace py = pybind11;
using namespace kham;

namespace {

py::dict witness_dict(const NonHamWitness& w) {
    py::dict d;
    d["kind"] = witness_kind(w);
    d["description"] = describe(w);
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, IndependentSetTooLarge>) {
                d["set"] = x.set;
            } else if constexpr (std::is_same_v<T, SmallCut>) {
                d["cut"] = x.cut;
                d["components"] = x.components;
            } else if constexpr (std::is_same_v<T, BipartiteDegreeOne>) {
                d["side_a"] = x.side_a;
                d["vertex"] = x.vertex;
            } else {
                d["nodes"] = x.nodes;
            }
        },
        w);
    return d;
}

std::string report_json(const VerificationReport& r) { return r.to_json().dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Degree thresholds and Hamiltonicity checks for balanced k-partite graphs";

    py::register_exception<GuardExceeded>(m, "GuardExceeded");
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    // InvalidArgument and GraphError derive from std::invalid_argument -> ValueError.

    m.def("theorem_threshold", &theorem_threshold, py::arg("n"), py::arg("k"));
    m.def("is_exception", &is_exception, py::arg("n"), py::arg("k"));
    m.def("required_degree", &required_degree, py::arg("n"), py::arg("k"));
    m.def(
        "cfgjl_bound_parts",
        [](Int n, Int k) {
            const auto r = cfgjl_bound(n, k);
            return std::pair<Int, Int>{r.numerator(), r.denominator()};
        },
        py::arg("n"), py::arg("k"));
    m.def(
        "rounding", [](Int n, Int k) { return std::string(to_string(classify_rounding(n, k))); }, py::arg("n"),
        py::arg("k"));

    py::class_<KPartiteGraph>(m, "Graph")
        .def(py::init([](int n, int k, std::vector<int> part_of, const std::vector<Edge>& edges) {
                 return build_graph(n, k, std::move(part_of), edges);
             }),
             py::arg("n"), py::arg("k"), py::arg("part_of"), py::arg("edges"))
        .def_property_readonly("order", &KPartiteGraph::order)
        .def_property_readonly("part_count", &KPartiteGraph::part_count)
        .def_property_readonly("partition", &KPartiteGraph::partition)
        .def("edges", &KPartiteGraph::edges)
        .def("degree", &KPartiteGraph::degree)
        .def("adjacent", &KPartiteGraph::adjacent)
        .def("min_degree", [](const KPartiteGraph& g) { return min_degree(g); })
        .def("encode", [](const KPartiteGraph& g) { return encode(g); })
        .def("graph6", [](const KPartiteGraph& g) { return to_graph6(g); })
        .def("dot", [](const KPartiteGraph& g) { return export_dot(g); })
        .def("__eq__", [](const KPartiteGraph& a, const KPartiteGraph& b) { return a == b; })
        .def("__repr__", [](const KPartiteGraph& g) {
            return "<Graph n=" + std::to_string(g.order()) + " k=" + std::to_string(g.part_count()) +
                   " edges=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("decode", [](const std::string& text) { return decode(text); }, py::arg("text"));
    m.def("from_graph6", [](const std::string& text) { return from_graph6(text); }, py::arg("text"));
    m.def("block_partition", &block_partition, py::arg("n"), py::arg("k"));

    m.def(
        "build_family", [](const std::string& spec) { return build_family(parse_family_spec(spec)); },
        py::arg("spec"));
    m.def("build_f2", &build_F2);
    m.def(
        "recognize", [](const KPartiteGraph& g) { return to_string(recognize(g)); }, py::arg("graph"));
    m.def(
        "isomorphic", [](const KPartiteGraph& a, const KPartiteGraph& b, bool parts) { return isomorphic(a, b, parts); },
        py::arg("a"), py::arg("b"), py::arg("respect_parts") = true);

    m.def(
        "hamiltonian_cycle",
        [](const KPartiteGraph& g) -> std::optional<std::vector<int>> {
            py::gil_scoped_release release;
            const auto c = find_hamiltonian_cycle(g);
            if (!c) return std::nullopt;
            return c->vertices;
        },
        py::arg("graph"));
    m.def(
        "non_hamiltonicity_witness",
        [](const KPartiteGraph& g) -> py::object {
            std::optional<NonHamWitness> w;
            {
                py::gil_scoped_release release;
                w = non_hamiltonicity_witness(g);
            }
            if (!w) return py::none();
            return witness_dict(*w);
        },
        py::arg("graph"));
    m.def(
        "independence_number", [](const KPartiteGraph& g) { return independence_number(g); }, py::arg("graph"));
    m.def(
        "vertex_connectivity", [](const KPartiteGraph& g) { return vertex_connectivity(g); }, py::arg("graph"));
    m.def(
        "chvatal_condition", [](const KPartiteGraph& h, int v_side) { return chvatal_bipartite_condition(h, v_side); },
        py::arg("graph"), py::arg("v_side") = 1);

    m.def(
        "exhaustive_report",
        [](int n, int k, std::optional<int> floor, int shard, int shards, int jobs, int list_cap) {
            ExhaustiveOptions o;
            o.n = n;
            o.k = k;
            o.floor = floor;
            o.shard = {shard, shards};
            o.jobs = jobs;
            o.list_cap = list_cap;
            py::gil_scoped_release release;
            return report_json(exhaustive_verify(o));
        },
        py::arg("n"), py::arg("k"), py::arg("floor") = py::none(), py::arg("shard") = 0, py::arg("shards") = 1,
        py::arg("jobs") = 1, py::arg("list_cap") = 100);
    m.def(
        "sample_report",
        [](int n, int k, std::int64_t trials, std::uint64_t seed, std::optional<int> floor) {
            SampleOptions o;
            o.n = n;
            o.k = k;
            o.trials = trials;
            o.seed = seed;
            o.floor = floor;
            py::gil_scoped_release release;
            return report_json(sample_verify(o));
        },
        py::arg("n"), py::arg("k"), py::arg("trials"), py::arg("seed"), py::arg("floor") = py::none());
    m.def(
        "characterization_report",
        [](int n, int k, int jobs) {
            CharacterizationOptions o;
            o.n = n;
            o.k = k;
            o.jobs = jobs;
            py::gil_scoped_release release;
            return report_json(characterization_check(o));
        },
        py::arg("n") = 8, py::arg("k") = 4, py::arg("jobs") = 1);
    m.def(
        "facts_report", [](Int k_max, Int m_max) { return report_json(facts_report(k_max, m_max)); },
        py::arg("k_max"), py::arg("m_max"));

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "kham");
            std::vector<const char*> argv;
            for (const auto& a : args) argv.push_back(a.c_str());
            std::ostringstream out, err;
            const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
