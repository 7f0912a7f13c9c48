// Python bindings. Structured results cross the boundary as JSON text and
// are decoded by the pure-Python wrapper.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sepcol/constructions.hpp"
#include "sepcol/experiments.hpp"
#include "sepcol/io.hpp"

namespace py = pybind11;
using namespace sepcol;

namespace {

Budget make_budget(std::uint64_t nodes, std::uint64_t instances, double seconds,
                   std::uint64_t samples, std::uint64_t seed, int workers)
{
    Budget b;
    b.nodes = nodes;
    b.instances = instances;
    b.seconds = seconds;
    b.samples = samples;
    b.seed = seed;
    b.workers = workers;
    return b;
}

std::vector<InvariantKind> parse_kinds(const std::vector<std::string>& names)
{
    std::vector<InvariantKind> kinds;
    if (names.empty())
        return {kAllInvariants.begin(), kAllInvariants.end()};
    for (const auto& n : names)
        kinds.push_back(invariant_kind_from_string(n));
    return kinds;
}

}  // namespace

PYBIND11_MODULE(_sepcol, m)
{
    m.doc() = "Exact colouring invariants of small multigraphs";
    m.attr("__version__") = SEPCOL_VERSION;

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    py::class_<Multigraph>(m, "Multigraph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 Multigraph g(n);
                 for (auto [u, v] : edges)
                     g.add_edge(u, v);
                 return g;
             }),
             py::arg("n"), py::arg("edges"))
        .def("add_edge", &Multigraph::add_edge)
        .def_property_readonly("num_vertices", &Multigraph::num_vertices)
        .def_property_readonly("num_edges", &Multigraph::num_edges)
        .def_property_readonly("edges",
                               [](const Multigraph& g) {
                                   std::vector<std::pair<int, int>> out;
                                   for (const Edge& e : g.edges())
                                       out.emplace_back(e.u, e.v);
                                   return out;
                               })
        .def("to_text", [](const Multigraph& g) { return to_text(g); })
        .def("hash", [](const Multigraph& g) { return graph_hash(g); })
        .def("__eq__", [](const Multigraph& a, const Multigraph& b) { return a == b; })
        .def("__repr__", [](const Multigraph& g) {
            return "<Multigraph n=" + std::to_string(g.num_vertices()) +
                   " m=" + std::to_string(g.num_edges()) + ">";
        });

    m.def("parse_graph", [](const std::string& text) { return parse_graph(text); }, py::arg("text"));

    m.def(
        "build",
        [](const std::string& name) {
            const Construction c = build(name);
            const std::string h = graph_hash(c.graph);
            Json j{{"name", c.name}, {"graph_hash", h}, {"planar", c.planar}};
            Json expected = Json::object();
            for (const auto& [k, v] : c.expected)
                expected[to_string(k)] = v;
            j["expected"] = expected;
            j["instance"] = c.instance ? instance_to_json(*c.instance, h) : Json();
            return py::make_tuple(c.graph, j.dump());
        },
        py::arg("name"));

    m.def("construction_names", [] {
        std::vector<std::string> out;
        for (const auto& [n, _] : construction_registry())
            out.push_back(n);
        return out;
    });

    m.def(
        "ledger_json",
        [](const Multigraph& g, const std::vector<std::string>& kinds, bool planar,
           bool exhaustion_only, std::uint64_t nodes, std::uint64_t instances, double seconds,
           std::uint64_t samples, std::uint64_t seed, int workers) {
            ComputeOptions opts;
            opts.structural.asserted_planar = planar;
            opts.exhaustion_only = exhaustion_only;
            const Budget b = make_budget(nodes, instances, seconds, samples, seed, workers);
            BoundLedger l;
            {
                py::gil_scoped_release release;
                l = compute_all(g, parse_kinds(kinds), b, opts);
            }
            return ledger_to_json(l).dump();
        },
        py::arg("graph"), py::arg("kinds"), py::arg("planar"), py::arg("exhaustion_only"),
        py::arg("nodes"), py::arg("instances"), py::arg("seconds"), py::arg("samples"),
        py::arg("seed"), py::arg("workers"));

    m.def(
        "verify_json",
        [](const Multigraph& g, const std::string& instance_json, std::uint64_t nodes) {
            const Json ij = Json::parse(instance_json);
            const Instance inst = instance_from_json(ij, g);
            const WitnessCheck w = verify_witness(g, inst, nodes);
            SolveResult r;
            r.nodes = w.nodes;
            r.status = w.confirmed  ? SolveStatus::unsat
                       : w.exceeded ? SolveStatus::budget_exceeded
                                    : SolveStatus::sat;
            r.coloring = w.coloring;
            return solve_result_to_json(r, instance_hash(ij)).dump();
        },
        py::arg("graph"), py::arg("instance_json"), py::arg("nodes"));

    m.def("experiment_names", &experiment_names);

    m.def(
        "experiment_json",
        [](const std::string& name, int k, int nmax, int count, std::uint64_t samples,
           std::uint64_t nodes, std::uint64_t instances, double seconds, std::uint64_t seed,
           int workers) {
            ExperimentOptions o;
            o.k = k;
            o.nmax = nmax;
            o.count = count;
            o.samples = samples;
            o.budget = make_budget(nodes, instances, seconds, samples, seed, workers);
            ExperimentReport r;
            {
                py::gil_scoped_release release;
                r = run_experiment(name, o);
            }
            return py::make_tuple(r.json.dump(), to_string(r.outcome), r.table);
        },
        py::arg("name"), py::arg("k"), py::arg("nmax"), py::arg("count"), py::arg("samples"),
        py::arg("nodes"), py::arg("instances"), py::arg("seconds"), py::arg("seed"),
        py::arg("workers"));
}
