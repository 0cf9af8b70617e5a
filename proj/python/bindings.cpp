#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "netdeploy/analysis.hpp"
#include "netdeploy/dynamics.hpp"
#include "netdeploy/graph.hpp"
#include "netdeploy/output.hpp"
#include "netdeploy/simulate.hpp"

namespace py = pybind11;
using namespace netdeploy;

namespace {

GrowthCurve curve_from(const std::vector<std::uint32_t>& counts, NodeId node_count) {
    GrowthCurve curve;
    curve.counts = counts;
    curve.node_count = node_count;
    return curve;
}

RateSeries series_from(const std::vector<double>& rates, std::uint32_t window) {
    RateSeries series;
    series.rates = rates;
    series.window = window;
    return series;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Deployment-dynamics simulator on generated network topologies";

    py::enum_<GraphKind>(m, "GraphKind")
        .value("clique", GraphKind::clique)
        .value("erdos_renyi", GraphKind::erdos_renyi)
        .value("barabasi_albert", GraphKind::barabasi_albert)
        .value("binary_tree", GraphKind::binary_tree);

    py::enum_<CostKind>(m, "CostKind")
        .value("constant", CostKind::constant)
        .value("degree_linear", CostKind::degree_linear)
        .value("depth_exponential", CostKind::depth_exponential);

    py::enum_<Mode>(m, "Mode")
        .value("networked", Mode::networked)
        .value("independent", Mode::independent);

    py::class_<Graph>(m, "Graph")
        .def_static("clique", &Graph::clique, py::arg("n"))
        .def_static(
            "erdos_renyi",
            [](NodeId n, double p, std::uint64_t seed) {
                Rng rng(seed);
                return Graph::erdos_renyi(n, p, rng);
            },
            py::arg("n"), py::arg("edge_prob"), py::arg("seed"))
        .def_static(
            "barabasi_albert",
            [](NodeId n, NodeId ring, NodeId m_edges, std::uint64_t seed) {
                Rng rng(seed);
                return Graph::barabasi_albert(n, ring, m_edges, rng);
            },
            py::arg("n"), py::arg("ring_size"), py::arg("m"), py::arg("seed"))
        .def_static("binary_tree", &Graph::binary_tree, py::arg("n"))
        .def_static("from_edge_list",
                    py::overload_cast<const std::string&>(&Graph::from_edge_list))
        .def_property_readonly("kind", &Graph::kind)
        .def_property_readonly("node_count", &Graph::node_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("depth_of", &Graph::depth_of, py::arg("v"))
        .def("to_edge_list", py::overload_cast<>(&Graph::to_edge_list, py::const_));

    py::class_<CostModel>(m, "CostModel")
        .def(py::init<>())
        .def_readwrite("kind", &CostModel::kind)
        .def_readwrite("gamma", &CostModel::gamma);

    py::class_<DynamicsParams>(m, "DynamicsParams")
        .def(py::init<>())
        .def_readwrite("mode", &DynamicsParams::mode)
        .def_readwrite("alpha", &DynamicsParams::alpha)
        .def_readwrite("beta", &DynamicsParams::beta)
        .def_readwrite("gamma_independent", &DynamicsParams::gamma_independent)
        .def_readwrite("cost", &DynamicsParams::cost);

    py::class_<GraphSpec>(m, "GraphSpec")
        .def(py::init<>())
        .def_readwrite("kind", &GraphSpec::kind)
        .def_readwrite("edge_prob", &GraphSpec::edge_prob)
        .def_readwrite("ring_size", &GraphSpec::ring_size)
        .def_readwrite("m", &GraphSpec::attach_count);

    py::class_<SeedNodeRule>(m, "SeedNodeRule")
        .def_static("uniform_random", &SeedNodeRule::uniform_random)
        .def_static("fixed_node", &SeedNodeRule::fixed_node, py::arg("node"))
        .def_readonly("fixed", &SeedNodeRule::fixed)
        .def_readonly("node", &SeedNodeRule::node);

    py::class_<SimulationConfig>(m, "SimulationConfig")
        .def(py::init<>())
        .def_readwrite("graph", &SimulationConfig::graph)
        .def_readwrite("dynamics", &SimulationConfig::dynamics)
        .def_readwrite("node_count", &SimulationConfig::node_count)
        .def_readwrite("seed_node", &SimulationConfig::seed_node)
        .def_readwrite("stop_fraction", &SimulationConfig::stop_fraction)
        .def_readwrite("max_steps", &SimulationConfig::max_steps)
        .def_readwrite("rng_seed", &SimulationConfig::rng_seed)
        .def("to_json", &SimulationConfig::to_json)
        .def_static("from_json", &SimulationConfig::from_json)
        .def("digest", &SimulationConfig::digest);

    py::class_<GrowthCurve>(m, "GrowthCurve")
        .def_readonly("counts", &GrowthCurve::counts)
        .def_readonly("node_count", &GrowthCurve::node_count)
        .def_readonly("config_digest", &GrowthCurve::config_digest);

    py::class_<RunResult>(m, "RunResult")
        .def_readonly("curve", &RunResult::curve)
        .def_readonly("reached_stop", &RunResult::reached_stop)
        .def_readonly("seed_node", &RunResult::seed_node);

    py::class_<EnsembleSummary>(m, "EnsembleSummary")
        .def_readonly("num_runs", &EnsembleSummary::num_runs)
        .def_readonly("node_count", &EnsembleSummary::node_count)
        .def_readonly("mean", &EnsembleSummary::mean)
        .def_readonly("min", &EnsembleSummary::min)
        .def_readonly("p25", &EnsembleSummary::p25)
        .def_readonly("median", &EnsembleSummary::median)
        .def_readonly("p75", &EnsembleSummary::p75)
        .def_readonly("max", &EnsembleSummary::max)
        .def_readonly("saturation_steps", &EnsembleSummary::saturation_steps)
        .def_readonly("non_terminated", &EnsembleSummary::non_terminated);

    m.def("preset", &preset, py::arg("name"));
    m.def("preset_names", [] { return preset_names(); });
    m.def("run", &run, py::arg("config"), py::call_guard<py::gil_scoped_release>());
    m.def(
        "run_ensemble",
        [](const SimulationConfig& config, std::size_t num_runs, std::uint64_t seed_stream,
           bool pin_graph, unsigned jobs) {
            EnsembleOptions options;
            options.pin_graph = pin_graph;
            options.jobs = jobs;
            std::vector<RunResult> runs;
            EnsembleSummary summary;
            {
                py::gil_scoped_release release;
                summary = run_ensemble(config, num_runs, seed_stream, options, &runs);
            }
            return py::make_tuple(summary, runs);
        },
        py::arg("config"), py::arg("num_runs"), py::arg("seed_stream"),
        py::arg("pin_graph") = false, py::arg("jobs") = 1);

    m.def("transition_probability", &transition_probability, py::arg("u"), py::arg("beta"));
    m.def("derive_run_seed", &derive_run_seed, py::arg("stream"), py::arg("index"));

    m.def(
        "growth_rate",
        [](const std::vector<std::uint32_t>& counts, NodeId node_count) {
            return growth_rate(curve_from(counts, node_count)).rates;
        },
        py::arg("counts"), py::arg("node_count"));
    m.def(
        "smooth",
        [](const std::vector<double>& rates, std::uint32_t window) {
            return smooth(series_from(rates, 1), window).rates;
        },
        py::arg("rates"), py::arg("window"));
    m.def(
        "count_bursts",
        [](const std::vector<double>& rates, double prominence_fraction, std::uint32_t window) {
            return count_bursts(series_from(rates, window), prominence_fraction);
        },
        py::arg("rates"), py::arg("prominence_fraction") = 0.25, py::arg("window") = 1);
    m.def(
        "detect_early_flattening",
        [](const std::vector<double>& rates, std::uint32_t window) {
            return detect_early_flattening(series_from(rates, window));
        },
        py::arg("rates"), py::arg("window") = 1);
    m.def(
        "saturation_step",
        [](const std::vector<std::uint32_t>& counts, NodeId node_count,
           double fraction) -> std::optional<std::uint64_t> {
            return saturation_step(curve_from(counts, node_count), fraction);
        },
        py::arg("counts"), py::arg("node_count"), py::arg("fraction"));
    m.def(
        "analyze_runs",
        [](const std::vector<RunResult>& runs, double stop_fraction, std::uint32_t window,
           double prominence_fraction, const std::string& label) {
            return analyze_runs(runs, stop_fraction, {window, prominence_fraction}, label)
                .to_json(2);
        },
        py::arg("runs"), py::arg("stop_fraction"), py::arg("window") = 11,
        py::arg("prominence_fraction") = 0.25, py::arg("label") = "");
}
