#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netdeploy/dynamics.hpp"
#include "netdeploy/graph.hpp"
#include "netdeploy/rng.hpp"

namespace netdeploy {

/// Generator choice plus its parameters; the node count lives in
/// SimulationConfig.
struct GraphSpec {
    GraphKind kind = GraphKind::clique;
    double edge_prob = 0.0;     // erdos_renyi
    NodeId ring_size = 100;     // barabasi_albert
    NodeId attach_count = 1;    // barabasi_albert, edges per new node

    Graph build(NodeId node_count, Rng& rng) const;
};

struct SeedNodeRule {
    bool fixed = false;
    NodeId node = 0;

    static SeedNodeRule uniform_random() { return {}; }
    static SeedNodeRule fixed_node(NodeId v) { return {true, v}; }
};

struct SimulationConfig {
    GraphSpec graph;
    DynamicsParams dynamics;
    NodeId node_count = 10000;
    SeedNodeRule seed_node;
    double stop_fraction = 0.99;
    std::uint64_t max_steps = 1'000'000;
    std::uint64_t rng_seed = 0;

    void validate() const;

    std::string to_json() const;
    static SimulationConfig from_json(const std::string& text);
    /// FNV-1a hash of the canonical JSON form; identifies config+seed.
    std::string digest() const;
};

/// Adopted-count trajectory of one run; counts[t] is the total after t
/// steps, counts[0] the seeded initial state.
struct GrowthCurve {
    std::vector<std::uint32_t> counts;
    NodeId node_count = 0;
    std::string config_digest;
};

struct RunResult {
    GrowthCurve curve;
    bool reached_stop = false;
    NodeId seed_node = 0;
};

/// Synchronous-step executor with cached per-node costs, adopted-neighbor
/// counters and probabilities. Produces exactly the same trajectory as the
/// plain step() for the same draw stream; the caching only skips
/// recomputation of probabilities whose inputs did not change.
class StepEngine {
public:
    StepEngine(const Graph& g, const DynamicsParams& params, DeploymentState initial);

    void advance(Rng& rng);
    const DeploymentState& state() const { return state_; }

private:
    void refresh_probability(NodeId v);

    const Graph& graph_;
    DynamicsParams params_;
    DeploymentState state_;
    bool scalar_path_ = false;       // independent mode or complete graph
    double scalar_prob_ = 0.0;
    bool scalar_dirty_ = false;
    std::vector<double> cost_;
    std::vector<std::uint32_t> adopted_neighbors_;
    std::vector<double> prob_;
    std::vector<NodeId> pending_;    // ascending ids of non-adopted nodes
    std::vector<NodeId> newly_;
};

/// Build the graph, seed one adopter, and step until the stop fraction is
/// reached or max_steps runs out (reported via reached_stop=false).
RunResult run(const SimulationConfig& config);

/// Same, but on an existing topology; only seed-node and step draws consume
/// the seed's stream.
RunResult run_on_graph(const SimulationConfig& config, const Graph& g, std::uint64_t seed);

struct EnsembleOptions {
    bool pin_graph = false;  // one topology (built from seed_stream) for all runs
    unsigned jobs = 1;
};

struct EnsembleSummary {
    std::size_t num_runs = 0;
    NodeId node_count = 0;
    std::vector<double> mean;          // per step, shorter runs extended at their final value
    std::vector<std::uint32_t> min;
    std::vector<std::uint32_t> p25;
    std::vector<std::uint32_t> median;
    std::vector<std::uint32_t> p75;
    std::vector<std::uint32_t> max;
    std::vector<std::optional<std::uint64_t>> saturation_steps;  // per run, absent if never reached
    std::size_t non_terminated = 0;    // runs that hit max_steps, flagged not fatal
};

/// num_runs runs with seeds derived from (seed_stream, run index); also
/// returns every curve (by run index) for feature extraction.
EnsembleSummary run_ensemble(const SimulationConfig& config, std::size_t num_runs,
                             std::uint64_t seed_stream, const EnsembleOptions& options = {},
                             std::vector<RunResult>* runs_out = nullptr);

/// Named parameter sets for the five deployment experiments.
const std::vector<std::string>& preset_names();
SimulationConfig preset(const std::string& name);

} // namespace netdeploy
