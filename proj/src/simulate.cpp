#include "netdeploy/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace netdeploy {

Graph GraphSpec::build(NodeId node_count, Rng& rng) const {
    switch (kind) {
        case GraphKind::clique: return Graph::clique(node_count);
        case GraphKind::erdos_renyi: return Graph::erdos_renyi(node_count, edge_prob, rng);
        case GraphKind::barabasi_albert:
            return Graph::barabasi_albert(node_count, ring_size, attach_count, rng);
        case GraphKind::binary_tree: return Graph::binary_tree(node_count);
    }
    throw std::invalid_argument("graph spec: unknown kind");
}

void SimulationConfig::validate() const {
    if (node_count == 0) throw std::invalid_argument("config: node count must be positive");
    if (!(stop_fraction > 0.0 && stop_fraction <= 1.0))
        throw std::invalid_argument("config: stop fraction must lie in (0,1]");
    if (max_steps == 0) throw std::invalid_argument("config: max steps must be >= 1");
    if (seed_node.fixed && seed_node.node >= node_count)
        throw std::invalid_argument("config: fixed seed node out of range");
    if (graph.kind == GraphKind::erdos_renyi && !(graph.edge_prob >= 0.0 && graph.edge_prob <= 1.0))
        throw std::invalid_argument("config: edge probability must lie in [0,1]");
    if (graph.kind == GraphKind::barabasi_albert) {
        if (graph.ring_size < 3) throw std::invalid_argument("config: ring size must be >= 3");
        if (graph.attach_count == 0 || graph.attach_count > graph.ring_size)
            throw std::invalid_argument("config: attach count must lie in [1, ring_size]");
        if (node_count < graph.ring_size)
            throw std::invalid_argument("config: node count must be >= ring size");
    }
    if (dynamics.mode == Mode::networked) {
        if (!(dynamics.alpha > 0.0)) throw std::invalid_argument("config: alpha must be positive");
        if (!(dynamics.cost.gamma >= 0.0))
            throw std::invalid_argument("config: gamma must be nonnegative");
        if (dynamics.cost.kind == CostKind::depth_exponential &&
            graph.kind != GraphKind::binary_tree)
            throw std::invalid_argument("config: depth_exponential cost requires a binary_tree graph");
    } else if (!(dynamics.gamma_independent >= 0.0 && dynamics.gamma_independent <= 1.0)) {
        throw std::invalid_argument("config: independent-mode gamma must lie in [0,1]");
    }
}

StepEngine::StepEngine(const Graph& g, const DynamicsParams& params, DeploymentState initial)
    : graph_(g), params_(params), state_(std::move(initial)) {
    if (state_.node_count() != g.node_count())
        throw std::invalid_argument("engine: state/graph size mismatch");
    params_.validate(g);

    const NodeId n = g.node_count();
    pending_.reserve(n);
    for (NodeId v = 0; v < n; ++v)
        if (!state_.adopted(v)) pending_.push_back(v);

    if (params_.mode == Mode::independent) {
        scalar_path_ = true;
        scalar_prob_ = params_.gamma_independent;
        return;
    }
    // On a complete graph every pending node sees h = h_G and (constant or
    // degree cost being uniform there) the same cost, so one probability
    // serves the whole step.
    if (g.is_complete()) {
        scalar_path_ = true;
        scalar_dirty_ = true;
        return;
    }
    cost_.resize(n);
    for (NodeId v = 0; v < n; ++v) cost_[v] = node_cost(params_.cost, g, v);
    adopted_neighbors_.assign(n, 0);
    for (NodeId v = 0; v < n; ++v)
        adopted_neighbors_[v] = adopted_neighbor_count(g, state_, v);
    prob_.assign(n, 0.0);
    for (const NodeId v : pending_) refresh_probability(v);
}

void StepEngine::refresh_probability(NodeId v) {
    prob_[v] = transition_probability(
        detail::utility_value(state_.adopted_count(), adopted_neighbors_[v], cost_[v],
                              params_.alpha),
        params_.beta);
}

void StepEngine::advance(Rng& rng) {
    newly_.clear();
    if (scalar_path_) {
        if (scalar_dirty_) {
            // Complete graph: h equals the current adopted total for every
            // pending node, matching adopted_neighbor_count's formula path.
            const std::uint32_t h_g = state_.adopted_count();
            const double cost = pending_.empty()
                                    ? 0.0
                                    : node_cost(params_.cost, graph_, pending_.front());
            scalar_prob_ = transition_probability(
                detail::utility_value(h_g, h_g, cost, params_.alpha), params_.beta);
            scalar_dirty_ = false;
        }
        for (const NodeId v : pending_) {
            if (rng.uniform01() < scalar_prob_) newly_.push_back(v);
        }
    } else {
        for (const NodeId v : pending_) {
            if (rng.uniform01() < prob_[v]) newly_.push_back(v);
        }
    }

    for (const NodeId v : newly_) state_.adopt(v);
    state_.advance_step();
    if (newly_.empty()) return;

    std::erase_if(pending_, [&](NodeId v) { return state_.adopted(v); });
    if (scalar_path_) {
        if (params_.mode != Mode::independent) scalar_dirty_ = true;
        return;
    }
    for (const NodeId v : newly_)
        graph_.for_each_neighbor(v, [&](NodeId u) { ++adopted_neighbors_[u]; });
    // The adopted total changed, which moves the probability of exactly the
    // pending nodes with at least one adopted neighbor; for the rest the
    // utility is still -cost/alpha.
    for (const NodeId v : pending_)
        if (adopted_neighbors_[v] > 0) refresh_probability(v);
}

namespace {

std::uint64_t stop_target(double stop_fraction, NodeId node_count) {
    auto target =
        static_cast<std::uint64_t>(std::ceil(stop_fraction * static_cast<double>(node_count)));
    if (target == 0) target = 1;
    return target;
}

RunResult run_seeded(const SimulationConfig& config, const Graph& g, Rng& rng) {
    const NodeId seed_node = config.seed_node.fixed
                                 ? config.seed_node.node
                                 : static_cast<NodeId>(rng.uniform_below(config.node_count));
    DeploymentState initial(config.node_count);
    initial.adopt(seed_node);

    RunResult result;
    result.seed_node = seed_node;
    result.curve.node_count = config.node_count;
    result.curve.config_digest = config.digest();
    result.curve.counts.push_back(initial.adopted_count());

    const std::uint64_t target = stop_target(config.stop_fraction, config.node_count);
    StepEngine engine(g, config.dynamics, std::move(initial));
    while (engine.state().adopted_count() < target && engine.state().step() < config.max_steps) {
        engine.advance(rng);
        result.curve.counts.push_back(engine.state().adopted_count());
    }
    result.reached_stop = engine.state().adopted_count() >= target;
    return result;
}

} // namespace

RunResult run(const SimulationConfig& config) {
    config.validate();
    Rng rng(config.rng_seed);
    const Graph g = config.graph.build(config.node_count, rng);
    return run_seeded(config, g, rng);
}

RunResult run_on_graph(const SimulationConfig& config, const Graph& g, std::uint64_t seed) {
    config.validate();
    if (g.node_count() != config.node_count)
        throw std::invalid_argument("run_on_graph: graph size does not match config");
    SimulationConfig effective = config;
    effective.rng_seed = seed;
    Rng rng(seed);
    return run_seeded(effective, g, rng);
}

EnsembleSummary run_ensemble(const SimulationConfig& config, std::size_t num_runs,
                             std::uint64_t seed_stream, const EnsembleOptions& options,
                             std::vector<RunResult>* runs_out) {
    config.validate();
    if (num_runs == 0) throw std::invalid_argument("run_ensemble: need at least one run");

    std::optional<Graph> pinned;
    if (options.pin_graph) {
        Rng graph_rng(seed_stream);
        pinned = config.graph.build(config.node_count, graph_rng);
    }

    std::vector<RunResult> runs(num_runs);
    const unsigned jobs = std::max(1u, options.jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= num_runs) break;
            const std::uint64_t seed = derive_run_seed(seed_stream, i);
            if (pinned) {
                runs[i] = run_on_graph(config, *pinned, seed);
            } else {
                SimulationConfig c = config;
                c.rng_seed = seed;
                runs[i] = run(c);
            }
        }
    };
    if (jobs == 1 || num_runs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < std::min<std::size_t>(jobs, num_runs); ++t)
            threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    EnsembleSummary summary;
    summary.num_runs = num_runs;
    summary.node_count = config.node_count;
    const std::uint64_t target = stop_target(config.stop_fraction, config.node_count);

    std::size_t longest = 0;
    for (const auto& r : runs) {
        longest = std::max(longest, r.curve.counts.size());
        if (!r.reached_stop) ++summary.non_terminated;
        std::optional<std::uint64_t> sat;
        for (std::size_t t = 0; t < r.curve.counts.size(); ++t) {
            if (r.curve.counts[t] >= target) {
                sat = t;
                break;
            }
        }
        summary.saturation_steps.push_back(sat);
    }

    summary.mean.resize(longest);
    summary.min.resize(longest);
    summary.p25.resize(longest);
    summary.median.resize(longest);
    summary.p75.resize(longest);
    summary.max.resize(longest);
    std::vector<std::uint32_t> column(num_runs);
    for (std::size_t t = 0; t < longest; ++t) {
        double sum = 0.0;
        for (std::size_t i = 0; i < num_runs; ++i) {
            const auto& counts = runs[i].curve.counts;
            const std::uint32_t value = counts[std::min(t, counts.size() - 1)];
            column[i] = value;
            sum += value;
        }
        std::sort(column.begin(), column.end());
        auto rank = [&](double q) {
            const auto idx = static_cast<std::size_t>(std::ceil(q * num_runs));
            return column[idx == 0 ? 0 : idx - 1];
        };
        summary.mean[t] = sum / static_cast<double>(num_runs);
        summary.min[t] = column.front();
        summary.p25[t] = rank(0.25);
        summary.median[t] = rank(0.5);
        summary.p75[t] = rank(0.75);
        summary.max[t] = column.back();
    }

    if (runs_out) *runs_out = std::move(runs);
    return summary;
}

} // namespace netdeploy
