#include "netdeploy/dynamics.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace netdeploy {

const char* to_string(CostKind kind) {
    switch (kind) {
        case CostKind::constant: return "constant";
        case CostKind::degree_linear: return "degree_linear";
        case CostKind::depth_exponential: return "depth_exponential";
    }
    return "?";
}

const char* to_string(Mode mode) {
    return mode == Mode::networked ? "networked" : "independent";
}

void DynamicsParams::validate(const Graph& g) const {
    if (mode == Mode::networked) {
        if (!(alpha > 0.0)) throw std::invalid_argument("dynamics: alpha must be positive");
        if (!(cost.gamma >= 0.0)) throw std::invalid_argument("dynamics: gamma must be nonnegative");
        if (cost.kind == CostKind::depth_exponential && g.kind() != GraphKind::binary_tree)
            throw std::invalid_argument("dynamics: depth_exponential cost requires a binary_tree graph");
    } else {
        if (!(gamma_independent >= 0.0 && gamma_independent <= 1.0))
            throw std::invalid_argument("dynamics: independent-mode gamma must lie in [0,1]");
    }
}

void DeploymentState::adopt(NodeId v) {
    if (adopted_.at(v)) throw std::logic_error("adopt: node already adopted");
    adopted_[v] = 1;
    ++adopted_count_;
}

void DeploymentState::serialize(std::ostream& out) const {
    out << "step " << step_ << "\n";
    for (const std::uint8_t a : adopted_) out << (a ? '1' : '0');
    out << "\n";
}

std::string DeploymentState::serialize() const {
    std::ostringstream out;
    serialize(out);
    return out.str();
}

DeploymentState DeploymentState::parse(std::istream& in) {
    std::string tok;
    std::uint64_t step = 0;
    if (!(in >> tok) || tok != "step" || !(in >> step))
        throw std::invalid_argument("state snapshot must start with 'step <k>'");
    std::string bits;
    if (!(in >> bits)) throw std::invalid_argument("state snapshot: missing bit string");
    DeploymentState state(static_cast<NodeId>(bits.size()));
    for (NodeId v = 0; v < bits.size(); ++v) {
        if (bits[v] == '1')
            state.adopt(v);
        else if (bits[v] != '0')
            throw std::invalid_argument("state snapshot: bit string must be 0/1");
    }
    state.step_ = step;
    return state;
}

DeploymentState DeploymentState::parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

double node_cost(const CostModel& model, const Graph& g, NodeId v) {
    switch (model.kind) {
        case CostKind::constant:
            if (v >= g.node_count()) throw std::out_of_range("node_cost: node id out of range");
            return model.gamma;
        case CostKind::degree_linear:
            return model.gamma * (1.0 + static_cast<double>(g.degree(v)));
        case CostKind::depth_exponential:
            if (g.kind() != GraphKind::binary_tree)
                throw std::invalid_argument("node_cost: depth_exponential requires a binary_tree graph");
            return model.gamma * std::ldexp(1.0, -static_cast<int>(g.depth_of(v)));
    }
    throw std::invalid_argument("node_cost: unknown cost kind");
}

std::uint32_t adopted_neighbor_count(const Graph& g, const DeploymentState& state, NodeId v) {
    if (v >= g.node_count()) throw std::out_of_range("adopted_neighbor_count: node id out of range");
    if (g.is_complete()) return state.adopted_count() - (state.adopted(v) ? 1 : 0);
    std::uint32_t count = 0;
    g.for_each_neighbor(v, [&](NodeId u) { count += state.adopted(u) ? 1 : 0; });
    return count;
}

double utility(const Graph& g, const DeploymentState& state, const DynamicsParams& params,
               NodeId v) {
    if (params.mode != Mode::networked)
        throw std::logic_error("utility: undefined in independent mode");
    if (v >= g.node_count()) throw std::out_of_range("utility: node id out of range");
    if (state.adopted(v)) throw std::logic_error("utility: undefined for adopted nodes");
    return detail::utility_value(state.adopted_count(), adopted_neighbor_count(g, state, v),
                                 node_cost(params.cost, g, v), params.alpha);
}

double transition_probability(double u, double beta) {
    const double t = u - beta;
    double p;
    if (t >= 0.0) {
        p = 1.0 / (1.0 + std::exp(-t));
    } else {
        const double e = std::exp(t);
        p = e / (1.0 + e);
    }
    // Keep the value in the open interval even where exp saturates.
    constexpr double low = std::numeric_limits<double>::min();
    constexpr double high = 1.0 - 0x1.0p-53;
    if (p < low) return low;
    if (p > high) return high;
    return p;
}

DeploymentState step(const Graph& g, const DeploymentState& state, const DynamicsParams& params,
                     Rng& rng) {
    if (state.node_count() != g.node_count())
        throw std::invalid_argument("step: state/graph size mismatch");
    params.validate(g);

    const NodeId n = g.node_count();
    std::vector<NodeId> newly;
    for (NodeId v = 0; v < n; ++v) {
        if (state.adopted(v)) continue;
        double p;
        if (params.mode == Mode::independent) {
            p = params.gamma_independent;
        } else {
            p = transition_probability(utility(g, state, params, v), params.beta);
        }
        if (rng.uniform01() < p) newly.push_back(v);
    }
    DeploymentState next = state;
    for (const NodeId v : newly) next.adopt(v);
    next.advance_step();
    return next;
}

} // namespace netdeploy
