#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "netdeploy/graph.hpp"
#include "netdeploy/rng.hpp"

namespace netdeploy {

enum class CostKind { constant, degree_linear, depth_exponential };
enum class Mode { networked, independent };

const char* to_string(CostKind kind);
const char* to_string(Mode mode);

/// Per-node transition cost; costs never change over a run.
///   constant           c(v) = gamma
///   degree_linear      c(v) = gamma * (1 + degree(v))
///   depth_exponential  c(v) = gamma * 2^-depth(v)   (binary trees only)
struct CostModel {
    CostKind kind = CostKind::constant;
    double gamma = 0.0;
};

struct DynamicsParams {
    Mode mode = Mode::networked;
    double alpha = 1.0;              // utility scaling divisor
    double beta = 3.0;               // logistic baseline shift
    double gamma_independent = 0.0;  // per-step adoption probability, independent mode
    CostModel cost;                  // networked mode only

    void validate(const Graph& g) const;
};

/// Which nodes have switched to the new technology, plus the step counter.
/// Adoption is irreversible; adopted_count always equals the number of set
/// flags.
class DeploymentState {
public:
    explicit DeploymentState(NodeId node_count)
        : adopted_(node_count, 0) {}

    NodeId node_count() const { return static_cast<NodeId>(adopted_.size()); }
    bool adopted(NodeId v) const { return adopted_.at(v) != 0; }
    std::uint32_t adopted_count() const { return adopted_count_; }
    std::uint64_t step() const { return step_; }

    void adopt(NodeId v);
    void advance_step() { ++step_; }

    /// Snapshot format: "step <k>" then one 0/1 character per node.
    void serialize(std::ostream& out) const;
    std::string serialize() const;
    static DeploymentState parse(std::istream& in);
    static DeploymentState parse(const std::string& text);

private:
    std::vector<std::uint8_t> adopted_;
    std::uint32_t adopted_count_ = 0;
    std::uint64_t step_ = 0;
};

/// c(v) under `model`; rejects cost models invalid for the graph kind.
double node_cost(const CostModel& model, const Graph& g, NodeId v);

/// Number of v's neighbors already adopted (h in the utility product).
std::uint32_t adopted_neighbor_count(const Graph& g, const DeploymentState& state, NodeId v);

/// (adopted_total * adopted_neighbors - cost) / alpha for a non-adopted
/// node. Querying an adopted node, or any node in independent mode, is a
/// contract violation.
double utility(const Graph& g, const DeploymentState& state, const DynamicsParams& params, NodeId v);

/// Logistic adoption probability 1 / (1 + e^(-u + beta)), nudged into the
/// open interval (0, 1) where the exponential saturates.
double transition_probability(double u, double beta);

/// One synchronous step: every non-adopted node adopts independently with
/// the probability computed from the state at the start of the step;
/// adopted nodes never revert. Consumes exactly one uniform draw per
/// non-adopted node, in ascending node-id order.
DeploymentState step(const Graph& g, const DeploymentState& state, const DynamicsParams& params,
                     Rng& rng);

namespace detail {
// Shared by the reference step and the cached engine so both produce
// bit-identical probabilities. Exact for node counts up to ~9e7, where
// h_G * h stays below 2^53.
inline double utility_value(std::uint32_t adopted_total, std::uint32_t adopted_neighbors,
                            double cost, double alpha) {
    return (static_cast<double>(adopted_total) * static_cast<double>(adopted_neighbors) - cost) /
           alpha;
}
} // namespace detail

} // namespace netdeploy
