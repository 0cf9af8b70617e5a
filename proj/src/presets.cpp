#include <stdexcept>

#include "netdeploy/simulate.hpp"

namespace netdeploy {

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {
        "independent", "clique",     "random_graph",    "preferential",
        "tree",        "tree_small_alpha", "tree_tiny_alpha",
    };
    return names;
}

SimulationConfig preset(const std::string& name) {
    SimulationConfig config;
    config.node_count = 10000;
    config.dynamics.beta = 3.0;
    config.stop_fraction = 0.99;
    config.seed_node = SeedNodeRule::uniform_random();

    if (name == "independent") {
        config.dynamics.mode = Mode::independent;
        config.dynamics.gamma_independent = 0.05;
        config.graph.kind = GraphKind::clique;  // topology is irrelevant in this mode
        return config;
    }
    if (name == "clique") {
        config.graph.kind = GraphKind::clique;
        config.dynamics.alpha = 1.25e7;
        config.dynamics.cost = {CostKind::constant, 1.25e7};
        return config;
    }
    if (name == "random_graph") {
        config.graph.kind = GraphKind::erdos_renyi;
        config.graph.edge_prob = 0.001;
        config.dynamics.alpha = 10000.0;
        config.dynamics.cost = {CostKind::degree_linear, 1562.5};
        return config;
    }
    if (name == "preferential") {
        config.graph.kind = GraphKind::barabasi_albert;
        config.graph.ring_size = 100;
        config.graph.attach_count = 1;
        config.dynamics.alpha = 3333.0;
        config.dynamics.cost = {CostKind::degree_linear, 2500.0};
        return config;
    }
    if (name == "tree" || name == "tree_small_alpha" || name == "tree_tiny_alpha") {
        config.graph.kind = GraphKind::binary_tree;
        config.dynamics.alpha = name == "tree" ? 312.5 : (name == "tree_small_alpha" ? 78.0 : 39.0);
        config.dynamics.cost = {CostKind::depth_exponential, 2e6};
        return config;
    }

    std::string message = "unknown preset '" + name + "'; valid presets:";
    for (const auto& candidate : preset_names()) message += " " + candidate;
    throw std::invalid_argument(message);
}

} // namespace netdeploy
