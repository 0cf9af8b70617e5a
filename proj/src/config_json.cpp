#include <json.hpp>

#include "netdeploy/simulate.hpp"

namespace netdeploy {

namespace {

using nlohmann::json;

GraphKind graph_kind_from(const std::string& name) {
    if (name == "clique") return GraphKind::clique;
    if (name == "erdos_renyi") return GraphKind::erdos_renyi;
    if (name == "barabasi_albert") return GraphKind::barabasi_albert;
    if (name == "binary_tree") return GraphKind::binary_tree;
    throw std::invalid_argument("config: unknown graph kind '" + name + "'");
}

CostKind cost_kind_from(const std::string& name) {
    if (name == "constant") return CostKind::constant;
    if (name == "degree_linear") return CostKind::degree_linear;
    if (name == "depth_exponential") return CostKind::depth_exponential;
    throw std::invalid_argument("config: unknown cost kind '" + name + "'");
}

json to_json_value(const SimulationConfig& config) {
    json graph{{"kind", to_string(config.graph.kind)}};
    if (config.graph.kind == GraphKind::erdos_renyi) graph["edge_prob"] = config.graph.edge_prob;
    if (config.graph.kind == GraphKind::barabasi_albert) {
        graph["ring_size"] = config.graph.ring_size;
        graph["m"] = config.graph.attach_count;
    }

    json dynamics{{"mode", to_string(config.dynamics.mode)}, {"beta", config.dynamics.beta}};
    if (config.dynamics.mode == Mode::independent) {
        dynamics["gamma"] = config.dynamics.gamma_independent;
    } else {
        dynamics["alpha"] = config.dynamics.alpha;
        dynamics["cost"] = {{"kind", to_string(config.dynamics.cost.kind)},
                            {"gamma", config.dynamics.cost.gamma}};
    }

    return json{{"graph", graph},
                {"dynamics", dynamics},
                {"node_count", config.node_count},
                {"seed_node",
                 config.seed_node.fixed ? json{{"fixed", config.seed_node.node}}
                                        : json("uniform_random")},
                {"stop_fraction", config.stop_fraction},
                {"max_steps", config.max_steps},
                {"rng_seed", config.rng_seed}};
}

} // namespace

std::string SimulationConfig::to_json() const {
    return to_json_value(*this).dump(2) + "\n";
}

SimulationConfig SimulationConfig::from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
    }
    try {
        SimulationConfig config;
        const auto& graph = doc.at("graph");
        config.graph.kind = graph_kind_from(graph.at("kind").get<std::string>());
        if (config.graph.kind == GraphKind::erdos_renyi)
            config.graph.edge_prob = graph.at("edge_prob").get<double>();
        if (config.graph.kind == GraphKind::barabasi_albert) {
            config.graph.ring_size = graph.at("ring_size").get<NodeId>();
            config.graph.attach_count = graph.at("m").get<NodeId>();
        }

        const auto& dynamics = doc.at("dynamics");
        const auto mode = dynamics.at("mode").get<std::string>();
        if (mode == "independent") {
            config.dynamics.mode = Mode::independent;
            config.dynamics.gamma_independent = dynamics.at("gamma").get<double>();
        } else if (mode == "networked") {
            config.dynamics.mode = Mode::networked;
            config.dynamics.alpha = dynamics.at("alpha").get<double>();
            const auto& cost = dynamics.at("cost");
            config.dynamics.cost.kind = cost_kind_from(cost.at("kind").get<std::string>());
            config.dynamics.cost.gamma = cost.at("gamma").get<double>();
        } else {
            throw std::invalid_argument("config: unknown mode '" + mode + "'");
        }
        config.dynamics.beta = dynamics.at("beta").get<double>();

        config.node_count = doc.at("node_count").get<NodeId>();
        const auto& seed_node = doc.at("seed_node");
        if (seed_node.is_string() && seed_node.get<std::string>() == "uniform_random") {
            config.seed_node = SeedNodeRule::uniform_random();
        } else if (seed_node.is_object() && seed_node.contains("fixed")) {
            config.seed_node = SeedNodeRule::fixed_node(seed_node.at("fixed").get<NodeId>());
        } else {
            throw std::invalid_argument("config: seed_node must be \"uniform_random\" or {\"fixed\": id}");
        }
        config.stop_fraction = doc.at("stop_fraction").get<double>();
        config.max_steps = doc.at("max_steps").get<std::uint64_t>();
        config.rng_seed = doc.at("rng_seed").get<std::uint64_t>();
        config.validate();
        return config;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
}

std::string SimulationConfig::digest() const {
    // FNV-1a over the canonical (key-sorted) JSON dump.
    const std::string canonical = to_json_value(*this).dump();
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (const unsigned char c : canonical) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buffer);
}

} // namespace netdeploy
