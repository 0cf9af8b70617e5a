#include "netdeploy/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace netdeploy {

const char* to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::clique: return "clique";
        case GraphKind::erdos_renyi: return "erdos_renyi";
        case GraphKind::barabasi_albert: return "barabasi_albert";
        case GraphKind::binary_tree: return "binary_tree";
    }
    return "?";
}

void Graph::check_node(NodeId v) const {
    if (v >= n_) throw std::out_of_range("node id " + std::to_string(v) + " out of range");
}

Graph Graph::from_edges(GraphKind kind, NodeId n,
                        std::vector<std::pair<NodeId, NodeId>>&& edges) {
    Graph g;
    g.kind_ = kind;
    g.n_ = n;
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : edges) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (NodeId v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
    g.targets_.resize(static_cast<std::size_t>(2) * edges.size());
    std::vector<std::uint32_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.targets_[cursor[u]++] = v;
        g.targets_[cursor[v]++] = u;
    }
    for (NodeId v = 0; v < n; ++v)
        std::sort(g.targets_.begin() + g.offsets_[v], g.targets_.begin() + g.offsets_[v + 1]);
    return g;
}

Graph Graph::clique(NodeId n) {
    if (n == 0) throw std::invalid_argument("clique: node count must be positive");
    Graph g;
    g.kind_ = GraphKind::clique;
    g.n_ = n;
    g.complete_ = true;
    return g;
}

Graph Graph::erdos_renyi(NodeId n, double edge_prob, Rng& rng) {
    if (n == 0) throw std::invalid_argument("erdos_renyi: node count must be positive");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
        throw std::invalid_argument("erdos_renyi: edge probability must lie in [0,1]");

    std::vector<std::pair<NodeId, NodeId>> edges;
    if (edge_prob == 1.0) {
        edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
        for (NodeId v = 1; v < n; ++v)
            for (NodeId w = 0; w < v; ++w) edges.emplace_back(v, w);
    } else if (edge_prob > 0.0) {
        // Geometric gap sampling over the lower-triangular pair order:
        // each potential edge is present independently with probability p,
        // but only the present ones cost a draw.
        const double denom = std::log1p(-edge_prob);
        std::int64_t v = 1;
        std::int64_t w = -1;
        while (v < static_cast<std::int64_t>(n)) {
            double gap = std::floor(std::log1p(-rng.uniform01()) / denom);
            if (gap > 9e18) gap = 9e18;
            w += 1 + static_cast<std::int64_t>(gap);
            while (w >= v && v < static_cast<std::int64_t>(n)) {
                w -= v;
                ++v;
            }
            if (v < static_cast<std::int64_t>(n))
                edges.emplace_back(static_cast<NodeId>(v), static_cast<NodeId>(w));
        }
    }
    return from_edges(GraphKind::erdos_renyi, n, std::move(edges));
}

Graph Graph::barabasi_albert(NodeId n, NodeId ring_size, NodeId attach_count, Rng& rng) {
    if (ring_size < 3) throw std::invalid_argument("barabasi_albert: ring size must be >= 3");
    if (attach_count == 0) throw std::invalid_argument("barabasi_albert: attach count must be >= 1");
    if (attach_count > ring_size)
        throw std::invalid_argument("barabasi_albert: attach count must not exceed ring size");
    if (n < ring_size) throw std::invalid_argument("barabasi_albert: node count must be >= ring size");

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(ring_size + static_cast<std::size_t>(attach_count) * (n - ring_size));
    // Repeated-node pool: every node appears once per incident edge, so a
    // uniform pick is exactly degree-proportional.
    std::vector<NodeId> pool;
    pool.reserve(2 * edges.capacity());
    for (NodeId i = 0; i < ring_size; ++i) {
        const NodeId j = (i + 1) % ring_size;
        edges.emplace_back(i, j);
        pool.push_back(i);
        pool.push_back(j);
    }
    std::vector<NodeId> chosen;
    for (NodeId k = ring_size; k < n; ++k) {
        chosen.clear();
        // Targets are drawn against degrees as they stood before node k
        // arrived; collisions are re-drawn so the graph stays simple.
        while (chosen.size() < attach_count) {
            const NodeId t = pool[rng.uniform_below(pool.size())];
            if (std::find(chosen.begin(), chosen.end(), t) == chosen.end())
                chosen.push_back(t);
        }
        for (const NodeId t : chosen) {
            edges.emplace_back(k, t);
            pool.push_back(k);
            pool.push_back(t);
        }
    }
    return from_edges(GraphKind::barabasi_albert, n, std::move(edges));
}

Graph Graph::binary_tree(NodeId n) {
    if (n == 0) throw std::invalid_argument("binary_tree: node count must be positive");
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(n - 1);
    for (NodeId k = 1; k < n; ++k) edges.emplace_back((k - 1) / 2, k);
    Graph g = from_edges(GraphKind::binary_tree, n, std::move(edges));
    g.depth_.resize(n);
    for (NodeId k = 0; k < n; ++k)
        g.depth_[k] = std::bit_width(static_cast<std::uint64_t>(k) + 1) - 1;
    return g;
}

std::uint64_t Graph::edge_count() const {
    if (complete_) return static_cast<std::uint64_t>(n_) * (n_ - 1) / 2;
    return targets_.size() / 2;
}

NodeId Graph::degree(NodeId v) const {
    check_node(v);
    if (complete_) return n_ - 1;
    return offsets_[v + 1] - offsets_[v];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    if (u == v) return false;
    if (complete_) return true;
    return std::binary_search(targets_.begin() + offsets_[u], targets_.begin() + offsets_[u + 1], v);
}

std::vector<NodeId> Graph::neighbors(NodeId v) const {
    check_node(v);
    std::vector<NodeId> out;
    out.reserve(degree(v));
    for_each_neighbor(v, [&](NodeId u) { out.push_back(u); });
    return out;
}

std::uint32_t Graph::depth_of(NodeId v) const {
    check_node(v);
    if (kind_ != GraphKind::binary_tree)
        throw std::logic_error("depth_of is only defined for binary_tree graphs");
    return depth_[v];
}

void Graph::to_edge_list(std::ostream& out) const {
    out << "n " << n_ << "\n";
    if (complete_) {
        for (NodeId v = 1; v < n_; ++v)
            for (NodeId w = 0; w < v; ++w) out << w << " " << v << "\n";
    } else {
        for (NodeId v = 0; v < n_; ++v)
            for (std::uint32_t i = offsets_[v]; i < offsets_[v + 1]; ++i)
                if (targets_[i] > v) out << v << " " << targets_[i] << "\n";
    }
    if (!depth_.empty()) {
        out << "depths";
        for (const std::uint32_t d : depth_) out << " " << d;
        out << "\n";
    }
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    to_edge_list(out);
    return out.str();
}

Graph Graph::from_edge_list(std::istream& in) {
    std::string tok;
    if (!(in >> tok) || tok != "n")
        throw std::invalid_argument("edge list must start with 'n <node_count>'");
    std::uint64_t n = 0;
    if (!(in >> n) || n == 0) throw std::invalid_argument("edge list: bad node count");

    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<std::uint32_t> depths;
    bool in_depths = false;
    while (in >> tok) {
        if (tok == "depths") {
            in_depths = true;
            continue;
        }
        std::uint64_t a = 0;
        try {
            a = std::stoull(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("edge list: unexpected token '" + tok + "'");
        }
        if (in_depths) {
            depths.push_back(static_cast<std::uint32_t>(a));
            continue;
        }
        std::uint64_t b = 0;
        if (!(in >> b)) throw std::invalid_argument("edge list: dangling edge endpoint");
        if (a >= n || b >= n || a == b) throw std::invalid_argument("edge list: bad edge");
        edges.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
    }

    // The format does not carry the generator tag; a depths section marks a
    // binary tree, anything else is loaded as a generic adjacency graph.
    Graph g = from_edges(in_depths ? GraphKind::binary_tree : GraphKind::erdos_renyi,
                         static_cast<NodeId>(n), std::move(edges));
    // Reject duplicate edges (CSR keeps them otherwise).
    for (NodeId v = 0; v < g.n_; ++v) {
        const auto begin = g.targets_.begin() + g.offsets_[v];
        const auto end = g.targets_.begin() + g.offsets_[v + 1];
        if (std::adjacent_find(begin, end) != end)
            throw std::invalid_argument("edge list: duplicate edge");
    }
    if (in_depths) {
        if (depths.size() != n) throw std::invalid_argument("edge list: depths section size mismatch");
        if (g.edge_count() != n - 1) throw std::invalid_argument("edge list: tree must have n-1 edges");
        if (depths[0] != 0) throw std::invalid_argument("edge list: root depth must be 0");
        std::vector<std::uint32_t> child_count(n, 0);
        for (NodeId v = 0; v < g.n_; ++v) {
            g.for_each_neighbor(v, [&](NodeId u) {
                if (depths[u] == depths[v] + 1) ++child_count[v];
            });
            if (child_count[v] > 2) throw std::invalid_argument("edge list: node has more than 2 children");
        }
        std::uint32_t parents_ok = 0;
        for (NodeId v = 1; v < g.n_; ++v) {
            bool has_parent = false;
            g.for_each_neighbor(v, [&](NodeId u) {
                if (depths[u] + 1 == depths[v]) has_parent = true;
            });
            if (has_parent) ++parents_ok;
        }
        if (parents_ok != n - 1) throw std::invalid_argument("edge list: depths are not tree-consistent");
        g.depth_ = std::move(depths);
    }
    return g;
}

Graph Graph::from_edge_list(const std::string& text) {
    std::istringstream in(text);
    return from_edge_list(in);
}

} // namespace netdeploy
