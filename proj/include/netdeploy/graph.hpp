#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "netdeploy/rng.hpp"

namespace netdeploy {

using NodeId = std::uint32_t;

enum class GraphKind { clique, erdos_renyi, barabasi_albert, binary_tree };

const char* to_string(GraphKind kind);

/// Undirected simple graph with one of four fixed topologies.
///
/// Cliques are stored implicitly (adjacency answered by formula) so that
/// large complete graphs never materialize their ~n^2/2 edges; all other
/// kinds use a CSR adjacency with sorted neighbor lists. Instances are
/// immutable after construction and safe to share across threads.
class Graph {
public:
    static Graph clique(NodeId n);
    static Graph erdos_renyi(NodeId n, double edge_prob, Rng& rng);
    static Graph barabasi_albert(NodeId n, NodeId ring_size, NodeId attach_count, Rng& rng);
    static Graph binary_tree(NodeId n);

    GraphKind kind() const { return kind_; }
    NodeId node_count() const { return n_; }
    std::uint64_t edge_count() const;
    bool is_complete() const { return complete_; }

    NodeId degree(NodeId v) const;
    bool has_edge(NodeId u, NodeId v) const;
    std::vector<NodeId> neighbors(NodeId v) const;

    template <typename F>
    void for_each_neighbor(NodeId v, F&& f) const {
        check_node(v);
        if (complete_) {
            for (NodeId u = 0; u < n_; ++u)
                if (u != v) f(u);
        } else {
            for (std::uint32_t i = offsets_[v]; i < offsets_[v + 1]; ++i) f(targets_[i]);
        }
    }

    /// Depth of v below the root; only defined for binary_tree graphs.
    std::uint32_t depth_of(NodeId v) const;

    /// Edge-list text format: "n <count>", one "u v" line per edge,
    /// plus a trailing "depths ..." line for binary trees.
    void to_edge_list(std::ostream& out) const;
    std::string to_edge_list() const;
    static Graph from_edge_list(std::istream& in);
    static Graph from_edge_list(const std::string& text);

private:
    Graph() = default;
    void check_node(NodeId v) const;
    static Graph from_edges(GraphKind kind, NodeId n,
                            std::vector<std::pair<NodeId, NodeId>>&& edges);

    GraphKind kind_ = GraphKind::clique;
    NodeId n_ = 0;
    bool complete_ = false;
    std::vector<std::uint32_t> offsets_;   // CSR row offsets, size n+1 (empty for cliques)
    std::vector<NodeId> targets_;          // CSR neighbor ids, sorted per node
    std::vector<std::uint32_t> depth_;     // per-node depth, binary_tree only
};

} // namespace netdeploy
