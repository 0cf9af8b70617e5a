#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "netdeploy/graph.hpp"

using namespace netdeploy;

namespace {

// Independent depth census: BFS from the root over the adjacency itself.
std::vector<std::uint32_t> bfs_depths(const Graph& g) {
    std::vector<std::uint32_t> depth(g.node_count(), UINT32_MAX);
    std::queue<NodeId> queue;
    depth[0] = 0;
    queue.push(0);
    while (!queue.empty()) {
        const NodeId v = queue.front();
        queue.pop();
        g.for_each_neighbor(v, [&](NodeId u) {
            if (depth[u] == UINT32_MAX) {
                depth[u] = depth[v] + 1;
                queue.push(u);
            }
        });
    }
    return depth;
}

void check_symmetric_simple(const Graph& g) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
        std::set<NodeId> seen;
        g.for_each_neighbor(v, [&](NodeId u) {
            CHECK(u != v);                 // no self-loops
            CHECK(seen.insert(u).second);  // no duplicates
            CHECK(g.has_edge(u, v));
        });
    }
}

} // namespace

TEST_CASE("clique basics") {
    const Graph g = Graph::clique(4);
    CHECK(g.edge_count() == 6);
    for (NodeId v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
    CHECK(g.kind() == GraphKind::clique);
    check_symmetric_simple(g);

    CHECK(Graph::clique(1).edge_count() == 0);
    CHECK_THROWS_AS(Graph::clique(0), std::invalid_argument);
}

TEST_CASE("clique at scale stays implicit") {
    const Graph g = Graph::clique(10000);
    CHECK(g.edge_count() == 49'995'000ull);
    CHECK(g.degree(0) == 9999);
    CHECK(g.degree(9999) == 9999);
    CHECK(g.has_edge(17, 9231));
    CHECK_FALSE(g.has_edge(17, 17));
    CHECK(g.neighbors(5).size() == 9999);
    CHECK_THROWS_AS(g.degree(10000), std::out_of_range);
}

TEST_CASE("erdos-renyi edge cases") {
    Rng rng(1);
    CHECK(Graph::erdos_renyi(100, 0.0, rng).edge_count() == 0);
    const Graph full = Graph::erdos_renyi(100, 1.0, rng);
    CHECK(full.edge_count() == 4950);
    for (NodeId v = 0; v < 100; ++v) CHECK(full.degree(v) == 99);
    CHECK_THROWS_AS(Graph::erdos_renyi(10, -0.1, rng), std::invalid_argument);
    CHECK_THROWS_AS(Graph::erdos_renyi(10, 1.5, rng), std::invalid_argument);
    CHECK_THROWS_AS(Graph::erdos_renyi(0, 0.5, rng), std::invalid_argument);
}

TEST_CASE("erdos-renyi is simple, symmetric and deterministic") {
    Rng rng_a(42);
    Rng rng_b(42);
    const Graph a = Graph::erdos_renyi(300, 0.05, rng_a);
    const Graph b = Graph::erdos_renyi(300, 0.05, rng_b);
    CHECK(a.to_edge_list() == b.to_edge_list());
    check_symmetric_simple(a);

    Rng rng_c(43);
    const Graph c = Graph::erdos_renyi(300, 0.05, rng_c);
    CHECK(a.to_edge_list() != c.to_edge_list());
}

TEST_CASE("erdos-renyi edge count matches expectation") {
    // E[|E|] = p * n(n-1)/2; sample mean over independent seeds.
    {
        double total = 0.0;
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            Rng rng(900 + seed);
            total += static_cast<double>(Graph::erdos_renyi(1000, 0.01, rng).edge_count());
        }
        const double mean = total / 30.0;
        CHECK(mean == doctest::Approx(4995.0).epsilon(0.05));
    }
    {
        double total = 0.0;
        double degree_total = 0.0;
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            Rng rng(7000 + seed);
            const Graph g = Graph::erdos_renyi(10000, 0.001, rng);
            total += static_cast<double>(g.edge_count());
            degree_total += 2.0 * static_cast<double>(g.edge_count()) / 10000.0;
        }
        CHECK(total / 30.0 == doctest::Approx(49995.0).epsilon(0.02));
        CHECK(degree_total / 30.0 == doctest::Approx(9.999).epsilon(0.02));
    }
}

TEST_CASE("barabasi-albert ring-only and single growth step") {
    Rng rng(5);
    const Graph ring = Graph::barabasi_albert(100, 100, 1, rng);
    CHECK(ring.edge_count() == 100);
    for (NodeId v = 0; v < 100; ++v) CHECK(ring.degree(v) == 2);

    const Graph grown = Graph::barabasi_albert(101, 100, 1, rng);
    CHECK(grown.edge_count() == 101);
    CHECK(grown.degree(100) == 1);
}

TEST_CASE("barabasi-albert rejects bad parameters") {
    Rng rng(5);
    CHECK_THROWS_AS(Graph::barabasi_albert(50, 100, 1, rng), std::invalid_argument);
    CHECK_THROWS_AS(Graph::barabasi_albert(100, 2, 1, rng), std::invalid_argument);
    CHECK_THROWS_AS(Graph::barabasi_albert(100, 10, 11, rng), std::invalid_argument);
    CHECK_THROWS_AS(Graph::barabasi_albert(100, 10, 0, rng), std::invalid_argument);
}

TEST_CASE("barabasi-albert edge-count law and simplicity") {
    for (const auto& [n, ring, m] : {std::tuple<NodeId, NodeId, NodeId>{500, 100, 1},
                                     {500, 10, 3},
                                     {64, 5, 5},
                                     {300, 3, 2}}) {
        Rng rng(11 * n + m);
        const Graph g = Graph::barabasi_albert(n, ring, m, rng);
        CHECK(g.edge_count() == ring + static_cast<std::uint64_t>(m) * (n - ring));
        check_symmetric_simple(g);
    }
}

TEST_CASE("barabasi-albert grows heavy-tailed degrees") {
    // Brute-force degree census over an ensemble; hubs should appear.
    int tail_hits = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(1300 + seed);
        const Graph g = Graph::barabasi_albert(10000, 100, 1, rng);
        NodeId max_degree = 0;
        for (NodeId v = 0; v < g.node_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
        if (max_degree > 50) ++tail_hits;
    }
    CHECK(tail_hits >= 27);  // >= 90% of seeds
}

TEST_CASE("binary tree small shapes") {
    const Graph g = Graph::binary_tree(7);
    CHECK(g.edge_count() == 6);
    const std::vector<std::uint32_t> expected{0, 1, 1, 2, 2, 2, 2};
    for (NodeId v = 0; v < 7; ++v) CHECK(g.depth_of(v) == expected[v]);
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(3) == 1);  // leaf
    check_symmetric_simple(g);

    const Graph root_only = Graph::binary_tree(1);
    CHECK(root_only.edge_count() == 0);
    CHECK(root_only.depth_of(0) == 0);
    CHECK_THROWS_AS(Graph::binary_tree(0), std::invalid_argument);
}

TEST_CASE("binary tree at 10000 nodes: census agrees with closed form") {
    const Graph g = Graph::binary_tree(10000);
    CHECK(g.edge_count() == 9999);

    const std::vector<std::uint32_t> census = bfs_depths(g);
    std::uint32_t max_depth = 0;
    std::size_t deepest = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        CHECK(census[v] == g.depth_of(v));
        max_depth = std::max(max_depth, census[v]);
    }
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (census[v] == max_depth) ++deepest;

    CHECK(max_depth == 13);
    // Last level is partial: 10000 - (2^13 - 1) nodes.
    CHECK(deepest == 1809);
    CHECK(deepest == 10000 - ((1u << 13) - 1));

    // depth(child) = depth(parent) + 1 across every edge.
    for (NodeId v = 0; v < g.node_count(); ++v)
        g.for_each_neighbor(v, [&](NodeId u) {
            const auto lo = std::min(g.depth_of(u), g.depth_of(v));
            const auto hi = std::max(g.depth_of(u), g.depth_of(v));
            CHECK(hi == lo + 1);
        });

    // Every node has at most two children.
    for (NodeId v = 0; v < g.node_count(); ++v) {
        std::uint32_t children = 0;
        g.for_each_neighbor(v, [&](NodeId u) {
            if (g.depth_of(u) == g.depth_of(v) + 1) ++children;
        });
        CHECK(children <= 2);
    }
}

TEST_CASE("depth_of rejects non-trees") {
    CHECK_THROWS_AS(Graph::clique(4).depth_of(0), std::logic_error);
}

TEST_CASE("edge list round trip and golden form") {
    const Graph tree = Graph::binary_tree(3);
    CHECK(tree.to_edge_list() == "n 3\n0 1\n0 2\ndepths 0 1 1\n");

    const Graph parsed = Graph::from_edge_list(tree.to_edge_list());
    CHECK(parsed.kind() == GraphKind::binary_tree);
    CHECK(parsed.to_edge_list() == tree.to_edge_list());

    Rng rng(77);
    const Graph er = Graph::erdos_renyi(50, 0.1, rng);
    const Graph er_back = Graph::from_edge_list(er.to_edge_list());
    CHECK(er_back.to_edge_list() == er.to_edge_list());
}

TEST_CASE("parsed clique behaves like the implicit one") {
    const Graph implicit = Graph::clique(8);
    const Graph explicit_g = Graph::from_edge_list(implicit.to_edge_list());
    CHECK(explicit_g.edge_count() == implicit.edge_count());
    for (NodeId v = 0; v < 8; ++v) {
        CHECK(explicit_g.degree(v) == implicit.degree(v));
        CHECK(explicit_g.neighbors(v) == implicit.neighbors(v));
        for (NodeId u = 0; u < 8; ++u) CHECK(explicit_g.has_edge(u, v) == implicit.has_edge(u, v));
    }
}

TEST_CASE("edge list parser rejects malformed input") {
    CHECK_THROWS_AS(Graph::from_edge_list("x 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list("n 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list("n 3\n0 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list("n 3\n0 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list("n 3\n0 1\n0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list("n 3\n0\n"), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list("n 2\n0 1\ndepths 0 1 1\n"), std::invalid_argument);
}
