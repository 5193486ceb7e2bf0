#include "doctest.h"

#include <algorithm>
#include <bit>
#include <random>

#include "oracle.hpp"
#include "pcube/constructions.hpp"
#include "pcube/graph.hpp"

using namespace pcube;

TEST_CASE("vertex sets") {
    VertexSet a(70, {0, 3, 69});
    CHECK(a.count() == 3);
    CHECK(a.contains(69));
    CHECK_FALSE(a.contains(70));
    CHECK(a.to_string() == "{0,3,69}");
    CHECK(a.first() == 0);
    CHECK(VertexSet(5).first() == 5);
    CHECK((a - VertexSet(70, {3})).members() == std::vector<Vertex>{0, 69});
    CHECK(a.complement().count() == 67);
    CHECK(VertexSet::full(70).count() == 70);
    CHECK(VertexSet::from_mask(4, 0b1010) == VertexSet(4, {1, 3}));
    CHECK_THROWS_AS(a.insert(70), std::out_of_range);
    CHECK_THROWS_AS((void)(a | VertexSet(5)), std::invalid_argument);
    CHECK(VertexSet(4, {0}) < VertexSet(4, {1, 2, 3}));
    CHECK(VertexSet(4, {0, 1}) < VertexSet(4, {0}));
}

TEST_CASE("parsing") {
    const Graph k2 = parse_graph("2 1\n0 1\n");
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);
    CHECK(parse_graph("1 0\n").order() == 1);

    const Graph k23 = parse_graph("# K_2,3\n5 6\n0 2\n0 3\n0 4\n\n1 2\n1 3\n1 4\n");
    std::vector<std::size_t> degrees;
    for (Vertex v = 0; v < 5; ++v) degrees.push_back(k23.degree(v));
    std::sort(degrees.rbegin(), degrees.rend());
    CHECK(degrees == std::vector<std::size_t>{3, 3, 2, 2, 2});
    CHECK(parse_graph(serialize_graph(k23)) == k23);

    CHECK_THROWS_AS(parse_graph("2 1\n0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0 1 7\n"), ParseError);
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    try {
        parse_graph("3 2\n0 1\n1 x\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("distances against Floyd-Warshall") {
    CHECK(distances(path_graph(4))(0, 3) == 3);
    CHECK(distances(even_cycle(6)).diameter() == 3);

    const Graph q3 = hypercube(3);
    const auto d = distances(q3);
    for (Vertex u = 0; u < 8; ++u)
        for (Vertex v = 0; v < 8; ++v) CHECK(d(u, v) == std::popcount(u ^ v));

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_bipartite(6 + rng() % 8, 0.4, rng());
        const oracle::Metric ref(g);
        const auto mine = distances(g);
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = 0; v < g.order(); ++v) REQUIRE(mine(u, v) == ref.d[u][v]);
    }

    Graph split(4);
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    CHECK_FALSE(is_connected(split));
    CHECK_THROWS_AS(distances(split), DisconnectedGraphError);
    CHECK(bfs_distances(split)(0, 2) == DistanceMatrix::unreachable);
}

TEST_CASE("bipartite and tree predicates") {
    Graph c5(5);
    for (Vertex v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
    CHECK_FALSE(is_bipartite(c5));
    const auto cycle = odd_cycle(c5);
    CHECK(cycle.size() % 2 == 1);
    for (std::size_t i = 0; i < cycle.size(); ++i) CHECK(c5.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]));

    CHECK(is_tree(path_graph(4)));
    CHECK(is_bipartite(k_2_3()));
    CHECK_FALSE(is_tree(k_2_3()));
    CHECK(is_tree(Graph(1)));
    CHECK(odd_cycle(k_2_3()).empty());
}

TEST_CASE("isomorphism") {
    CHECK(are_isomorphic_small(cartesian_product(path_graph(2), path_graph(2)).graph, even_cycle(4)));
    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    CHECK_FALSE(are_isomorphic_small(path_graph(3), k3));

    // A relabelled Q_3: the returned map must be an isomorphism.
    const Graph q3 = hypercube(3);
    std::vector<Vertex> perm{5, 2, 7, 0, 3, 6, 1, 4};
    Graph relabelled(8);
    for (const auto& e : q3.edges()) relabelled.add_edge(perm[e.u], perm[e.v]);
    const auto map = are_isomorphic_small(q3, relabelled);
    REQUIRE(map);
    for (const auto& e : q3.edges()) CHECK(relabelled.has_edge((*map)[e.u], (*map)[e.v]));
    CHECK(isomorphism_invariant(q3) == isomorphism_invariant(relabelled));

    CHECK_FALSE(are_isomorphic_small(hypercube_minus_vertex(3), k_2_3()));
    CHECK_THROWS_AS(are_isomorphic_small(hypercube(4), hypercube(4), 12), SizeBoundError);
}

TEST_CASE("induced subgraphs keep their host numbering") {
    const auto sub = induced_subgraph(even_cycle(6), VertexSet(6, {1, 2, 3}));
    CHECK(sub.graph.order() == 3);
    CHECK(sub.graph.size() == 2);
    CHECK(sub.to_host == std::vector<Vertex>{1, 2, 3});
}
