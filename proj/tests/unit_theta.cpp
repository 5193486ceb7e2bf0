#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "pcube/constructions.hpp"
#include "pcube/convexity.hpp"
#include "pcube/corpus.hpp"
#include "pcube/theta.hpp"

using namespace pcube;

TEST_CASE("Theta relation") {
    const MetricGraph c4(even_cycle(4)); // 0-1-2-3-0
    CHECK(theta_related(c4, {0, 1}, {3, 2}));
    CHECK_FALSE(theta_related(c4, {0, 1}, {2, 3}));
    CHECK_FALSE(theta_related(c4, {0, 1}, {1, 0}));
    CHECK(theta_related(c4, {0, 1}, {0, 1}));
    CHECK_FALSE(theta_related(c4, {0, 1}, {1, 2}));

    const MetricGraph p3(path_graph(3));
    CHECK_FALSE(theta_related(p3, {0, 1}, {1, 2}));
    CHECK_FALSE(theta_related(p3, {0, 1}, {2, 1}));
}

TEST_CASE("W and U sets") {
    const MetricGraph k2(path_graph(2));
    CHECK(w_set(k2, 0, 1) == VertexSet(2, {0}));
    CHECK(u_set(k2, 0, 1) == VertexSet(2, {0}));

    const MetricGraph p4(path_graph(4));
    CHECK(w_set(p4, 1, 2) == VertexSet(4, {0, 1}));
    CHECK(u_set(p4, 1, 2) == VertexSet(4, {1}));
    CHECK_THROWS_AS(w_set(p4, 0, 2), GraphError);

    const MetricGraph q3(hypercube(3));
    for (const auto& e : q3.graph().edges()) {
        CHECK(w_set(q3, e.u, e.v).count() == 4);
        CHECK(u_set(q3, e.u, e.v).count() == 4);
    }

    for (std::size_t n = 2; n <= 6; ++n)
        for (const auto& g : connected_bipartite_graphs(n)) {
            const MetricGraph mg(g);
            for (const auto& e : g.edges()) {
                const auto h = half_space_data(mg, {e.u, e.v});
                CHECK_FALSE(h.w_ab.intersects(h.w_ba));
                CHECK((h.w_ab | h.w_ba) == mg.all_vertices());
                CHECK(h.u_ab.is_subset_of(h.w_ab));
                CHECK(h.u_ba.is_subset_of(h.w_ba));
                CHECK(h.u_ab.contains(e.u));
                CHECK(h.u_ba.contains(e.v));
            }
        }
}

TEST_CASE("partial cube recognition") {
    for (const auto& g : {hypercube(3), even_cycle(6), path_graph(5), hypercube_minus_vertex(3), Graph(1)}) {
        const MetricGraph mg(g);
        CHECK(is_partial_cube_djokovic(mg));
        CHECK(is_partial_cube_winkler(mg));
        CHECK(is_partial_cube_embedding(mg));
    }

    const MetricGraph k23(k_2_3());
    const auto d = is_partial_cube_djokovic(k23);
    REQUIRE_FALSE(d);
    REQUIRE(d.non_convex_side);
    CHECK_FALSE(is_convex(k23, w_set(k23, d.non_convex_side->tail, d.non_convex_side->head)));
    const auto w = is_partial_cube_winkler(k23);
    REQUIRE_FALSE(w);
    REQUIRE(w.transitivity_violation);
    const auto& [e0, e1, e2] = *w.transitivity_violation;
    const ThetaStructure theta(k23);
    const auto index = [&](Edge e) {
        return static_cast<std::size_t>(std::find(theta.edges().begin(), theta.edges().end(), e) - theta.edges().begin());
    };
    CHECK(theta.related(index(e0), index(e1)));
    CHECK(theta.related(index(e1), index(e2)));
    CHECK_FALSE(theta.related(index(e0), index(e2)));
    CHECK_FALSE(is_partial_cube_embedding(k23));

    Graph c5(5);
    for (Vertex v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
    CHECK_FALSE(is_partial_cube(MetricGraph(c5)));

    // Against the independent definition on the exhaustive tier.
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& g : connected_bipartite_graphs(n))
            REQUIRE(is_partial_cube(MetricGraph(g)) == oracle::Metric(g).partial_cube(g));
}

TEST_CASE("Theta classes") {
    auto sizes = [](const Graph& g) {
        std::vector<std::size_t> out;
        for (const auto& c : theta_classes(MetricGraph(g))) out.push_back(c.edges.size());
        return out;
    };
    CHECK(sizes(even_cycle(6)) == std::vector<std::size_t>{2, 2, 2});
    CHECK(sizes(hypercube(3)) == std::vector<std::size_t>{4, 4, 4});
    CHECK(sizes(path_graph(5)) == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK_THROWS_AS(theta_classes(MetricGraph(k_2_3())), NotPartialCubeError);

    const MetricGraph q3(hypercube(3));
    for (const auto& c : theta_classes(q3)) {
        const auto rep = c.representative();
        CHECK(rep.tail < rep.head);
        const auto w = w_set(q3, rep.tail, rep.head);
        for (const auto& e : c.edges) {
            CHECK(w.contains(e.tail));
            CHECK_FALSE(w.contains(e.head));
        }
    }
}

TEST_CASE("cube embedding") {
    const MetricGraph q3(hypercube(3));
    const auto emb = cube_embedding(q3);
    CHECK(emb.dimension() == 3);
    for (Vertex u = 0; u < 8; ++u)
        for (Vertex v = 0; v < 8; ++v) CHECK(emb.hamming(u, v) == static_cast<std::size_t>(q3.distance(u, v)));
    CHECK(serialize_embedding(emb).rfind("# class_order: ", 0) == 0);

    const Graph tree = parse_graph("6 5\n0 1\n1 2\n1 3\n3 4\n3 5\n");
    CHECK(cube_embedding(MetricGraph(tree)).dimension() == 5);
    CHECK_THROWS_AS(cube_embedding(MetricGraph(k_2_3())), NotPartialCubeError);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const MetricGraph mg(random_bipartite(8 + rng() % 6, 0.35, rng()));
        if (!is_partial_cube(mg)) continue;
        const auto e = cube_embedding(mg);
        for (Vertex u = 0; u < mg.order(); ++u)
            for (Vertex v = 0; v < mg.order(); ++v)
                REQUIRE(e.hamming(u, v) == static_cast<std::size_t>(mg.distance(u, v)));
    }
}

TEST_CASE("geodesic check") {
    const MetricGraph c6(even_cycle(6));
    CHECK(geodesic_check(c6, {0, 1}));
    CHECK(geodesic_check(c6, {0, 1, 2, 3}));
    CHECK_FALSE(geodesic_check(c6, {0, 5, 4, 3, 2}));
    CHECK_THROWS_AS(geodesic_check(c6, {0, 2}), GraphError);
    CHECK_THROWS_AS(geodesic_check(c6, {0, 1, 0}), GraphError);

    const MetricGraph q3(hypercube(3));
    CHECK(geodesic_check(q3, {0, 1, 3, 7}));
    CHECK_FALSE(geodesic_check(q3, {0, 1, 3, 2}));
    CHECK_THROWS_AS(geodesic_check(MetricGraph(k_2_3()), {0, 2}), NotPartialCubeError);

    // A path is a geodesic exactly when its length is the distance of its ends.
    const MetricGraph grid33(grid(3, 3));
    for (const std::vector<Vertex>& path : {std::vector<Vertex>{0, 1, 2, 5, 8}, std::vector<Vertex>{0, 1, 4, 3, 6},
                                            std::vector<Vertex>{0, 3, 4, 5, 2, 1}})
        CHECK(geodesic_check(grid33, path) ==
              (static_cast<int>(path.size()) - 1 == grid33.distance(path.front(), path.back())));
}
