// Property suites: each statement is checked exhaustively on the connected bipartite
// graphs with at most six vertices and on a seeded sample of larger ones.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "oracle.hpp"
#include "pcube/checks.hpp"
#include "pcube/convexity.hpp"
#include "pcube/theta.hpp"

using namespace pcube;

namespace {

constexpr std::uint64_t seed = 0xC0FFEE;

const Corpus& corpus() {
    static const Corpus c = enumerate_corpus(CorpusOptions{});
    return c;
}

void require_clean(const VerificationReport& r) {
    for (const auto& result : r.results) {
        INFO(result.graph_id << " " << result.check << ": " << result.witness);
        CHECK(result.status != Status::fail);
    }
    CHECK(r.count(Status::pass) > 0);
}

std::vector<const CorpusEntry*> partial_cubes(std::size_t max_order) {
    std::vector<const CorpusEntry*> out;
    for (const auto& e : corpus().graphs)
        if (e.graph.order() <= max_order && is_partial_cube(MetricGraph(e.graph))) out.push_back(&e);
    return out;
}

oracle::Mask to_mask(const VertexSet& s) {
    oracle::Mask m = 0;
    s.for_each([&](Vertex v) { m |= oracle::Mask{1} << v; });
    return m;
}

} // namespace

TEST_SUITE("hull") {
    TEST_CASE("idempotence, monotonicity and minimality") { require_clean(check_hull_properties(corpus(), seed)); }

    TEST_CASE("hull matches the reference hull on sampled sets") {
        std::mt19937_64 rng(seed);
        for (const auto& e : corpus().graphs) {
            const MetricGraph mg(e.graph);
            const oracle::Metric ref(e.graph);
            for (int trial = 0; trial < 20; ++trial) {
                const auto a = VertexSet::from_mask(mg.order(), rng() & ref.all());
                const auto trace = convex_hull(mg, a);
                REQUIRE(to_mask(trace.hull()) == ref.hull(to_mask(a)));
                REQUIRE(trace.depth() == ref.hull_depth(to_mask(a)));
            }
        }
    }
}

TEST_SUITE("copoints") {
    TEST_CASE("attaching-point independence") { require_clean(check_attaching_independence(corpus())); }

    TEST_CASE("half-spaces of partial cubes are the W sets") { require_clean(check_copoints_halfspaces(corpus())); }

    TEST_CASE("maximal proper convex subsets of a convex subgraph are its half-spaces") {
        for (const auto* e : partial_cubes(10)) {
            const MetricGraph mg(e->graph);
            for (const auto& f : enumerate_convex_sets(mg)) {
                if (f.count() < 2) continue;
                const auto sub = induced_subgraph(e->graph, f);
                const MetricGraph h(sub.graph);
                const auto family = enumerate_convex_sets(h);
                const VertexSet all = h.all_vertices();
                for (const auto& c : family) {
                    if (c == all) continue;
                    const bool maximal = std::none_of(family.begin(), family.end(), [&](const VertexSet& d) {
                        return d != all && d != c && c.is_subset_of(d);
                    });
                    if (!maximal) continue;
                    INFO(e->id << ": " << c.to_string() << " inside " << f.to_string());
                    REQUIRE(is_convex(h, all - c));
                }
            }
        }
    }

    TEST_CASE("convex subgraphs of Att-convex graphs are Att-convex") {
        std::mt19937_64 rng(seed);
        for (const auto& e : corpus().graphs) {
            if (e.graph.order() > 10) continue;
            const MetricGraph mg(e.graph);
            if (!is_att_convex(mg, CopointMethod::oracle)) continue;
            auto family = enumerate_convex_sets(mg);
            std::shuffle(family.begin(), family.end(), rng);
            if (e.graph.order() > 6 && family.size() > 25) family.resize(25);
            for (const auto& f : family) {
                if (f.empty()) continue;
                const MetricGraph h(induced_subgraph(e.graph, f).graph);
                INFO(e.id << ": " << f.to_string());
                REQUIRE(is_att_convex(h, CopointMethod::oracle));
            }
        }
    }
}

TEST_SUITE("ph-stability") {
    TEST_CASE("one-sided and symmetric forms agree") { require_clean(check_ph_stable_forms(corpus())); }

    TEST_CASE("ph <= 1 routes agree") { require_clean(check_ph_consistency(corpus())); }
}

TEST_SUITE("partial cubes") {
    TEST_CASE("intervals are convex") { require_clean(check_interval_convexity(corpus())); }

    TEST_CASE("boundary lemma") { require_clean(check_boundary_lemma(corpus())); }

    TEST_CASE("a bipartite graph is a partial cube iff every polytope on few vertices induces one") {
        for (const auto& e : corpus().graphs) {
            if (e.graph.order() > 10) continue;
            const MetricGraph mg(e.graph);
            const std::size_t n = mg.order();
            std::set<VertexSet> polytopes;
            std::vector<Vertex> pick;
            auto extend = [&](auto&& self, Vertex from) -> void {
                if (!pick.empty()) polytopes.insert(hull(mg, VertexSet(n, pick)));
                if (pick.size() == 6) return;
                for (Vertex v = from; v < n; ++v) {
                    pick.push_back(v);
                    self(self, v + 1);
                    pick.pop_back();
                }
            };
            extend(extend, 0);
            const bool all_induce = std::all_of(polytopes.begin(), polytopes.end(), [&](const VertexSet& p) {
                return is_partial_cube(MetricGraph(induced_subgraph(e.graph, p).graph));
            });
            INFO(e.id);
            REQUIRE(all_induce == is_partial_cube(mg));
        }
    }

    TEST_CASE("W and U sets restrict to convex subgraphs") {
        for (const auto* e : partial_cubes(10)) {
            const MetricGraph mg(e->graph);
            for (const auto& f : enumerate_convex_sets(mg)) {
                if (f.count() < 2) continue;
                const auto sub = induced_subgraph(e->graph, f);
                const MetricGraph h(sub.graph);
                auto lift = [&](const VertexSet& s) {
                    VertexSet out(mg.order());
                    s.for_each([&](Vertex v) { out.insert(sub.to_host[v]); });
                    return out;
                };
                for (const auto& edge : sub.graph.edges()) {
                    const Vertex a = sub.to_host[edge.u], b = sub.to_host[edge.v];
                    INFO(e->id << ": edge " << a << "-" << b << " in " << f.to_string());
                    REQUIRE(lift(w_set(h, edge.u, edge.v)) == (w_set(mg, a, b) & f));
                    REQUIRE(lift(u_set(h, edge.u, edge.v)) == (u_set(mg, a, b) & f));
                }
            }
        }
    }

    TEST_CASE("every geodesic edge is Theta-related to an edge of any path with the same ends") {
        std::mt19937_64 rng(seed);
        for (const auto* e : partial_cubes(14)) {
            const MetricGraph mg(e->graph);
            const Graph& g = e->graph;
            for (int trial = 0; trial < 10; ++trial) {
                const Vertex x = rng() % g.order(), y = rng() % g.order();
                if (x == y) continue;
                // A geodesic by greedy descent.
                std::vector<Vertex> geodesic{x};
                while (geodesic.back() != y)
                    for (Vertex w : g.neighbors(geodesic.back()))
                        if (mg.distance(w, y) < mg.distance(geodesic.back(), y)) {
                            geodesic.push_back(w);
                            break;
                        }
                // A random simple path by randomized depth-first search.
                std::vector<Vertex> path{x};
                VertexSet seen(g.order(), {x});
                auto dfs = [&](auto&& self) -> bool {
                    if (path.back() == y) return true;
                    auto next = g.neighbors(path.back());
                    std::shuffle(next.begin(), next.end(), rng);
                    for (Vertex w : next) {
                        if (seen.contains(w)) continue;
                        seen.insert(w);
                        path.push_back(w);
                        if (self(self)) return true;
                        path.pop_back();
                    }
                    return false;
                };
                REQUIRE(dfs(dfs));
                for (std::size_t i = 0; i + 1 < geodesic.size(); ++i) {
                    bool related = false;
                    for (std::size_t j = 0; j + 1 < path.size() && !related; ++j)
                        related = theta_related(mg, {geodesic[i], geodesic[i + 1]}, {path[j], path[j + 1]});
                    INFO(e->id << ": geodesic edge " << geodesic[i] << "-" << geodesic[i + 1]);
                    REQUIRE(related);
                }
            }
        }
    }
}

TEST_SUITE("gates") {
    TEST_CASE("gated sets are convex and agree with the reference") {
        for (std::size_t n = 1; n <= 6; ++n)
            for (const auto& g : connected_bipartite_graphs(n)) {
                const MetricGraph mg(g);
                const oracle::Metric ref(g);
                for (oracle::Mask m = 1; m <= ref.all(); ++m) {
                    const auto a = VertexSet::from_mask(n, m);
                    const bool gated = is_gated(mg, a).gated;
                    REQUIRE(gated == ref.gated(m));
                    if (gated) REQUIRE(ref.convex(m));
                }
            }
    }
}

TEST_SUITE("mutation") {
    TEST_CASE("deleting an edge from a golden partial cube is detected") {
        std::mt19937_64 rng(seed);
        std::size_t mutants = 0, detected = 0;
        for (int round = 0; round < 10; ++round) {
            auto table = golden_table();
            for (auto& entry : table) {
                if (!entry.partial_cube || entry.graph.size() == 0) continue;
                const auto edges = entry.graph.edges();
                const Edge dropped = edges[rng() % edges.size()];
                Graph mutant(entry.graph.order());
                for (const auto& edge : edges)
                    if (edge != dropped) mutant.add_edge(edge.u, edge.v);
                entry.graph = mutant;
                ++mutants;
            }
            const auto report = check_golden(table);
            detected += report.count(Status::fail);
            for (const auto& r : report.results)
                if (r.status == Status::fail) CHECK_FALSE(r.witness.empty());
        }
        MESSAGE("detected " << detected << " of " << mutants << " mutants");
        CHECK(detected >= 1);
    }
}
