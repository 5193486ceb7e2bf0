#include "pcube/checks.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "pcube/convexity.hpp"
#include "pcube/theta.hpp"

namespace pcube {

namespace {

struct Outcome {
    Status status = Status::pass;
    std::string witness;
};

Outcome pass() { return {}; }
Outcome skip(std::string why = {}) { return {Status::skip, std::move(why)}; }
Outcome fail(std::string why) { return {Status::fail, std::move(why)}; }

template <typename Fn>
CheckResult run_one(const std::string& id, const std::string& provenance, const std::string& check, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = fn();
    } catch (const std::exception& e) {
        outcome = fail(std::string("exception: ") + e.what());
    }
    const auto stop = std::chrono::steady_clock::now();
    CheckResult r;
    r.graph_id = id;
    r.provenance = provenance;
    r.check = check;
    r.status = outcome.status;
    r.witness = std::move(outcome.witness);
    r.millis = std::chrono::duration<double, std::milli>(stop - start).count();
    return r;
}

template <typename Fn>
VerificationReport over_corpus(const Corpus& corpus, const std::string& check, Fn&& fn) {
    VerificationReport report;
    for (const auto& entry : corpus.graphs)
        report.results.push_back(run_one(entry.id, entry.provenance, check, [&] { return fn(entry); }));
    return report;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string describe(const Copoint& c) {
    return "copoint " + c.set.to_string() + " at " + std::to_string(c.at) + " with Att " + c.att.to_string();
}

bool within_oracle(const Graph& g) { return g.order() <= default_oracle_bound; }

/// Connected bipartite partial cube, or the reason it is not.
std::optional<std::string> not_partial_cube(const Graph& g) {
    if (!is_connected(g)) return "disconnected";
    if (!is_bipartite(g)) return "not bipartite";
    if (!is_partial_cube(MetricGraph(g))) return "not a partial cube";
    return std::nullopt;
}

std::vector<VertexSet> gated_sets(const MetricGraph& mg) {
    std::vector<VertexSet> out;
    for (auto& s : enumerate_convex_sets(mg))
        if (!s.empty() && is_gated(mg, s)) out.push_back(std::move(s));
    return out;
}

} // namespace

// --- Recognition and the characterization theorems ---------------------------

VerificationReport check_recognizer_agreement(const Corpus& corpus) {
    return over_corpus(corpus, "recognizer_agreement", [](const CorpusEntry& e) {
        if (!is_connected(e.graph) || !is_bipartite(e.graph)) return skip("not connected bipartite");
        const MetricGraph mg(e.graph);
        const auto d = is_partial_cube_djokovic(mg);
        const auto w = is_partial_cube_winkler(mg);
        const auto emb = is_partial_cube_embedding(mg);
        bool built = true;
        try {
            (void)cube_embedding(mg);
        } catch (const NotPartialCubeError&) {
            built = false;
        }
        if (d.partial_cube == w.partial_cube && w.partial_cube == emb.partial_cube && emb.partial_cube == built)
            return pass();
        return fail("djokovic=" + yes_no(d.partial_cube) + " winkler=" + yes_no(w.partial_cube) +
                    " embedding=" + yes_no(emb.partial_cube) + " cube_embedding=" + yes_no(built) + " [" + d.reason +
                    "|" + w.reason + "|" + emb.reason + "]");
    });
}

VerificationReport check_att_convex_theorem(const Corpus& corpus) {
    return over_corpus(corpus, "att_convex_theorem", [](const CorpusEntry& e) {
        if (!is_connected(e.graph) || !is_bipartite(e.graph)) return skip("not connected bipartite");
        if (!within_oracle(e.graph)) return skip("beyond oracle bound");
        const MetricGraph mg(e.graph);
        const auto pc = is_partial_cube_winkler(mg);
        const auto att = is_att_convex(mg, CopointMethod::oracle);
        if (pc.partial_cube == att.att_convex) return pass();
        return fail("partial cube=" + yes_no(pc.partial_cube) + " att-convex=" + yes_no(att.att_convex) +
                    (att.witness ? "; " + describe(*att.witness) : "") + (pc.reason.empty() ? "" : "; " + pc.reason));
    });
}

VerificationReport check_ph1_implies_pc(const Corpus& corpus) {
    const std::string name = "ph1_implies_pc";
    auto report = over_corpus(corpus, name, [](const CorpusEntry& e) {
        if (!is_connected(e.graph) || !is_bipartite(e.graph)) return skip("not connected bipartite");
        if (!within_oracle(e.graph)) return skip("beyond oracle bound");
        const MetricGraph mg(e.graph);
        const auto ph = pre_hull_number_detail(mg);
        const bool pc = is_partial_cube(mg);
        if (ph.value <= 1 && !pc)
            return fail("ph = " + std::to_string(ph.value) + " but not a partial cube: " +
                        is_partial_cube_winkler(mg).reason);
        return pass();
    });
    // ph > 1 says nothing about being a partial cube: one instance of each kind.
    const std::vector<std::pair<std::string, std::pair<Graph, bool>>> ph2 = {
        {"ph2:K_2_3", {k_2_3(), false}}, {"ph2:Q_3_minus", {hypercube_minus_vertex(3), true}}};
    for (const auto& [id, data] : ph2) {
        const auto& [graph, expected_pc] = data;
        report.results.push_back(run_one(id, "family", name, [&] {
            const MetricGraph mg(graph);
            const auto ph = pre_hull_number(mg);
            const bool pc = is_partial_cube(mg);
            if (ph == 2 && pc == expected_pc) return pass();
            return fail("ph = " + std::to_string(ph) + ", partial cube=" + yes_no(pc) + " (expected ph = 2, " +
                        yes_no(expected_pc) + ")");
        }));
    }
    return report;
}

VerificationReport check_tree_ph0(const Corpus& corpus) {
    return over_corpus(corpus, "tree_ph0", [](const CorpusEntry& e) {
        if (!is_connected(e.graph) || !is_bipartite(e.graph)) return skip("not connected bipartite");
        if (!within_oracle(e.graph)) return skip("beyond oracle bound");
        const auto ph = pre_hull_number_detail(MetricGraph(e.graph));
        const bool tree = is_tree(e.graph);
        if ((ph.value == 0) == tree) return pass();
        return fail("ph = " + std::to_string(ph.value) + ", tree=" + yes_no(tree) +
                    (ph.attained_by ? "; " + describe(*ph.attained_by) : ""));
    });
}

VerificationReport check_ph_consistency(const Corpus& corpus) {
    return over_corpus(corpus, "ph_consistency", [](const CorpusEntry& e) {
        if (!is_connected(e.graph) || !is_bipartite(e.graph)) return skip("not connected bipartite");
        if (!within_oracle(e.graph)) return skip("beyond oracle bound");
        const MetricGraph mg(e.graph);
        const bool by_depth = pre_hull_number(mg) <= 1;
        const bool by_route = ph_leq1_bipartite(mg);
        const bool by_copoints = ph_leq1_by_copoints(mg, CopointMethod::oracle);
        const bool oracle_depth = pre_hull_number(mg, CopointMethod::oracle) <= 1;
        if (by_depth == by_route && by_route == by_copoints && by_copoints == oracle_depth) return pass();
        return fail("ph<=1 by hull depth=" + yes_no(by_depth) + ", by oracle depth=" + yes_no(oracle_depth) +
                    ", ph_leq1_bipartite=" + yes_no(by_route) + ", copoint criterion=" + yes_no(by_copoints));
    });
}

VerificationReport check_copoints_halfspaces(const Corpus& corpus) {
    return over_corpus(corpus, "copoints_halfspaces", [](const CorpusEntry& e) {
        if (auto why = not_partial_cube(e.graph)) return skip(*why);
        if (!within_oracle(e.graph)) return skip("beyond oracle bound");
        const MetricGraph mg(e.graph);
        for (Vertex x = 0; x < mg.order(); ++x) {
            const auto oracle = copoints_at(mg, x, CopointMethod::oracle);
            const auto fast = copoints_at(mg, x, CopointMethod::half_spaces);
            if (oracle != fast)
                return fail("copoints at " + std::to_string(x) + " differ: oracle has " +
                            std::to_string(oracle.size()) + ", half-space route has " + std::to_string(fast.size()));
        }
        std::set<VertexSet> from_oracle, from_w;
        const VertexSet all = mg.all_vertices();
        for (const auto& s : enumerate_convex_sets(mg))
            if (!s.empty() && s != all && is_convex(mg, all - s)) from_oracle.insert(s);
        for (const auto& edge : e.graph.edges()) {
            from_w.insert(w_set(mg, edge.u, edge.v));
            from_w.insert(w_set(mg, edge.v, edge.u));
        }
        if (from_oracle != from_w)
            return fail("half-spaces (" + std::to_string(from_oracle.size()) + ") differ from the W sets (" +
                        std::to_string(from_w.size()) + ")");
        return pass();
    });
}

// --- Closure theorems ------------------------------------------------------

VerificationReport check_closure_product(const std::vector<std::pair<NamedGraph, NamedGraph>>& pairs) {
    VerificationReport report;
    for (const auto& [left, right] : pairs) {
        const std::string id = "prod:" + left.id + "x" + right.id;
        report.results.push_back(run_one(id, "product", "closure_product", [&] {
            if (auto why = not_partial_cube(left.graph)) return skip(left.id + " " + *why);
            if (auto why = not_partial_cube(right.graph)) return skip(right.id + " " + *why);
            const auto ph0 = pre_hull_number(MetricGraph(left.graph));
            const auto ph1 = pre_hull_number(MetricGraph(right.graph));
            const MetricGraph product(cartesian_product(left.graph, right.graph).graph);
            if (!is_partial_cube(product)) return fail("product is not a partial cube");
            const auto ph = pre_hull_number(product);
            const bool by_u_sets = ph_leq1_by_u_sets(product);
            const bool expected = ph0 <= 1 && ph1 <= 1;
            if ((ph <= 1) == expected && by_u_sets == expected) return pass();
            return fail("ph(G0)=" + std::to_string(ph0) + " ph(G1)=" + std::to_string(ph1) +
                        " ph(product)=" + std::to_string(ph) + " U-set criterion=" + yes_no(by_u_sets));
        }));
    }
    return report;
}

VerificationReport check_closure_amalgam(const std::vector<NamedAmalgam>& specs) {
    VerificationReport report;
    for (const auto& named : specs) {
        report.results.push_back(run_one(named.id, "amalgam", "closure_amalgam", [&] {
            const auto& spec = named.spec;
            if (auto why = not_partial_cube(spec.g0)) return skip("first part " + *why);
            if (auto why = not_partial_cube(spec.g1)) return skip("second part " + *why);
            const Amalgam amalgam = gated_amalgam(spec);
            const MetricGraph mg(amalgam.graph);
            if (!is_partial_cube(mg)) return fail("amalgam is not a partial cube");
            const VertexSet copy0(mg.order(), amalgam.from0);
            const VertexSet copy1(mg.order(), amalgam.from1);
            if (auto r = is_gated(mg, copy0); !r)
                return fail("copy of the first part is not gated (no gate for " + std::to_string(*r.ungated) + ")");
            if (auto r = is_gated(mg, copy1); !r)
                return fail("copy of the second part is not gated (no gate for " + std::to_string(*r.ungated) + ")");
            const auto ph0 = pre_hull_number(MetricGraph(spec.g0));
            const auto ph1 = pre_hull_number(MetricGraph(spec.g1));
            const auto ph = pre_hull_number(mg);
            if ((ph <= 1) == (ph0 <= 1 && ph1 <= 1)) return pass();
            return fail("ph(G0)=" + std::to_string(ph0) + " ph(G1)=" + std::to_string(ph1) +
                        " ph(amalgam)=" + std::to_string(ph));
        }));
    }
    return report;
}

VerificationReport check_gated_subgraph(const Corpus& corpus) {
    return over_corpus(corpus, "gated_subgraph", [](const CorpusEntry& e) {
        if (auto why = not_partial_cube(e.graph)) return skip(*why);
        if (!within_oracle(e.graph)) return skip("beyond oracle bound");
        const MetricGraph mg(e.graph);
        if (pre_hull_number(mg) > 1) return skip("ph > 1");
        for (const auto& s : gated_sets(mg)) {
            const auto sub = induced_subgraph(e.graph, s);
            const auto ph = pre_hull_number(MetricGraph(sub.graph));
            if (ph > 1) return fail("gated set " + s.to_string() + " induces ph = " + std::to_string(ph));
        }
        return pass();
    });
}

std::optional<VertexSet> find_convex_copy(const Graph& host, const Graph& pattern) {
    const MetricGraph mg(host);
    for (const auto& s : enumerate_convex_sets(mg)) {
        if (s.count() != pattern.order()) continue;
        const auto sub = induced_subgraph(host, s);
        if (sub.graph.size() != pattern.size()) continue;
        if (are_isomorphic_small(sub.graph, pattern, default_oracle_bound)) return s;
    }
    return std::nullopt;
}

VerificationReport check_figure1() {
    VerificationReport report;
    report.results.push_back(run_one("M_4_1", "family M_n_1 4", "figure1", [] {
        const Graph m41 = hypercube_minus_antipodal_pair(4);
        const Graph q3m = hypercube_minus_vertex(3);
        const MetricGraph mg(m41);
        const auto ph_fast = pre_hull_number(mg, CopointMethod::half_spaces);
        const auto ph_oracle = pre_hull_number(mg, CopointMethod::oracle);
        if (ph_fast != 1 || ph_oracle != 1)
            return fail("ph(M_4_1) = " + std::to_string(ph_fast) + " (half-spaces), " + std::to_string(ph_oracle) +
                        " (oracle); expected 1");
        const auto copy = find_convex_copy(m41, q3m);
        if (!copy) return fail("no convex induced copy of Q_3^- in M_4_1");
        const auto sub = induced_subgraph(m41, *copy);
        const auto ph_sub = pre_hull_number(MetricGraph(sub.graph));
        if (ph_sub != 2) return fail("convex copy " + copy->to_string() + " has ph = " + std::to_string(ph_sub));
        return pass();
    }));
    return report;
}

// --- Expansion and contraction -----------------------------------------------

namespace {

/// Proper covers built from pairs of convex sets; convex sets are isometric, so only the
/// set-theoretic clauses need filtering. At most `limit`, deterministic order.
std::vector<ProperCover> convex_covers(const MetricGraph& mg, std::size_t limit) {
    const auto family = enumerate_convex_sets(mg);
    const VertexSet all = mg.all_vertices();
    std::vector<ProperCover> out;
    for (std::size_t i = 0; i < family.size() && out.size() < limit; ++i)
        for (std::size_t j = i; j < family.size() && out.size() < limit; ++j) {
            const auto& a = family[i];
            const auto& b = family[j];
            if (!a.intersects(b) || (a | b) != all) continue;
            ProperCover cover{a, b};
            if (check_proper_cover(mg.graph(), cover)) out.push_back(std::move(cover));
        }
    return out;
}

} // namespace

VerificationReport check_expansion_duality(const Corpus& corpus) {
    return over_corpus(corpus, "expansion_duality", [](const CorpusEntry& e) {
        if (auto why = not_partial_cube(e.graph)) return skip(*why);
        if (!within_oracle(e.graph)) return skip("beyond isomorphism bound");
        const MetricGraph mg(e.graph);
        const auto classes = theta_classes(mg);
        for (std::size_t k = 0; k < classes.size(); ++k) {
            const auto contraction = theta_contraction(mg, k);
            const MetricGraph contracted(contraction.graph);
            if (!is_partial_cube(contracted)) return fail("contraction of class " + std::to_string(k) + " is not a partial cube");
            const auto cover = contraction_cover(mg, k, contraction);
            if (auto c = check_proper_cover(contraction.graph, cover); !c)
                return fail("induced cover of class " + std::to_string(k) + " is not proper: " + c.violated_clause);
            const auto expanded = expansion(contraction.graph, cover);
            if (!are_isomorphic_small(expanded.graph, e.graph, default_oracle_bound))
                return fail("expanding the contraction of class " + std::to_string(k) + " does not give the graph back");
        }
        for (const auto& cover : convex_covers(mg, 12)) {
            const auto ex = expansion(e.graph, cover);
            const MetricGraph expanded(ex.graph);
            if (!is_partial_cube_winkler(expanded) || !is_partial_cube_djokovic(expanded))
                return fail("expansion along (" + cover.v0.to_string() + ", " + cover.v1.to_string() +
                            ") is not a partial cube");
        }
        return pass();
    });
}

// --- Convexity properties ----------------------------------------------------

namespace {

std::optional<std::string> hull_trace_problem(const MetricGraph& mg, const VertexSet& a) {
    const auto trace = convex_hull(mg, a);
    for (std::size_t i = 1; i < trace.stages.size(); ++i)
        if (!trace.stages[i - 1].is_subset_of(trace.stages[i]) || trace.stages[i - 1] == trace.stages[i])
            return "hull stages of " + a.to_string() + " do not strictly increase";
    if (!is_convex(mg, trace.hull())) return "hull of " + a.to_string() + " is not convex";
    if (hull(mg, trace.hull()) != trace.hull()) return "hull of " + a.to_string() + " is not idempotent";
    return std::nullopt;
}

VertexSet random_subset(std::mt19937_64& rng, std::size_t n) {
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
        if ((rng() & 3u) == 0) s.insert(v);
    return s;
}

} // namespace

VerificationReport check_hull_properties(const Corpus& corpus, std::uint64_t seed) {
    return over_corpus(corpus, "hull_properties", [seed](const CorpusEntry& e) {
        if (!is_connected(e.graph)) return skip("disconnected");
        const MetricGraph mg(e.graph);
        const std::size_t n = mg.order();
        std::vector<VertexSet> family;
        if (n <= 12) family = enumerate_convex_sets(mg);
        auto minimal = [&](const VertexSet& a, const VertexSet& h) {
            if (family.empty()) return true;
            VertexSet meet = mg.all_vertices();
            for (const auto& c : family)
                if (a.is_subset_of(c)) meet &= c;
            return meet == h;
        };

        if (n <= 6) {
            const std::uint64_t limit = std::uint64_t{1} << n;
            std::vector<VertexSet> hulls;
            for (std::uint64_t mask = 0; mask < limit; ++mask) {
                const auto a = VertexSet::from_mask(n, mask);
                if (auto problem = hull_trace_problem(mg, a)) return fail(*problem);
                hulls.push_back(hull(mg, a));
                if (!minimal(a, hulls.back())) return fail("hull of " + a.to_string() + " is not the least convex superset");
            }
            for (std::uint64_t a = 0; a < limit; ++a)
                for (std::uint64_t b = a;; b = (b + 1) | a) {
                    if (!hulls[a].is_subset_of(hulls[b]))
                        return fail("hull not monotone on " + VertexSet::from_mask(n, a).to_string() + " within " +
                                    VertexSet::from_mask(n, b).to_string());
                    if (b == limit - 1) break;
                }
            return pass();
        }

        std::mt19937_64 rng(seed ^ (n * 0x9e3779b97f4a7c15ULL) ^ e.graph.size());
        for (int trial = 0; trial < 100; ++trial) {
            const auto a = random_subset(rng, n);
            const auto b = a | random_subset(rng, n);
            if (auto problem = hull_trace_problem(mg, a)) return fail(*problem);
            const auto ha = hull(mg, a);
            if (!minimal(a, ha)) return fail("hull of " + a.to_string() + " is not the least convex superset");
            if (!ha.is_subset_of(hull(mg, b)))
                return fail("hull not monotone on " + a.to_string() + " within " + b.to_string());
        }
        return pass();
    });
}

VerificationReport check_attaching_independence(const Corpus& corpus) {
    return over_corpus(corpus, "attaching_independence", [](const CorpusEntry& e) {
        if (!is_connected(e.graph)) return skip("disconnected");
        if (!within_oracle(e.graph)) return skip("beyond oracle bound");
        const MetricGraph mg(e.graph);
        for (const auto& c : copoints(mg, CopointMethod::oracle)) {
            if (c.set.contains(c.at) || !c.att.contains(c.at) || !is_convex(mg, c.set))
                return fail("malformed " + describe(c));
            if (attaching_points(mg, c.set, c.at) != c.att) return fail("attaching_points disagrees for " + describe(c));
            const VertexSet closed = c.set | c.att;
            bool ok = true;
            Vertex bad = 0;
            c.att.for_each([&](Vertex y) {
                VertexSet grown = c.set;
                grown.insert(y);
                if (ok && hull(mg, grown) != closed) {
                    ok = false;
                    bad = y;
                }
            });
            if (!ok) return fail("co(K + " + std::to_string(bad) + ") != K + Att(K) for " + describe(c));
        }
        return pass();
    });
}

VerificationReport check_ph_stable_forms(const Corpus& corpus) {
    return over_corpus(corpus, "ph_stable_forms", [](const CorpusEntry& e) {
        if (!is_connected(e.graph)) return skip("disconnected");
        const MetricGraph mg(e.graph);
        const std::size_t n = mg.order();
        std::vector<VertexSet> sets;
        // All sets of at most four vertices.
        std::vector<Vertex> pick;
        auto extend = [&](auto&& self, Vertex from) -> void {
            sets.emplace_back(n, pick);
            if (pick.size() == 4) return;
            for (Vertex v = from; v < n; ++v) {
                pick.push_back(v);
                self(self, v + 1);
                pick.pop_back();
            }
        };
        extend(extend, 0);
        if (mg.bipartite())
            for (const auto& edge : e.graph.edges()) {
                sets.push_back(u_set(mg, edge.u, edge.v));
                sets.push_back(u_set(mg, edge.v, edge.u));
            }
        for (const auto& a : sets) {
            const bool one_sided = is_ph_stable(mg, a).stable;
            const bool symmetric = is_ph_stable_symmetric(mg, a).stable;
            if (one_sided != symmetric)
                return fail("ph-stability of " + a.to_string() + ": one-sided=" + yes_no(one_sided) +
                            " symmetric=" + yes_no(symmetric));
        }
        return pass();
    });
}

VerificationReport check_interval_convexity(const Corpus& corpus) {
    return over_corpus(corpus, "interval_convexity", [](const CorpusEntry& e) {
        if (auto why = not_partial_cube(e.graph)) return skip(*why);
        const MetricGraph mg(e.graph);
        for (Vertex x = 0; x < mg.order(); ++x)
            for (Vertex y = x + 1; y < mg.order(); ++y)
                if (auto c = is_convex(mg, mg.interval(x, y)); !c)
                    return fail("I(" + std::to_string(x) + "," + std::to_string(y) + ") is not convex: " +
                                std::to_string(c.violation->z) + " lies between " + std::to_string(c.violation->x) +
                                " and " + std::to_string(c.violation->y));
        return pass();
    });
}

VerificationReport check_boundary_lemma(const Corpus& corpus) {
    return over_corpus(corpus, "boundary_lemma", [](const CorpusEntry& e) {
        if (!is_connected(e.graph) || !is_bipartite(e.graph)) return skip("not connected bipartite");
        if (!within_oracle(e.graph)) return skip("beyond oracle bound");
        const MetricGraph mg(e.graph);
        const auto edges = e.graph.edges();
        for (const auto& c : enumerate_convex_sets(mg))
            for (const auto& edge : edges)
                for (const DirectedEdge ab : {DirectedEdge{edge.u, edge.v}, DirectedEdge{edge.v, edge.u}}) {
                    if (!c.contains(ab.tail) || c.contains(ab.head)) continue;
                    if (!c.is_subset_of(w_set(mg, ab.tail, ab.head)))
                        return fail("convex " + c.to_string() + " is not inside W_" + std::to_string(ab.tail) + "," +
                                    std::to_string(ab.head));
                }
        return pass();
    });
}

// --- Golden values -------------------------------------------------------------

std::vector<GoldenEntry> golden_table() {
    return {
        {"K_1", Graph(1), true, 0},
        {"P_5", path_graph(5), true, 0},
        {"K_2_3", k_2_3(), false, 2},
        {"Q_3_minus", hypercube_minus_vertex(3), true, 2},
        {"M_4_1", hypercube_minus_antipodal_pair(4), true, 1},
        {"Q_2", hypercube(2), true, 1},
        {"Q_3", hypercube(3), true, 1},
        {"C_6", even_cycle(6), true, 1},
    };
}

VerificationReport check_golden(const std::vector<GoldenEntry>& entries) {
    VerificationReport report;
    for (const auto& entry : entries) {
        report.results.push_back(run_one("golden:" + entry.id, "golden", "golden", [&] {
            if (!is_connected(entry.graph)) return fail("graph is disconnected");
            const MetricGraph mg(entry.graph);
            const bool pc = mg.bipartite() && is_partial_cube(mg);
            const auto ph = pre_hull_number(mg);
            if (pc == entry.partial_cube && ph == entry.pre_hull_number) return pass();
            return fail("partial cube=" + yes_no(pc) + " ph=" + std::to_string(ph) + " (expected " +
                        yes_no(entry.partial_cube) + ", " + std::to_string(entry.pre_hull_number) + ")");
        }));
    }
    return report;
}

// --- Closure inputs ------------------------------------------------------------

namespace {

std::vector<NamedGraph> partial_cube_pool(const Corpus& corpus, std::size_t max_order) {
    std::vector<NamedGraph> pool;
    bool has_ph2 = false;
    for (const auto& e : corpus.graphs) {
        if (e.graph.order() < 2 || e.graph.order() > max_order) continue;
        if (not_partial_cube(e.graph)) continue;
        pool.push_back({e.id, e.graph});
        has_ph2 = has_ph2 || e.id == "Q_3_minus";
    }
    if (!has_ph2) pool.push_back({"Q_3_minus", hypercube_minus_vertex(3)});
    return pool;
}

std::size_t index_of(const std::vector<NamedGraph>& pool, const std::string& id) {
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (pool[i].id == id) return i;
    return pool.size();
}

} // namespace

std::vector<std::pair<NamedGraph, NamedGraph>> sample_product_pairs(const Corpus& corpus, std::size_t count,
                                                                    std::uint64_t seed, std::size_t max_product_order) {
    const auto pool = partial_cube_pool(corpus, 8);
    const std::size_t ph2 = index_of(pool, "Q_3_minus");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<NamedGraph, NamedGraph>> out;
    std::size_t attempts = 0;
    while (out.size() < count && attempts++ < 100 * count + 100) {
        // Every fourth pair carries the ph = 2 factor so both sides of the equivalence occur.
        const std::size_t i = out.size() % 4 == 3 ? ph2 : static_cast<std::size_t>(rng() % pool.size());
        const std::size_t j = static_cast<std::size_t>(rng() % pool.size());
        if (pool[i].graph.order() * pool[j].graph.order() > max_product_order) continue;
        out.emplace_back(pool[i], pool[j]);
    }
    return out;
}

std::vector<NamedAmalgam> sample_amalgam_specs(const Corpus& corpus, std::size_t count, std::uint64_t seed) {
    const auto pool = partial_cube_pool(corpus, 8);
    const std::size_t ph2 = index_of(pool, "Q_3_minus");
    std::vector<std::vector<VertexSet>> gated(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (auto& s : gated_sets(MetricGraph(pool[i].graph)))
            if (s.count() <= 4) gated[i].push_back(std::move(s));

    std::mt19937_64 rng(seed);
    std::vector<NamedAmalgam> out;
    std::size_t attempts = 0;
    while (out.size() < count && attempts++ < 200 * count + 200) {
        const std::size_t i = out.size() % 4 == 1 ? ph2 : static_cast<std::size_t>(rng() % pool.size());
        const std::size_t j = static_cast<std::size_t>(rng() % pool.size());
        const auto& s0 = gated[i][rng() % gated[i].size()];
        const auto sub0 = induced_subgraph(pool[i].graph, s0);
        std::vector<const VertexSet*> matches;
        for (const auto& s1 : gated[j])
            if (s1.count() == s0.count()) matches.push_back(&s1);
        if (matches.empty()) continue;
        const VertexSet& s1 = *matches[rng() % matches.size()];
        const auto sub1 = induced_subgraph(pool[j].graph, s1);
        const auto iso = are_isomorphic_small(sub0.graph, sub1.graph);
        if (!iso) continue;
        NamedAmalgam named;
        named.id = "amalg-" + std::to_string(out.size()) + ":" + pool[i].id + "+" + pool[j].id + "@" + s0.to_string();
        named.spec.g0 = pool[i].graph;
        named.spec.g1 = pool[j].graph;
        for (Vertex v = 0; v < sub0.to_host.size(); ++v)
            named.spec.glue.emplace_back(sub0.to_host[v], sub1.to_host[(*iso)[v]]);
        out.push_back(std::move(named));
    }
    return out;
}

// --- Driver ------------------------------------------------------------------

VerificationReport run_verification(const VerifyOptions& options) {
    const Corpus corpus = enumerate_corpus(options.corpus);
    VerificationReport report;
    report.meta = {options.corpus.max_order,        options.corpus.random_count, options.corpus.random_min_order,
                   options.corpus.random_max_order, options.corpus.seed,         library_version};
    report.append(check_recognizer_agreement(corpus));
    report.append(check_att_convex_theorem(corpus));
    report.append(check_ph1_implies_pc(corpus));
    report.append(check_tree_ph0(corpus));
    report.append(check_ph_consistency(corpus));
    report.append(check_copoints_halfspaces(corpus));
    report.append(check_closure_product(sample_product_pairs(corpus, options.product_pairs, options.corpus.seed)));
    report.append(check_closure_amalgam(sample_amalgam_specs(corpus, options.amalgam_specs, options.corpus.seed)));
    report.append(check_gated_subgraph(corpus));
    report.append(check_figure1());
    report.append(check_expansion_duality(corpus));
    report.append(check_hull_properties(corpus, options.corpus.seed));
    report.append(check_attaching_independence(corpus));
    report.append(check_ph_stable_forms(corpus));
    report.append(check_interval_convexity(corpus));
    report.append(check_boundary_lemma(corpus));
    report.append(check_golden(golden_table()));
    report.sort();
    return report;
}

} // namespace pcube
