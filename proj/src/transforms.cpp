#include <algorithm>
#include <numeric>

#include "pcube/constructions.hpp"
#include "pcube/convexity.hpp"
#include "pcube/theta.hpp"

namespace pcube {

Product cartesian_product(const Graph& g0, const Graph& g1) {
    Product p{Graph(g0.order() * g1.order()), g1.order()};
    for (Vertex u = 0; u < g0.order(); ++u)
        for (const auto& e : g1.edges()) p.graph.add_edge(p.vertex(u, e.u), p.vertex(u, e.v));
    for (const auto& e : g0.edges())
        for (Vertex v = 0; v < g1.order(); ++v) p.graph.add_edge(p.vertex(e.u, v), p.vertex(e.v, v));
    return p;
}

// --- Proper covers -----------------------------------------------------------

namespace {

bool isometric_in(const Graph& g, const DistanceMatrix& host, const VertexSet& part) {
    const auto sub = induced_subgraph(g, part);
    const auto local = bfs_distances(sub.graph);
    for (Vertex i = 0; i < sub.to_host.size(); ++i)
        for (Vertex j = i + 1; j < sub.to_host.size(); ++j)
            if (local(i, j) != host(sub.to_host[i], sub.to_host[j])) return false;
    return true;
}

} // namespace

CoverCheck check_proper_cover(const Graph& g, const ProperCover& cover) {
    auto fail = [](std::string clause) { return CoverCheck{false, std::move(clause)}; };
    if (cover.v0.universe() != g.order() || cover.v1.universe() != g.order())
        return fail("cover sets are not over the graph's vertices");
    if (!cover.v0.intersects(cover.v1)) return fail("V0 and V1 do not intersect");
    if ((cover.v0 | cover.v1) != VertexSet::full(g.order())) return fail("V0 and V1 do not cover every vertex");
    const VertexSet only0 = cover.v0 - cover.v1;
    const VertexSet only1 = cover.v1 - cover.v0;
    for (const auto& e : g.edges())
        if ((only0.contains(e.u) && only1.contains(e.v)) || (only1.contains(e.u) && only0.contains(e.v)))
            return fail("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " joins V0-V1 to V1-V0");
    const auto host = bfs_distances(g);
    if (!isometric_in(g, host, cover.v0)) return fail("G[V0] is not isometric");
    if (!isometric_in(g, host, cover.v1)) return fail("G[V1] is not isometric");
    return {};
}

Expansion expansion(const Graph& g, const ProperCover& cover) {
    if (auto check = check_proper_cover(g, cover); !check)
        throw GraphError("expansion: not a proper cover: " + check.violated_clause);
    const std::size_t n = g.order();
    Expansion ex;
    ex.psi0.assign(n, std::nullopt);
    ex.psi1.assign(n, std::nullopt);
    for (Vertex x = 0; x < n; ++x)
        for (int side : {0, 1}) {
            const VertexSet& part = side == 0 ? cover.v0 : cover.v1;
            if (!part.contains(x)) continue;
            (side == 0 ? ex.psi0 : ex.psi1)[x] = ex.names.size();
            ex.names.emplace_back(x, side);
        }
    ex.graph = Graph(ex.names.size());
    for (const auto& e : g.edges()) {
        if (ex.psi0[e.u] && ex.psi0[e.v]) ex.graph.add_edge(*ex.psi0[e.u], *ex.psi0[e.v]);
        if (ex.psi1[e.u] && ex.psi1[e.v]) ex.graph.add_edge(*ex.psi1[e.u], *ex.psi1[e.v]);
    }
    for (Vertex x = 0; x < n; ++x)
        if (ex.psi0[x] && ex.psi1[x]) ex.graph.add_edge(*ex.psi0[x], *ex.psi1[x]);
    return ex;
}

// --- Contraction -------------------------------------------------------------

Contraction theta_contraction(const MetricGraph& g, std::size_t class_id) {
    const auto classes = theta_classes(g);
    if (class_id >= classes.size())
        throw std::out_of_range("theta_contraction: class " + std::to_string(class_id) + " of " +
                                std::to_string(classes.size()));
    const std::size_t n = g.order();
    std::vector<Vertex> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    // Classes of a partial cube are matchings, so each vertex merges with at most one partner.
    for (const auto& e : classes[class_id].edges) {
        const Vertex lo = std::min(e.tail, e.head), hi = std::max(e.tail, e.head);
        rep[hi] = lo;
    }
    std::vector<Vertex> compact(n, n);
    std::size_t next = 0;
    for (Vertex v = 0; v < n; ++v)
        if (rep[v] == v) compact[v] = next++;

    Contraction c{Graph(next), std::vector<Vertex>(n)};
    for (Vertex v = 0; v < n; ++v) c.map[v] = compact[rep[v]];
    for (const auto& e : g.graph().edges()) {
        const Vertex a = c.map[e.u], b = c.map[e.v];
        if (a != b && !c.graph.has_edge(a, b)) c.graph.add_edge(a, b);
    }
    return c;
}

ProperCover contraction_cover(const MetricGraph& g, std::size_t class_id, const Contraction& contraction) {
    const auto classes = theta_classes(g);
    if (class_id >= classes.size()) throw std::out_of_range("contraction_cover: bad class id");
    const DirectedEdge ab = classes[class_id].representative();
    const std::size_t m = contraction.graph.order();
    ProperCover cover{VertexSet(m), VertexSet(m)};
    w_set(g, ab.tail, ab.head).for_each([&](Vertex v) { cover.v0.insert(contraction.map[v]); });
    w_set(g, ab.head, ab.tail).for_each([&](Vertex v) { cover.v1.insert(contraction.map[v]); });
    return cover;
}

// --- Gated amalgam -----------------------------------------------------------

Amalgam gated_amalgam(const AmalgamSpec& spec) {
    const std::size_t n0 = spec.g0.order(), n1 = spec.g1.order();
    if (spec.glue.empty()) throw GraphError("gated_amalgam: the glued subgraphs must intersect");
    VertexSet glued0(n0), glued1(n1);
    std::vector<std::optional<Vertex>> partner(n1);
    for (const auto& [a, b] : spec.glue) {
        if (a >= n0 || b >= n1) throw GraphError("gated_amalgam: glue vertex out of range");
        if (glued0.contains(a) || glued1.contains(b)) throw GraphError("gated_amalgam: glue is not a bijection");
        glued0.insert(a);
        glued1.insert(b);
        partner[b] = a;
    }
    for (const auto& [a, b] : spec.glue)
        for (const auto& [c, d] : spec.glue)
            if (spec.g0.has_edge(a, c) != spec.g1.has_edge(b, d))
                throw GraphError("gated_amalgam: glue does not preserve adjacency between " + std::to_string(a) +
                                 "," + std::to_string(c) + " and " + std::to_string(b) + "," + std::to_string(d));

    const MetricGraph m0(spec.g0), m1(spec.g1);
    if (auto r = is_gated(m0, glued0); !r)
        throw GraphError("gated_amalgam: glued set is not gated in the first graph (no gate for " +
                         std::to_string(*r.ungated) + ")");
    if (auto r = is_gated(m1, glued1); !r)
        throw GraphError("gated_amalgam: glued set is not gated in the second graph (no gate for " +
                         std::to_string(*r.ungated) + ")");

    Amalgam out;
    out.from0.resize(n0);
    std::iota(out.from0.begin(), out.from0.end(), 0);
    out.from1.resize(n1);
    std::size_t next = n0;
    for (Vertex v = 0; v < n1; ++v) out.from1[v] = partner[v] ? *partner[v] : next++;
    out.graph = Graph(next);
    for (const auto& e : spec.g0.edges()) out.graph.add_edge(e.u, e.v);
    for (const auto& e : spec.g1.edges()) {
        const Vertex a = out.from1[e.u], b = out.from1[e.v];
        if (!out.graph.has_edge(a, b)) out.graph.add_edge(a, b);
    }
    return out;
}

} // namespace pcube
