#include "pcube/theta.hpp"

#include <algorithm>
#include <numeric>

#include "pcube/convexity.hpp"

namespace pcube {

bool theta_related(const MetricGraph& g, DirectedEdge e1, DirectedEdge e2) {
    const auto& d = g.distances();
    const Vertex x = e1.tail, y = e1.head, u = e2.tail, v = e2.head;
    if (!g.bipartite()) return d(x, u) + d(y, v) != d(x, v) + d(y, u);
    return d(x, u) == d(y, v) && d(x, v) == d(x, u) + 1 && d(y, u) == d(x, u) + 1;
}

VertexSet w_set(const MetricGraph& g, Vertex a, Vertex b) {
    if (!g.graph().has_edge(a, b))
        throw GraphError("w_set: " + std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
    VertexSet w(g.order());
    for (Vertex x = 0; x < g.order(); ++x)
        if (g.distance(a, x) < g.distance(b, x)) w.insert(x);
    return w;
}

VertexSet u_set(const MetricGraph& g, Vertex a, Vertex b) {
    const VertexSet w_ab = w_set(g, a, b);
    const VertexSet w_ba = w_set(g, b, a);
    VertexSet u(g.order());
    w_ab.for_each([&](Vertex x) {
        if (g.graph().neighbor_set(x).intersects(w_ba)) u.insert(x);
    });
    return u;
}

HalfSpaceData half_space_data(const MetricGraph& g, DirectedEdge ab) {
    return {w_set(g, ab.tail, ab.head), w_set(g, ab.head, ab.tail), u_set(g, ab.tail, ab.head),
            u_set(g, ab.head, ab.tail)};
}

// --- Recognizers -------------------------------------------------------------

namespace {

PartialCubeVerdict rejected(std::string reason) {
    PartialCubeVerdict v;
    v.partial_cube = false;
    v.reason = std::move(reason);
    return v;
}

std::string edge_name(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::size_t> parent;
};

} // namespace

PartialCubeVerdict is_partial_cube_djokovic(const MetricGraph& g) {
    if (!g.bipartite()) return rejected("graph is not bipartite");
    for (const auto& e : g.graph().edges()) {
        for (const DirectedEdge ab : {DirectedEdge{e.u, e.v}, DirectedEdge{e.v, e.u}}) {
            const auto c = is_convex(g, w_set(g, ab.tail, ab.head));
            if (!c) {
                auto v = rejected("W_" + std::to_string(ab.tail) + "," + std::to_string(ab.head) +
                                  " is not convex: " + std::to_string(c.violation->z) + " lies between " +
                                  std::to_string(c.violation->x) + " and " + std::to_string(c.violation->y));
                v.non_convex_side = ab;
                return v;
            }
        }
    }
    return {};
}

PartialCubeVerdict is_partial_cube_winkler(const MetricGraph& g) {
    if (!g.bipartite()) return rejected("graph is not bipartite");
    ThetaStructure theta(g);
    if (theta.transitive()) return {};
    const auto& t = *theta.violation();
    auto v = rejected("Theta is not transitive: " + edge_name(t[0]) + " ~ " + edge_name(t[1]) + " ~ " +
                      edge_name(t[2]) + " but " + edge_name(t[0]) + " !~ " + edge_name(t[2]));
    v.transitivity_violation = t;
    return v;
}

PartialCubeVerdict is_partial_cube_embedding(const MetricGraph& g) {
    if (!g.bipartite()) return rejected("graph is not bipartite");
    ThetaStructure theta(g);
    const auto& classes = theta.closure_classes();
    std::vector<VertexSet> far_sides;
    for (const auto& c : classes) far_sides.push_back(w_set(g, c.representative().head, c.representative().tail));
    for (Vertex x = 0; x < g.order(); ++x)
        for (Vertex y = x + 1; y < g.order(); ++y) {
            std::size_t h = 0;
            for (const auto& side : far_sides) h += side.contains(x) != side.contains(y) ? 1 : 0;
            if (h != static_cast<std::size_t>(g.distance(x, y))) {
                auto v = rejected("labels of " + std::to_string(x) + " and " + std::to_string(y) +
                                  " are at Hamming distance " + std::to_string(h) + " but graph distance " +
                                  std::to_string(g.distance(x, y)));
                v.distorted_pair = std::make_pair(x, y);
                return v;
            }
        }
    return {};
}

bool is_partial_cube(const MetricGraph& g) { return is_partial_cube_winkler(g).partial_cube; }

// --- ThetaStructure --------------------------------------------------------

ThetaStructure::ThetaStructure(const MetricGraph& g) : edges_(g.graph().edges()) {
    const std::size_t m = edges_.size();
    related_.assign(m * m, false);
    UnionFind uf(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            const DirectedEdge a{edges_[i].u, edges_[i].v};
            const DirectedEdge b{edges_[j].u, edges_[j].v};
            const bool rel = theta_related(g, a, b) || theta_related(g, a, b.reversed());
            related_[i * m + j] = related_[j * m + i] = rel;
            if (rel) uf.unite(i, j);
        }

    // Closure classes in order of their least edge, which is the representative.
    std::vector<std::size_t> root_to_class(m, m);
    class_index_.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t r = uf.find(i);
        if (root_to_class[r] == m) {
            root_to_class[r] = classes_.size();
            classes_.push_back(ThetaClass{{DirectedEdge{edges_[i].u, edges_[i].v}}});
        } else {
            const ThetaClass& cls = classes_[root_to_class[r]];
            const DirectedEdge rep = cls.representative();
            DirectedEdge e{edges_[i].u, edges_[i].v};
            if (g.bipartite() && !theta_related(g, rep, e)) e = e.reversed();
            classes_[root_to_class[r]].edges.push_back(e);
        }
        class_index_[i] = root_to_class[r];
    }

    bool closed = true;
    for (std::size_t i = 0; i < m && closed; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (class_index_[i] == class_index_[j] && !related(i, j)) {
                closed = false;
                break;
            }
    if (closed) return;
    // Classes are connected components of the relation, so an unrelated in-class pair
    // forces a related-related-unrelated triple.
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b || !related(a, b)) continue;
            for (std::size_t c = 0; c < m; ++c)
                if (related(b, c) && !related(a, c)) {
                    violation_ = std::array<Edge, 3>{edges_[a], edges_[b], edges_[c]};
                    return;
                }
        }
}

std::size_t ThetaStructure::class_of(Edge e) const {
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) throw GraphError("class_of: " + edge_name(e) + " is not an edge");
    return class_index_[static_cast<std::size_t>(it - edges_.begin())];
}

std::vector<ThetaClass> theta_classes(const MetricGraph& g) {
    auto verdict = is_partial_cube_winkler(g);
    if (!verdict) throw NotPartialCubeError(std::move(verdict));
    return ThetaStructure(g).closure_classes();
}

// --- Embedding -------------------------------------------------------------

std::size_t CubeEmbedding::hamming(Vertex u, Vertex v) const {
    std::size_t h = 0;
    for (std::size_t i = 0; i < dimension(); ++i) h += labels[u][i] != labels[v][i] ? 1 : 0;
    return h;
}

std::string CubeEmbedding::label_string(Vertex v) const {
    std::string s;
    for (bool bit : labels[v]) s += bit ? '1' : '0';
    return s;
}

CubeEmbedding cube_embedding(const MetricGraph& g) {
    const auto classes = theta_classes(g);
    CubeEmbedding emb;
    emb.labels.assign(g.order(), std::vector<bool>(classes.size(), false));
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const DirectedEdge rep = classes[i].representative();
        emb.class_order.push_back(rep);
        w_set(g, rep.head, rep.tail).for_each([&](Vertex v) { emb.labels[v][i] = true; });
    }
    for (Vertex x = 0; x < g.order(); ++x)
        for (Vertex y = x + 1; y < g.order(); ++y)
            if (emb.hamming(x, y) != static_cast<std::size_t>(g.distance(x, y))) {
                auto verdict = rejected("embedding is not isometric at " + std::to_string(x) + "," +
                                        std::to_string(y));
                verdict.distorted_pair = std::make_pair(x, y);
                throw NotPartialCubeError(std::move(verdict));
            }
    return emb;
}

std::string serialize_embedding(const CubeEmbedding& embedding) {
    std::string out = "# class_order:";
    for (const auto& e : embedding.class_order) out += " " + std::to_string(e.tail) + "-" + std::to_string(e.head);
    out += "\n";
    for (Vertex v = 0; v < embedding.labels.size(); ++v)
        out += std::to_string(v) + " " + embedding.label_string(v) + "\n";
    return out;
}

bool geodesic_check(const MetricGraph& g, const std::vector<Vertex>& path) {
    if (path.empty()) throw GraphError("geodesic_check: empty path");
    VertexSet seen(g.order());
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i] >= g.order()) throw GraphError("geodesic_check: vertex out of range");
        if (seen.contains(path[i])) throw GraphError("geodesic_check: vertex " + std::to_string(path[i]) + " repeats");
        seen.insert(path[i]);
        if (i > 0 && !g.graph().has_edge(path[i - 1], path[i]))
            throw GraphError("geodesic_check: " + std::to_string(path[i - 1]) + "-" + std::to_string(path[i]) +
                             " is not an edge");
    }
    ThetaStructure theta(g);
    if (!theta.transitive() || !g.bipartite()) throw NotPartialCubeError(is_partial_cube_winkler(g));
    std::vector<std::size_t> seen_classes;
    for (std::size_t i = 1; i < path.size(); ++i) {
        const std::size_t c = theta.class_of(Edge(path[i - 1], path[i]));
        if (std::find(seen_classes.begin(), seen_classes.end(), c) != seen_classes.end()) return false;
        seen_classes.push_back(c);
    }
    return true;
}

} // namespace pcube
