#include <algorithm>
#include <stdexcept>

#include "pcube/convexity.hpp"
#include "pcube/theta.hpp"

namespace pcube {

namespace {

Copoint make_copoint(const MetricGraph& g, Vertex x, VertexSet k) {
    VertexSet base = k;
    base.insert(x);
    HullTrace trace = convex_hull(g, base);
    Copoint c;
    c.at = x;
    c.att = trace.hull() - k;
    c.set = std::move(k);
    c.hull_depth = trace.depth();
    return c;
}

/// Members of `family` that avoid x and are maximal by inclusion among those.
std::vector<VertexSet> maximal_avoiding(const std::vector<VertexSet>& family, Vertex x) {
    std::vector<const VertexSet*> candidates;
    for (const auto& s : family)
        if (!s.contains(x)) candidates.push_back(&s);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const VertexSet* a, const VertexSet* b) { return a->count() > b->count(); });
    // Any non-maximal candidate lies inside a maximal one, which is at least as large
    // and therefore already kept.
    std::vector<VertexSet> kept;
    for (const VertexSet* s : candidates) {
        const bool dominated = std::any_of(kept.begin(), kept.end(),
                                           [&](const VertexSet& k) { return s->is_subset_of(k); });
        if (!dominated) kept.push_back(*s);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::vector<VertexSet> half_spaces(const MetricGraph& g) {
    std::vector<VertexSet> out;
    for (const auto& e : g.graph().edges()) {
        out.push_back(w_set(g, e.u, e.v));
        out.push_back(w_set(g, e.v, e.u));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CopointMethod resolve(const MetricGraph& g, CopointMethod method) {
    if (method != CopointMethod::automatic) return method;
    return g.bipartite() && is_partial_cube(g) ? CopointMethod::half_spaces : CopointMethod::oracle;
}

std::vector<VertexSet> candidate_family(const MetricGraph& g, CopointMethod method, std::size_t bound) {
    if (method == CopointMethod::half_spaces) return half_spaces(g);
    return enumerate_convex_sets(g, bound);
}

std::vector<Copoint> copoints_from_family(const MetricGraph& g, const std::vector<VertexSet>& family, Vertex x) {
    std::vector<Copoint> out;
    if (g.order() == 1) {
        // The empty set is the only convex set avoiding the single vertex.
        out.push_back(make_copoint(g, x, g.empty_set()));
        return out;
    }
    for (auto& k : maximal_avoiding(family, x)) out.push_back(make_copoint(g, x, std::move(k)));
    return out;
}

} // namespace

std::vector<Copoint> copoints_at(const MetricGraph& g, Vertex x, CopointMethod method, std::size_t bound) {
    if (x >= g.order()) throw std::out_of_range("copoints_at: vertex out of range");
    const auto resolved = resolve(g, method);
    return copoints_from_family(g, candidate_family(g, resolved, bound), x);
}

std::vector<Copoint> copoints(const MetricGraph& g, CopointMethod method, std::size_t bound) {
    const auto resolved = resolve(g, method);
    const auto family = candidate_family(g, resolved, bound);
    std::vector<Copoint> out;
    for (Vertex x = 0; x < g.order(); ++x) {
        auto at_x = copoints_from_family(g, family, x);
        std::move(at_x.begin(), at_x.end(), std::back_inserter(out));
    }
    return out;
}

VertexSet attaching_points(const MetricGraph& g, const VertexSet& k, Vertex x) {
    if (x >= g.order()) throw std::invalid_argument("attaching_points: vertex out of range");
    if (k.contains(x)) throw std::invalid_argument("attaching_points: x lies in K");
    if (auto c = is_convex(g, k); !c)
        throw std::invalid_argument("attaching_points: K is not convex (" + std::to_string(c.violation->z) +
                                    " lies between " + std::to_string(c.violation->x) + " and " +
                                    std::to_string(c.violation->y) + ")");
    // Maximality: adding any outside vertex other than x must drag x into the hull.
    for (Vertex v = 0; v < g.order(); ++v) {
        if (v == x || k.contains(v)) continue;
        VertexSet grown = k;
        grown.insert(v);
        if (!hull(g, grown).contains(x))
            throw std::invalid_argument("attaching_points: K is not maximal (K + " + std::to_string(v) +
                                        " has a hull avoiding x)");
    }
    VertexSet base = k;
    base.insert(x);
    return hull(g, base) - k;
}

AttConvexResult is_att_convex(const MetricGraph& g, CopointMethod method, std::size_t bound) {
    if (!g.bipartite()) throw GraphError("is_att_convex: graph is not bipartite");
    for (auto& c : copoints(g, method, bound))
        if (!is_convex(g, c.att)) return {false, std::move(c)};
    return {};
}

PreHullNumberResult pre_hull_number_detail(const MetricGraph& g, CopointMethod method, std::size_t bound) {
    PreHullNumberResult result;
    for (auto& c : copoints(g, method, bound)) {
        if (!result.attained_by || c.hull_depth > result.value) {
            result.value = c.hull_depth;
            result.attained_by = std::move(c);
        }
    }
    return result;
}

std::size_t pre_hull_number(const MetricGraph& g, CopointMethod method, std::size_t bound) {
    return pre_hull_number_detail(g, method, bound).value;
}

bool ph_leq1_by_copoints(const MetricGraph& g, CopointMethod method, std::size_t bound) {
    for (const auto& c : copoints(g, method, bound)) {
        if (!is_convex(g, c.att)) return false;
        const VertexSet boundary = g.graph().neighborhood(c.set) & c.att;
        if (!is_ph_stable(g, boundary)) return false;
    }
    return true;
}

bool ph_leq1_by_u_sets(const MetricGraph& g) {
    if (!is_partial_cube(g)) throw NotPartialCubeError(is_partial_cube_winkler(g));
    for (const auto& e : g.graph().edges()) {
        if (!is_ph_stable(g, u_set(g, e.u, e.v))) return false;
        if (!is_ph_stable(g, u_set(g, e.v, e.u))) return false;
    }
    return true;
}

bool ph_leq1_bipartite(const MetricGraph& g, std::size_t bound) {
    if (!g.bipartite()) throw GraphError("ph_leq1_bipartite: graph is not bipartite");
    if (is_partial_cube(g)) return ph_leq1_by_u_sets(g);
    return ph_leq1_by_copoints(g, CopointMethod::oracle, bound);
}

} // namespace pcube
