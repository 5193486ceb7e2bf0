#include "pcube/convexity.hpp"

#include <algorithm>

namespace pcube {

VertexSet interval(const MetricGraph& g, Vertex x, Vertex y) { return g.interval(x, y); }

VertexSet pre_hull(const MetricGraph& g, const VertexSet& a) {
    VertexSet out(g.order());
    const auto members = a.members();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i; j < members.size(); ++j) out |= g.interval(members[i], members[j]);
    return out;
}

HullTrace convex_hull(const MetricGraph& g, const VertexSet& a) {
    HullTrace trace;
    trace.stages.push_back(a);
    while (true) {
        VertexSet next = pre_hull(g, trace.stages.back());
        if (next == trace.stages.back()) break;
        trace.stages.push_back(std::move(next));
    }
    return trace;
}

VertexSet hull(const MetricGraph& g, const VertexSet& a) { return convex_hull(g, a).hull(); }

ConvexityResult is_convex(const MetricGraph& g, const VertexSet& a) {
    const auto members = a.members();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const VertexSet outside = g.interval(members[i], members[j]) - a;
            if (!outside.empty()) return {false, ConvexityViolation{members[i], members[j], outside.first()}};
        }
    return {};
}

std::vector<VertexSet> enumerate_convex_sets(const MetricGraph& g, std::size_t bound) {
    const std::size_t n = g.order();
    if (n > bound || n > 20)
        throw SizeBoundError("convex-set oracle limited to " + std::to_string(std::min<std::size_t>(bound, 20)) +
                             " vertices (got " + std::to_string(n) + ")");
    std::vector<std::uint64_t> iv(n * n);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) {
            std::uint64_t m = 0;
            g.interval(x, y).for_each([&](Vertex z) { m |= std::uint64_t{1} << z; });
            iv[x * n + y] = m;
        }

    std::vector<VertexSet> out;
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::vector<Vertex> members;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        members.clear();
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
            members.push_back(static_cast<Vertex>(__builtin_ctzll(rest)));
        bool convex = true;
        for (std::size_t i = 0; convex && i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if ((iv[members[i] * n + members[j]] & ~mask) != 0) {
                    convex = false;
                    break;
                }
        if (convex) out.push_back(VertexSet::from_mask(n, mask));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- ph-stability ----------------------------------------------------------

PhStableResult is_ph_stable(const MetricGraph& g, const VertexSet& a) {
    const auto span = pre_hull(g, a).members();
    const auto base = a.members();
    for (Vertex u : span)
        for (Vertex v : span) {
            const bool found = std::any_of(base.begin(), base.end(),
                                           [&](Vertex w) { return g.interval(u, w).contains(v); });
            if (!found) return {false, std::make_pair(u, v)};
        }
    return {};
}

PhStableResult is_ph_stable_symmetric(const MetricGraph& g, const VertexSet& a) {
    const auto span = pre_hull(g, a).members();
    const auto base = a.members();
    for (std::size_t i = 0; i < span.size(); ++i)
        for (std::size_t j = i; j < span.size(); ++j) {
            const Vertex u = span[i], v = span[j];
            const int duv = g.distance(u, v);
            bool found = false;
            for (Vertex s : base) {
                for (Vertex t : base) {
                    // s .. u .. v .. t is a geodesic
                    if (g.distance(s, u) + duv + g.distance(v, t) == g.distance(s, t)) {
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found) return {false, std::make_pair(u, v)};
        }
    return {};
}

// --- Gates -----------------------------------------------------------------

std::optional<Vertex> gate(const MetricGraph& g, const VertexSet& a, Vertex x) {
    if (a.empty()) throw std::invalid_argument("gate: the set must be non-empty");
    const auto members = a.members();
    // A gate realizes d(x, A) since it lies on a geodesic from x to every member.
    int nearest = g.distance(x, members.front());
    for (Vertex z : members) nearest = std::min(nearest, g.distance(x, z));
    for (Vertex y : members) {
        if (g.distance(x, y) != nearest) continue;
        const bool on_all = std::all_of(members.begin(), members.end(),
                                        [&](Vertex z) { return g.interval(x, z).contains(y); });
        if (on_all) return y;
    }
    return std::nullopt;
}

GatedResult is_gated(const MetricGraph& g, const VertexSet& a) {
    for (Vertex x = 0; x < g.order(); ++x)
        if (!gate(g, a, x)) return {false, x};
    return {};
}

} // namespace pcube
