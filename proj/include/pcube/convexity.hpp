#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pcube/metric.hpp"

namespace pcube {

/// x, y in A but z in I(x,y) is not.
struct ConvexityViolation {
    Vertex x = 0;
    Vertex y = 0;
    Vertex z = 0;
};

struct ConvexityResult {
    bool convex = true;
    std::optional<ConvexityViolation> violation;
    explicit operator bool() const noexcept { return convex; }
};

/// The successive pre-hull images A, I(A), I^2(A), ... up to the first repeat.
struct HullTrace {
    std::vector<VertexSet> stages;

    const VertexSet& hull() const { return stages.back(); }
    /// Least n with I^n(A) = co(A).
    std::size_t depth() const { return stages.size() - 1; }
};

VertexSet interval(const MetricGraph& g, Vertex x, Vertex y);
/// Union of I(x,y) over all pairs x, y in A.
VertexSet pre_hull(const MetricGraph& g, const VertexSet& a);
HullTrace convex_hull(const MetricGraph& g, const VertexSet& a);
VertexSet hull(const MetricGraph& g, const VertexSet& a);
ConvexityResult is_convex(const MetricGraph& g, const VertexSet& a);

inline constexpr std::size_t default_oracle_bound = 16;

/// Every convex set of g (including the empty set and V), by filtering all 2^n subsets.
/// Sorted by VertexSet order. Throws SizeBoundError when n > bound.
std::vector<VertexSet> enumerate_convex_sets(const MetricGraph& g, std::size_t bound = default_oracle_bound);

// --- Copoints --------------------------------------------------------------

/// A convex set maximal among those avoiding its attaching vertex `at`.
struct Copoint {
    Vertex at = 0;
    VertexSet set;
    /// co(set + at) - set
    VertexSet att;
    /// Least n with I^n(set + at) = co(set + at).
    std::size_t hull_depth = 0;

    bool operator==(const Copoint&) const = default;
};

enum class CopointMethod {
    /// Half-spaces when g is a partial cube, the convex-set oracle otherwise.
    automatic,
    oracle,
    /// Only valid for partial cubes.
    half_spaces,
};

/// Copoints at x, sorted by their vertex set.
std::vector<Copoint> copoints_at(const MetricGraph& g, Vertex x, CopointMethod method = CopointMethod::automatic,
                                 std::size_t bound = default_oracle_bound);
/// Copoints at every vertex, grouped by vertex. A set that is a copoint at several
/// vertices appears once per vertex.
std::vector<Copoint> copoints(const MetricGraph& g, CopointMethod method = CopointMethod::automatic,
                              std::size_t bound = default_oracle_bound);

/// Att(K) = co(K + x) - K. Throws std::invalid_argument unless K is a copoint at x.
VertexSet attaching_points(const MetricGraph& g, const VertexSet& k, Vertex x);

struct AttConvexResult {
    bool att_convex = true;
    /// A copoint whose Att set is not convex.
    std::optional<Copoint> witness;
    explicit operator bool() const noexcept { return att_convex; }
};

/// Every copoint has a convex Att set. Requires a bipartite graph (throws GraphError otherwise).
AttConvexResult is_att_convex(const MetricGraph& g, CopointMethod method = CopointMethod::automatic,
                              std::size_t bound = default_oracle_bound);

// --- Pre-hull number -------------------------------------------------------

struct PhStableResult {
    bool stable = true;
    /// u, v in I(A) with no witness w in A.
    std::optional<std::pair<Vertex, Vertex>> violation;
    explicit operator bool() const noexcept { return stable; }
};

/// For all u, v in I(A) there is w in A with v in I(u,w).
PhStableResult is_ph_stable(const MetricGraph& g, const VertexSet& a);
/// For all u, v in I(A) there are w, w' in A with u and v on a common (w,w')-geodesic.
PhStableResult is_ph_stable_symmetric(const MetricGraph& g, const VertexSet& a);

struct PreHullNumberResult {
    std::size_t value = 0;
    /// A copoint attaining the maximum hull depth.
    std::optional<Copoint> attained_by;
};

PreHullNumberResult pre_hull_number_detail(const MetricGraph& g, CopointMethod method = CopointMethod::automatic,
                                           std::size_t bound = default_oracle_bound);
std::size_t pre_hull_number(const MetricGraph& g, CopointMethod method = CopointMethod::automatic,
                            std::size_t bound = default_oracle_bound);

/// ph(g) <= 1 decided without computing hull depths: through ph-stability of the
/// U sets for partial cubes, through Att-convexity plus ph-stability of N(K) & Att(K)
/// for other bipartite graphs. Throws GraphError on non-bipartite input.
bool ph_leq1_bipartite(const MetricGraph& g, std::size_t bound = default_oracle_bound);
/// The copoint criterion alone, regardless of whether g is a partial cube.
bool ph_leq1_by_copoints(const MetricGraph& g, CopointMethod method = CopointMethod::automatic,
                         std::size_t bound = default_oracle_bound);
/// The U-set criterion alone. Requires a partial cube.
bool ph_leq1_by_u_sets(const MetricGraph& g);

// --- Gates -----------------------------------------------------------------

/// The vertex y in A lying in I(x,z) for every z in A, if any. A must be non-empty.
std::optional<Vertex> gate(const MetricGraph& g, const VertexSet& a, Vertex x);

struct GatedResult {
    bool gated = true;
    /// A vertex without a gate in A.
    std::optional<Vertex> ungated;
    explicit operator bool() const noexcept { return gated; }
};

GatedResult is_gated(const MetricGraph& g, const VertexSet& a);

} // namespace pcube
