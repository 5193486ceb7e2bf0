#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "pcube/metric.hpp"

namespace pcube {

/// An edge read with an orientation: tail -> head.
struct DirectedEdge {
    Vertex tail = 0;
    Vertex head = 0;

    DirectedEdge reversed() const { return {head, tail}; }
    Edge undirected() const { return {tail, head}; }
    auto operator<=>(const DirectedEdge&) const = default;
};

/// Oriented Djokovic-Winkler relation. For bipartite g:
///   d(x,u) = d(y,v) = d(x,v) - 1 = d(y,u) - 1   for e1 = xy, e2 = uv,
/// so (xy, yx) is never related. For other graphs the unoriented test
/// d(x,u) + d(y,v) != d(x,v) + d(y,u) is used.
bool theta_related(const MetricGraph& g, DirectedEdge e1, DirectedEdge e2);

/// W_ab = { x : d(a,x) < d(b,x) }. Throws GraphError unless ab is an edge.
VertexSet w_set(const MetricGraph& g, Vertex a, Vertex b);
/// Vertices of W_ab with a neighbor in W_ba.
VertexSet u_set(const MetricGraph& g, Vertex a, Vertex b);

struct HalfSpaceData {
    VertexSet w_ab, w_ba, u_ab, u_ba;
};

HalfSpaceData half_space_data(const MetricGraph& g, DirectedEdge ab);

/// Outcome of a partial-cube recognizer. Exactly one witness kind is filled on failure,
/// depending on the route; `reason` always describes it.
struct PartialCubeVerdict {
    bool partial_cube = true;
    std::string reason;
    /// Djokovic route: an edge ab with W_ab not convex.
    std::optional<DirectedEdge> non_convex_side;
    /// Winkler route: e0 ~ e1 and e1 ~ e2 but not e0 ~ e2.
    std::optional<std::array<Edge, 3>> transitivity_violation;
    /// Embedding route: a pair whose label distance differs from the graph distance.
    std::optional<std::pair<Vertex, Vertex>> distorted_pair;

    explicit operator bool() const noexcept { return partial_cube; }
};

PartialCubeVerdict is_partial_cube_djokovic(const MetricGraph& g);
PartialCubeVerdict is_partial_cube_winkler(const MetricGraph& g);
/// Labels vertices by the W sides of the Theta-closure classes and checks isometry.
PartialCubeVerdict is_partial_cube_embedding(const MetricGraph& g);
bool is_partial_cube(const MetricGraph& g);

class NotPartialCubeError : public GraphError {
public:
    explicit NotPartialCubeError(PartialCubeVerdict verdict)
        : GraphError("not a partial cube: " + verdict.reason), verdict_(std::move(verdict)) {}
    const PartialCubeVerdict& verdict() const noexcept { return verdict_; }

private:
    PartialCubeVerdict verdict_;
};

/// One Theta-class. Edges are oriented consistently with the first one, the
/// representative, which is the lexicographically least directed edge (tail < head)
/// of the class; tails lie in W_rep.tail, heads in W_rep.head.
struct ThetaClass {
    std::vector<DirectedEdge> edges;
    const DirectedEdge& representative() const { return edges.front(); }
};

/// Theta on the edges of a bipartite graph, with the transitive closure always
/// available and the classes proper when Theta is transitive.
class ThetaStructure {
public:
    explicit ThetaStructure(const MetricGraph& g);

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    /// Unoriented relation between edge indices.
    bool related(std::size_t i, std::size_t j) const { return related_[i * edges_.size() + j]; }
    bool transitive() const noexcept { return !violation_; }
    const std::optional<std::array<Edge, 3>>& violation() const noexcept { return violation_; }

    /// Classes of the transitive closure, sorted by representative.
    const std::vector<ThetaClass>& closure_classes() const noexcept { return classes_; }
    /// Index into closure_classes() of the class containing edge uv.
    std::size_t class_of(Edge e) const;

private:
    std::vector<Edge> edges_;
    std::vector<bool> related_;
    std::vector<ThetaClass> classes_;
    std::vector<std::size_t> class_index_;
    std::optional<std::array<Edge, 3>> violation_;
};

/// Theta-classes of a partial cube. Throws NotPartialCubeError otherwise.
std::vector<ThetaClass> theta_classes(const MetricGraph& g);

/// Isometric embedding into Q_k, one coordinate per Theta-class.
struct CubeEmbedding {
    /// Representative edge ab of class i; bit i of v is 1 iff v is in W_ba.
    std::vector<DirectedEdge> class_order;
    std::vector<std::vector<bool>> labels;

    std::size_t dimension() const noexcept { return class_order.size(); }
    std::size_t hamming(Vertex u, Vertex v) const;
    std::string label_string(Vertex v) const;
};

/// Throws NotPartialCubeError when g is not a partial cube.
CubeEmbedding cube_embedding(const MetricGraph& g);

/// First line "# class_order: a-b c-d ...", then one "vertex bits" line per vertex.
std::string serialize_embedding(const CubeEmbedding& embedding);

/// True iff no two edges of the path are Theta-related. Requires a partial cube and a
/// path (distinct vertices, consecutive ones adjacent); throws GraphError otherwise.
bool geodesic_check(const MetricGraph& g, const std::vector<Vertex>& path);

} // namespace pcube
