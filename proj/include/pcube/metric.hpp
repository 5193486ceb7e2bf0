#pragma once

#include <vector>

#include "pcube/graph.hpp"

namespace pcube {

/// A connected graph together with its distance matrix and every geodesic interval.
///
/// Immutable after construction; safe to share across threads. Construction throws
/// DisconnectedGraphError for disconnected input.
class MetricGraph {
public:
    explicit MetricGraph(Graph g);

    const Graph& graph() const noexcept { return graph_; }
    std::size_t order() const noexcept { return graph_.order(); }
    const DistanceMatrix& distances() const noexcept { return dist_; }
    int distance(Vertex x, Vertex y) const { return dist_(x, y); }
    bool bipartite() const noexcept { return bipartite_; }

    /// I(x,y) = { z : d(x,z) + d(z,y) = d(x,y) }.
    const VertexSet& interval(Vertex x, Vertex y) const { return intervals_[x * order() + y]; }

    VertexSet empty_set() const { return VertexSet(order()); }
    VertexSet all_vertices() const { return VertexSet::full(order()); }

private:
    Graph graph_;
    DistanceMatrix dist_;
    bool bipartite_;
    std::vector<VertexSet> intervals_;
};

} // namespace pcube
