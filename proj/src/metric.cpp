#include "pcube/metric.hpp"

namespace pcube {

MetricGraph::MetricGraph(Graph g)
    : graph_(std::move(g)), dist_(pcube::distances(graph_)), bipartite_(is_bipartite(graph_)) {
    const std::size_t n = order();
    intervals_.assign(n * n, VertexSet(n));
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x; y < n; ++y) {
            VertexSet& iv = intervals_[x * n + y];
            const int dxy = dist_(x, y);
            for (Vertex z = 0; z < n; ++z)
                if (dist_(x, z) + dist_(z, y) == dxy) iv.insert(z);
            intervals_[y * n + x] = iv;
        }
}

} // namespace pcube
