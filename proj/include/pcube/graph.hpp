#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pcube/vertex_set.hpp"

namespace pcube {

/// Unordered edge, normalized so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public GraphError {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Simple undirected graph on the vertices 0..n-1.
class Graph {
public:
    explicit Graph(std::size_t order = 0);
    Graph(std::size_t order, const std::vector<Edge>& edges);

    /// Throws GraphError on a loop, a duplicate edge or an out-of-range endpoint.
    void add_edge(Vertex u, Vertex v);

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t size() const noexcept { return edge_count_; }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    /// Neighbors in increasing order.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
    const VertexSet& neighbor_set(Vertex v) const { return neighbor_sets_.at(v); }
    bool has_edge(Vertex u, Vertex v) const { return u < order() && neighbor_sets_[u].contains(v); }

    /// All edges, sorted lexicographically.
    std::vector<Edge> edges() const;

    /// Vertices outside `set` with at least one neighbor in it.
    VertexSet neighborhood(const VertexSet& set) const;

    bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<VertexSet> neighbor_sets_;
    std::size_t edge_count_ = 0;
};

/// Induced subgraph together with the map from its vertices back to the host.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_host;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

// --- Text format -----------------------------------------------------------
//
//   n m
//   u v      (m lines, 0 <= u,v < n)
//
// Lines starting with '#' and blank lines are ignored.

Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);
std::string serialize_graph(const Graph& g);

// --- Structural predicates -------------------------------------------------

bool is_connected(const Graph& g);

/// Proper 2-coloring (values 0/1), or nullopt when g has an odd cycle.
std::optional<std::vector<int>> two_coloring(const Graph& g);
bool is_bipartite(const Graph& g);
/// An odd cycle as a closed vertex sequence (first vertex not repeated), empty if bipartite.
std::vector<Vertex> odd_cycle(const Graph& g);
bool is_tree(const Graph& g);

// --- Metric ----------------------------------------------------------------

class DisconnectedGraphError : public GraphError {
public:
    using GraphError::GraphError;
};

/// All-pairs hop distances of a connected graph.
class DistanceMatrix {
public:
    static constexpr int unreachable = -1;

    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t order) : n_(order), d_(order * order, unreachable) {}

    std::size_t order() const noexcept { return n_; }
    int operator()(Vertex x, Vertex y) const { return d_[x * n_ + y]; }
    int& at(Vertex x, Vertex y) { return d_[x * n_ + y]; }
    int diameter() const;

    bool operator==(const DistanceMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<int> d_;
};

/// BFS distances without the connectivity check; unreachable pairs hold DistanceMatrix::unreachable.
DistanceMatrix bfs_distances(const Graph& g);
/// Throws DisconnectedGraphError if g is not connected.
DistanceMatrix distances(const Graph& g);

// --- Isomorphism -----------------------------------------------------------

inline constexpr std::size_t default_isomorphism_bound = 12;

class SizeBoundError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A bijection f with uv in E(g) iff f(u)f(v) in E(h), or nullopt.
/// Throws SizeBoundError when either graph has more than `bound` vertices.
std::optional<std::vector<Vertex>> are_isomorphic_small(const Graph& g, const Graph& h,
                                                        std::size_t bound = default_isomorphism_bound);

/// Isomorphism-invariant fingerprint (refined degree classes); equal for isomorphic graphs.
std::size_t isomorphism_invariant(const Graph& g);

} // namespace pcube
