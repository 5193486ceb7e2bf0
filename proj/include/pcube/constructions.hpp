#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcube/metric.hpp"

namespace pcube {

// --- Named families ----------------------------------------------------------
//
// Hypercube vertices carry their binary labels: vertex i of Q_n is the bit string of i.
// Q_n^- drops 1...1; M_{n,1} drops both 0...0 and 1...1. Surviving vertices keep
// their relative order and are renumbered contiguously.

Graph path_graph(std::size_t n);
/// C_n for even n >= 4.
Graph even_cycle(std::size_t n);
Graph hypercube(std::size_t dim);
Graph hypercube_minus_vertex(std::size_t dim);
/// Requires dim >= 2.
Graph hypercube_minus_antipodal_pair(std::size_t dim);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph k_2_3();
Graph grid(std::size_t rows, std::size_t cols);
/// Random cross edges between a random bipartition, each present with probability p,
/// resampled until connected. Identical arguments give identical graphs on every platform.
Graph random_bipartite(std::size_t n, double p, std::uint64_t seed);

/// Dispatch by family name: P, C, Q, Q_minus, M_n_1, K_2_3, K_a_b, grid, random_bipartite.
/// Parameters are given as text; random_bipartite takes n, p and seed.
Graph gen(const std::string& family, const std::vector<std::string>& params);

// --- Cartesian product ---------------------------------------------------------

/// G0 x G1 with vertex (u, v) numbered u * |V(G1)| + v.
struct Product {
    Graph graph;
    std::size_t right_order = 0;

    Vertex vertex(Vertex u, Vertex v) const { return u * right_order + v; }
    Vertex left(Vertex x) const { return x / right_order; }
    Vertex right(Vertex x) const { return x % right_order; }
};

Product cartesian_product(const Graph& g0, const Graph& g1);

// --- Expansion and contraction -----------------------------------------------

struct ProperCover {
    VertexSet v0;
    VertexSet v1;
};

struct CoverCheck {
    bool proper = true;
    /// Which clause fails, in words.
    std::string violated_clause;
    explicit operator bool() const noexcept { return proper; }
};

CoverCheck check_proper_cover(const Graph& g, const ProperCover& cover);

/// Subgraph of G x K_2 induced by (V0 x {0}) + (V1 x {1}).
struct Expansion {
    Graph graph;
    /// (x, i) for each new vertex, in increasing order of 2x + i.
    std::vector<std::pair<Vertex, int>> names;
    /// psi_i(x) for x in V_i, nullopt elsewhere.
    std::vector<std::optional<Vertex>> psi0;
    std::vector<std::optional<Vertex>> psi1;

    Vertex projection(Vertex v) const { return names[v].first; }
    const std::optional<Vertex>& psi(int side, Vertex x) const { return side == 0 ? psi0[x] : psi1[x]; }
};

/// Throws GraphError unless the cover is proper.
Expansion expansion(const Graph& g, const ProperCover& cover);

struct Contraction {
    Graph graph;
    /// Image of each original vertex.
    std::vector<Vertex> map;
};

/// Collapse every edge of Theta-class `class_id` (index into theta_classes(g)).
/// Each collapsed pair is named after its smaller endpoint; survivors are renumbered in order.
/// Throws NotPartialCubeError for non-partial cubes and std::out_of_range for a bad class id.
Contraction theta_contraction(const MetricGraph& g, std::size_t class_id);

/// The cover of the contraction induced by the two sides of the collapsed class:
/// V0 = images of W_ab, V1 = images of W_ba for the class representative ab.
ProperCover contraction_cover(const MetricGraph& g, std::size_t class_id, const Contraction& contraction);

// --- Gated amalgam -----------------------------------------------------------

struct AmalgamSpec {
    Graph g0;
    Graph g1;
    /// (vertex of g0, vertex of g1) pairs to identify.
    std::vector<std::pair<Vertex, Vertex>> glue;
};

struct Amalgam {
    Graph graph;
    /// Vertices of g0 keep their numbers; unglued vertices of g1 follow in order.
    std::vector<Vertex> from0;
    std::vector<Vertex> from1;
};

/// Throws GraphError when the glue is not an isomorphism between the induced subgraphs,
/// or when a glued set is not gated in its factor.
Amalgam gated_amalgam(const AmalgamSpec& spec);

} // namespace pcube
