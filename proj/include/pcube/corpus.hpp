#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcube/graph.hpp"

namespace pcube {

struct CorpusOptions {
    /// Exhaustive tier: every connected bipartite graph on 1..max_order vertices, up to isomorphism.
    std::size_t max_order = 6;
    /// Whether K_1 belongs to the exhaustive tier.
    bool include_trivial = true;
    /// Named instances (K_{2,3}, Q_3^-, M_{4,1}, ...).
    bool include_families = true;
    std::size_t random_count = 200;
    std::size_t random_min_order = 7;
    std::size_t random_max_order = 10;
    std::uint64_t seed = 0xC0FFEE;
};

inline constexpr std::size_t max_exhaustive_order = 7;

struct CorpusEntry {
    std::string id;
    /// "exhaustive", "family" or "random", with parameters.
    std::string provenance;
    Graph graph;
    bool bipartite = true;
};

struct Corpus {
    CorpusOptions options;
    std::vector<CorpusEntry> graphs;
};

/// Connected bipartite graphs on exactly n vertices, one per isomorphism class,
/// in a deterministic order. Requires n <= max_exhaustive_order.
std::vector<Graph> connected_bipartite_graphs(std::size_t n);

/// The named graphs used throughout: K_{2,3}, Q_3^-, M_{4,1}, Q_3, C_6, P_5, grids.
std::vector<CorpusEntry> family_instances();

/// Throws std::invalid_argument when options.max_order exceeds max_exhaustive_order.
Corpus enumerate_corpus(const CorpusOptions& options = {});

} // namespace pcube
