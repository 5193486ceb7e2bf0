#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcube/constructions.hpp"
#include "pcube/corpus.hpp"
#include "pcube/report.hpp"

namespace pcube {

// Each check runs one statement over its inputs and records one result per input graph
// (or pair, or spec). Inputs a statement does not apply to are recorded as skipped.

/// Djokovic, Winkler and embedding recognizers agree.
VerificationReport check_recognizer_agreement(const Corpus& corpus);
/// Partial cube iff Att-convex, with Att-convexity decided on the convex-set oracle.
VerificationReport check_att_convex_theorem(const Corpus& corpus);
/// No bipartite graph with ph <= 1 fails recognition; K_{2,3} and Q_3^- both have ph = 2.
VerificationReport check_ph1_implies_pc(const Corpus& corpus);
/// ph = 0 iff tree.
VerificationReport check_tree_ph0(const Corpus& corpus);
/// ph_leq1_bipartite, the copoint criterion and pre_hull_number <= 1 agree.
VerificationReport check_ph_consistency(const Corpus& corpus);
/// For partial cubes: oracle copoints equal maximal half-spaces, and half-spaces equal the W sets.
VerificationReport check_copoints_halfspaces(const Corpus& corpus);

struct NamedGraph {
    std::string id;
    Graph graph;
};

struct NamedAmalgam {
    std::string id;
    AmalgamSpec spec;
};

/// ph(G0 x G1) <= 1 iff both factors have ph <= 1.
VerificationReport check_closure_product(const std::vector<std::pair<NamedGraph, NamedGraph>>& pairs);
/// The amalgam is a partial cube, both copies are gated in it, and ph <= 1 iff both parts have ph <= 1.
VerificationReport check_closure_amalgam(const std::vector<NamedAmalgam>& specs);
/// Every gated subgraph of a partial cube with ph <= 1 has ph <= 1.
VerificationReport check_gated_subgraph(const Corpus& corpus);
/// M_{4,1} has ph 1 and a convex induced copy of Q_3^- with ph 2.
VerificationReport check_figure1();
/// Contracting any Theta-class and expanding along the induced cover gives back the graph;
/// expansions of partial cubes along proper covers are partial cubes.
VerificationReport check_expansion_duality(const Corpus& corpus);

// Properties of the convexity engine.

VerificationReport check_hull_properties(const Corpus& corpus, std::uint64_t seed);
VerificationReport check_attaching_independence(const Corpus& corpus);
VerificationReport check_ph_stable_forms(const Corpus& corpus);
VerificationReport check_interval_convexity(const Corpus& corpus);
VerificationReport check_boundary_lemma(const Corpus& corpus);

// Golden values.

struct GoldenEntry {
    std::string id;
    Graph graph;
    bool partial_cube = false;
    std::size_t pre_hull_number = 0;
};

std::vector<GoldenEntry> golden_table();
VerificationReport check_golden(const std::vector<GoldenEntry>& entries);

// Inputs for the closure checks.

/// Factor pairs drawn from the corpus partial cubes (plus the named ph = 2 instances),
/// keeping products within `max_product_order` vertices.
std::vector<std::pair<NamedGraph, NamedGraph>> sample_product_pairs(const Corpus& corpus, std::size_t count,
                                                                    std::uint64_t seed,
                                                                    std::size_t max_product_order = 64);
/// Amalgams of corpus partial cubes glued along isomorphic gated subgraphs.
std::vector<NamedAmalgam> sample_amalgam_specs(const Corpus& corpus, std::size_t count, std::uint64_t seed);

/// A convex vertex set of `host` inducing a copy of `pattern`, if any.
std::optional<VertexSet> find_convex_copy(const Graph& host, const Graph& pattern);

struct VerifyOptions {
    CorpusOptions corpus;
    std::size_t product_pairs = 50;
    std::size_t amalgam_specs = 20;
};

/// Every check above over one corpus.
VerificationReport run_verification(const VerifyOptions& options);

} // namespace pcube
