#include "doctest.h"

#include "pcube/checks.hpp"
#include "pcube/constructions.hpp"
#include "pcube/corpus.hpp"

using namespace pcube;

namespace {

CorpusOptions exhaustive_only(std::size_t n) {
    CorpusOptions o;
    o.max_order = n;
    o.include_families = false;
    o.random_count = 0;
    return o;
}

bool contains_copy(const Corpus& c, const Graph& g) {
    return std::any_of(c.graphs.begin(), c.graphs.end(),
                       [&](const CorpusEntry& e) { return are_isomorphic_small(e.graph, g).has_value(); });
}

} // namespace

TEST_CASE("connected bipartite graphs up to isomorphism") {
    const std::vector<std::size_t> expected{1, 1, 1, 3, 5, 17, 44};
    for (std::size_t n = 1; n <= 7; ++n) CHECK(connected_bipartite_graphs(n).size() == expected[n - 1]);
    CHECK_THROWS_AS(connected_bipartite_graphs(8), std::invalid_argument);
}

TEST_CASE("corpus contents") {
    auto o = exhaustive_only(3);
    o.include_trivial = false;
    const auto three = enumerate_corpus(o);
    REQUIRE(three.graphs.size() == 2);
    CHECK(contains_copy(three, path_graph(2)));
    CHECK(contains_copy(three, path_graph(3)));
    CHECK(enumerate_corpus(exhaustive_only(3)).graphs.size() == 3);

    const auto four = enumerate_corpus(exhaustive_only(4));
    CHECK(contains_copy(four, even_cycle(4)));
    CHECK(contains_copy(four, path_graph(4)));
    CHECK(contains_copy(four, complete_bipartite(1, 3)));
    CHECK(enumerate_corpus(exhaustive_only(6)).graphs.size() == 28);

    CHECK_THROWS_AS(enumerate_corpus(exhaustive_only(8)), std::invalid_argument);
}

TEST_CASE("corpus is deterministic and well formed") {
    CorpusOptions o;
    o.max_order = 4;
    o.random_count = 30;
    const auto a = enumerate_corpus(o);
    const auto b = enumerate_corpus(o);
    REQUIRE(a.graphs.size() == b.graphs.size());
    for (std::size_t i = 0; i < a.graphs.size(); ++i) {
        CHECK(a.graphs[i].id == b.graphs[i].id);
        CHECK(a.graphs[i].graph == b.graphs[i].graph);
        CHECK(is_connected(a.graphs[i].graph));
        CHECK(a.graphs[i].bipartite == is_bipartite(a.graphs[i].graph));
    }
    std::size_t random = 0;
    for (const auto& e : a.graphs)
        if (e.id.rfind("rnd-", 0) == 0) {
            ++random;
            CHECK(e.graph.order() >= 7);
            CHECK(e.graph.order() <= 10);
        }
    CHECK(random == 30);

    o.seed = 1;
    const auto c = enumerate_corpus(o);
    bool differs = false;
    for (std::size_t i = 0; i < c.graphs.size(); ++i) differs = differs || !(c.graphs[i].graph == a.graphs[i].graph);
    CHECK(differs);
}

TEST_CASE("reports") {
    VerificationReport r;
    r.meta = {6, 200, 7, 10, 0xC0FFEE, library_version};
    r.results.push_back({"b", "family", "zeta", Status::pass, "", 1.25});
    r.results.push_back({"a", "exhaustive n=2", "tree_ph0", Status::fail, "ph = 1, \"tree\"=yes", 0.1});
    r.results.push_back({"a", "exhaustive n=2", "alpha", Status::skip, "", 3.0});
    r.sort();
    CHECK(r.results[0].check == "alpha");
    CHECK(r.results[2].graph_id == "b");
    CHECK(r.count(Status::fail) == 1);
    CHECK_FALSE(r.passed());

    CHECK(report_from_json(report_to_json(r)) == r);
    CHECK(report_to_json(r).find("witness") != std::string::npos);

    const auto csv = report_to_csv(r);
    CHECK(csv.rfind("graph_id,provenance,check,status,witness,millis\n", 0) == 0);
    CHECK(csv.find("\"ph = 1, \"\"tree\"\"=yes\"") != std::string::npos);
    CHECK(report_summary(r).find("tree_ph0") != std::string::npos);

    CHECK_THROWS_AS(status_from_string("maybe"), std::invalid_argument);
}

TEST_CASE("verification over a small corpus") {
    VerifyOptions o;
    o.corpus.max_order = 4;
    o.corpus.random_count = 3;
    o.product_pairs = 6;
    o.amalgam_specs = 4;
    const auto report = run_verification(o);
    CHECK(report.passed());
    for (const auto& r : report.results)
        if (r.status == Status::fail) CHECK_FALSE(r.witness.empty());
    // Every corpus graph appears in every corpus-wide check.
    const auto corpus = enumerate_corpus(o.corpus);
    for (const char* check : {"recognizer_agreement", "att_convex_theorem", "tree_ph0", "hull_properties"})
        CHECK(report.count(check, Status::pass) + report.count(check, Status::skip) + report.count(check, Status::fail) ==
              corpus.graphs.size());
    CHECK(report_from_json(report_to_json(report)) == report);
    CHECK(run_verification(o).results.size() == report.results.size());
}

TEST_CASE("closure samplers are deterministic") {
    CorpusOptions o = exhaustive_only(5);
    o.include_families = true;
    const auto corpus = enumerate_corpus(o);
    const auto p1 = sample_product_pairs(corpus, 12, 5), p2 = sample_product_pairs(corpus, 12, 5);
    REQUIRE(p1.size() == 12);
    for (std::size_t i = 0; i < p1.size(); ++i) CHECK(p1[i].first.id + p1[i].second.id == p2[i].first.id + p2[i].second.id);
    const auto a1 = sample_amalgam_specs(corpus, 8, 5), a2 = sample_amalgam_specs(corpus, 8, 5);
    REQUIRE(a1.size() == 8);
    for (std::size_t i = 0; i < a1.size(); ++i) CHECK(a1[i].id == a2[i].id);
}
