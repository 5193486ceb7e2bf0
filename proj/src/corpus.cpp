#include "pcube/corpus.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <map>
#include <random>

#include "pcube/constructions.hpp"

namespace pcube {

namespace {

std::string format_id(const char* prefix, std::size_t a, std::size_t b) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s%zu-%03zu", prefix, a, b);
    return buf;
}

} // namespace

std::vector<Graph> connected_bipartite_graphs(std::size_t n) {
    if (n > max_exhaustive_order)
        throw std::invalid_argument("exhaustive enumeration limited to " + std::to_string(max_exhaustive_order) +
                                    " vertices");
    if (n == 0) return {};
    if (n == 1) return {Graph(1)};

    std::map<std::size_t, std::vector<Graph>> buckets;
    std::vector<Graph> found;
    for (std::size_t left = 1; left <= n / 2; ++left) {
        std::vector<Edge> cross;
        for (Vertex u = 0; u < left; ++u)
            for (Vertex v = left; v < n; ++v) cross.emplace_back(u, v);
        const std::uint64_t limit = std::uint64_t{1} << cross.size();
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) + 1 < n) continue;
            Graph g(n);
            for (std::size_t i = 0; i < cross.size(); ++i)
                if ((mask >> i) & 1u) g.add_edge(cross[i].u, cross[i].v);
            if (!is_connected(g)) continue;
            auto& bucket = buckets[isomorphism_invariant(g)];
            const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](const Graph& h) {
                return are_isomorphic_small(g, h, max_exhaustive_order).has_value();
            });
            if (seen) continue;
            bucket.push_back(g);
            found.push_back(std::move(g));
        }
    }
    std::stable_sort(found.begin(), found.end(), [](const Graph& a, const Graph& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.edges() < b.edges();
    });
    return found;
}

std::vector<CorpusEntry> family_instances() {
    std::vector<CorpusEntry> out;
    auto add = [&](std::string id, std::string how, Graph g) {
        out.push_back({std::move(id), "family " + std::move(how), std::move(g), true});
    };
    add("K_2_3", "K_2_3", k_2_3());
    add("K_3_3", "K_a_b 3 3", complete_bipartite(3, 3));
    add("Q_3_minus", "Q_minus 3", hypercube_minus_vertex(3));
    add("M_4_1", "M_n_1 4", hypercube_minus_antipodal_pair(4));
    add("Q_3", "Q 3", hypercube(3));
    add("C_8", "C 8", even_cycle(8));
    add("grid_3x3", "grid 3 3", grid(3, 3));
    return out;
}

Corpus enumerate_corpus(const CorpusOptions& options) {
    if (options.max_order > max_exhaustive_order)
        throw std::invalid_argument("corpus: exhaustive tier limited to N <= " + std::to_string(max_exhaustive_order));
    if (options.random_count > 0 &&
        (options.random_min_order < 1 || options.random_min_order > options.random_max_order))
        throw std::invalid_argument("corpus: invalid random order range");

    Corpus corpus{options, {}};
    for (std::size_t n = options.include_trivial ? 1 : 2; n <= options.max_order; ++n) {
        const auto graphs = connected_bipartite_graphs(n);
        for (std::size_t i = 0; i < graphs.size(); ++i)
            corpus.graphs.push_back({format_id("exh-n", n, i), "exhaustive n=" + std::to_string(n), graphs[i], true});
    }
    if (options.include_families) {
        auto named = family_instances();
        std::move(named.begin(), named.end(), std::back_inserter(corpus.graphs));
    }

    std::mt19937_64 rng(options.seed);
    const std::size_t span = options.random_max_order - options.random_min_order + 1;
    for (std::size_t i = 0; i < options.random_count; ++i) {
        const std::size_t n = options.random_min_order + static_cast<std::size_t>(rng() % span);
        const double p = 0.2 + 0.4 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        const std::uint64_t sub_seed = rng();
        char provenance[96];
        std::snprintf(provenance, sizeof provenance, "random n=%zu p=%.4f seed=%llu", n, p,
                      static_cast<unsigned long long>(sub_seed));
        Graph g = random_bipartite(n, p, sub_seed);
        corpus.graphs.push_back({format_id("rnd-n", n, i), provenance, std::move(g), true});
    }
    return corpus;
}

} // namespace pcube
