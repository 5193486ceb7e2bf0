#include <algorithm>
#include <map>
#include <numeric>

#include "pcube/graph.hpp"

namespace pcube {

namespace {

// Joint color refinement of both graphs so that colors are comparable across them.
// Starts from degrees and splits by the multiset of neighbor colors until stable.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colors(const Graph& g, const Graph& h) {
    std::vector<std::size_t> cg(g.order()), ch(h.order());
    for (Vertex v = 0; v < g.order(); ++v) cg[v] = g.degree(v);
    for (Vertex v = 0; v < h.order(); ++v) ch[v] = h.degree(v);

    std::size_t classes = 0;
    while (true) {
        using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
        auto signature = [](const Graph& graph, const std::vector<std::size_t>& colors, Vertex v) {
            Signature s{colors[v], {}};
            for (Vertex w : graph.neighbors(v)) s.second.push_back(colors[w]);
            std::sort(s.second.begin(), s.second.end());
            return s;
        };
        std::map<Signature, std::size_t> ids;
        std::vector<Signature> sg, sh;
        for (Vertex v = 0; v < g.order(); ++v) sg.push_back(signature(g, cg, v));
        for (Vertex v = 0; v < h.order(); ++v) sh.push_back(signature(h, ch, v));
        for (const auto& s : sg) ids.emplace(s, 0);
        for (const auto& s : sh) ids.emplace(s, 0);
        std::size_t next = 0;
        for (auto& [sig, id] : ids) id = next++;
        for (Vertex v = 0; v < g.order(); ++v) cg[v] = ids[sg[v]];
        for (Vertex v = 0; v < h.order(); ++v) ch[v] = ids[sh[v]];
        if (ids.size() == classes) break;
        classes = ids.size();
    }
    return {std::move(cg), std::move(ch)};
}

class Matcher {
public:
    Matcher(const Graph& g, const Graph& h, std::vector<std::size_t> cg, std::vector<std::size_t> ch)
        : g_(g), h_(h), cg_(std::move(cg)), ch_(std::move(ch)), map_(g.order(), g.order()),
          used_(h.order(), false) {
        // Rare colors first, then neighbors of already-placed vertices.
        std::vector<std::size_t> frequency(g.order() + h.order() + 1, 0);
        for (auto c : cg_) ++frequency[c];
        std::vector<bool> placed(g.order(), false);
        while (order_.size() < g.order()) {
            Vertex best = g.order();
            for (Vertex v = 0; v < g.order(); ++v) {
                if (placed[v]) continue;
                if (best == g.order()) {
                    best = v;
                    continue;
                }
                auto links = [&](Vertex x) {
                    std::size_t c = 0;
                    for (Vertex w : g.neighbors(x)) c += placed[w] ? 1 : 0;
                    return c;
                };
                const auto key_v = std::make_pair(links(v), -static_cast<long>(frequency[cg_[v]]));
                const auto key_b = std::make_pair(links(best), -static_cast<long>(frequency[cg_[best]]));
                if (key_v > key_b) best = v;
            }
            placed[best] = true;
            order_.push_back(best);
        }
    }

    bool run(std::size_t depth = 0) {
        if (depth == order_.size()) return true;
        const Vertex v = order_[depth];
        for (Vertex w = 0; w < h_.order(); ++w) {
            if (used_[w] || ch_[w] != cg_[v]) continue;
            if (!consistent(v, w)) continue;
            map_[v] = w;
            used_[w] = true;
            if (run(depth + 1)) return true;
            used_[w] = false;
            map_[v] = g_.order();
        }
        return false;
    }

    std::vector<Vertex> mapping() const { return map_; }

private:
    bool consistent(Vertex v, Vertex w) const {
        for (Vertex u = 0; u < g_.order(); ++u) {
            if (map_[u] == g_.order()) continue;
            if (g_.has_edge(u, v) != h_.has_edge(map_[u], w)) return false;
        }
        return true;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<std::size_t> cg_, ch_;
    std::vector<Vertex> map_;
    std::vector<bool> used_;
    std::vector<Vertex> order_;
};

} // namespace

std::optional<std::vector<Vertex>> are_isomorphic_small(const Graph& g, const Graph& h, std::size_t bound) {
    if (g.order() > bound || h.order() > bound)
        throw SizeBoundError("isomorphism search limited to " + std::to_string(bound) + " vertices (got " +
                             std::to_string(std::max(g.order(), h.order())) + ")");
    if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;

    auto [cg, ch] = refine_colors(g, h);
    auto sorted_g = cg, sorted_h = ch;
    std::sort(sorted_g.begin(), sorted_g.end());
    std::sort(sorted_h.begin(), sorted_h.end());
    if (sorted_g != sorted_h) return std::nullopt;

    Matcher matcher(g, h, std::move(cg), std::move(ch));
    if (!matcher.run()) return std::nullopt;
    return matcher.mapping();
}

std::size_t isomorphism_invariant(const Graph& g) {
    // Refinement against an empty partner yields colors that depend only on g's structure.
    const auto colors = refine_colors(g, Graph(0)).first;
    // Color ids are positions in a sorted signature map, so they are themselves canonical.
    std::vector<std::size_t> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    std::size_t h = g.order() * 1000003u + g.size();
    for (auto c : sorted) h = h * 1315423911u + c + 1;
    return h;
}

} // namespace pcube
