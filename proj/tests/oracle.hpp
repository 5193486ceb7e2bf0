#pragma once

// Slow reference implementations used as test oracles. They share nothing with the
// library beyond Graph::order() and Graph::edges(): distances come from Floyd-Warshall,
// sets are plain 32-bit masks, and every notion is applied straight from its definition.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pcube/graph.hpp"

namespace oracle {

using Mask = std::uint32_t;

struct Metric {
    std::size_t n = 0;
    std::vector<std::vector<int>> d;

    explicit Metric(const pcube::Graph& g) : n(g.order()), d(n, std::vector<int>(n, 1 << 20)) {
        for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
        for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }

    bool between(std::size_t x, std::size_t z, std::size_t y) const { return d[x][z] + d[z][y] == d[x][y]; }

    Mask interval(std::size_t x, std::size_t y) const {
        Mask m = 0;
        for (std::size_t z = 0; z < n; ++z)
            if (between(x, z, y)) m |= Mask{1} << z;
        return m;
    }

    Mask pre_hull(Mask a) const {
        Mask out = 0;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if ((a >> x & 1) && (a >> y & 1)) out |= interval(x, y);
        return out;
    }

    bool convex(Mask a) const { return pre_hull(a) == a; }

    /// Number of pre-hull applications until nothing changes.
    std::size_t hull_depth(Mask a) const {
        std::size_t depth = 0;
        for (Mask next = pre_hull(a); next != a; next = pre_hull(a)) {
            a = next;
            ++depth;
        }
        return depth;
    }

    Mask hull(Mask a) const {
        for (Mask next = pre_hull(a); next != a; next = pre_hull(a)) a = next;
        return a;
    }

    Mask all() const { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

    std::vector<Mask> convex_sets() const {
        std::vector<Mask> out;
        for (Mask a = 0;; ++a) {
            if (convex(a)) out.push_back(a);
            if (a == all()) break;
        }
        return out;
    }

    /// Maximal convex sets avoiding x.
    std::vector<Mask> copoints_at(std::size_t x) const {
        std::vector<Mask> avoiding;
        for (Mask c : convex_sets())
            if (!(c >> x & 1)) avoiding.push_back(c);
        std::vector<Mask> out;
        for (Mask c : avoiding) {
            const bool maximal = std::none_of(avoiding.begin(), avoiding.end(),
                                              [&](Mask other) { return other != c && (c & other) == c; });
            if (maximal) out.push_back(c);
        }
        return out;
    }

    std::size_t pre_hull_number() const {
        std::size_t best = 0;
        for (std::size_t x = 0; x < n; ++x)
            for (Mask k : copoints_at(x)) best = std::max(best, hull_depth(k | Mask{1} << x));
        return best;
    }

    bool bipartite() const {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z)
                    if (d[x][y] == 1 && d[x][z] == d[y][z]) return false;
        return true;
    }

    /// W_ab as a mask.
    Mask w(std::size_t a, std::size_t b) const {
        Mask m = 0;
        for (std::size_t x = 0; x < n; ++x)
            if (d[a][x] < d[b][x]) m |= Mask{1} << x;
        return m;
    }

    /// Bipartite with every W set convex.
    bool partial_cube(const pcube::Graph& g) const {
        if (!bipartite()) return false;
        for (const auto& e : g.edges())
            if (!convex(w(e.u, e.v)) || !convex(w(e.v, e.u))) return false;
        return true;
    }

    bool gated(Mask a) const {
        for (std::size_t x = 0; x < n; ++x) {
            bool found = false;
            for (std::size_t y = 0; y < n && !found; ++y) {
                if (!(a >> y & 1)) continue;
                bool all_between = true;
                for (std::size_t z = 0; z < n; ++z)
                    if ((a >> z & 1) && !between(x, y, z)) all_between = false;
                found = all_between;
            }
            if (!found) return false;
        }
        return true;
    }
};

inline std::vector<std::size_t> members(Mask m) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < 32; ++v)
        if (m >> v & 1) out.push_back(v);
    return out;
}

} // namespace oracle
