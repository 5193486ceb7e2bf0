#include <algorithm>
#include <charconv>
#include <random>

#include "pcube/constructions.hpp"

namespace pcube {

namespace {

Graph cube_without(std::size_t dim, const std::vector<Vertex>& removed) {
    if (dim > 20) throw GraphError("hypercube dimension " + std::to_string(dim) + " is too large");
    const std::size_t n = std::size_t{1} << dim;
    std::vector<Vertex> index(n, n);
    std::size_t next = 0;
    for (Vertex v = 0; v < n; ++v)
        if (std::find(removed.begin(), removed.end(), v) == removed.end()) index[v] = next++;
    Graph g(next);
    for (Vertex v = 0; v < n; ++v) {
        if (index[v] == n) continue;
        for (std::size_t bit = 0; bit < dim; ++bit) {
            const Vertex w = v ^ (Vertex{1} << bit);
            if (v < w && index[w] != n) g.add_edge(index[v], index[w]);
        }
    }
    return g;
}

std::size_t parse_size(const std::string& text, const std::string& what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw GraphError(what + ": expected a non-negative integer, got '" + text + "'");
    return value;
}

void require_params(const std::string& family, const std::vector<std::string>& params, std::size_t count) {
    if (params.size() != count)
        throw GraphError(family + " takes " + std::to_string(count) + " parameter(s), got " +
                         std::to_string(params.size()));
}

} // namespace

Graph path_graph(std::size_t n) {
    if (n == 0) throw GraphError("P_n requires n >= 1");
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph even_cycle(std::size_t n) {
    if (n < 4 || n % 2 != 0) throw GraphError("C_n requires an even n >= 4");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph hypercube(std::size_t dim) { return cube_without(dim, {}); }

Graph hypercube_minus_vertex(std::size_t dim) {
    if (dim < 1) throw GraphError("Q_n^- requires n >= 1");
    return cube_without(dim, {(Vertex{1} << dim) - 1});
}

Graph hypercube_minus_antipodal_pair(std::size_t dim) {
    if (dim < 2) throw GraphError("M_{n,1} requires n >= 2");
    return cube_without(dim, {0, (Vertex{1} << dim) - 1});
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    if (a == 0 || b == 0) throw GraphError("K_{a,b} requires a, b >= 1");
    Graph g(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph k_2_3() { return complete_bipartite(2, 3); }

Graph grid(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw GraphError("grid requires positive dimensions");
    Graph g(rows * cols);
    for (Vertex r = 0; r < rows; ++r)
        for (Vertex c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
            if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
        }
    return g;
}

Graph random_bipartite(std::size_t n, double p, std::uint64_t seed) {
    if (n == 0) throw GraphError("random_bipartite requires n >= 1");
    if (!(p > 0.0 && p <= 1.0)) throw GraphError("random_bipartite requires 0 < p <= 1");
    if (n == 1) return Graph(1);
    std::mt19937_64 rng(seed);
    // Raw engine output only: the standard distributions differ between library vendors.
    auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    constexpr int max_attempts = 10000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<int> side(n);
        side[0] = 0;
        side[1] = 1;
        for (Vertex v = 2; v < n; ++v) side[v] = static_cast<int>(rng() >> 63);
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (side[u] != side[v] && unit() < p) g.add_edge(u, v);
        if (is_connected(g)) return g;
    }
    throw GraphError("random_bipartite: no connected sample after " + std::to_string(max_attempts) + " attempts");
}

Graph gen(const std::string& family, const std::vector<std::string>& params) {
    if (family == "P" || family == "path") {
        require_params(family, params, 1);
        return path_graph(parse_size(params[0], family));
    }
    if (family == "C" || family == "cycle") {
        require_params(family, params, 1);
        return even_cycle(parse_size(params[0], family));
    }
    if (family == "Q" || family == "hypercube") {
        require_params(family, params, 1);
        return hypercube(parse_size(params[0], family));
    }
    if (family == "Q_minus" || family == "Q_n_minus_vertex") {
        require_params(family, params, 1);
        return hypercube_minus_vertex(parse_size(params[0], family));
    }
    if (family == "M" || family == "M_n_1") {
        require_params(family, params, 1);
        return hypercube_minus_antipodal_pair(parse_size(params[0], family));
    }
    if (family == "K_2_3" || family == "K23") {
        require_params(family, params, 0);
        return k_2_3();
    }
    if (family == "K" || family == "K_a_b") {
        require_params(family, params, 2);
        return complete_bipartite(parse_size(params[0], family), parse_size(params[1], family));
    }
    if (family == "grid") {
        require_params(family, params, 2);
        return grid(parse_size(params[0], family), parse_size(params[1], family));
    }
    if (family == "random_bipartite" || family == "random") {
        require_params(family, params, 3);
        double p = 0.0;
        try {
            std::size_t used = 0;
            p = std::stod(params[1], &used);
            if (used != params[1].size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw GraphError(family + ": expected a probability, got '" + params[1] + "'");
        }
        std::uint64_t seed = 0;
        const auto& s = params[2];
        const bool hex = s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X');
        const char* begin = s.data() + (hex ? 2 : 0);
        auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), seed, hex ? 16 : 10);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw GraphError(family + ": expected a seed, got '" + s + "'");
        return random_bipartite(parse_size(params[0], family), p, seed);
    }
    throw GraphError("unknown family '" + family + "'");
}

} // namespace pcube
