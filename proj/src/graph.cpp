#include "pcube/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

namespace pcube {

ParseError::ParseError(std::size_t line, const std::string& message)
    : GraphError("line " + std::to_string(line) + ": " + message), line_(line) {}

Graph::Graph(std::size_t order) : adjacency_(order), neighbor_sets_(order, VertexSet(order)) {}

Graph::Graph(std::size_t order, const std::vector<Edge>& edges) : Graph(order) {
    for (const auto& e : edges) add_edge(e.u, e.v);
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u >= order() || v >= order())
        throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) + " has an endpoint outside 0.." +
                         std::to_string(order() == 0 ? 0 : order() - 1));
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    if (neighbor_sets_[u].contains(v))
        throw GraphError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    auto& nu = adjacency_[u];
    nu.insert(std::upper_bound(nu.begin(), nu.end(), v), v);
    auto& nv = adjacency_[v];
    nv.insert(std::upper_bound(nv.begin(), nv.end(), u), u);
    neighbor_sets_[u].insert(v);
    neighbor_sets_[v].insert(u);
    ++edge_count_;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::neighborhood(const VertexSet& set) const {
    VertexSet out(order());
    set.for_each([&](Vertex v) { out |= neighbor_sets_[v]; });
    return out - set;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    InducedSubgraph sub{Graph(vertices.count()), vertices.members()};
    std::vector<std::size_t> local(g.order(), g.order());
    for (std::size_t i = 0; i < sub.to_host.size(); ++i) local[sub.to_host[i]] = i;
    for (const auto& e : g.edges())
        if (vertices.contains(e.u) && vertices.contains(e.v)) sub.graph.add_edge(local[e.u], local[e.v]);
    return sub;
}

// --- Text format -----------------------------------------------------------

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

std::size_t parse_count(std::string_view field, std::size_t line, const char* what) {
    std::size_t value = 0;
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" +
                                   std::string(field) + "'");
    return value;
}

} // namespace

Graph parse_graph(std::string_view text) {
    std::optional<Graph> graph;
    std::size_t expected_edges = 0;
    std::size_t edges_read = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto fields = split_fields(line);
        if (fields.empty() || fields.front().front() == '#') continue;
        if (fields.size() != 2)
            throw ParseError(line_no, "expected two fields, found " + std::to_string(fields.size()));

        if (!graph) {
            const std::size_t n = parse_count(fields[0], line_no, "vertex count");
            expected_edges = parse_count(fields[1], line_no, "edge count");
            graph.emplace(n);
            continue;
        }
        const Vertex u = parse_count(fields[0], line_no, "vertex");
        const Vertex v = parse_count(fields[1], line_no, "vertex");
        if (edges_read == expected_edges)
            throw ParseError(line_no, "more edge lines than the declared " + std::to_string(expected_edges));
        try {
            graph->add_edge(u, v);
        } catch (const GraphError& e) {
            throw ParseError(line_no, e.what());
        }
        ++edges_read;
    }
    if (!graph) throw ParseError(line_no, "missing header 'n m'");
    if (edges_read != expected_edges)
        throw ParseError(line_no, "declared " + std::to_string(expected_edges) + " edges, found " +
                                      std::to_string(edges_read));
    return std::move(*graph);
}

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open graph file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string serialize_graph(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

// --- Structural predicates -------------------------------------------------

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    std::vector<bool> seen(g.order(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == g.order();
}

namespace {

struct ColoringResult {
    std::vector<int> color;
    std::vector<Vertex> parent;
    std::optional<Edge> conflict;
};

ColoringResult bfs_coloring(const Graph& g) {
    const std::size_t n = g.order();
    ColoringResult r{std::vector<int>(n, -1), std::vector<Vertex>(n, n), std::nullopt};
    for (Vertex s = 0; s < n; ++s) {
        if (r.color[s] != -1) continue;
        r.color[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (r.color[w] == -1) {
                    r.color[w] = 1 - r.color[v];
                    r.parent[w] = v;
                    q.push(w);
                } else if (r.color[w] == r.color[v] && !r.conflict) {
                    r.conflict = Edge(v, w);
                }
            }
        }
    }
    return r;
}

} // namespace

std::optional<std::vector<int>> two_coloring(const Graph& g) {
    auto r = bfs_coloring(g);
    if (r.conflict) return std::nullopt;
    return std::move(r.color);
}

bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

std::vector<Vertex> odd_cycle(const Graph& g) {
    const auto r = bfs_coloring(g);
    if (!r.conflict) return {};
    // Walk both endpoints of the monochromatic edge up the BFS tree to their meeting point.
    const std::size_t n = g.order();
    auto path_to_root = [&](Vertex v) {
        std::vector<Vertex> path{v};
        while (r.parent[path.back()] != n) path.push_back(r.parent[path.back()]);
        return path;
    };
    auto pu = path_to_root(r.conflict->u);
    auto pv = path_to_root(r.conflict->v);
    while (pu.size() >= 2 && pv.size() >= 2 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
        pu.pop_back();
        pv.pop_back();
    }
    std::vector<Vertex> cycle(pu.begin(), pu.end());
    for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it) cycle.push_back(*it);
    return cycle;
}

bool is_tree(const Graph& g) { return g.order() >= 1 && is_connected(g) && g.size() + 1 == g.order(); }

// --- Metric ----------------------------------------------------------------

int DistanceMatrix::diameter() const {
    int best = 0;
    for (int v : d_) best = std::max(best, v);
    return best;
}

DistanceMatrix bfs_distances(const Graph& g) {
    const std::size_t n = g.order();
    DistanceMatrix d(n);
    std::vector<Vertex> queue(n);
    for (Vertex s = 0; s < n; ++s) {
        std::size_t head = 0, tail = 0;
        queue[tail++] = s;
        d.at(s, s) = 0;
        while (head < tail) {
            const Vertex v = queue[head++];
            for (Vertex w : g.neighbors(v))
                if (d(s, w) == DistanceMatrix::unreachable) {
                    d.at(s, w) = d(s, v) + 1;
                    queue[tail++] = w;
                }
        }
    }
    return d;
}

DistanceMatrix distances(const Graph& g) {
    auto d = bfs_distances(g);
    for (Vertex v = 0; v < g.order(); ++v)
        if (d(0, v) == DistanceMatrix::unreachable)
            throw DisconnectedGraphError("graph is disconnected: vertex " + std::to_string(v) +
                                         " is unreachable from 0");
    return d;
}

} // namespace pcube
