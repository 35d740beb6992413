#include "edt/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <queue>
#include <sstream>

namespace edt {

Graph::Graph(int n) : Graph(n, std::span<const std::pair<Vertex, Vertex>>{}) {}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : n_(n) {
    if (n < 0) throw GraphError("negative vertex count");
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw GraphError("vertex id out of range in edge " + std::to_string(a) + " " + std::to_string(b));
        }
        if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
        edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw GraphError("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
    }
    adj_.resize(static_cast<std::size_t>(n));
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
    if (n <= kMaxMaskVertices) {
        nbr_mask_.assign(static_cast<std::size_t>(n), 0);
        for (const Edge& e : edges_) {
            nbr_mask_[e.u] |= bit(e.v);
            nbr_mask_[e.v] |= bit(e.u);
        }
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long to_int(std::string_view tok, std::size_t line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    }
    return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::pair<Edge, std::size_t>> seen;  // edge -> line, for duplicate reporting

    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        if (tokens.size() != 2) throw ParseError(line_no, "expected two integers");
        const long long a = to_int(tokens[0], line_no);
        const long long b = to_int(tokens[1], line_no);

        if (!have_header) {
            if (a < 0 || b < 0) throw ParseError(line_no, "header counts must be non-negative");
            if (a > 1'000'000) throw ParseError(line_no, "vertex count too large");
            n = a;
            m = b;
            have_header = true;
        } else {
            if (static_cast<long long>(edges.size()) >= m) {
                throw ParseError(line_no, "more edge lines than the header's m = " + std::to_string(m));
            }
            if (a < 0 || b < 0 || a >= n || b >= n) {
                throw ParseError(line_no, "vertex id out of range (n = " + std::to_string(n) + ")");
            }
            if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
            const Edge e{static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
            for (const auto& [prev, prev_line] : seen) {
                if (prev == e) {
                    throw ParseError(line_no, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                                  " (first at line " + std::to_string(prev_line) + ")");
                }
            }
            seen.emplace_back(e, line_no);
            edges.emplace_back(e.u, e.v);
        }
        if (end == text.size()) break;
    }
    if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'n m' header");
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError(line_no, "header promises " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    }
    return Graph(static_cast<int>(n), edges);
}

std::string format_edge_list(const Graph& g, std::string_view comment) {
    std::ostringstream out;
    if (!comment.empty()) {
        std::size_t pos = 0;
        while (pos <= comment.size()) {
            std::size_t end = comment.find('\n', pos);
            if (end == std::string_view::npos) end = comment.size();
            out << "# " << comment.substr(pos, end - pos) << '\n';
            pos = end + 1;
        }
    }
    out << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::vector<int> component_labels(const Graph& g) {
    const int n = g.order();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (label[s] != -1) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (label[w] == -1) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    auto labels = component_labels(g);
    return std::all_of(labels.begin(), labels.end(), [](int c) { return c == 0; });
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::queue<Vertex> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v)) {
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

int eccentricity(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
    auto dist = bfs_distances(g, v);
    int ecc = 0;
    for (int d : dist) {
        if (d < 0) throw std::invalid_argument("eccentricity requires a connected graph");
        ecc = std::max(ecc, d);
    }
    return ecc;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const Edge& e : g.edges()) {
        if (local[e.u] >= 0 && local[e.v] >= 0) edges.emplace_back(local[e.u], local[e.v]);
    }
    return {Graph(static_cast<int>(vertices.size()), edges), std::vector<Vertex>(vertices.begin(), vertices.end())};
}

InducedSubgraph induced_subgraph(const Graph& g, Mask vertices) {
    auto list = mask_to_vertices(vertices);
    return induced_subgraph(g, std::span<const Vertex>(list));
}

bool is_clique(const Graph& g, Mask vertices) {
    bool ok = true;
    for_each_bit(vertices, [&](int v) {
        if ((g.closed_neighbor_mask(v) & vertices) != vertices) ok = false;
    });
    return ok;
}

bool induces_connected(const Graph& g, Mask vertices) {
    if (vertices == 0) return false;
    Mask reached = bit(lowest(vertices));
    Mask frontier = reached;
    while (frontier) {
        Mask next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.neighbor_mask(v); });
        next &= vertices & ~reached;
        reached |= next;
        frontier = next;
    }
    return reached == vertices;
}

bool is_dominating_set(const Graph& g, Mask set) {
    Mask covered = 0;
    for_each_bit(set, [&](int v) { covered |= g.closed_neighbor_mask(v); });
    return covered == full_mask(g.order());
}

}  // namespace edt
