#ifndef EDT_GRAPH_HPP
#define EDT_GRAPH_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edt/bits.hpp"

namespace edt {

using Vertex = int;

struct Edge {
    Vertex u;
    Vertex v;  // u < v

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown when an edge set does not describe a simple graph.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Edge-list parse failure; line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// An exact computation would exceed its configured size or budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Undirected simple graph on vertices 0..n-1. Immutable once built;
/// neighbor lists are sorted ascending.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
    Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
        : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Open neighborhood as a mask; requires order() <= 64.
    Mask neighbor_mask(Vertex v) const { return nbr_mask_[static_cast<std::size_t>(v)]; }
    Mask closed_neighbor_mask(Vertex v) const { return nbr_mask_[static_cast<std::size_t>(v)] | bit(v); }
    bool fits_mask() const { return n_ <= kMaxMaskVertices; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Mask> nbr_mask_;
};

/// Reads the "n m" + m lines of "u v" edge-list format. '#' lines and blank
/// lines are skipped but still counted for error line numbers.
Graph parse_graph(std::string_view text);

/// Writes the edge-list format read by parse_graph.
std::string format_edge_list(const Graph& g, std::string_view comment = {});

bool is_connected(const Graph& g);

/// Component index per vertex, numbered in order of smallest member.
std::vector<int> component_labels(const Graph& g);

/// Breadth-first distances from source; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Maximum distance from v; throws std::invalid_argument on disconnected input.
int eccentricity(const Graph& g, Vertex v);

/// Subgraph induced by the given vertices, relabeled 0..k-1 in the order given.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_host;  // local id -> host id
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Induced subgraph restricted to a mask (host order preserved).
InducedSubgraph induced_subgraph(const Graph& g, Mask vertices);

bool is_clique(const Graph& g, Mask vertices);

/// True iff the vertices in mask induce a connected subgraph (empty is false).
bool induces_connected(const Graph& g, Mask vertices);

bool is_dominating_set(const Graph& g, Mask set);

}  // namespace edt

#endif
