#ifndef EDT_TREE_HPP
#define EDT_TREE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "edt/graph.hpp"

namespace edt {

class TreeError : public std::invalid_argument {
public:
    enum class Kind { NotConnected, HasCycle };

    TreeError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// A connected acyclic graph. Only validate_tree() builds one.
class Tree {
public:
    const Graph& graph() const { return graph_; }
    operator const Graph&() const { return graph_; }  // NOLINT: trees are graphs

    int order() const { return graph_.order(); }
    int degree(Vertex v) const { return graph_.degree(v); }
    std::span<const Vertex> neighbors(Vertex v) const { return graph_.neighbors(v); }

    /// Degree-1 vertices; the lone vertex of K_1 also counts.
    int leaf_count() const { return leaf_count_; }
    bool is_leaf(Vertex v) const { return graph_.order() == 1 || graph_.degree(v) == 1; }
    int internal_count() const { return order() - leaf_count_; }

    /// K_{1,m} with m >= 1.
    bool is_star() const;

    friend bool operator==(const Tree& a, const Tree& b) { return a.graph_ == b.graph_; }

private:
    friend Tree validate_tree(Graph g);
    explicit Tree(Graph g);

    Graph graph_;
    int leaf_count_ = 0;
};

/// Throws TreeError (HasCycle before NotConnected) if g is not a tree.
Tree validate_tree(Graph g);

/// Convenience for literals in code and tests.
Tree make_tree(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

enum class VertexRole { Leaf, WeakStem, StrongStem, Loner };

const char* to_string(VertexRole role);

struct VertexClassification {
    std::vector<VertexRole> role;
    std::vector<bool> exposed;       // only ever set on stems
    std::vector<int> adjacent_leaves;
    std::vector<int> internal_neighbors;

    bool is_stem(Vertex v) const {
        return role[v] == VertexRole::WeakStem || role[v] == VertexRole::StrongStem;
    }
    std::vector<Vertex> exposed_stems() const;
    std::vector<Vertex> with_role(VertexRole r) const;
};

/// Leaf / weak stem / strong stem / loner taxonomy. Rejects n = 1.
VertexClassification classify_vertices(const Tree& t);

/// Canonical form: AHU parenthesis code rooted at the center, minimum over
/// both centers when there are two. Equal iff isomorphic.
std::string canonical_code(const Tree& t);

/// Decodes a Prüfer sequence over {0..n-1} (length n - 2) into a labeled tree.
Tree tree_from_prufer(int n, std::span<const int> sequence);

inline constexpr int kDefaultMaxEnumerationOrder = 10;

/// One tree per isomorphism class on n vertices, ordered by canonical code.
std::vector<Tree> enumerate_trees(int n, int max_n = kDefaultMaxEnumerationOrder);

/// Uniform labeled tree from a seeded random Prüfer sequence.
Tree random_tree(int n, std::uint64_t seed);

/// Relabels vertices: vertex v becomes perm[v].
Tree relabel(const Tree& t, std::span<const int> perm);

/// Subtree induced by kept vertices (must induce a connected subgraph);
/// new ids follow ascending host order. to_host maps back.
struct SubTree {
    Tree tree;
    std::vector<Vertex> to_host;
};

SubTree induced_subtree(const Tree& t, Mask kept);
SubTree induced_subtree(const Tree& t, std::span<const Vertex> kept);

}  // namespace edt

#endif
