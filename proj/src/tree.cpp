#include "edt/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace edt {

Tree::Tree(Graph g) : graph_(std::move(g)) {
    if (graph_.order() == 1) {
        leaf_count_ = 1;
    } else {
        for (Vertex v = 0; v < graph_.order(); ++v) leaf_count_ += graph_.degree(v) == 1 ? 1 : 0;
    }
}

bool Tree::is_star() const {
    const int n = order();
    if (n < 2) return false;
    for (Vertex v = 0; v < n; ++v) {
        if (graph_.degree(v) == n - 1) return true;
    }
    return false;
}

Tree validate_tree(Graph g) {
    const int n = g.order();
    if (n == 0) throw TreeError(TreeError::Kind::NotConnected, "empty graph is not a tree");
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Edge& e : g.edges()) {
        int a = find(e.u);
        int b = find(e.v);
        if (a == b) {
            throw TreeError(TreeError::Kind::HasCycle,
                            "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " closes a cycle");
        }
        parent[a] = b;
    }
    if (g.size() != n - 1) throw TreeError(TreeError::Kind::NotConnected, "graph is not connected");
    return Tree(std::move(g));
}

Tree make_tree(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    return validate_tree(Graph(n, edges));
}

const char* to_string(VertexRole role) {
    switch (role) {
        case VertexRole::Leaf: return "leaf";
        case VertexRole::WeakStem: return "weak_stem";
        case VertexRole::StrongStem: return "strong_stem";
        case VertexRole::Loner: return "loner";
    }
    return "?";
}

std::vector<Vertex> VertexClassification::exposed_stems() const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < exposed.size(); ++v) {
        if (exposed[v]) out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

std::vector<Vertex> VertexClassification::with_role(VertexRole r) const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < role.size(); ++v) {
        if (role[v] == r) out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

VertexClassification classify_vertices(const Tree& t) {
    const int n = t.order();
    if (n < 2) throw std::invalid_argument("vertex roles need at least two vertices");
    VertexClassification c;
    c.role.assign(static_cast<std::size_t>(n), VertexRole::Loner);
    c.exposed.assign(static_cast<std::size_t>(n), false);
    c.adjacent_leaves.assign(static_cast<std::size_t>(n), 0);
    c.internal_neighbors.assign(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        if (t.degree(v) == 1) {
            c.role[v] = VertexRole::Leaf;
            continue;
        }
        for (Vertex w : t.neighbors(v)) {
            if (t.degree(w) == 1) {
                ++c.adjacent_leaves[v];
            } else {
                ++c.internal_neighbors[v];
            }
        }
        if (c.adjacent_leaves[v] == 1) {
            c.role[v] = VertexRole::WeakStem;
        } else if (c.adjacent_leaves[v] >= 2) {
            c.role[v] = VertexRole::StrongStem;
        }
        c.exposed[v] = c.is_stem(v) && c.internal_neighbors[v] <= 1;
    }
    return c;
}

namespace {

std::vector<Vertex> centers(const Tree& t) {
    const int n = t.order();
    if (n <= 2) {
        std::vector<Vertex> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        return all;
    }
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<Vertex> next;
        for (Vertex v : layer) {
            for (Vertex w : t.neighbors(v)) {
                if (--deg[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string rooted_code(const Tree& t, Vertex root) {
    const int n = t.order();
    std::vector<Vertex> order;
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    order.reserve(static_cast<std::size_t>(n));
    order.push_back(root);
    parent[root] = root;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Vertex w : t.neighbors(order[i])) {
            if (parent[w] == -1) {
                parent[w] = order[i];
                order.push_back(w);
            }
        }
    }
    std::vector<std::vector<std::string>> child_codes(static_cast<std::size_t>(n));
    std::vector<std::string> code(static_cast<std::size_t>(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        auto& kids = child_codes[v];
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (auto& k : kids) s += k;
        s += ")";
        code[v] = std::move(s);
        if (v != root) child_codes[parent[v]].push_back(code[v]);
    }
    return code[root];
}

}  // namespace

std::string canonical_code(const Tree& t) {
    std::string best;
    for (Vertex c : centers(t)) {
        std::string code = rooted_code(t, c);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

Tree tree_from_prufer(int n, std::span<const int> sequence) {
    if (n < 1) throw std::invalid_argument("tree order must be positive");
    if (n == 1) return validate_tree(Graph(1));
    if (static_cast<int>(sequence.size()) != n - 2) throw std::invalid_argument("Prüfer sequence must have length n - 2");
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : sequence) {
        if (x < 0 || x >= n) throw std::invalid_argument("Prüfer entry out of range");
        ++degree[x];
    }
    std::set<int> leaves;
    for (int v = 0; v < n; ++v) {
        if (degree[v] == 1) leaves.insert(v);
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (int x : sequence) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1) leaves.insert(x);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return validate_tree(Graph(n, edges));
}

namespace {

// Partitions of `total` into at most `parts` non-increasing positive pieces.
void partitions(int total, int max_piece, int parts, std::vector<int>& cur,
                const std::function<void(const std::vector<int>&)>& emit) {
    if (total == 0) {
        emit(cur);
        return;
    }
    if (static_cast<int>(cur.size()) == parts) return;
    for (int piece = std::min(total, max_piece); piece >= 1; --piece) {
        cur.push_back(piece);
        partitions(total - piece, piece, parts, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Tree> enumerate_trees(int n, int max_n) {
    if (n < 1 || n > max_n) {
        throw std::invalid_argument("tree order " + std::to_string(n) + " outside 1.." + std::to_string(max_n));
    }
    if (n == 1) return {validate_tree(Graph(1))};
    // Every isomorphism class has a labeling whose degrees are non-increasing
    // in the label, i.e. whose Prüfer multiplicities are non-increasing. Only
    // those sequences are decoded.
    std::map<std::string, Tree> classes;
    std::vector<int> cur;
    partitions(n - 2, n - 2, n, cur, [&](const std::vector<int>& counts) {
        std::vector<int> seq;
        for (std::size_t v = 0; v < counts.size(); ++v) seq.insert(seq.end(), static_cast<std::size_t>(counts[v]), static_cast<int>(v));
        do {
            Tree t = tree_from_prufer(n, seq);
            std::string code = canonical_code(t);
            classes.try_emplace(std::move(code), std::move(t));
        } while (std::next_permutation(seq.begin(), seq.end()));
    });
    std::vector<Tree> out;
    out.reserve(classes.size());
    for (auto& [code, tree] : classes) out.push_back(std::move(tree));
    return out;
}

Tree random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("tree order must be positive");
    if (n <= 2) return tree_from_prufer(n, {});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (int& x : seq) x = pick(rng);
    return tree_from_prufer(n, seq);
}

Tree relabel(const Tree& t, std::span<const int> perm) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const Edge& e : t.graph().edges()) edges.emplace_back(perm[e.u], perm[e.v]);
    return validate_tree(Graph(t.order(), edges));
}

SubTree induced_subtree(const Tree& t, std::span<const Vertex> kept) {
    std::vector<Vertex> sorted(kept.begin(), kept.end());
    std::sort(sorted.begin(), sorted.end());
    auto sub = induced_subgraph(t.graph(), std::span<const Vertex>(sorted));
    return {validate_tree(std::move(sub.graph)), std::move(sub.to_host)};
}

SubTree induced_subtree(const Tree& t, Mask kept) {
    auto list = mask_to_vertices(kept);
    return induced_subtree(t, std::span<const Vertex>(list));
}

}  // namespace edt
