#ifndef EDT_INVARIANTS_HPP
#define EDT_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "edt/graph.hpp"
#include "edt/tree.hpp"

namespace edt {

inline constexpr int kDominationSearchLimit = 20;
inline constexpr int kIndependenceSearchLimit = 24;
inline constexpr int kConnectedDominationSearchLimit = 20;

struct DominatingSet {
    std::vector<Vertex> vertices;  // ascending

    int size() const { return static_cast<int>(vertices.size()); }
    Mask mask() const { return vertices_to_mask(vertices); }
    friend bool operator==(const DominatingSet&, const DominatingSet&) = default;
    friend auto operator<=>(const DominatingSet&, const DominatingSet&) = default;
};

/// Exact domination number. Forest components use a linear tree DP; other
/// components fall back to subset search and throw BudgetExceeded above
/// kDominationSearchLimit vertices.
int domination_number(const Graph& g);
int domination_number(const Tree& t);

/// All minimum dominating sets, lexicographically sorted.
std::vector<DominatingSet> enumerate_min_dominating_sets(const Graph& g);

/// n - leaves for n >= 3; 1 for K_1 and K_2.
int connected_domination_number(const Tree& t);

/// Exhaustive connected domination number for small connected graphs.
int connected_domination_number_search(const Graph& g);

/// Exact independence number (tree DP, else branch and bound).
int independence_number(const Graph& g);
int independence_number(const Tree& t);

/// Outcome of repeatedly stripping an exposed stem with its leaves.
struct StarPartition {
    std::vector<std::vector<Vertex>> parts;  // removal order; the last part is the final star
    std::vector<int> part_beta;
    int total = 0;
};

/// Deterministic order: exposed stem of maximum eccentricity in the remaining
/// tree, ties to the smallest id. With a seed, the stem is drawn uniformly.
StarPartition beta_via_star_partition(const Tree& t, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// {v outside X : v adjacent to x and to no other member of X}. Requires x in X.
std::vector<Vertex> external_private_neighbors(const Graph& g, std::span<const Vertex> set, Vertex x);
Mask external_private_neighbors(const Graph& g, Mask set, Vertex x);

struct DominationLabeling {
    std::vector<int> label;         // |N[x] ∩ D|
    std::vector<Vertex> f1_vertices;  // label == 1
    InducedSubgraph f1;             // subgraph induced by f1_vertices
    std::vector<Vertex> l2;         // label == 2
};

/// Throws std::invalid_argument if D does not dominate g.
DominationLabeling domination_labeling(const Graph& g, const DominatingSet& d);

struct InvariantBundle {
    int gamma = 0;
    int gamma_c = 0;
    int beta = 0;
    int half_ceil = 0;
};

InvariantBundle compute_invariants(const Tree& t);

}  // namespace edt

#endif
