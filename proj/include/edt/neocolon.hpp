#ifndef EDT_NEOCOLON_HPP
#define EDT_NEOCOLON_HPP

#include <optional>
#include <vector>

#include "edt/graph.hpp"
#include "edt/invariants.hpp"
#include "edt/tree.hpp"

namespace edt {

inline constexpr int kPartitionOracleLimit = 12;
inline constexpr int kPartitionEnumerationLimit = 10;

/// A partition of V into parts inducing connected subgraphs. A part weighs 1
/// when it induces a clique and 1 + γ_c of the induced subgraph otherwise.
struct NeoColonization {
    std::vector<std::vector<Vertex>> parts;  // each ascending, ordered by smallest member
    std::vector<int> part_weights;
    int total_weight = 0;

    int part_count() const { return static_cast<int>(parts.size()); }
    bool has_singleton() const;
    /// Part index per vertex.
    std::vector<int> part_of(int n) const;

    friend bool operator==(const NeoColonization&, const NeoColonization&) = default;
};

/// Validates and weighs a partition. Throws std::invalid_argument if the parts
/// do not partition V or a part is disconnected.
NeoColonization make_neocolonization(const Graph& g, std::vector<std::vector<Vertex>> parts);

/// Weight of one connected part of a tree: 1 for K_1/K_2, else 1 + internal
/// vertices of the induced subtree.
int part_weight(const Tree& t, std::span<const Vertex> part);

/// General-graph part weight with a pairwise clique test and exhaustive γ_c.
int part_weight(const Graph& g, Mask part);

struct ThetaResult {
    int theta = 0;
    NeoColonization witness;
};

/// Minimum neo-colonization weight of a tree by rooted-tree DP.
ThetaResult theta_c(const Tree& t);

/// Exhaustive minimum over all connected partitions; n <= kPartitionOracleLimit.
int theta_c_oracle(const Graph& g);

/// Merges singleton parts into a neighboring part whenever that does not raise
/// the weight. Throws std::invalid_argument if a singleton cannot be absorbed.
NeoColonization normalize_no_singletons(const Tree& t, const NeoColonization& p);

struct FinestResult {
    NeoColonization partition;
    int parts = 0;
};

/// Minimum weight, no singleton parts, maximum number of parts. Needs n >= 2.
FinestResult finest_neocolonization(const Tree& t);

/// Every minimum-weight neo-colonization; n <= kPartitionEnumerationLimit.
std::vector<NeoColonization> min_weight_neocolonizations(const Graph& g);

/// Every finest neo-colonization of a tree; n <= kPartitionEnumerationLimit.
std::vector<NeoColonization> all_finest_neocolonizations(const Tree& t);

/// Stars centered at the members of a minimum dominating set.
struct DominatingSetPartition {
    NeoColonization partition;
    std::vector<Vertex> centers;  // centers[i] is the center of partition.parts[i]
    bool fat = false;             // every part has at least three vertices
};

/// Non-members join their smallest-id neighbor in D. Throws if D is not a
/// minimum dominating set.
DominatingSetPartition dominating_set_partition(const Tree& t, const DominatingSet& d);

/// Partition into r K_2's and k subtrees on >= 3 vertices with at least k
/// loners of the host tree appearing as leaves of the pieces.
struct SpanningForestWitness {
    NeoColonization partition;
    int k = 0;
    int r = 0;
    std::vector<Vertex> loners_as_leaves;
    std::vector<Edge> deleted_edges;
};

/// Present iff θ_c(t) < γ_c(t) + 1. Needs n >= 2.
std::optional<SpanningForestWitness> spanning_forest_witness(const Tree& t);

/// Re-checks a witness from scratch against the tree; the empty string means
/// valid, anything else is the reason it was rejected.
std::string verify_spanning_forest_witness(const Tree& t, const SpanningForestWitness& w);

}  // namespace edt

#endif
