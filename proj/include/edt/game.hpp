#ifndef EDT_GAME_HPP
#define EDT_GAME_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "edt/graph.hpp"
#include "edt/invariants.hpp"

namespace edt {

/// Guarded vertices, one guard per vertex. Hosts have at most 64 vertices.
class GuardConfig {
public:
    GuardConfig() = default;
    explicit GuardConfig(Mask guarded) : guarded_(guarded) {}
    static GuardConfig of(std::initializer_list<Vertex> vs) { return GuardConfig(vertices_to_mask(vs)); }
    static GuardConfig of(std::span<const Vertex> vs) { return GuardConfig(vertices_to_mask(vs)); }

    Mask mask() const { return guarded_; }
    int size() const { return popcount(guarded_); }
    bool guards(Vertex v) const { return contains(guarded_, v); }
    std::vector<Vertex> vertices() const { return mask_to_vertices(guarded_); }

    friend bool operator==(const GuardConfig&, const GuardConfig&) = default;
    /// Lexicographic on sorted vertex lists.
    friend bool operator<(const GuardConfig& a, const GuardConfig& b) { return lex_less(a.guarded_, b.guarded_); }

private:
    Mask guarded_ = 0;
};

std::string to_string(const GuardConfig& c);

enum class MoveModel { SingleGuard, AllGuards };

const char* to_string(MoveModel m);

inline constexpr std::uint64_t kDefaultConfigBudget = 5'000'000;

bool is_dominating(const Graph& g, const GuardConfig& c);

/// D' = D - {v} + {r} for some guard v adjacent to r, with r unguarded in D.
bool single_guard_move_legal(const Graph& g, const GuardConfig& from, const GuardConfig& to, Vertex attack);

/// Some matching sends every guard of D to a distinct vertex of D', each
/// either staying put or crossing one edge.
bool all_guards_move_legal(const Graph& g, const GuardConfig& from, const GuardConfig& to);

/// Defender strategy closed under every attack: configs are dominating and
/// each (config, unguarded attack) has a legal response inside the family.
class WinningFamily {
public:
    const Graph& host() const { return host_; }
    int guards() const { return guards_; }
    MoveModel model() const { return model_; }
    const std::vector<GuardConfig>& configs() const { return configs_; }  // lexicographic

    std::optional<std::size_t> index_of(const GuardConfig& c) const;
    bool contains(const GuardConfig& c) const { return index_of(c).has_value(); }

    /// Response index for config i under attack r, or -1 if r is guarded.
    int response_index(std::size_t config, Vertex attack) const {
        return responses_[config][static_cast<std::size_t>(attack)];
    }

private:
    friend std::optional<WinningFamily> solve(const Graph&, MoveModel, int, std::uint64_t);

    Graph host_;
    int guards_ = 0;
    MoveModel model_ = MoveModel::AllGuards;
    std::vector<GuardConfig> configs_;
    std::vector<std::vector<int>> responses_;
    std::unordered_map<Mask, std::size_t> index_;
};

/// Greatest fixpoint over dominating k-configurations. Empty fixpoint gives
/// nullopt. Throws BudgetExceeded if C(n, k) exceeds the budget.
std::optional<WinningFamily> solve(const Graph& g, MoveModel model, int k,
                                   std::uint64_t budget = kDefaultConfigBudget);

/// Smallest k with a winning family, searched upward from `from`.
int eternal_number(const Graph& g, MoveModel model, int from, std::uint64_t budget = kDefaultConfigBudget);

struct GameNumbers {
    int gamma_inf = 0;
    int gamma_m_inf = 0;
};

GameNumbers eternal_numbers(const Graph& g, std::uint64_t budget = kDefaultConfigBudget);

/// The family's response to an attack. Throws std::invalid_argument if the
/// attacked vertex is guarded or current is not a family member.
GuardConfig defend(const WinningFamily& f, const GuardConfig& current, Vertex attack);

/// Guards on D plus one external private neighbor (smallest id) of every
/// member that has one.
GuardConfig two_gamma_placement(const Graph& g, const DominatingSet& d);

}  // namespace edt

#endif
