#include "edt/game.hpp"

#include <algorithm>
#include <sstream>

namespace edt {

std::string to_string(const GuardConfig& c) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (Vertex v : c.vertices()) {
        out << (first ? "" : ",") << v;
        first = false;
    }
    out << '}';
    return out.str();
}

const char* to_string(MoveModel m) { return m == MoveModel::SingleGuard ? "single_guard" : "all_guards"; }

bool is_dominating(const Graph& g, const GuardConfig& c) { return is_dominating_set(g, c.mask()); }

bool single_guard_move_legal(const Graph& g, const GuardConfig& from, const GuardConfig& to, Vertex attack) {
    if (from.size() != to.size() || from.guards(attack) || !to.guards(attack)) return false;
    const Mask left = from.mask() & ~to.mask();
    const Mask arrived = to.mask() & ~from.mask();
    if (popcount(left) != 1 || arrived != bit(attack)) return false;
    return g.adjacent(lowest(left), attack);
}

namespace {

// Kuhn's augmenting paths: guards on the left, target vertices on the right.
bool perfect_stay_or_step_matching(const Graph& g, Mask from, Mask to) {
    const auto guards = mask_to_vertices(from);
    std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);  // target -> guard index
    std::vector<int> visit_stamp(static_cast<std::size_t>(g.order()), -1);
    auto augment = [&](auto&& self, int gi, int stamp) -> bool {
        const Mask reach = g.closed_neighbor_mask(guards[static_cast<std::size_t>(gi)]) & to;
        for (Mask m = reach; m; m &= m - 1) {
            const int t = lowest(m);
            if (visit_stamp[t] == stamp) continue;
            visit_stamp[t] = stamp;
            if (owner[t] == -1 || self(self, owner[t], stamp)) {
                owner[t] = gi;
                return true;
            }
        }
        return false;
    };
    for (int gi = 0; gi < static_cast<int>(guards.size()); ++gi) {
        if (!augment(augment, gi, gi)) return false;
    }
    return true;
}

}  // namespace

bool all_guards_move_legal(const Graph& g, const GuardConfig& from, const GuardConfig& to) {
    if (from.size() != to.size()) return false;
    return perfect_stay_or_step_matching(g, from.mask(), to.mask());
}

std::optional<std::size_t> WinningFamily::index_of(const GuardConfig& c) const {
    auto it = index_.find(c.mask());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<WinningFamily> solve(const Graph& g, MoveModel model, int k, std::uint64_t budget) {
    const int n = g.order();
    if (!g.fits_mask()) throw BudgetExceeded("game solver supports at most 64 vertices");
    if (k < 0 || k > n) throw std::invalid_argument("guard count must lie in 0..n");
    if (binomial(n, k) > budget) {
        throw BudgetExceeded("C(" + std::to_string(n) + ", " + std::to_string(k) + ") = " +
                             std::to_string(binomial(n, k)) + " configurations exceed the budget of " +
                             std::to_string(budget));
    }

    std::vector<Mask> configs;
    std::unordered_map<Mask, int> index;
    for_each_combination(n, k, [&](Mask m) {
        if (is_dominating_set(g, m)) {
            index.emplace(m, static_cast<int>(configs.size()));
            configs.push_back(m);
        }
    });
    if (configs.empty()) return std::nullopt;
    const std::size_t count = configs.size();
    const Mask all = full_mask(n);

    // Legal successors of each config, ascending by index (= lexicographic).
    // Single-guard successors are grouped per attacked vertex.
    std::vector<std::vector<int>> succ(count);
    std::vector<std::vector<std::vector<int>>> succ_by_attack;
    if (model == MoveModel::AllGuards) {
        for (std::size_t i = 0; i < count; ++i) {
            Mask reach = 0;
            for_each_bit(configs[i], [&](int v) { reach |= g.closed_neighbor_mask(v); });
            for_each_subset_of_size(reach, k, [&](Mask cand) {
                auto it = index.find(cand);
                if (it != index.end() && perfect_stay_or_step_matching(g, configs[i], cand)) {
                    succ[i].push_back(it->second);
                }
            });
            std::sort(succ[i].begin(), succ[i].end());
        }
    } else {
        succ_by_attack.resize(count);
        for (std::size_t i = 0; i < count; ++i) {
            succ_by_attack[i].resize(static_cast<std::size_t>(n));
            for (Vertex r = 0; r < n; ++r) {
                if (contains(configs[i], r)) continue;
                auto& list = succ_by_attack[i][static_cast<std::size_t>(r)];
                for_each_bit(configs[i] & g.neighbor_mask(r), [&](int v) {
                    auto it = index.find((configs[i] & ~bit(v)) | bit(r));
                    if (it != index.end()) list.push_back(it->second);
                });
                std::sort(list.begin(), list.end());
            }
        }
    }

    std::vector<char> alive(count, 1);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < count; ++i) {
            if (!alive[i]) continue;
            const Mask need = all & ~configs[i];
            bool ok = true;
            if (model == MoveModel::AllGuards) {
                Mask cover = 0;
                for (int j : succ[i]) {
                    if (alive[j]) cover |= configs[j];
                }
                ok = (need & ~cover) == 0;
            } else {
                for_each_bit(need, [&](int r) {
                    if (!ok) return;
                    const auto& list = succ_by_attack[i][static_cast<std::size_t>(r)];
                    ok = std::any_of(list.begin(), list.end(), [&](int j) { return alive[j] != 0; });
                });
            }
            if (!ok) {
                alive[i] = 0;
                changed = true;
            }
        }
    }
    if (std::none_of(alive.begin(), alive.end(), [](char a) { return a != 0; })) return std::nullopt;

    WinningFamily f;
    f.host_ = g;
    f.guards_ = k;
    f.model_ = model;
    std::vector<int> remap(count, -1);
    for (std::size_t i = 0; i < count; ++i) {
        if (!alive[i]) continue;
        remap[i] = static_cast<int>(f.configs_.size());
        f.index_.emplace(configs[i], f.configs_.size());
        f.configs_.emplace_back(configs[i]);
    }
    f.responses_.assign(f.configs_.size(), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (std::size_t i = 0; i < count; ++i) {
        if (!alive[i]) continue;
        auto& row = f.responses_[static_cast<std::size_t>(remap[i])];
        for_each_bit(all & ~configs[i], [&](int r) {
            const auto& list = model == MoveModel::AllGuards ? succ[i] : succ_by_attack[i][static_cast<std::size_t>(r)];
            for (int j : list) {
                if (alive[j] && contains(configs[j], r)) {
                    row[static_cast<std::size_t>(r)] = remap[j];
                    break;
                }
            }
        });
    }
    return f;
}

int eternal_number(const Graph& g, MoveModel model, int from, std::uint64_t budget) {
    for (int k = std::max(from, 0); k <= g.order(); ++k) {
        if (solve(g, model, k, budget)) return k;
    }
    // k = n always wins: every vertex is guarded, so no attack is possible.
    throw std::logic_error("no winning family up to n guards");
}

GameNumbers eternal_numbers(const Graph& g, std::uint64_t budget) {
    GameNumbers out;
    out.gamma_m_inf = eternal_number(g, MoveModel::AllGuards, domination_number(g), budget);
    out.gamma_inf = eternal_number(g, MoveModel::SingleGuard, out.gamma_m_inf, budget);
    return out;
}

GuardConfig defend(const WinningFamily& f, const GuardConfig& current, Vertex attack) {
    if (attack < 0 || attack >= f.host().order()) throw std::invalid_argument("attacked vertex out of range");
    if (current.guards(attack)) {
        throw std::invalid_argument("vertex " + std::to_string(attack) + " already holds a guard");
    }
    auto idx = f.index_of(current);
    if (!idx) throw std::invalid_argument("configuration " + to_string(current) + " is not in the winning family");
    const int next = f.response_index(*idx, attack);
    if (next < 0) throw std::logic_error("winning family has no response");
    return f.configs()[static_cast<std::size_t>(next)];
}

GuardConfig two_gamma_placement(const Graph& g, const DominatingSet& d) {
    const Mask set = d.mask();
    if (!is_dominating_set(g, set)) throw std::invalid_argument("set is not dominating");
    Mask guards = set;
    for (Vertex v : d.vertices) {
        const Mask priv = external_private_neighbors(g, set, v);
        if (priv) guards |= bit(lowest(priv));
    }
    return GuardConfig(guards);
}

}  // namespace edt
