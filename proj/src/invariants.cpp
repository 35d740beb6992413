#include "edt/invariants.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace edt {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;
constexpr std::uint64_t kMinDominatingEnumerationBudget = 4'000'000;

// Parent-before-child order of a connected acyclic graph rooted at 0.
struct RootedOrder {
    std::vector<Vertex> order;
    std::vector<Vertex> parent;
};

RootedOrder root_at_zero(const Graph& g) {
    RootedOrder r;
    r.parent.assign(static_cast<std::size_t>(g.order()), -1);
    r.order.push_back(0);
    r.parent[0] = 0;
    for (std::size_t i = 0; i < r.order.size(); ++i) {
        for (Vertex w : g.neighbors(r.order[i])) {
            if (r.parent[w] == -1) {
                r.parent[w] = r.order[i];
                r.order.push_back(w);
            }
        }
    }
    return r;
}

int tree_domination_dp(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    auto [order, parent] = root_at_zero(g);
    // in: v in D. dom: v outside D, dominated by a child. need: v outside D, not yet dominated.
    std::vector<int> in(static_cast<std::size_t>(n), 1);
    std::vector<int> dom(static_cast<std::size_t>(n), 0);
    std::vector<int> need(static_cast<std::size_t>(n), 0);
    std::vector<int> dom_extra(static_cast<std::size_t>(n), kInf);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        if (dom_extra[v] == kInf) dom[v] = kInf;  // leaf of the rooting, or no child could be forced in
        else dom[v] += dom_extra[v];
        if (v == 0) break;
        Vertex p = parent[v];
        in[p] += std::min({in[v], dom[v], need[v]});
        const int best = std::min(in[v], dom[v]);
        dom[p] = (dom[p] >= kInf || best >= kInf) ? kInf : dom[p] + best;
        dom_extra[p] = std::min(dom_extra[p], in[v] - best);
        need[p] = (need[p] >= kInf || dom[v] >= kInf) ? kInf : need[p] + dom[v];
    }
    return std::min(in[0], dom[0]);
}

int tree_independence_dp(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    auto [order, parent] = root_at_zero(g);
    std::vector<int> inc(static_cast<std::size_t>(n), 1);
    std::vector<int> exc(static_cast<std::size_t>(n), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        if (v == 0) break;
        Vertex p = parent[v];
        inc[p] += exc[v];
        exc[p] += std::max(inc[v], exc[v]);
    }
    return std::max(inc[0], exc[0]);
}

int domination_search(const Graph& g) {
    const int n = g.order();
    if (n > kDominationSearchLimit) {
        throw BudgetExceeded("domination number search limited to " + std::to_string(kDominationSearchLimit) +
                             " vertices per non-tree component");
    }
    for (int k = 0; k <= n; ++k) {
        bool found = false;
        for_each_combination(n, k, [&](Mask m) {
            if (is_dominating_set(g, m)) found = true;
            return !found;
        });
        if (found) return k;
    }
    return n;
}

int mis_search(const Graph& g, Mask alive) {
    if (alive == 0) return 0;
    int pick = -1;
    int pick_deg = -1;
    for (Mask m = alive; m; m &= m - 1) {
        const int v = lowest(m);
        const int d = popcount(g.neighbor_mask(v) & alive);
        if (d <= 1) return 1 + mis_search(g, alive & ~g.closed_neighbor_mask(v));
        if (d > pick_deg) {
            pick = v;
            pick_deg = d;
        }
    }
    return std::max(mis_search(g, alive & ~bit(pick)), 1 + mis_search(g, alive & ~g.closed_neighbor_mask(pick)));
}

template <typename PerComponent>
int sum_over_components(const Graph& g, PerComponent&& fn) {
    const auto labels = component_labels(g);
    const int count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    int total = 0;
    for (int c = 0; c < count; ++c) {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (labels[v] == c) members.push_back(v);
        }
        total += fn(induced_subgraph(g, std::span<const Vertex>(members)).graph);
    }
    return total;
}

bool is_acyclic_connected(const Graph& g) { return g.size() == g.order() - 1; }

}  // namespace

int domination_number(const Graph& g) {
    return sum_over_components(g, [](const Graph& c) {
        return is_acyclic_connected(c) ? tree_domination_dp(c) : domination_search(c);
    });
}

int domination_number(const Tree& t) { return tree_domination_dp(t.graph()); }

std::vector<DominatingSet> enumerate_min_dominating_sets(const Graph& g) {
    const int n = g.order();
    if (!g.fits_mask()) throw BudgetExceeded("minimum dominating set enumeration needs at most 64 vertices");
    const int gamma = domination_number(g);
    if (binomial(n, gamma) > kMinDominatingEnumerationBudget) {
        throw BudgetExceeded("too many candidate sets to enumerate minimum dominating sets");
    }
    std::vector<DominatingSet> out;
    for_each_combination(n, gamma, [&](Mask m) {
        if (is_dominating_set(g, m)) out.push_back(DominatingSet{mask_to_vertices(m)});
    });
    return out;
}

int connected_domination_number(const Tree& t) {
    if (t.order() <= 2) return 1;
    return t.order() - t.leaf_count();
}

int connected_domination_number_search(const Graph& g) {
    const int n = g.order();
    if (!is_connected(g)) throw std::invalid_argument("connected domination needs a connected graph");
    if (n > kConnectedDominationSearchLimit) {
        throw BudgetExceeded("connected domination search limited to " +
                             std::to_string(kConnectedDominationSearchLimit) + " vertices");
    }
    for (int k = 1; k <= n; ++k) {
        bool found = false;
        for_each_combination(n, k, [&](Mask m) {
            if (is_dominating_set(g, m) && induces_connected(g, m)) found = true;
            return !found;
        });
        if (found) return k;
    }
    return n;
}

int independence_number(const Graph& g) {
    return sum_over_components(g, [](const Graph& c) {
        if (is_acyclic_connected(c)) return tree_independence_dp(c);
        if (c.order() > kIndependenceSearchLimit) {
            throw BudgetExceeded("independence number search limited to " +
                                 std::to_string(kIndependenceSearchLimit) + " vertices per non-tree component");
        }
        return mis_search(c, full_mask(c.order()));
    });
}

int independence_number(const Tree& t) { return tree_independence_dp(t.graph()); }

StarPartition beta_via_star_partition(const Tree& t, std::optional<std::uint64_t> shuffle_seed) {
    const int n = t.order();
    if (n < 2) throw std::invalid_argument("star partition needs at least two vertices");
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    int remaining = n;
    std::mt19937_64 rng(shuffle_seed.value_or(0));
    StarPartition out;

    auto alive_degree = [&](Vertex v) {
        int d = 0;
        for (Vertex w : t.neighbors(v)) d += alive[w] ? 1 : 0;
        return d;
    };
    auto alive_eccentricity = [&](Vertex s) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::vector<Vertex> queue{s};
        dist[s] = 0;
        int ecc = 0;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            Vertex v = queue[i];
            ecc = std::max(ecc, dist[v]);
            for (Vertex w : t.neighbors(v)) {
                if (alive[w] && dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        return ecc;
    };

    for (;;) {
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (Vertex v = 0; v < n; ++v) {
            if (alive[v]) deg[v] = alive_degree(v);
        }
        // Final star (or a lone vertex, which cannot arise from n >= 2).
        Vertex hub = -1;
        for (Vertex v = 0; v < n && hub < 0; ++v) {
            if (alive[v] && deg[v] == remaining - 1) hub = v;
        }
        if (hub >= 0) {
            std::vector<Vertex> part;
            for (Vertex v = 0; v < n; ++v) {
                if (alive[v]) part.push_back(v);
            }
            const int beta = remaining == 1 ? 1 : remaining - 1;
            out.parts.push_back(std::move(part));
            out.part_beta.push_back(beta);
            out.total += beta;
            break;
        }
        std::vector<Vertex> exposed;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[v] || deg[v] < 2) continue;
            int leaves = 0;
            int internal = 0;
            for (Vertex w : t.neighbors(v)) {
                if (!alive[w]) continue;
                (deg[w] == 1 ? leaves : internal) += 1;
            }
            if (leaves >= 1 && internal <= 1) exposed.push_back(v);
        }
        if (exposed.empty()) throw std::logic_error("non-star tree without an exposed stem");
        Vertex stem = exposed.front();
        if (shuffle_seed) {
            std::uniform_int_distribution<std::size_t> pick(0, exposed.size() - 1);
            stem = exposed[pick(rng)];
        } else {
            int best = -1;
            for (Vertex v : exposed) {
                const int ecc = alive_eccentricity(v);
                if (ecc > best) {
                    best = ecc;
                    stem = v;
                }
            }
        }
        std::vector<Vertex> part{stem};
        for (Vertex w : t.neighbors(stem)) {
            if (alive[w] && deg[w] == 1) part.push_back(w);
        }
        std::sort(part.begin(), part.end());
        const int beta = static_cast<int>(part.size()) - 1;
        for (Vertex v : part) alive[v] = false;
        remaining -= static_cast<int>(part.size());
        out.parts.push_back(std::move(part));
        out.part_beta.push_back(beta);
        out.total += beta;
    }
    return out;
}

Mask external_private_neighbors(const Graph& g, Mask set, Vertex x) {
    if (!contains(set, x)) throw std::invalid_argument("vertex is not a member of the set");
    Mask others = 0;
    for_each_bit(set & ~bit(x), [&](int v) { others |= g.neighbor_mask(v); });
    return g.neighbor_mask(x) & ~set & ~others;
}

std::vector<Vertex> external_private_neighbors(const Graph& g, std::span<const Vertex> set, Vertex x) {
    if (std::find(set.begin(), set.end(), x) == set.end()) {
        throw std::invalid_argument("vertex is not a member of the set");
    }
    std::vector<bool> in_set(static_cast<std::size_t>(g.order()), false);
    for (Vertex v : set) in_set[v] = true;
    std::vector<Vertex> out;
    for (Vertex v : g.neighbors(x)) {
        if (in_set[v]) continue;
        bool other = false;
        for (Vertex w : g.neighbors(v)) {
            if (w != x && in_set[w]) other = true;
        }
        if (!other) out.push_back(v);
    }
    return out;
}

DominationLabeling domination_labeling(const Graph& g, const DominatingSet& d) {
    const int n = g.order();
    std::vector<bool> in_d(static_cast<std::size_t>(n), false);
    for (Vertex v : d.vertices) in_d[v] = true;
    DominationLabeling out;
    out.label.assign(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        int count = in_d[v] ? 1 : 0;
        for (Vertex w : g.neighbors(v)) count += in_d[w] ? 1 : 0;
        if (count == 0) throw std::invalid_argument("set does not dominate vertex " + std::to_string(v));
        out.label[v] = count;
        if (count == 1) out.f1_vertices.push_back(v);
        if (count == 2) out.l2.push_back(v);
    }
    out.f1 = induced_subgraph(g, std::span<const Vertex>(out.f1_vertices));
    return out;
}

InvariantBundle compute_invariants(const Tree& t) {
    return InvariantBundle{domination_number(t), connected_domination_number(t), independence_number(t),
                           (t.order() + 1) / 2};
}

}  // namespace edt
