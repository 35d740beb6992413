#include "edt/neocolon.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <unordered_map>

namespace edt {

bool NeoColonization::has_singleton() const {
    return std::any_of(parts.begin(), parts.end(), [](const auto& p) { return p.size() == 1; });
}

std::vector<int> NeoColonization::part_of(int n) const {
    std::vector<int> out(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (Vertex v : parts[i]) out[v] = static_cast<int>(i);
    }
    return out;
}

namespace {

int weight_of_part(const Graph& g, std::span<const Vertex> part) {
    auto sub = induced_subgraph(g, part);
    const Graph& h = sub.graph;
    const int k = h.order();
    if (h.size() == k * (k - 1) / 2) return 1;
    if (h.size() == k - 1) {  // connected and acyclic
        int leaves = 0;
        for (Vertex v = 0; v < k; ++v) leaves += h.degree(v) == 1 ? 1 : 0;
        return 1 + (k - leaves);
    }
    return 1 + connected_domination_number_search(h);
}

void sort_parts(std::vector<std::vector<Vertex>>& parts) {
    for (auto& p : parts) std::sort(p.begin(), p.end());
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

}  // namespace

NeoColonization make_neocolonization(const Graph& g, std::vector<std::vector<Vertex>> parts) {
    const int n = g.order();
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].empty()) throw std::invalid_argument("empty part");
        for (Vertex v : parts[i]) {
            if (v < 0 || v >= n) throw std::invalid_argument("part vertex out of range");
            if (owner[v] != -1) throw std::invalid_argument("vertex " + std::to_string(v) + " in two parts");
            owner[v] = static_cast<int>(i);
        }
    }
    if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
        throw std::invalid_argument("parts do not cover every vertex");
    }
    sort_parts(parts);
    NeoColonization out;
    for (const auto& p : parts) {
        if (!is_connected(induced_subgraph(g, std::span<const Vertex>(p)).graph)) {
            throw std::invalid_argument("part containing " + std::to_string(p.front()) + " is not connected");
        }
        const int w = weight_of_part(g, p);
        out.part_weights.push_back(w);
        out.total_weight += w;
    }
    out.parts = std::move(parts);
    return out;
}

int part_weight(const Tree& t, std::span<const Vertex> part) {
    if (part.empty()) throw std::invalid_argument("empty part");
    auto sub = induced_subgraph(t.graph(), part);
    if (!is_connected(sub.graph)) throw std::invalid_argument("part does not induce a connected subtree");
    const int k = sub.graph.order();
    if (k <= 2) return 1;
    int internal = 0;
    for (Vertex v = 0; v < k; ++v) internal += sub.graph.degree(v) >= 2 ? 1 : 0;
    return 1 + internal;
}

int part_weight(const Graph& g, Mask part) {
    if (!induces_connected(g, part)) throw std::invalid_argument("part does not induce a connected subgraph");
    if (is_clique(g, part)) return 1;
    return 1 + connected_domination_number_search(induced_subgraph(g, part).graph);
}

// ---------------------------------------------------------------------------
// Rooted DP. The part holding v may stay open toward the parent; its state is
// the size class of the part so far and v's degree inside it:
//   Alone  size 1, v has no part neighbor yet
//   Pair   size 2, v joined to exactly one child (a leaf of the part)
//   Tip    size >= 3, v has one part neighbor (would be a leaf of the part)
//   Inner  size >= 3, v has at least two part neighbors
// The stored value counts closed parts plus the internal vertices of the open
// part other than v. Closing adds 1, or 2 for Inner (v itself is internal).

namespace {

enum State { kAlone = 0, kPair = 1, kTip = 2, kInner = 3 };

constexpr int kInfWeight = std::numeric_limits<int>::max() / 4;

struct Cost {
    int weight = kInfWeight;
    int parts = 0;

    bool finite() const { return weight < kInfWeight; }
    Cost operator+(const Cost& o) const {
        if (!finite() || !o.finite()) return {};
        return {weight + o.weight, parts + o.parts};
    }
};

struct Objective {
    bool allow_singletons = true;
    bool maximize_parts = false;

    bool better(const Cost& a, const Cost& b) const {
        if (!a.finite()) return false;
        if (!b.finite()) return true;
        if (a.weight != b.weight) return a.weight < b.weight;
        return maximize_parts ? a.parts > b.parts : a.parts < b.parts;
    }
};

constexpr State merged_state(State parent, State child) {
    switch (parent) {
        case kAlone: return child == kAlone ? kPair : kTip;
        default: return kInner;
    }
}

Cost close_cost(State s, const Objective& obj) {
    if (s == kAlone && !obj.allow_singletons) return {};
    return {s == kInner ? 2 : 1, 1};
}

struct Decision {
    State prev = kAlone;
    bool merged = false;
    State child_state = kAlone;
};

struct DpOutcome {
    Cost cost;
    NeoColonization partition;
};

DpOutcome run_partition_dp(const Tree& t, const Objective& obj) {
    const int n = t.order();
    std::vector<Vertex> order{0};
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    parent[0] = 0;
    std::vector<std::vector<Vertex>> children(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Vertex w : t.neighbors(order[i])) {
            if (parent[w] == -1) {
                parent[w] = order[i];
                children[order[i]].push_back(w);
                order.push_back(w);
            }
        }
    }

    std::vector<std::array<Cost, 4>> table(static_cast<std::size_t>(n));
    std::vector<State> close_state(static_cast<std::size_t>(n), kAlone);
    std::vector<Cost> close_value(static_cast<std::size_t>(n));
    std::vector<std::vector<std::array<Decision, 4>>> decisions(static_cast<std::size_t>(n));

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex v = *it;
        std::array<Cost, 4> cur{};
        cur[kAlone] = Cost{0, 0};
        decisions[v].resize(children[v].size());
        for (std::size_t ci = 0; ci < children[v].size(); ++ci) {
            const Vertex c = children[v][ci];
            std::array<Cost, 4> next{};
            auto& dec = decisions[v][ci];
            auto offer = [&](State s, Cost value, Decision d) {
                if (obj.better(value, next[s])) {
                    next[s] = value;
                    dec[s] = d;
                }
            };
            for (int sv = 0; sv < 4; ++sv) {
                if (!cur[sv].finite()) continue;
                const auto pv = static_cast<State>(sv);
                offer(pv, cur[sv] + close_value[c], Decision{pv, false, close_state[c]});
                for (int sc = 0; sc < 4; ++sc) {
                    if (!table[c][sc].finite()) continue;
                    const auto pc = static_cast<State>(sc);
                    const Cost internal{pc == kAlone ? 0 : 1, 0};
                    offer(merged_state(pv, pc), cur[sv] + table[c][sc] + internal, Decision{pv, true, pc});
                }
            }
            cur = next;
        }
        table[v] = cur;
        for (int s = 0; s < 4; ++s) {
            const Cost closed = cur[s] + close_cost(static_cast<State>(s), obj);
            if (obj.better(closed, close_value[v])) {
                close_value[v] = closed;
                close_state[v] = static_cast<State>(s);
            }
        }
    }

    DpOutcome out;
    out.cost = close_value[0];
    if (!out.cost.finite()) return out;

    std::vector<int> part(static_cast<std::size_t>(n), -1);
    int next_part = 0;
    struct Frame {
        Vertex v;
        State s;
        int id;
    };
    std::vector<Frame> stack{{0, close_state[0], next_part++}};
    while (!stack.empty()) {
        auto [v, s, id] = stack.back();
        stack.pop_back();
        part[v] = id;
        for (std::size_t ci = children[v].size(); ci-- > 0;) {
            const Decision d = decisions[v][ci][s];
            const Vertex c = children[v][ci];
            if (d.merged) {
                stack.push_back({c, d.child_state, id});
            } else {
                stack.push_back({c, d.child_state, next_part++});
            }
            s = d.prev;
        }
    }
    std::vector<std::vector<Vertex>> parts(static_cast<std::size_t>(next_part));
    for (Vertex v = 0; v < n; ++v) parts[part[v]].push_back(v);
    out.partition = make_neocolonization(t.graph(), std::move(parts));
    if (out.partition.total_weight != out.cost.weight || out.partition.part_count() != out.cost.parts) {
        throw std::logic_error("partition DP reconstruction disagrees with its table");
    }
    return out;
}

}  // namespace

ThetaResult theta_c(const Tree& t) {
    auto r = run_partition_dp(t, Objective{true, false});
    return {r.cost.weight, std::move(r.partition)};
}

FinestResult finest_neocolonization(const Tree& t) {
    if (t.order() < 2) throw std::invalid_argument("finest neo-colonization needs at least two vertices");
    auto r = run_partition_dp(t, Objective{false, true});
    const int theta = theta_c(t).theta;
    if (r.cost.weight != theta) {
        throw std::logic_error("no-singleton minimum weight differs from the unrestricted minimum");
    }
    return {std::move(r.partition), r.cost.parts};
}

// ---------------------------------------------------------------------------
// Exhaustive partition space over vertex masks.

namespace {

class PartitionSpace {
public:
    PartitionSpace(const Graph& g, int limit) : g_(g), n_(g.order()) {
        if (n_ > limit) {
            throw BudgetExceeded("partition enumeration limited to " + std::to_string(limit) + " vertices");
        }
        const std::size_t size = std::size_t{1} << n_;
        weight_.assign(size, kInfWeight);
        for (Mask m = 1; m < size; ++m) {
            if (induces_connected(g, m)) weight_[m] = part_weight(g, m);
        }
    }

    int weight(Mask m) const { return weight_[m]; }

    /// Minimum total weight of partitions of `mask` (optionally without singletons).
    int best(Mask mask, bool allow_singletons) {
        if (mask == 0) return 0;
        auto& memo = allow_singletons ? memo_ : memo_no_singletons_;
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        const Mask low = bit(lowest(mask));
        const Mask rest = mask & ~low;
        int result = kInfWeight;
        for (Mask sub = rest;; sub = (sub - 1) & rest) {
            const Mask part = sub | low;
            if (weight_[part] < kInfWeight && (allow_singletons || part != low)) {
                const int tail = best(mask & ~part, allow_singletons);
                if (tail < kInfWeight) result = std::min(result, weight_[part] + tail);
            }
            if (sub == 0) break;
        }
        memo.emplace(mask, result);
        return result;
    }

    /// Every partition of `mask` achieving best(mask).
    void enumerate_best(Mask mask, bool allow_singletons, std::vector<Mask>& prefix,
                        std::vector<std::vector<Mask>>& out) {
        if (mask == 0) {
            out.push_back(prefix);
            return;
        }
        const int target = best(mask, allow_singletons);
        const Mask low = bit(lowest(mask));
        const Mask rest = mask & ~low;
        for (Mask sub = rest;; sub = (sub - 1) & rest) {
            const Mask part = sub | low;
            if (weight_[part] < kInfWeight && (allow_singletons || part != low)) {
                const int tail = best(mask & ~part, allow_singletons);
                if (tail < kInfWeight && weight_[part] + tail == target) {
                    prefix.push_back(part);
                    enumerate_best(mask & ~part, allow_singletons, prefix, out);
                    prefix.pop_back();
                }
            }
            if (sub == 0) break;
        }
    }

    NeoColonization to_neocolonization(const std::vector<Mask>& masks) const {
        std::vector<std::vector<Vertex>> parts;
        for (Mask m : masks) parts.push_back(mask_to_vertices(m));
        sort_parts(parts);
        NeoColonization out;
        for (const auto& p : parts) {
            const int w = weight_[vertices_to_mask(p)];
            out.part_weights.push_back(w);
            out.total_weight += w;
        }
        out.parts = std::move(parts);
        return out;
    }

    int order() const { return n_; }

private:
    const Graph& g_;
    int n_;
    std::vector<int> weight_;
    std::unordered_map<Mask, int> memo_;
    std::unordered_map<Mask, int> memo_no_singletons_;
};

}  // namespace

int theta_c_oracle(const Graph& g) {
    if (g.order() == 0) return 0;
    PartitionSpace space(g, kPartitionOracleLimit);
    return space.best(full_mask(g.order()), true);
}

std::vector<NeoColonization> min_weight_neocolonizations(const Graph& g) {
    PartitionSpace space(g, kPartitionEnumerationLimit);
    std::vector<Mask> prefix;
    std::vector<std::vector<Mask>> raw;
    space.enumerate_best(full_mask(g.order()), true, prefix, raw);
    std::vector<NeoColonization> out;
    out.reserve(raw.size());
    for (const auto& r : raw) out.push_back(space.to_neocolonization(r));
    return out;
}

std::vector<NeoColonization> all_finest_neocolonizations(const Tree& t) {
    if (t.order() < 2) throw std::invalid_argument("finest neo-colonization needs at least two vertices");
    auto all = min_weight_neocolonizations(t.graph());
    std::vector<NeoColonization> finest;
    int best_k = 0;
    for (auto& p : all) {
        if (p.has_singleton()) continue;
        if (p.part_count() > best_k) {
            best_k = p.part_count();
            finest.clear();
        }
        if (p.part_count() == best_k) finest.push_back(std::move(p));
    }
    return finest;
}

NeoColonization normalize_no_singletons(const Tree& t, const NeoColonization& p) {
    const int n = t.order();
    if (n < 2) throw std::invalid_argument("normalization needs at least two vertices");
    std::vector<std::vector<Vertex>> parts = p.parts;
    for (;;) {
        auto single = std::find_if(parts.begin(), parts.end(), [](const auto& q) { return q.size() == 1; });
        if (single == parts.end()) break;
        const Vertex x = single->front();
        const std::size_t si = static_cast<std::size_t>(single - parts.begin());
        std::vector<int> owner(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            for (Vertex v : parts[i]) owner[v] = static_cast<int>(i);
        }
        // Absorbing x into part j changes the total by w(P_j + x) - w(P_j) - 1.
        int best_delta = std::numeric_limits<int>::max();
        std::size_t target = parts.size();
        for (Vertex w : t.neighbors(x)) {
            const auto j = static_cast<std::size_t>(owner[w]);
            std::vector<Vertex> grown = parts[j];
            grown.push_back(x);
            const int delta = part_weight(t, grown) - part_weight(t, parts[j]) - 1;
            if (delta < best_delta || (delta == best_delta && j < target)) {
                best_delta = delta;
                target = j;
            }
        }
        if (target == parts.size() || best_delta > 0) {
            throw std::invalid_argument("singleton {" + std::to_string(x) +
                                        "} cannot be absorbed without raising the weight; input is not minimum");
        }
        parts[target].push_back(x);
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(si));
    }
    return make_neocolonization(t.graph(), std::move(parts));
}

DominatingSetPartition dominating_set_partition(const Tree& t, const DominatingSet& d) {
    const int n = t.order();
    std::vector<int> center_index(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < d.vertices.size(); ++i) {
        const Vertex c = d.vertices[i];
        if (c < 0 || c >= n || center_index[c] != -1) throw std::invalid_argument("malformed dominating set");
        center_index[c] = static_cast<int>(i);
    }
    if (d.size() != domination_number(t)) throw std::invalid_argument("dominating set is not minimum");
    std::vector<std::vector<Vertex>> parts(d.vertices.size());
    for (std::size_t i = 0; i < d.vertices.size(); ++i) parts[i].push_back(d.vertices[i]);
    for (Vertex v = 0; v < n; ++v) {
        if (center_index[v] != -1) continue;
        int chosen = -1;
        for (Vertex w : t.neighbors(v)) {  // ascending, so the first hit is the smallest center
            if (center_index[w] != -1) {
                chosen = center_index[w];
                break;
            }
        }
        if (chosen < 0) throw std::invalid_argument("set does not dominate vertex " + std::to_string(v));
        parts[static_cast<std::size_t>(chosen)].push_back(v);
    }
    DominatingSetPartition out;
    out.fat = std::all_of(parts.begin(), parts.end(), [](const auto& q) { return q.size() >= 3; });
    out.partition = make_neocolonization(t.graph(), parts);
    for (const auto& q : out.partition.parts) {
        for (Vertex v : q) {
            if (center_index[v] != -1) out.centers.push_back(v);
        }
    }
    return out;
}

namespace {

// Leaves of the subtree induced by one part; both ends of a K_2 count.
std::vector<Vertex> part_leaves(const Tree& t, const std::vector<Vertex>& part) {
    if (part.size() == 1) return part;
    std::vector<Vertex> out;
    for (Vertex v : part) {
        int d = 0;
        for (Vertex w : t.neighbors(v)) d += std::binary_search(part.begin(), part.end(), w) ? 1 : 0;
        if (d <= 1) out.push_back(v);
    }
    return out;
}

std::vector<Edge> crossing_edges(const Tree& t, const NeoColonization& p) {
    auto owner = p.part_of(t.order());
    std::vector<Edge> out;
    for (const Edge& e : t.graph().edges()) {
        if (owner[e.u] != owner[e.v]) out.push_back(e);
    }
    return out;
}

}  // namespace

std::optional<SpanningForestWitness> spanning_forest_witness(const Tree& t) {
    if (t.order() < 2) throw std::invalid_argument("spanning forest witness needs at least two vertices");
    const int theta = theta_c(t).theta;
    if (theta >= connected_domination_number(t) + 1) return std::nullopt;

    SpanningForestWitness w;
    w.partition = finest_neocolonization(t).partition;
    const auto roles = classify_vertices(t);
    for (const auto& part : w.partition.parts) {
        (part.size() == 2 ? w.r : w.k) += 1;
        for (Vertex v : part_leaves(t, part)) {
            if (roles.role[v] == VertexRole::Loner) w.loners_as_leaves.push_back(v);
        }
    }
    std::sort(w.loners_as_leaves.begin(), w.loners_as_leaves.end());
    w.deleted_edges = crossing_edges(t, w.partition);
    return w;
}

std::string verify_spanning_forest_witness(const Tree& t, const SpanningForestWitness& w) {
    const int n = t.order();
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    int k = 0;
    int r = 0;
    for (const auto& part : w.partition.parts) {
        if (part.empty()) return "empty piece";
        for (Vertex v : part) {
            if (v < 0 || v >= n) return "vertex out of range";
            ++seen[v];
        }
        if (part.size() == 1) return "piece of size one";
        if (!is_connected(induced_subgraph(t.graph(), std::span<const Vertex>(part)).graph)) {
            return "piece is not a subtree";
        }
        (part.size() == 2 ? r : k) += 1;
    }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) return "pieces do not partition V";
    if (k != w.k || r != w.r) return "piece counts do not match k and r";

    const auto roles = classify_vertices(t);
    int loners = 0;
    for (const auto& part : w.partition.parts) {
        std::vector<Vertex> sorted = part;
        std::sort(sorted.begin(), sorted.end());
        for (Vertex v : part_leaves(t, sorted)) loners += roles.role[v] == VertexRole::Loner ? 1 : 0;
    }
    if (loners < k) return "fewer than k loners are leaves of the pieces";
    if (static_cast<int>(w.loners_as_leaves.size()) != loners) return "listed loner leaves are incomplete";

    std::vector<Edge> expected;
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < w.partition.parts.size(); ++i) {
        for (Vertex v : w.partition.parts[i]) owner[v] = static_cast<int>(i);
    }
    for (const Edge& e : t.graph().edges()) {
        if (owner[e.u] != owner[e.v]) expected.push_back(e);
    }
    if (expected != w.deleted_edges) return "deleted edge set does not separate the pieces";
    // Deleting exactly those edges leaves n - |deleted| edges in k + r components.
    if (t.graph().size() - static_cast<int>(expected.size()) != n - (k + r)) return "pieces are not a spanning forest";
    return {};
}

}  // namespace edt
