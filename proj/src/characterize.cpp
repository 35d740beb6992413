#include "edt/characterize.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace edt {

const char* to_string(GameSource s) { return s == GameSource::Solver ? "solver" : "theta_c"; }

GameReference reference_game_numbers(const Tree& t, const ClassifyOptions& opts) {
    GameReference ref;
    if (!opts.use_solver) {
        ref.note = "solver disabled";
    } else if (t.order() > opts.solver_max_n) {
        ref.note = "order " + std::to_string(t.order()) + " above the solver limit " +
                   std::to_string(opts.solver_max_n);
    } else {
        try {
            ref.solver = eternal_numbers(t, opts.budget);
            ref.gamma_m_inf = ref.solver->gamma_m_inf;
            ref.source = GameSource::Solver;
            return ref;
        } catch (const BudgetExceeded& e) {
            ref.note = e.what();
        }
    }
    ref.gamma_m_inf = theta_c(t).theta;
    ref.source = GameSource::ThetaC;
    return ref;
}

// ---------------------------------------------------------------- corona

std::optional<std::vector<std::pair<Vertex, Vertex>>> corona_matching(const Tree& t) {
    const int n = t.order();
    if (n < 2 || n % 2 != 0) return std::nullopt;
    if (n == 2) return std::vector<std::pair<Vertex, Vertex>>{{0, 1}};
    if (t.leaf_count() != n / 2) return std::nullopt;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 0; v < n; ++v) {
        if (t.is_leaf(v)) continue;
        Vertex pendant = -1;
        int leaves = 0;
        for (Vertex w : t.neighbors(v)) {
            if (t.is_leaf(w)) {
                ++leaves;
                pendant = w;
            }
        }
        if (leaves != 1) return std::nullopt;
        pairs.emplace_back(v, pendant);
    }
    return pairs;
}

bool is_corona(const Tree& t) { return corona_matching(t).has_value(); }

GammaEqualityVerdict check_gamma_equality(const Tree& t, const GameReference& ref) {
    GammaEqualityVerdict v;
    v.gamma = domination_number(t);
    v.gamma_m_inf = ref.gamma_m_inf;
    if (auto m = corona_matching(t)) {
        v.corona = true;
        v.matching = std::move(*m);
    }
    return v;
}

GammaEqualityVerdict check_gamma_equality(const Tree& t) { return check_gamma_equality(t, reference_game_numbers(t)); }

// ---------------------------------------------------------------- EWS

EwsResult apply_ews(const Tree& t, Vertex stem) {
    if (stem < 0 || stem >= t.order()) throw std::invalid_argument("vertex out of range");
    if (t.order() < 3) throw std::invalid_argument("trees on fewer than three vertices have no exposed stems");
    const auto cls = classify_vertices(t);
    if (cls.role[stem] != VertexRole::WeakStem || !cls.exposed[stem]) {
        throw std::invalid_argument("vertex " + std::to_string(stem) + " is not an exposed weak stem (" +
                                    to_string(cls.role[stem]) + (cls.exposed[stem] ? ", exposed)" : ")"));
    }
    Vertex leaf = -1;
    for (Vertex w : t.neighbors(stem)) {
        if (t.is_leaf(w)) leaf = w;
    }
    std::vector<Vertex> kept;
    for (Vertex v = 0; v < t.order(); ++v) {
        if (v != stem && v != leaf) kept.push_back(v);
    }
    auto sub = induced_subtree(t, std::span<const Vertex>(kept));
    return {std::move(sub.tree), std::move(sub.to_host)};
}

namespace {

// K_1, K_2 and P_3 end a reduction. P_3 has no weak stem, yet its β and γ_m^∞
// agree, and it is the one 3-vertex part a K_2/P_3 partition may keep.
bool ews_terminal(const Tree& t) { return t.order() <= 3; }

Vertex leaf_of(const Tree& t, Vertex stem) {
    for (Vertex w : t.neighbors(stem)) {
        if (t.is_leaf(w)) return w;
    }
    return -1;
}

std::vector<Vertex> exposed_weak_stems(const Tree& t) {
    if (t.order() < 3) return {};
    const auto cls = classify_vertices(t);
    std::vector<Vertex> out;
    for (Vertex v : cls.exposed_stems()) {
        if (cls.role[v] == VertexRole::WeakStem) out.push_back(v);
    }
    return out;
}

bool ews_search(const Tree& t, const std::vector<Vertex>& to_orig, std::unordered_set<std::string>& dead,
                std::vector<EwsStep>& steps, int& terminal_order) {
    if (ews_terminal(t)) {
        terminal_order = t.order();
        return true;
    }
    const std::string code = canonical_code(t);
    if (dead.count(code)) return false;
    for (Vertex s : exposed_weak_stems(t)) {
        const Vertex leaf = leaf_of(t, s);
        auto next = apply_ews(t, s);
        std::vector<Vertex> next_orig(next.to_host.size());
        for (std::size_t i = 0; i < next.to_host.size(); ++i) next_orig[i] = to_orig[next.to_host[i]];
        steps.push_back({to_orig[s], to_orig[leaf]});
        if (ews_search(next.tree, next_orig, dead, steps, terminal_order)) return true;
        steps.pop_back();
    }
    dead.insert(code);
    return false;
}

}  // namespace

EwsReduction ews_reducible(const Tree& t) {
    EwsReduction out;
    std::vector<Vertex> ids(static_cast<std::size_t>(t.order()));
    for (Vertex v = 0; v < t.order(); ++v) ids[v] = v;

    std::unordered_set<std::string> dead;
    out.reducible = ews_search(t, ids, dead, out.steps, out.terminal_order);
    if (!out.reducible) out.steps.clear();

    Tree cur = t;
    std::vector<Vertex> cur_orig = ids;
    while (!ews_terminal(cur)) {
        const auto stems = exposed_weak_stems(cur);
        if (stems.empty()) break;
        Vertex best = stems.front();
        int best_ecc = eccentricity(cur, best);
        for (Vertex s : stems) {
            const int e = eccentricity(cur, s);
            if (e > best_ecc) {
                best = s;
                best_ecc = e;
            }
        }
        out.greedy_steps.push_back({cur_orig[best], cur_orig[leaf_of(cur, best)]});
        auto next = apply_ews(cur, best);
        std::vector<Vertex> next_orig(next.to_host.size());
        for (std::size_t i = 0; i < next.to_host.size(); ++i) next_orig[i] = cur_orig[next.to_host[i]];
        cur = std::move(next.tree);
        cur_orig = std::move(next_orig);
    }
    out.greedy_reducible = ews_terminal(cur);
    if (!out.reducible) out.terminal_order = 0;
    return out;
}

BetaEqualityVerdict check_beta_equality(const Tree& t, const GameReference& ref) {
    if (t.order() < 2) throw std::invalid_argument("beta check needs at least two vertices");
    BetaEqualityVerdict v;
    v.beta = independence_number(t);
    v.gamma_m_inf = ref.gamma_m_inf;
    v.reduction = ews_reducible(t);
    return v;
}

BetaEqualityVerdict check_beta_equality(const Tree& t) { return check_beta_equality(t, reference_game_numbers(t)); }

namespace {

bool k2_p3_shaped(const NeoColonization& p) {
    int p3 = 0;
    for (const auto& part : p.parts) {
        if (part.size() == 3) {
            ++p3;
        } else if (part.size() != 2) {
            return false;
        }
    }
    return p3 <= 1;
}

// Perfect matching of the forest left on `alive`: a leaf must pair with its
// only neighbor, so the greedy choice is forced.
std::optional<std::vector<std::vector<Vertex>>> forest_perfect_matching(const Tree& t, Mask alive) {
    std::vector<std::vector<Vertex>> pairs;
    while (alive) {
        bool progressed = false;
        for (Mask m = alive; m; m &= m - 1) {
            const Vertex v = lowest(m);
            if (!contains(alive, v)) continue;
            const Mask nb = t.graph().neighbor_mask(v) & alive;
            if (nb == 0) return std::nullopt;
            if (popcount(nb) == 1) {
                const Vertex w = lowest(nb);
                pairs.push_back({std::min(v, w), std::max(v, w)});
                alive &= ~(bit(v) | bit(w));
                progressed = true;
            }
        }
        if (!progressed) return std::nullopt;  // unreachable on a forest
    }
    return pairs;
}

}  // namespace

K2P3Result check_k2_p3_neocolonization(const Tree& t, K2P3Method method) {
    const int n = t.order();
    if (n < 2) throw std::invalid_argument("K_2/P_3 check needs at least two vertices");
    K2P3Result out;
    if (method == K2P3Method::Exhaustive || (method == K2P3Method::Auto && n <= kPartitionEnumerationLimit)) {
        out.exhaustive = true;
        for (auto& p : min_weight_neocolonizations(t)) {
            if (k2_p3_shaped(p)) {
                out.holds = true;
                out.witness = std::move(p);
                break;
            }
        }
        return out;
    }
    if (!t.graph().fits_mask()) throw BudgetExceeded("K_2/P_3 check needs at most 64 vertices");
    // Such a partition always weighs ceil(n/2); it is minimum iff θ_c is that.
    if (theta_c(t).theta != (n + 1) / 2) return out;
    const Mask all = full_mask(n);
    if (n % 2 == 0) {
        if (auto pairs = forest_perfect_matching(t, all)) {
            out.holds = true;
            out.witness = make_neocolonization(t, std::move(*pairs));
        }
        return out;
    }
    for (Vertex c = 0; c < n; ++c) {
        const auto nb = t.neighbors(c);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const Mask p3 = bit(c) | bit(nb[i]) | bit(nb[j]);
                if (auto pairs = forest_perfect_matching(t, all & ~p3)) {
                    pairs->push_back(mask_to_vertices(p3));
                    out.holds = true;
                    out.witness = make_neocolonization(t, std::move(*pairs));
                    return out;
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- 2γ

namespace {

// Vertex order of G[s] when it is a path, starting from the smaller end.
std::optional<std::vector<Vertex>> induced_path_order(const Graph& g, Mask s) {
    const int k = popcount(s);
    int edges = 0;
    Vertex start = -1;
    bool ok = true;
    for_each_bit(s, [&](int v) {
        const int d = popcount(g.neighbor_mask(v) & s);
        if (d > 2 || (d == 0 && k > 1)) ok = false;
        edges += d;
        if (d <= 1 && start == -1) start = v;
    });
    if (!ok || edges / 2 != k - 1 || start == -1 || !induces_connected(g, s)) return std::nullopt;
    std::vector<Vertex> order{start};
    Mask seen = bit(start);
    while (static_cast<int>(order.size()) < k) {
        const Mask next = g.neighbor_mask(order.back()) & s & ~seen;
        order.push_back(lowest(next));
        seen |= next;
    }
    return order;
}

DominatingSetConditions evaluate_conditions(const Tree& t, const DominatingSet& d) {
    const Graph& g = t.graph();
    const int n = g.order();
    const Mask dm = d.mask();
    DominatingSetConditions out;
    out.d = d;

    std::vector<int> in_d(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) in_d[v] = popcount(g.neighbor_mask(v) & dm);
    std::vector<Mask> epn(static_cast<std::size_t>(n), 0);
    for (Vertex x : d.vertices) epn[x] = external_private_neighbors(g, dm, x);

    for (Vertex v = 0; v < n && out.a.holds; ++v) {
        if (in_d[v] > 2) out.a = {false, {v}};
    }
    for (const Edge& e : g.edges()) {
        if (out.b.holds && contains(dm, e.u) && contains(dm, e.v)) out.b = {false, {e.u, e.v}};
        if (out.c.holds && in_d[e.u] >= 2 && in_d[e.v] >= 2) out.c = {false, {e.u, e.v}};
    }
    for (Vertex x : d.vertices) {
        if (popcount(epn[x]) < 2) {
            out.d_cond = {false, {x}};
            break;
        }
    }
    for (std::size_t i = 0; i < d.vertices.size() && out.e.holds; ++i) {
        for (std::size_t j = i + 1; j < d.vertices.size() && out.e.holds; ++j) {
            const Vertex x = d.vertices[i];
            const Vertex y = d.vertices[j];
            const Mask u = bit(x) | bit(y) | epn[x] | epn[y];
            if (popcount(u) != 6) continue;
            auto path = induced_path_order(g, u);
            if (!path) continue;
            auto& p = *path;
            if ((p[1] == y && p[4] == x)) std::reverse(p.begin(), p.end());
            if (p[1] == x && p[4] == y) out.e = {false, p};  // a, x, b, c, y, z
        }
    }

    const auto lab = domination_labeling(g, d);
    Mask f1 = vertices_to_mask(lab.f1_vertices);
    for (Vertex v = 0; v < n && out.la.holds; ++v) {
        if (lab.label[v] < 1 || lab.label[v] > 2) out.la = {false, {v}};
    }
    for (Vertex x : d.vertices) {
        if (lab.label[x] != 1) {
            out.lb = {false, {x}};
            break;
        }
    }
    for (const Edge& e : g.edges()) {
        if (lab.label[e.u] == 2 && lab.label[e.v] == 2) {
            out.lc = {false, {e.u, e.v}};
            break;
        }
    }
    // N_F1(x) is empty when x itself is not in F_1.
    auto f1_open = [&](Vertex x) { return contains(f1, x) ? g.neighbor_mask(x) & f1 : Mask{0}; };
    for (Vertex x : d.vertices) {
        if (popcount(f1_open(x)) < 2) {
            out.ld = {false, {x}};
            break;
        }
    }
    for (std::size_t i = 0; i < d.vertices.size() && out.le.holds; ++i) {
        for (std::size_t j = i + 1; j < d.vertices.size() && out.le.holds; ++j) {
            const Vertex x = d.vertices[i];
            const Vertex y = d.vertices[j];
            if (!contains(f1, x) || !contains(f1, y)) continue;
            const Mask s = bit(x) | bit(y) | f1_open(x) | f1_open(y);
            if (popcount(s) != 6) continue;
            if (auto path = induced_path_order(g, s)) out.le = {false, *path};
        }
    }
    return out;
}

}  // namespace

bool is_fat_dominating_set_partition(const Tree& t, const NeoColonization& p, int gamma) {
    if (p.part_count() != gamma) return false;
    const Graph& g = t.graph();
    for (const auto& part : p.parts) {
        if (part.size() < 3) return false;
        const Mask m = vertices_to_mask(part);
        if (!induces_connected(g, m)) return false;
        const int k = static_cast<int>(part.size());
        const bool has_center = std::any_of(part.begin(), part.end(), [&](Vertex v) {
            return popcount(g.neighbor_mask(v) & m) == k - 1;
        });
        if (!has_center) return false;
    }
    return true;
}

TwoGammaConditionReport check_2gamma_conditions(const Tree& t) {
    if (t.order() < 2) throw std::invalid_argument("2-gamma check needs at least two vertices");
    TwoGammaConditionReport out;
    out.verdict = true;
    out.labeling_verdict = true;
    for (const auto& d : enumerate_min_dominating_sets(t)) {
        auto c = evaluate_conditions(t, d);
        out.verdict = out.verdict && c.all();
        out.labeling_verdict = out.labeling_verdict && c.labeling_all();
        if (c.all() != c.labeling_all()) out.forms_agree = false;
        out.per_set.push_back(std::move(c));
    }
    if (t.order() <= kPartitionEnumerationLimit) {
        const int gamma = domination_number(t);
        out.fat_finest = false;
        for (auto& p : all_finest_neocolonizations(t)) {
            if (is_fat_dominating_set_partition(t, p, gamma)) {
                out.fat_finest = true;
                out.fat_finest_witness = std::move(p);
                break;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- γ_c + 1

GammaCPlusOneVerdict check_gammac_plus_one(const Tree& t, const GameReference& ref) {
    GammaCPlusOneVerdict v;
    v.gamma_c = connected_domination_number(t);
    v.gamma_m_inf = ref.gamma_m_inf;
    v.witness = spanning_forest_witness(t);
    if (v.witness) v.witness_error = verify_spanning_forest_witness(t, *v.witness);
    return v;
}

GammaCPlusOneVerdict check_gammac_plus_one(const Tree& t) { return check_gammac_plus_one(t, reference_game_numbers(t)); }

// ---------------------------------------------------------------- report

namespace {

Equalities equalities_for(int gm, int gamma, int beta, int gamma_c, int half_ceil) {
    return {gm == gamma, gm == 2 * gamma, gm == beta, gm == gamma_c + 1, gm == half_ceil};
}

template <typename Fn>
void guarded(ClassificationReport& r, const char* field, Fn&& fn) {
    try {
        fn();
    } catch (const BudgetExceeded& e) {
        r.errors[field] = e.what();
    }
}

}  // namespace

ClassificationReport classify(const Tree& t, const ClassifyOptions& opts) {
    ClassificationReport r;
    const int n = t.order();
    r.n = n;
    r.m = t.graph().size();
    r.is_tree = true;
    r.canonical_code = canonical_code(t);
    r.half_ceil = (n + 1) / 2;
    r.gamma = domination_number(t);
    r.gamma_c = connected_domination_number(t);
    r.beta = independence_number(t);
    auto theta = theta_c(t);
    r.theta_c = theta.theta;
    r.theta_witness = theta.witness;

    const auto ref = reference_game_numbers(t, opts);
    r.game = ref.solver;
    r.game_status = ref.solver ? "verified" : (opts.use_solver ? "unverified" : "skipped");
    if (!ref.note.empty() && opts.use_solver) r.notices.push_back("solver not used: " + ref.note);
    r.gamma_m_inf = ref.gamma_m_inf;
    r.gamma_m_inf_source = ref.source;
    const int gm = ref.gamma_m_inf;
    r.equalities = equalities_for(gm, *r.gamma, *r.beta, *r.gamma_c, r.half_ceil);

    bool ok = gm == *r.theta_c;
    if (r.game) ok = ok && r.game->gamma_inf >= gm;
    ok = ok && gm >= *r.gamma && gm <= std::min({2 * *r.gamma, *r.beta, *r.gamma_c + 1, r.half_ceil});

    if (n < 2) {
        r.notices.push_back("structural checks need at least two vertices");
    } else if (!t.graph().fits_mask()) {
        r.notices.push_back("structural checks need at most 64 vertices");
    } else {
        r.roles = classify_vertices(t);
        r.corona = check_gamma_equality(t, ref);
        ok = ok && r.corona->consistent();
        r.beta_check = check_beta_equality(t, ref);
        ok = ok && r.beta_check->consistent();
        guarded(r, "k2_p3", [&] {
            r.k2_p3 = check_k2_p3_neocolonization(t);
            ok = ok && r.k2_p3->holds == r.equalities->beta;
        });
        guarded(r, "two_gamma", [&] {
            r.two_gamma = check_2gamma_conditions(t);
            const bool eq = r.equalities->two_gamma;
            ok = ok && r.two_gamma->verdict == eq && r.two_gamma->forms_agree;
            if (r.two_gamma->fat_finest) ok = ok && *r.two_gamma->fat_finest == eq;
        });
        r.gamma_c_plus_one = check_gammac_plus_one(t, ref);
        ok = ok && r.gamma_c_plus_one->consistent();
    }
    r.consistent = ok;
    return r;
}

ClassificationReport classify(const Graph& g, const ClassifyOptions& opts) {
    if (g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g)) return classify(validate_tree(g), opts);

    ClassificationReport r;
    const int n = g.order();
    r.n = n;
    r.m = g.size();
    r.half_ceil = (n + 1) / 2;
    r.notices.push_back("tree checks not applicable: input is not a tree");
    guarded(r, "gamma", [&] { r.gamma = domination_number(g); });
    guarded(r, "beta", [&] { r.beta = independence_number(g); });
    if (is_connected(g)) {
        guarded(r, "gamma_c", [&] { r.gamma_c = connected_domination_number_search(g); });
    } else {
        r.notices.push_back("gamma_c undefined: graph is disconnected");
    }
    if (n <= kPartitionOracleLimit) {
        r.theta_c = theta_c_oracle(g);
    } else {
        r.notices.push_back("theta_c skipped: exhaustive partition search limited to " +
                            std::to_string(kPartitionOracleLimit) + " vertices");
    }
    r.game_status = "skipped";
    if (opts.use_solver && n <= opts.solver_max_n) {
        r.game_status = "unverified";
        guarded(r, "game", [&] {
            GameNumbers nums;
            nums.gamma_m_inf = eternal_number(g, MoveModel::AllGuards, r.gamma.value_or(1), opts.budget);
            nums.gamma_inf = eternal_number(g, MoveModel::SingleGuard, nums.gamma_m_inf, opts.budget);
            r.game = nums;
            r.game_status = "verified";
            r.gamma_m_inf = nums.gamma_m_inf;
            r.gamma_m_inf_source = GameSource::Solver;
        });
    }
    bool ok = true;
    if (r.game) {
        const int gm = r.game->gamma_m_inf;
        ok = ok && r.game->gamma_inf >= gm;
        if (r.gamma) ok = ok && gm >= *r.gamma;
        if (r.beta) ok = ok && gm <= *r.beta;
        if (r.theta_c) ok = ok && gm <= *r.theta_c;
        if (is_connected(g)) ok = ok && gm <= r.half_ceil;
        if (r.gamma && r.beta && r.gamma_c) {
            r.equalities = equalities_for(gm, *r.gamma, *r.beta, *r.gamma_c, r.half_ceil);
        }
    }
    r.consistent = ok;
    return r;
}

// ---------------------------------------------------------------- JSON

namespace {

using nlohmann::json;

template <typename T>
json opt(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

json to_json(const NeoColonization& p) {
    return json{{"parts", p.parts}, {"weights", p.part_weights}, {"total_weight", p.total_weight}};
}

json to_json(const Condition& c) { return json{{"holds", c.holds}, {"witness", c.witness}}; }

json steps_json(const std::vector<EwsStep>& steps) {
    json out = json::array();
    for (const auto& s : steps) out.push_back({s.stem, s.leaf});
    return out;
}

json not_applicable() { return json{{"applicable", false}}; }

}  // namespace

nlohmann::json to_json(const ClassificationReport& r) {
    json j;
    j["graph"] = {{"n", r.n}, {"m", r.m}, {"is_tree", r.is_tree}};
    if (r.is_tree) j["graph"]["canonical_code"] = r.canonical_code;

    j["parameters"] = {
        {"gamma", opt(r.gamma)},
        {"gamma_c", opt(r.gamma_c)},
        {"beta", opt(r.beta)},
        {"half_ceil", r.half_ceil},
        {"theta_c", opt(r.theta_c)},
        {"gamma_inf", r.game ? json(r.game->gamma_inf) : json(nullptr)},
        {"gamma_m_inf", opt(r.gamma_m_inf)},
    };
    j["game"] = {
        {"status", r.game_status},
        {"gamma_m_inf_source", r.gamma_m_inf_source ? json(to_string(*r.gamma_m_inf_source)) : json(nullptr)},
    };
    if (r.equalities) {
        const auto& e = *r.equalities;
        j["equalities"] = {{"gamma", e.gamma},
                           {"two_gamma", e.two_gamma},
                           {"beta", e.beta},
                           {"gamma_c_plus_one", e.gamma_c_plus_one},
                           {"half_ceil", e.half_ceil}};
    } else {
        j["equalities"] = nullptr;
    }

    if (r.roles) {
        const auto& c = *r.roles;
        j["roles"] = {{"leaf", c.with_role(VertexRole::Leaf)},
                      {"weak_stem", c.with_role(VertexRole::WeakStem)},
                      {"strong_stem", c.with_role(VertexRole::StrongStem)},
                      {"loner", c.with_role(VertexRole::Loner)},
                      {"exposed_stems", c.exposed_stems()}};
    } else {
        j["roles"] = nullptr;
    }
    j["theta_witness"] = r.theta_witness ? to_json(*r.theta_witness) : json(nullptr);

    json checks;
    if (r.corona) {
        json m = json::array();
        for (auto [b, p] : r.corona->matching) m.push_back({b, p});
        checks["corona"] = {{"applicable", true},
                            {"corona", r.corona->corona},
                            {"matching", m},
                            {"equality", r.corona->equality()},
                            {"consistent", r.corona->consistent()}};
    } else {
        checks["corona"] = not_applicable();
    }
    if (r.beta_check) {
        const auto& red = r.beta_check->reduction;
        checks["beta"] = {{"applicable", true},
                          {"ews_reducible", red.reducible},
                          {"steps", steps_json(red.steps)},
                          {"terminal_order", red.terminal_order},
                          {"greedy_reducible", red.greedy_reducible},
                          {"greedy_steps", steps_json(red.greedy_steps)},
                          {"equality", r.beta_check->equality()},
                          {"consistent", r.beta_check->consistent()}};
    } else {
        checks["beta"] = not_applicable();
    }
    if (r.k2_p3) {
        checks["k2_p3"] = {{"applicable", true},
                           {"holds", r.k2_p3->holds},
                           {"method", r.k2_p3->exhaustive ? "exhaustive" : "matching"},
                           {"witness", r.k2_p3->witness ? to_json(*r.k2_p3->witness) : json(nullptr)}};
    } else {
        checks["k2_p3"] = not_applicable();
    }
    if (r.two_gamma) {
        const auto& tg = *r.two_gamma;
        json sets = json::array();
        for (const auto& s : tg.per_set) {
            sets.push_back({{"dominating_set", s.d.vertices},
                            {"conditions",
                             {{"a", to_json(s.a)},
                              {"b", to_json(s.b)},
                              {"c", to_json(s.c)},
                              {"d", to_json(s.d_cond)},
                              {"e", to_json(s.e)}}},
                            {"labeling",
                             {{"a", to_json(s.la)},
                              {"b", to_json(s.lb)},
                              {"c", to_json(s.lc)},
                              {"d", to_json(s.ld)},
                              {"e", to_json(s.le)}}}});
        }
        checks["two_gamma"] = {
            {"applicable", true},
            {"verdict", tg.verdict},
            {"labeling_verdict", tg.labeling_verdict},
            {"forms_agree", tg.forms_agree},
            {"fat_finest", opt(tg.fat_finest)},
            {"fat_finest_witness", tg.fat_finest_witness ? to_json(*tg.fat_finest_witness) : json(nullptr)},
            {"sets", sets},
        };
    } else {
        checks["two_gamma"] = not_applicable();
    }
    if (r.gamma_c_plus_one) {
        const auto& v = *r.gamma_c_plus_one;
        json w = nullptr;
        if (v.witness) {
            json edges = json::array();
            for (const auto& e : v.witness->deleted_edges) edges.push_back({e.u, e.v});
            w = {{"partition", to_json(v.witness->partition)},
                 {"k", v.witness->k},
                 {"r", v.witness->r},
                 {"loners_as_leaves", v.witness->loners_as_leaves},
                 {"deleted_edges", edges}};
        }
        checks["gamma_c_plus_one"] = {{"applicable", true},
                                      {"witness", w},
                                      {"witness_error", v.witness_error},
                                      {"equality", v.equality()},
                                      {"consistent", v.consistent()}};
    } else {
        checks["gamma_c_plus_one"] = not_applicable();
    }
    j["checks"] = checks;
    j["errors"] = r.errors;
    j["notices"] = r.notices;
    j["consistent"] = r.consistent;
    return j;
}

}  // namespace edt
