#include "edt/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace edt {

namespace {

// Lazily computed facts about one tree, shared by the checks run on it.
class TreeFacts {
public:
    TreeFacts(const Tree& t, const ClassifyOptions& opts) : t_(t), opts_(opts) {}

    const Tree& tree() const { return t_; }
    const ClassifyOptions& options() const { return opts_; }

    const GameReference& ref() {
        if (!ref_) ref_ = reference_game_numbers(t_, opts_);
        return *ref_;
    }
    int gm() { return ref().gamma_m_inf; }
    int gamma() {
        if (!gamma_) gamma_ = domination_number(t_);
        return *gamma_;
    }
    int beta() {
        if (!beta_) beta_ = independence_number(t_);
        return *beta_;
    }
    int gamma_c() { return connected_domination_number(t_); }
    const ThetaResult& theta() {
        if (!theta_) theta_ = theta_c(t_);
        return *theta_;
    }
    const std::vector<DominatingSet>& min_sets() {
        if (!min_sets_) min_sets_ = enumerate_min_dominating_sets(t_);
        return *min_sets_;
    }
    const std::vector<NeoColonization>& finest_all() {
        if (!finest_) finest_ = all_finest_neocolonizations(t_);
        return *finest_;
    }
    const std::vector<NeoColonization>& min_all() {
        if (!min_all_) min_all_ = min_weight_neocolonizations(t_);
        return *min_all_;
    }
    const TwoGammaConditionReport& two_gamma() {
        if (!two_gamma_) two_gamma_ = check_2gamma_conditions(t_);
        return *two_gamma_;
    }
    bool two_gamma_equality() { return gm() == 2 * gamma(); }
    bool enumerable() const { return t_.order() <= kPartitionEnumerationLimit; }

private:
    const Tree& t_;
    ClassifyOptions opts_;
    std::optional<GameReference> ref_;
    std::optional<int> gamma_, beta_;
    std::optional<ThetaResult> theta_;
    std::optional<std::vector<DominatingSet>> min_sets_;
    std::optional<std::vector<NeoColonization>> finest_, min_all_;
    std::optional<TwoGammaConditionReport> two_gamma_;
};

using Outcome = std::optional<std::string>;
using CheckFn = std::function<Outcome(TreeFacts&)>;

std::string str(const std::vector<Vertex>& vs) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
    out << '}';
    return out.str();
}

std::string str(const NeoColonization& p) {
    std::string s;
    for (const auto& part : p.parts) s += str(part);
    return s;
}

template <typename... Args>
std::string cat(const Args&... args) {
    std::ostringstream out;
    (out << ... << args);
    return out.str();
}

Outcome check_theta_game(TreeFacts& f) {
    const auto& th = f.theta();
    if (th.witness.total_weight != th.theta) return cat("DP witness weighs ", th.witness.total_weight, " not ", th.theta);
    const int oracle = theta_c_oracle(f.tree());
    if (oracle != th.theta) return cat("DP theta ", th.theta, " vs partition oracle ", oracle);
    if (f.ref().solver && f.ref().solver->gamma_m_inf != th.theta) {
        return cat("theta ", th.theta, " vs solver ", f.ref().solver->gamma_m_inf);
    }
    return std::nullopt;
}

Outcome check_chain(TreeFacts& f) {
    const Tree& t = f.tree();
    const int n = t.order();
    const int gm = f.gm();
    const int gamma = f.gamma();
    const int beta = f.beta();
    if (gamma > beta) return cat("gamma ", gamma, " > beta ", beta);
    if (gm < gamma) return cat("gamma_m_inf ", gm, " < gamma ", gamma);
    const int cap = std::min({2 * gamma, beta, f.theta().theta, f.gamma_c() + 1, (n + 1) / 2});
    if (gm > cap) return cat("gamma_m_inf ", gm, " exceeds bound ", cap);
    const auto& ref = f.ref();
    if (!ref.solver) return std::nullopt;
    if (ref.solver->gamma_inf < gm) return cat("gamma_inf ", ref.solver->gamma_inf, " < gamma_m_inf ", gm);

    const auto budget = f.options().budget;
    for (int k = gm + 1; k <= std::min(gm + 2, n); ++k) {
        if (!solve(t, MoveModel::AllGuards, k, budget)) return cat("no winning family at k = ", k, " above the minimum");
    }
    for (MoveModel model : {MoveModel::AllGuards, MoveModel::SingleGuard}) {
        const int k = model == MoveModel::AllGuards ? gm : ref.solver->gamma_inf;
        auto fam = solve(t, model, k, budget);
        if (!fam) return cat("no winning family at the reported minimum ", k);
        for (std::size_t i = 0; i < fam->configs().size(); ++i) {
            const auto& c = fam->configs()[i];
            if (!is_dominating(t, c)) return cat("family member ", to_string(c), " does not dominate");
            if (!all_guards_move_legal(t, c, c)) return "identity move rejected";
            for (Vertex r = 0; r < n; ++r) {
                const int j = fam->response_index(i, r);
                if (c.guards(r)) {
                    if (j != -1) return "response to an attack on a guarded vertex";
                    continue;
                }
                if (j < 0) return cat("no response to attack ", r, " on ", to_string(c));
                const auto& next = fam->configs()[static_cast<std::size_t>(j)];
                const bool legal = model == MoveModel::AllGuards ? all_guards_move_legal(t, c, next)
                                                                 : single_guard_move_legal(t, c, next, r);
                if (!legal || !next.guards(r)) {
                    return cat("illegal response ", to_string(c), " -> ", to_string(next), " on attack ", r);
                }
            }
        }
    }
    return std::nullopt;
}

Outcome check_star_partition(TreeFacts& f) {
    const Tree& t = f.tree();
    for (int seed = 0; seed <= 5; ++seed) {
        auto sp = seed == 0 ? beta_via_star_partition(t) : beta_via_star_partition(t, static_cast<std::uint64_t>(seed));
        if (sp.total != f.beta()) return cat("star partition total ", sp.total, " vs beta ", f.beta(), " (order ", seed, ")");
        int covered = 0;
        for (const auto& part : sp.parts) {
            covered += static_cast<int>(part.size());
            auto sub = induced_subtree(t, std::span<const Vertex>(part));
            if (!sub.tree.is_star() && sub.tree.order() != 1) return cat("part ", str(part), " is not a star");
        }
        if (covered != t.order()) return "star partition does not cover the tree";
    }
    return std::nullopt;
}

Outcome check_exposed_stems(TreeFacts& f) {
    const Tree& t = f.tree();
    if (t.is_star() || t.order() < 3) return std::nullopt;
    const auto count = classify_vertices(t).exposed_stems().size();
    if (count < 2) return cat("non-star with ", count, " exposed stems");
    return std::nullopt;
}

Outcome check_no_singletons(TreeFacts& f) {
    const Tree& t = f.tree();
    const auto& th = f.theta();
    auto norm = normalize_no_singletons(t, th.witness);
    if (norm.has_singleton()) return "normalization left a singleton";
    if (norm.total_weight != th.theta) return cat("normalization changed the weight to ", norm.total_weight);
    auto fin = finest_neocolonization(t);
    if (fin.partition.has_singleton()) return "finest partition has a singleton";
    if (fin.partition.total_weight != th.theta) return "finest partition is not minimum";
    if (f.enumerable()) {
        const auto& all = f.finest_all();
        if (all.empty() || all.front().part_count() != fin.parts) {
            return cat("finest DP has ", fin.parts, " parts, enumeration ", all.empty() ? 0 : all.front().part_count());
        }
    }
    return std::nullopt;
}

Outcome check_corona(TreeFacts& f) {
    auto v = check_gamma_equality(f.tree(), f.ref());
    if (!v.consistent()) return cat("gamma_m_inf ", v.gamma_m_inf, ", gamma ", v.gamma, ", corona ", v.corona);
    return std::nullopt;
}

Outcome check_corona_partition(TreeFacts& f) {
    if (f.gm() != f.gamma() || !f.enumerable()) return std::nullopt;
    const Tree& t = f.tree();
    const auto& all = f.min_all();
    if (all.size() != 1) return cat(all.size(), " minimum-weight neo-colonizations");
    auto matching = corona_matching(t);
    if (!matching) return "equality without a corona";
    for (const auto& part : all.front().parts) {
        if (part.size() != 2) return cat("part ", str(part), " is not a leaf-stem pair");
        const auto pr = std::minmax(part[0], part[1]);
        const bool matched = std::any_of(matching->begin(), matching->end(), [&](auto bp) {
            return std::minmax(bp.first, bp.second) == pr;
        });
        if (!matched) return cat("part ", str(part), " is not a leaf-stem pair");
    }
    for (const auto& p : all) {
        for (const auto& part : p.parts) {
            auto sub = induced_subtree(t, std::span<const Vertex>(part));
            const int pg = domination_number(sub.tree);
            const int pm = eternal_number(sub.tree, MoveModel::AllGuards, pg, f.options().budget);
            if (pg != pm) return cat("part ", str(part), " has gamma ", pg, " but gamma_m_inf ", pm);
        }
    }
    return std::nullopt;
}

Outcome check_spanning_forest(TreeFacts& f) {
    auto v = check_gammac_plus_one(f.tree(), f.ref());
    if (!v.witness_error.empty()) return "witness rejected: " + v.witness_error;
    if (!v.consistent()) return cat("gamma_m_inf ", v.gamma_m_inf, ", gamma_c ", v.gamma_c, ", witness ", v.witness.has_value());
    return std::nullopt;
}

Outcome check_two_gamma_conditions(TreeFacts& f) {
    const auto& r = f.two_gamma();
    if (r.verdict != f.two_gamma_equality()) {
        return cat("conditions ", r.verdict ? "hold" : "fail", " but gamma_m_inf = ", f.gm(), ", gamma = ", f.gamma());
    }
    return std::nullopt;
}

Outcome check_labeling_form(TreeFacts& f) {
    const auto& r = f.two_gamma();
    for (const auto& s : r.per_set) {
        if (s.all() != s.labeling_all()) return cat("forms disagree on D = ", str(s.d.vertices));
    }
    if (r.labeling_verdict != f.two_gamma_equality()) {
        return cat("labeling conditions ", r.labeling_verdict ? "hold" : "fail", " but gamma_m_inf = ", f.gm(),
                   ", gamma = ", f.gamma());
    }
    return std::nullopt;
}

Outcome check_fat_finest(TreeFacts& f) {
    const auto& r = f.two_gamma();
    if (!r.fat_finest) return std::nullopt;
    if (*r.fat_finest != f.two_gamma_equality()) {
        std::string why = cat("fat finest partition ", *r.fat_finest ? "exists" : "missing", " but gamma_m_inf = ",
                              f.gm(), ", gamma = ", f.gamma());
        if (!f.finest_all().empty()) why += "; a finest partition: " + str(f.finest_all().front());
        return why;
    }
    return std::nullopt;
}

Outcome check_finest_meets_d(TreeFacts& f) {
    if (!f.two_gamma_equality() || !f.enumerable()) return std::nullopt;
    for (const auto& p : f.finest_all()) {
        for (const auto& d : f.min_sets()) {
            const Mask dm = d.mask();
            for (const auto& part : p.parts) {
                if ((vertices_to_mask(part) & dm) == 0) {
                    return cat("finest part ", str(part), " of ", str(p), " misses D = ", str(d.vertices));
                }
            }
        }
    }
    return std::nullopt;
}

Outcome check_finest_parts_bound(TreeFacts& f) {
    if (!f.two_gamma_equality() || !f.enumerable()) return std::nullopt;
    for (const auto& p : f.finest_all()) {
        if (p.part_count() > f.gamma()) return cat("finest partition ", str(p), " has ", p.part_count(), " parts > gamma ", f.gamma());
    }
    return std::nullopt;
}

Outcome check_fat_dsp(TreeFacts& f) {
    if (!f.two_gamma_equality()) return std::nullopt;
    for (const auto& d : f.min_sets()) {
        auto dsp = dominating_set_partition(f.tree(), d);
        if (!dsp.fat) return cat("partition around D = ", str(d.vertices), " is not fat: ", str(dsp.partition));
    }
    return std::nullopt;
}

Outcome check_fat_finest_iff(TreeFacts& f) {
    if (!f.two_gamma_equality() || !f.enumerable()) return std::nullopt;
    const Tree& t = f.tree();
    for (const auto& p : f.finest_all()) {
        const bool big = std::all_of(p.parts.begin(), p.parts.end(), [](const auto& part) { return part.size() >= 3; });
        if (big != is_fat_dominating_set_partition(t, p, f.gamma())) {
            return cat("finest partition ", str(p), big ? " has parts >= 3 but is not" : " is", " a fat dominating set partition");
        }
    }
    const int max_parts = f.finest_all().empty() ? 0 : f.finest_all().front().part_count();
    for (const auto& d : f.min_sets()) {
        auto dsp = dominating_set_partition(t, d);
        if (!dsp.fat) continue;
        if (dsp.partition.total_weight != f.theta().theta || dsp.partition.part_count() != max_parts) {
            return cat("fat dominating set partition ", str(dsp.partition), " is not finest (", max_parts, " parts possible)");
        }
    }
    return std::nullopt;
}

Outcome check_no_leaf_in_d(TreeFacts& f) {
    if (!f.two_gamma_equality() || f.tree().order() <= 2) return std::nullopt;
    for (const auto& d : f.min_sets()) {
        for (Vertex v : d.vertices) {
            if (f.tree().is_leaf(v)) return cat("leaf ", v, " in D = ", str(d.vertices));
        }
    }
    return std::nullopt;
}

Outcome check_two_gamma_placement(TreeFacts& f) {
    const Tree& t = f.tree();
    for (const auto& d : f.min_sets()) {
        auto c = two_gamma_placement(t, d);
        if (c.size() > 2 * d.size()) return "placement larger than 2 gamma";
        if (!is_dominating(t, c)) return "placement does not dominate";
        auto fam = solve(t, MoveModel::AllGuards, c.size(), f.options().budget);
        if (!fam || !fam->contains(c)) return cat("placement ", to_string(c), " is not in a winning family");
    }
    return std::nullopt;
}

Outcome check_ews_reducible(TreeFacts& f) {
    auto v = check_beta_equality(f.tree(), f.ref());
    if (!v.consistent()) return cat("beta ", v.beta, ", gamma_m_inf ", v.gamma_m_inf, ", reducible ", v.reduction.reducible);
    return std::nullopt;
}

Outcome check_k2_p3(TreeFacts& f) {
    auto r = check_k2_p3_neocolonization(f.tree());
    const bool eq = f.gm() == f.beta();
    if (r.holds != eq) return cat("K2/P3 partition ", r.holds ? "found" : "missing", " but beta ", f.beta(), ", gamma_m_inf ", f.gm());
    if (f.tree().graph().fits_mask() && f.tree().order() >= 3) {
        auto m = check_k2_p3_neocolonization(f.tree(), K2P3Method::Matching);
        if (m.holds != r.holds) return "matching search disagrees with enumeration";
    }
    return std::nullopt;
}

Outcome check_ews_step(TreeFacts& f) {
    const Tree& t = f.tree();
    if (t.order() < 3) return std::nullopt;
    const auto cls = classify_vertices(t);
    for (Vertex s : cls.exposed_stems()) {
        if (cls.role[s] != VertexRole::WeakStem) continue;
        auto next = apply_ews(t, s);
        const int beta2 = independence_number(next.tree);
        const int gm2 = reference_game_numbers(next.tree, f.options()).gamma_m_inf;
        if (beta2 != f.beta() - 1 || gm2 != f.gm() - 1) {
            return cat("removing stem ", s, ": beta ", f.beta(), " -> ", beta2, ", gamma_m_inf ", f.gm(), " -> ", gm2);
        }
    }
    return std::nullopt;
}

Outcome check_strong_stem_leaves(TreeFacts& f) {
    const Tree& t = f.tree();
    if (t.order() < 3) return std::nullopt;
    const auto cls = classify_vertices(t);
    for (Vertex s : cls.exposed_stems()) {
        if (cls.adjacent_leaves[s] >= 3 && !(f.gm() < f.beta())) {
            return cat("exposed stem ", s, " with ", cls.adjacent_leaves[s], " leaves but gamma_m_inf = beta = ", f.beta());
        }
    }
    return std::nullopt;
}

Outcome check_canonical_relabel(TreeFacts& f) {
    const Tree& t = f.tree();
    const std::string code = canonical_code(t);
    std::vector<int> perm(static_cast<std::size_t>(t.order()));
    std::mt19937_64 rng(0x5eed + static_cast<std::uint64_t>(t.order()));
    for (int i = 0; i < 5; ++i) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        if (canonical_code(relabel(t, perm)) != code) return "canonical code changed under relabeling";
    }
    return std::nullopt;
}

struct Registered {
    SweepCheck info;
    Outcome (*fn)(TreeFacts&);
};

const std::vector<Registered>& registry() {
    static const std::vector<Registered> checks = {
        {{"theta-game", "tree DP theta_c = partition oracle = solver gamma_m_inf"}, check_theta_game},
        {{"chain", "gamma_inf >= gamma_m_inf >= gamma, upper bounds, monotone k, legal responses"}, check_chain},
        {{"star-partition", "exposed-stem star partition sums to beta under six removal orders"}, check_star_partition},
        {{"exposed-stems", "every non-star has at least two exposed stems"}, check_exposed_stems},
        {{"no-singletons", "singleton normalization keeps weight; finest DP matches enumeration"}, check_no_singletons},
        {{"corona", "gamma_m_inf = gamma iff corona"}, check_corona},
        {{"corona-partition", "equality trees: unique minimum partition into leaf-stem pairs, parts keep gamma"},
         check_corona_partition},
        {{"spanning-forest", "gamma_m_inf < gamma_c + 1 iff a verified spanning-forest witness exists"},
         check_spanning_forest},
        {{"two-gamma-conditions", "gamma_m_inf = 2 gamma iff conditions (a)-(e) for every minimum dominating set"},
         check_two_gamma_conditions},
        {{"labeling-form", "labeling conditions agree with (a)-(e) and with gamma_m_inf = 2 gamma"}, check_labeling_form},
        {{"fat-finest", "gamma_m_inf = 2 gamma iff a finest partition is a fat dominating set partition"},
         check_fat_finest},
        {{"finest-meets-d", "2 gamma trees: every finest part meets every minimum dominating set"}, check_finest_meets_d},
        {{"finest-parts-bound", "2 gamma trees: finest partitions have at most gamma parts"}, check_finest_parts_bound},
        {{"fat-dsp", "2 gamma trees: dominating set partitions are fat"}, check_fat_dsp},
        {{"fat-finest-iff", "2 gamma trees: finest with parts >= 3 iff fat dominating set partition"},
         check_fat_finest_iff},
        {{"no-leaf-in-d", "2 gamma trees: no minimum dominating set contains a leaf"}, check_no_leaf_in_d},
        {{"two-gamma-placement", "D plus one private neighbor each lies in a winning family"}, check_two_gamma_placement},
        {{"ews-reducible", "gamma_m_inf = beta iff EWS reduces the tree to K_1, K_2 or P_3"}, check_ews_reducible},
        {{"k2-p3", "gamma_m_inf = beta iff a minimum partition uses K_2 parts and at most one P_3"}, check_k2_p3},
        {{"ews-step", "one EWS step lowers beta and gamma_m_inf by one"}, check_ews_step},
        {{"strong-stem-leaves", "an exposed stem with three or more leaves forces gamma_m_inf < beta"},
         check_strong_stem_leaves},
        {{"canonical-relabel", "canonical code survives random relabeling"}, check_canonical_relabel},
    };
    return checks;
}

const Registered& find_check(const std::string& name) {
    for (const auto& r : registry()) {
        if (name == r.info.name) return r;
    }
    throw std::invalid_argument("unknown check '" + name + "'");
}

Outcome guarded_run(const Registered& r, TreeFacts& facts) {
    try {
        return r.fn(facts);
    } catch (const std::exception& e) {
        return std::string("error: ") + e.what();
    }
}

}  // namespace

const std::vector<SweepCheck>& sweep_checks() {
    static const std::vector<SweepCheck> out = [] {
        std::vector<SweepCheck> v;
        for (const auto& r : registry()) v.push_back(r.info);
        return v;
    }();
    return out;
}

std::vector<std::string> resolve_checks(const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (const auto& name : names) {
        if (name == "all") {
            for (const auto& r : registry()) out.emplace_back(r.info.name);
        } else {
            out.push_back(find_check(name).info.name);
        }
    }
    std::vector<std::string> unique;
    for (const auto& r : registry()) {
        if (std::find(out.begin(), out.end(), r.info.name) != out.end()) unique.emplace_back(r.info.name);
    }
    return unique;
}

bool SweepResult::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.failed == 0; });
}

int SweepResult::counterexample_count() const {
    int total = 0;
    for (const auto& c : checks) total += c.failed;
    return total;
}

std::optional<std::string> run_check(const std::string& name, const Tree& t, const ClassifyOptions& opts) {
    TreeFacts facts(t, opts);
    return guarded_run(find_check(name), facts);
}

SweepResult run_sweep(const SweepOptions& opts) {
    if (opts.min_n < 2 || opts.max_n > kSweepMaxOrder || opts.min_n > opts.max_n) {
        throw std::invalid_argument("tree orders must satisfy 2 <= min <= max <= " + std::to_string(kSweepMaxOrder));
    }
    const auto start = std::chrono::steady_clock::now();
    const auto names = resolve_checks(opts.checks);
    std::vector<const Registered*> selected;
    for (const auto& name : names) selected.push_back(&find_check(name));

    SweepResult result;
    result.min_n = opts.min_n;
    result.max_n = opts.max_n;
    std::vector<Tree> trees;
    for (int n = opts.min_n; n <= opts.max_n; ++n) {
        auto batch = enumerate_trees(n);
        result.trees_per_order.push_back(static_cast<int>(batch.size()));
        for (auto& t : batch) trees.push_back(std::move(t));
    }
    result.trees = static_cast<int>(trees.size());

    std::vector<std::vector<Outcome>> outcomes(trees.size());
    std::vector<char> greedy_differs(trees.size(), 0);
    const bool track_greedy = std::find(names.begin(), names.end(), "ews-reducible") != names.end();
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < trees.size(); i = next++) {
            TreeFacts facts(trees[i], opts.classify);
            outcomes[i].reserve(selected.size());
            for (const auto* r : selected) outcomes[i].push_back(guarded_run(*r, facts));
            if (track_greedy) {
                auto red = ews_reducible(trees[i]);
                greedy_differs[i] = red.reducible != red.greedy_reducible;
            }
        }
    };
    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }

    for (std::size_t c = 0; c < selected.size(); ++c) {
        CheckTally tally;
        tally.name = selected[c]->info.name;
        for (std::size_t i = 0; i < trees.size(); ++i) {
            if (const auto& o = outcomes[i][c]) {
                ++tally.failed;
                tally.counterexamples.push_back({canonical_code(trees[i]), *o});
            } else {
                ++tally.passed;
            }
        }
        result.checks.push_back(std::move(tally));
    }
    result.ews_greedy_disagreements = static_cast<int>(std::count(greedy_differs.begin(), greedy_differs.end(), 1));
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::string format_sweep_table(const SweepResult& r) {
    std::ostringstream out;
    out << "trees n=" << r.min_n << ".." << r.max_n << ": " << r.trees << " (";
    for (std::size_t i = 0; i < r.trees_per_order.size(); ++i) out << (i ? " " : "") << r.trees_per_order[i];
    out << ")\n";
    out << std::left << std::setw(22) << "check" << std::right << std::setw(8) << "pass" << std::setw(8) << "fail"
        << '\n';
    for (const auto& c : r.checks) {
        out << std::left << std::setw(22) << c.name << std::right << std::setw(8) << c.passed << std::setw(8)
            << c.failed << '\n';
    }
    for (const auto& c : r.checks) {
        for (const auto& ce : c.counterexamples) out << "counterexample " << c.name << ' ' << ce.code << ": " << ce.reason << '\n';
    }
    out << "greedy EWS disagreements: " << r.ews_greedy_disagreements << '\n';
    out << std::fixed << std::setprecision(2) << "wall time: " << r.seconds << " s\n";
    return out.str();
}

}  // namespace edt
