#ifndef EDT_CHARACTERIZE_HPP
#define EDT_CHARACTERIZE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "edt/game.hpp"
#include "edt/graph.hpp"
#include "edt/invariants.hpp"
#include "edt/neocolon.hpp"
#include "edt/tree.hpp"

namespace edt {

struct ClassifyOptions {
    bool use_solver = true;
    int solver_max_n = 12;
    std::uint64_t budget = kDefaultConfigBudget;
};

enum class GameSource { Solver, ThetaC };

const char* to_string(GameSource s);

/// γ_m^∞ of a tree: from the solver when in range and budget, otherwise θ_c.
struct GameReference {
    int gamma_m_inf = 0;
    GameSource source = GameSource::ThetaC;
    std::optional<GameNumbers> solver;
    std::string note;  // why the solver was skipped, if it was
};

GameReference reference_game_numbers(const Tree& t, const ClassifyOptions& opts = {});

// ---------------------------------------------------------------- corona

/// Pendant matching (base vertex, its pendant) when t is a corona.
std::optional<std::vector<std::pair<Vertex, Vertex>>> corona_matching(const Tree& t);
bool is_corona(const Tree& t);

struct GammaEqualityVerdict {
    int gamma = 0;
    int gamma_m_inf = 0;
    bool corona = false;
    std::vector<std::pair<Vertex, Vertex>> matching;
    bool equality() const { return gamma_m_inf == gamma; }
    bool consistent() const { return equality() == corona; }
};

GammaEqualityVerdict check_gamma_equality(const Tree& t, const GameReference& ref);
GammaEqualityVerdict check_gamma_equality(const Tree& t);

// ---------------------------------------------------------------- EWS

struct EwsStep {
    Vertex stem;
    Vertex leaf;
    friend bool operator==(const EwsStep&, const EwsStep&) = default;
};

struct EwsResult {
    Tree tree;
    std::vector<Vertex> to_host;  // new id -> id in the input tree
};

/// Deletes an exposed weak stem and its leaf. Throws std::invalid_argument
/// if `stem` is not an exposed weak stem.
EwsResult apply_ews(const Tree& t, Vertex stem);

struct EwsReduction {
    bool reducible = false;
    std::vector<EwsStep> steps;  // ids of the input tree
    int terminal_order = 0;      // order of the tree the steps end on
    bool greedy_reducible = false;
    std::vector<EwsStep> greedy_steps;
};

/// Searches application orders (memoized on canonical code) for a reduction
/// to K_1, K_2 or P_3. The max-eccentricity greedy run is reported alongside.
EwsReduction ews_reducible(const Tree& t);

struct BetaEqualityVerdict {
    int beta = 0;
    int gamma_m_inf = 0;
    EwsReduction reduction;
    bool equality() const { return gamma_m_inf == beta; }
    bool consistent() const { return equality() == reduction.reducible; }
};

BetaEqualityVerdict check_beta_equality(const Tree& t, const GameReference& ref);
BetaEqualityVerdict check_beta_equality(const Tree& t);

struct K2P3Result {
    bool holds = false;
    std::optional<NeoColonization> witness;
    bool exhaustive = false;  // searched all minimum partitions rather than by matching
};

enum class K2P3Method { Auto, Exhaustive, Matching };

/// Some minimum-weight neo-colonization uses only K_2 and P_3 parts with at
/// most one P_3. Auto enumerates minimum partitions up to the enumeration
/// limit and falls back to forest matchings above it.
K2P3Result check_k2_p3_neocolonization(const Tree& t, K2P3Method method = K2P3Method::Auto);

// ---------------------------------------------------------------- 2γ

/// One condition's verdict; witness lists the offending vertices when it fails.
struct Condition {
    bool holds = true;
    std::vector<Vertex> witness;
};

struct DominatingSetConditions {
    DominatingSet d;
    Condition a, b, c, d_cond, e;                 // adjacency / private-neighbor form
    Condition la, lb, lc, ld, le;                 // labeling form
    bool all() const { return a.holds && b.holds && c.holds && d_cond.holds && e.holds; }
    bool labeling_all() const { return la.holds && lb.holds && lc.holds && ld.holds && le.holds; }
};

struct TwoGammaConditionReport {
    std::vector<DominatingSetConditions> per_set;
    bool verdict = false;            // conditions hold for every minimum dominating set
    bool labeling_verdict = false;
    bool forms_agree = true;         // per set, both forms give the same overall answer
    std::optional<bool> fat_finest;  // a finest partition is a fat dominating set partition (n <= 10)
    std::optional<NeoColonization> fat_finest_witness;
};

/// Throws BudgetExceeded if the minimum dominating sets are too many to list.
TwoGammaConditionReport check_2gamma_conditions(const Tree& t);

/// True iff the partition is a fat dominating set partition: γ parts, each a
/// star on at least three vertices.
bool is_fat_dominating_set_partition(const Tree& t, const NeoColonization& p, int gamma);

// ---------------------------------------------------------------- γ_c + 1

struct GammaCPlusOneVerdict {
    int gamma_c = 0;
    int gamma_m_inf = 0;
    std::optional<SpanningForestWitness> witness;
    std::string witness_error;  // non-empty if the emitted witness failed re-verification
    bool equality() const { return gamma_m_inf == gamma_c + 1; }
    bool consistent() const { return equality() == !witness.has_value() && witness_error.empty(); }
};

GammaCPlusOneVerdict check_gammac_plus_one(const Tree& t, const GameReference& ref);
GammaCPlusOneVerdict check_gammac_plus_one(const Tree& t);

// ---------------------------------------------------------------- report

struct Equalities {
    bool gamma = false;
    bool two_gamma = false;
    bool beta = false;
    bool gamma_c_plus_one = false;
    bool half_ceil = false;
};

struct ClassificationReport {
    int n = 0;
    int m = 0;
    bool is_tree = false;
    std::string canonical_code;
    std::optional<int> gamma, gamma_c, beta;
    int half_ceil = 0;
    std::optional<int> theta_c;
    std::optional<GameNumbers> game;  // solver results
    std::string game_status;          // verified | unverified | skipped
    std::optional<int> gamma_m_inf;   // solver value, else θ_c for trees
    std::optional<GameSource> gamma_m_inf_source;
    std::optional<Equalities> equalities;

    std::optional<GammaEqualityVerdict> corona;
    std::optional<BetaEqualityVerdict> beta_check;
    std::optional<K2P3Result> k2_p3;
    std::optional<TwoGammaConditionReport> two_gamma;
    std::optional<GammaCPlusOneVerdict> gamma_c_plus_one;
    std::optional<NeoColonization> theta_witness;
    std::optional<VertexClassification> roles;

    std::map<std::string, std::string> errors;  // field -> budget message
    std::vector<std::string> notices;
    bool consistent = true;

    bool budget_error() const { return !errors.empty(); }
};

ClassificationReport classify(const Graph& g, const ClassifyOptions& opts = {});
ClassificationReport classify(const Tree& t, const ClassifyOptions& opts = {});

nlohmann::json to_json(const ClassificationReport& r);

}  // namespace edt

#endif
