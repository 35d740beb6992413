#ifndef EDT_SWEEP_HPP
#define EDT_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "edt/characterize.hpp"
#include "edt/tree.hpp"

namespace edt {

struct SweepCheck {
    const char* name;
    const char* description;
};

/// Every check the sweep knows, in report order.
const std::vector<SweepCheck>& sweep_checks();

/// Throws std::invalid_argument on an unknown name. "all" expands to every check.
std::vector<std::string> resolve_checks(const std::vector<std::string>& names);

struct Counterexample {
    std::string code;  // canonical code of the tree
    std::string reason;
};

struct CheckTally {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::vector<Counterexample> counterexamples;
};

struct SweepOptions {
    int min_n = 2;
    int max_n = 9;
    std::vector<std::string> checks{"all"};
    int jobs = 1;
    ClassifyOptions classify;
};

struct SweepResult {
    int min_n = 2;
    int max_n = 2;
    int trees = 0;
    std::vector<int> trees_per_order;  // index n - min_n
    std::vector<CheckTally> checks;
    int ews_greedy_disagreements = 0;  // trees where greedy EWS and the full search differ
    double seconds = 0.0;

    bool ok() const;
    int counterexample_count() const;
};

constexpr int kSweepMaxOrder = 10;

/// Runs the selected checks on every tree of order min_n..max_n. Throws
/// std::invalid_argument if the range leaves 2..kSweepMaxOrder.
SweepResult run_sweep(const SweepOptions& opts);

/// One check on one tree: nullopt on pass, else the reason it failed.
std::optional<std::string> run_check(const std::string& name, const Tree& t, const ClassifyOptions& opts = {});

/// Fixed-width table, one row per check.
std::string format_sweep_table(const SweepResult& r);

}  // namespace edt

#endif
