// edt: eternal domination toolkit for trees.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "edt/characterize.hpp"
#include "edt/game.hpp"
#include "edt/graph.hpp"
#include "edt/sweep.hpp"
#include "edt/tree.hpp"

namespace fs = std::filesystem;
using namespace edt;

namespace {

enum Exit : int { kOk = 0, kCounterexample = 1, kInputError = 2, kBudget = 3, kInfeasible = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t budget_from_env() {
    const char* env = std::getenv("EDT_BUDGET");
    if (env == nullptr || *env == '\0') return kDefaultConfigBudget;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("EDT_BUDGET must be a positive integer, got '") + env + "'");
    }
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return parse_graph(text.str());
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    } catch (const GraphError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string value_or_dash(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

void print_text_report(const ClassificationReport& r, std::ostream& out) {
    out << "graph: n=" << r.n << " m=" << r.m << (r.is_tree ? " tree " + r.canonical_code : " (not a tree)") << '\n';
    out << "gamma " << value_or_dash(r.gamma) << "  gamma_c " << value_or_dash(r.gamma_c) << "  beta "
        << value_or_dash(r.beta) << "  ceil(n/2) " << r.half_ceil << "  theta_c " << value_or_dash(r.theta_c) << '\n';
    out << "gamma_m_inf " << value_or_dash(r.gamma_m_inf);
    if (r.gamma_m_inf_source) out << " (" << to_string(*r.gamma_m_inf_source) << ")";
    if (r.game) out << "  gamma_inf " << r.game->gamma_inf;
    out << "  solver " << r.game_status << '\n';
    if (r.equalities) {
        const auto& e = *r.equalities;
        out << "equal to: gamma " << yes_no(e.gamma) << ", 2gamma " << yes_no(e.two_gamma) << ", beta "
            << yes_no(e.beta) << ", gamma_c+1 " << yes_no(e.gamma_c_plus_one) << ", ceil(n/2) " << yes_no(e.half_ceil)
            << '\n';
    }
    if (r.corona) out << "corona: " << yes_no(r.corona->corona) << '\n';
    if (r.beta_check) {
        out << "EWS-reducible: " << yes_no(r.beta_check->reduction.reducible) << " (" << r.beta_check->reduction.steps.size()
            << " steps)\n";
    }
    if (r.k2_p3) out << "K2/P3 minimum partition: " << yes_no(r.k2_p3->holds) << '\n';
    if (r.two_gamma) {
        out << "2gamma conditions: " << yes_no(r.two_gamma->verdict) << " over " << r.two_gamma->per_set.size()
            << " minimum dominating sets\n";
    }
    if (r.gamma_c_plus_one) out << "spanning-forest witness: " << yes_no(r.gamma_c_plus_one->witness.has_value()) << '\n';
    for (const auto& [field, msg] : r.errors) out << "budget: " << field << ": " << msg << '\n';
    for (const auto& n : r.notices) out << "note: " << n << '\n';
    out << "consistent: " << yes_no(r.consistent) << '\n';
}

int cmd_compute(const std::string& path, bool no_solver, bool json) {
    const Graph g = load_graph(path);
    if (g.order() == 0) throw UsageError(path + ": graph has no vertices");
    ClassifyOptions opts;
    opts.use_solver = !no_solver;
    opts.budget = budget_from_env();
    const auto report = classify(g, opts);
    if (json) {
        std::cout << to_json(report).dump(2) << '\n';
    } else {
        print_text_report(report, std::cout);
    }
    if (report.budget_error()) return kBudget;
    return report.consistent ? kOk : kCounterexample;
}

int cmd_sweep(int max_n, const std::vector<std::string>& checks, int jobs) {
    SweepOptions opts;
    opts.max_n = max_n;
    opts.checks = checks;
    opts.jobs = jobs;
    opts.classify.budget = budget_from_env();
    try {
        resolve_checks(checks);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(e.what()) + " (see 'edt sweep --list')");
    }
    const auto result = run_sweep(opts);
    std::cout << format_sweep_table(result);
    std::cout << (result.ok() ? "no counterexamples\n"
                              : std::to_string(result.counterexample_count()) + " counterexamples\n");
    return result.ok() ? kOk : kCounterexample;
}

int cmd_play(const std::string& path, int guards, const std::string& attacker, int steps, std::uint64_t seed) {
    const Graph g = load_graph(path);
    if (!g.fits_mask()) throw UsageError("play supports at most 64 vertices");
    if (guards < 0 || guards > g.order()) throw UsageError("--guards must lie in 0.." + std::to_string(g.order()));
    const auto budget = budget_from_env();
    auto family = solve(g, MoveModel::AllGuards, guards, budget);
    if (!family) {
        const int minimum = eternal_number(g, MoveModel::AllGuards, std::max(1, domination_number(g)), budget);
        std::cerr << "no winning strategy with " << guards << " guards; minimum is " << minimum << '\n';
        return kInfeasible;
    }

    GuardConfig current = family->configs().front();
    std::mt19937_64 rng(seed);
    const bool human = attacker == "human";
    std::cout << "guards: " << to_string(current) << '\n';
    for (int step = 1; steps <= 0 || step <= steps; ++step) {
        std::vector<Vertex> open;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (!current.guards(v)) open.push_back(v);
        }
        if (open.empty()) {
            std::cout << "every vertex is guarded; nothing to attack\n";
            break;
        }
        Vertex attack = -1;
        if (human) {
            std::cout << "attack> " << std::flush;
            std::string line;
            if (!std::getline(std::cin, line)) break;
            if (line == "q" || line == "quit") break;
            try {
                std::size_t used = 0;
                attack = std::stoi(line, &used);
                if (used != line.size()) throw std::invalid_argument(line);
            } catch (const std::exception&) {
                std::cout << "enter a vertex id, or q to quit\n";
                --step;
                continue;
            }
            if (attack < 0 || attack >= g.order()) {
                std::cout << "vertex out of range 0.." << g.order() - 1 << '\n';
                --step;
                continue;
            }
            if (current.guards(attack)) {
                std::cout << "vertex " << attack << " already holds a guard; attack an unguarded vertex\n";
                --step;
                continue;
            }
        } else {
            attack = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
        }
        const GuardConfig next = defend(*family, current, attack);
        if (!is_dominating(g, next) || !next.guards(attack) || !all_guards_move_legal(g, current, next)) {
            std::cerr << "defender broke the rules at step " << step << '\n';
            return kCounterexample;
        }
        current = next;
        std::cout << "step " << step << ": attack " << attack << " -> guards " << to_string(current) << '\n';
    }
    return kOk;
}

int cmd_gen(int n, bool exhaustive, int random_count, std::uint64_t seed, const std::string& out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec || !fs::is_directory(out_dir)) throw UsageError("cannot create directory " + out_dir);

    auto write = [&](const std::string& name, const Tree& t, const std::string& comment) {
        const fs::path file = fs::path(out_dir) / name;
        std::ofstream out(file);
        out << format_edge_list(t.graph(), comment);
        if (!out) throw UsageError("cannot write " + file.string());
    };
    auto numbered = [](const std::string& prefix, int i) {
        std::ostringstream s;
        s << prefix << std::setw(3) << std::setfill('0') << i << ".el";
        return s.str();
    };

    int written = 0;
    if (exhaustive) {
        if (n > kDefaultMaxEnumerationOrder) {
            throw UsageError("--exhaustive supports n <= " + std::to_string(kDefaultMaxEnumerationOrder));
        }
        const auto trees = enumerate_trees(n);
        for (const auto& t : trees) {
            write(numbered("tree_n" + std::to_string(n) + "_", written), t, "canonical " + canonical_code(t));
            ++written;
        }
    } else {
        std::mt19937_64 seeds(seed);
        for (int i = 0; i < random_count; ++i) {
            const std::uint64_t s = seeds();
            const Tree t = random_tree(n, s);
            write(numbered("random_n" + std::to_string(n) + "_", i), t, "random tree, seed " + std::to_string(s));
            ++written;
        }
    }
    std::cout << "wrote " << written << " files to " << out_dir << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eternal domination toolkit: parameters, checks and playback for trees"};
    app.require_subcommand(1);

    std::string compute_file;
    bool no_solver = false;
    bool json = false;
    auto* compute = app.add_subcommand("compute", "Report every parameter and structural check for a graph");
    compute->add_option("file", compute_file, "Edge-list file")->required();
    compute->add_flag("--no-solver", no_solver, "Skip the game solver");
    compute->add_flag("--json", json, "Emit the JSON report");

    int max_n = 9;
    std::vector<std::string> checks{"all"};
    int jobs = 1;
    bool list = false;
    auto* sweep = app.add_subcommand("sweep", "Run checks over every tree up to a given order");
    sweep->add_option("--max-n", max_n, "Largest tree order")->check(CLI::Range(2, kSweepMaxOrder));
    sweep->add_option("--check", checks, "Check name, or all")->delimiter(',');
    sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
    sweep->add_flag("--list", list, "List check names and exit");

    std::string play_file;
    int guards = 0;
    std::string attacker = "human";
    int steps = 0;
    std::uint64_t seed = 1;
    auto* play = app.add_subcommand("play", "Defend attacks with a solver strategy (all guards move)");
    play->add_option("file", play_file, "Edge-list file")->required();
    play->add_option("--guards", guards, "Number of guards")->required();
    play->add_option("--attacker", attacker, "human or random")->check(CLI::IsMember({"human", "random"}));
    play->add_option("--steps", steps, "Attacks to play (default: until EOF, or 1000 for random)");
    play->add_option("--seed", seed, "Seed for the random attacker");

    int gen_n = 0;
    bool exhaustive = false;
    int random_count = 0;
    std::uint64_t gen_seed = 1;
    std::string out_dir;
    auto* gen = app.add_subcommand("gen", "Write trees as edge-list files");
    gen->add_option("--n", gen_n, "Tree order")->required()->check(CLI::PositiveNumber);
    auto* ex = gen->add_flag("--exhaustive", exhaustive, "One tree per isomorphism class");
    auto* rnd = gen->add_option("--random", random_count, "Number of random trees")->check(CLI::PositiveNumber);
    ex->excludes(rnd);
    gen->add_option("--seed", gen_seed, "Seed for random trees");
    gen->add_option("--out", out_dir, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*compute) return cmd_compute(compute_file, no_solver, json);
        if (*sweep) {
            if (list) {
                for (const auto& c : sweep_checks()) std::cout << std::left << std::setw(22) << c.name << c.description << '\n';
                return kOk;
            }
            return cmd_sweep(max_n, checks, jobs);
        }
        if (*play) {
            if (attacker == "random" && steps <= 0) steps = 1000;
            return cmd_play(play_file, guards, attacker, steps, seed);
        }
        if (*gen) {
            if (exhaustive == (random_count > 0)) throw UsageError("gen needs exactly one of --exhaustive or --random C");
            return cmd_gen(gen_n, exhaustive, random_count, gen_seed, out_dir);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << " (raise EDT_BUDGET)\n";
        return kBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}
