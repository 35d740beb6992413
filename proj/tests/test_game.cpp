#include "doctest.h"

#include "edt/game.hpp"
#include "edt/invariants.hpp"
#include "edt/neocolon.hpp"
#include "oracles.hpp"

using namespace edt;

namespace {

const Graph kC6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});

Graph two_path_cycle() {
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {6, 7}, {7, 3}, {0, 8}, {8, 9}, {9, 3}});
}

Tree path9_two_pendants() {
    return make_tree(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {3, 9}, {5, 10}});
}

// Every member is dominating and every response is legal and covers the attack.
void check_family(const WinningFamily& f) {
    const Graph& g = f.host();
    for (std::size_t i = 0; i < f.configs().size(); ++i) {
        const GuardConfig& d = f.configs()[i];
        CHECK(d.size() == f.guards());
        CHECK(is_dominating(g, d));
        for (Vertex r = 0; r < g.order(); ++r) {
            const int j = f.response_index(i, r);
            if (d.guards(r)) {
                CHECK(j == -1);
                continue;
            }
            REQUIRE(j >= 0);
            const GuardConfig& next = f.configs()[static_cast<std::size_t>(j)];
            CHECK(next.guards(r));
            if (f.model() == MoveModel::AllGuards) {
                CHECK(all_guards_move_legal(g, d, next));
            } else {
                CHECK(single_guard_move_legal(g, d, next, r));
            }
        }
    }
}

}  // namespace

TEST_CASE("guard configurations") {
    const auto c = GuardConfig::of({3, 0});
    CHECK(c.vertices() == std::vector<Vertex>{0, 3});
    CHECK(c.size() == 2);
    CHECK(to_string(c) == "{0,3}");
    CHECK(GuardConfig::of({0, 3}) < GuardConfig::of({1, 2}));
    CHECK(GuardConfig::of({0, 1, 5}) < GuardConfig::of({0, 2}));
    CHECK(std::string(to_string(MoveModel::AllGuards)) == "all_guards");
    CHECK(std::string(to_string(MoveModel::SingleGuard)) == "single_guard");
}

TEST_CASE("domination of configurations") {
    CHECK(is_dominating(oracle::make_star(3), GuardConfig::of({0})));
    CHECK(is_dominating(oracle::make_path(4), GuardConfig::of({0, 3})));
    CHECK(is_dominating(oracle::make_path(4), GuardConfig::of({1, 3})));
    CHECK_FALSE(is_dominating(oracle::make_path(4), GuardConfig::of({0, 1})));
}

TEST_CASE("single-guard moves") {
    const Tree p4 = oracle::make_path(4);
    CHECK(single_guard_move_legal(p4, GuardConfig::of({1, 3}), GuardConfig::of({0, 3}), 0));
    CHECK_FALSE(single_guard_move_legal(p4, GuardConfig::of({1, 3}), GuardConfig::of({0, 1}), 0));
    CHECK(single_guard_move_legal(p4, GuardConfig::of({0, 3}), GuardConfig::of({0, 2}), 2));
    CHECK_FALSE(single_guard_move_legal(p4, GuardConfig::of({0, 3}), GuardConfig::of({0, 2}), 1));
    CHECK_FALSE(single_guard_move_legal(p4, GuardConfig::of({0, 3}), GuardConfig::of({2, 3}), 2));
    CHECK_FALSE(single_guard_move_legal(p4, GuardConfig::of({0, 2}), GuardConfig::of({0, 2}), 2));
}

TEST_CASE("all-guards moves") {
    const Tree p4 = oracle::make_path(4);
    CHECK(all_guards_move_legal(p4, GuardConfig::of({0, 2}), GuardConfig::of({0, 2})));
    CHECK(all_guards_move_legal(p4, GuardConfig::of({0, 2}), GuardConfig::of({1, 3})));
    CHECK_FALSE(all_guards_move_legal(p4, GuardConfig::of({0, 1}), GuardConfig::of({2, 3})));
    CHECK_FALSE(all_guards_move_legal(p4, GuardConfig::of({0, 1}), GuardConfig::of({1})));
    // two guards cannot both take the only neighbor of their positions
    const Tree star = oracle::make_star(3);
    CHECK_FALSE(all_guards_move_legal(star, GuardConfig::of({1, 2}), GuardConfig::of({0, 3})));
    CHECK(all_guards_move_legal(star, GuardConfig::of({0, 1}), GuardConfig::of({0, 2})));
}

TEST_CASE("solver families") {
    const Tree star = oracle::make_star(3);
    CHECK_FALSE(solve(star, MoveModel::AllGuards, 1).has_value());
    const auto star2 = solve(star, MoveModel::AllGuards, 2);
    REQUIRE(star2.has_value());
    check_family(*star2);

    const auto c6 = solve(kC6, MoveModel::AllGuards, 2);
    REQUIRE(c6.has_value());
    check_family(*c6);

    const Graph g = two_path_cycle();
    CHECK_FALSE(solve(g, MoveModel::AllGuards, 3).has_value());
    const auto g4 = solve(g, MoveModel::AllGuards, 4);
    REQUIRE(g4.has_value());
    check_family(*g4);

    const auto single = solve(oracle::make_path(4), MoveModel::SingleGuard, 2);
    REQUIRE(single.has_value());
    check_family(*single);

    CHECK_THROWS_AS(solve(star, MoveModel::AllGuards, 5), std::invalid_argument);
    CHECK_THROWS_AS(solve(star, MoveModel::AllGuards, -1), std::invalid_argument);
    CHECK_THROWS_AS(solve(oracle::make_path(20), MoveModel::AllGuards, 10, 1000), BudgetExceeded);
    CHECK_FALSE(solve(oracle::make_path(4), MoveModel::AllGuards, 0).has_value());
}

TEST_CASE("eternal numbers") {
    CHECK(eternal_number(oracle::make_path(4), MoveModel::AllGuards, 1) == 2);
    const auto spider = eternal_numbers(oracle::make_spider(3, 3));
    CHECK(spider.gamma_m_inf == 5);
    CHECK(spider.gamma_inf == 6);
    CHECK(eternal_numbers(path9_two_pendants()).gamma_m_inf == 6);
    CHECK(eternal_numbers(kC6).gamma_m_inf == 2);
    CHECK(eternal_numbers(kC6).gamma_inf == 3);
    CHECK(eternal_numbers(two_path_cycle()).gamma_m_inf == 4);
    for (int m = 2; m <= 9; ++m) CHECK(eternal_numbers(oracle::make_star(m)).gamma_m_inf == 2);
}

TEST_CASE("solver agrees with a naive fixpoint") {
    for (int n = 1; n <= 7; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            const int ref = oracle::m_eternal_number(t.graph());
            CHECK(eternal_numbers(t).gamma_m_inf == ref);
            CHECK(ref == oracle::theta(t.graph()));
        }
    }
    CHECK(oracle::m_eternal_number(kC6) == 2);
    CHECK(oracle::m_eternal_number(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}})) ==
          eternal_numbers(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}})).gamma_m_inf);
}

TEST_CASE("defend") {
    const auto c6 = solve(kC6, MoveModel::AllGuards, 2);
    REQUIRE(c6.has_value());
    for (const auto& d : c6->configs()) {
        for (Vertex r = 0; r < 6; ++r) {
            if (d.guards(r)) {
                CHECK_THROWS_AS(defend(*c6, d, r), std::invalid_argument);
                continue;
            }
            const auto next = defend(*c6, d, r);
            CHECK(next.guards(r));
            CHECK(c6->contains(next));
        }
    }

    const auto star = solve(oracle::make_star(3), MoveModel::AllGuards, 2);
    REQUIRE(star.has_value());
    const auto from = GuardConfig::of({0, 1});
    REQUIRE(star->contains(from));
    CHECK(defend(*star, from, 2).guards(2));
    CHECK_THROWS_AS(defend(*star, GuardConfig::of({1, 2}), 3), std::invalid_argument);
    CHECK_THROWS_AS(defend(*star, from, 7), std::invalid_argument);
}

TEST_CASE("guard placement from a dominating set") {
    CHECK(two_gamma_placement(oracle::make_star(3), DominatingSet{{0}}) == GuardConfig::of({0, 1}));
    CHECK(two_gamma_placement(oracle::make_path(4), DominatingSet{{1, 2}}) == GuardConfig::of({0, 1, 2, 3}));
    CHECK(two_gamma_placement(oracle::make_path(6), DominatingSet{{1, 4}}) == GuardConfig::of({0, 1, 3, 4}));
    CHECK_THROWS_AS(two_gamma_placement(oracle::make_path(6), DominatingSet{{1}}), std::invalid_argument);
}
