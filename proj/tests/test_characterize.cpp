#include "doctest.h"

#include "edt/characterize.hpp"
#include "oracles.hpp"

using namespace edt;

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

Tree corona_p3() { return make_tree(6, {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {2, 5}}); }

Tree path9_two_pendants() {
    return make_tree(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {3, 9}, {5, 10}});
}

}  // namespace

TEST_CASE("corona recognition") {
    CHECK(is_corona(oracle::make_path(2)));
    CHECK(is_corona(oracle::make_path(4)));
    const auto m = corona_matching(corona_p3());
    REQUIRE(m.has_value());
    CHECK(*m == Pairs{{0, 3}, {1, 4}, {2, 5}});
    CHECK_FALSE(is_corona(oracle::make_path(6)));
    CHECK_FALSE(is_corona(oracle::make_path(1)));
    CHECK_FALSE(is_corona(oracle::make_path(3)));
    CHECK_FALSE(is_corona(oracle::make_star(3)));

    for (int n = 1; n <= 10; ++n) {
        const auto codes = n % 2 == 0 ? oracle::corona_codes(n) : std::set<std::string>{};
        for (const Tree& t : enumerate_trees(n)) {
            CHECK(is_corona(t) == codes.contains(oracle::root_min_code(t.graph())));
        }
    }
}

TEST_CASE("gamma equality verdicts") {
    const auto p4 = check_gamma_equality(oracle::make_path(4));
    CHECK(p4.equality());
    CHECK(p4.corona);
    CHECK(p4.consistent());

    const auto star = check_gamma_equality(oracle::make_star(3));
    CHECK(star.gamma == 1);
    CHECK(star.gamma_m_inf == 2);
    CHECK_FALSE(star.equality());
    CHECK(star.consistent());

    const auto c = check_gamma_equality(corona_p3());
    CHECK(c.equality());
    CHECK(c.gamma_m_inf == 3);
}

TEST_CASE("exposed weak stem deletion") {
    const auto p6 = apply_ews(oracle::make_path(6), 1);
    CHECK(p6.tree == oracle::make_path(4));
    CHECK(p6.to_host == std::vector<Vertex>{2, 3, 4, 5});
    CHECK(apply_ews(oracle::make_path(4), 1).tree == oracle::make_path(2));
    CHECK_THROWS_AS(apply_ews(oracle::make_star(3), 0), std::invalid_argument);
    CHECK_THROWS_AS(apply_ews(oracle::make_path(6), 2), std::invalid_argument);
    CHECK_THROWS_AS(apply_ews(oracle::make_path(2), 0), std::invalid_argument);
}

TEST_CASE("EWS reducibility") {
    const auto p6 = ews_reducible(oracle::make_path(6));
    CHECK(p6.reducible);
    CHECK(p6.steps == std::vector<EwsStep>{{1, 0}, {3, 2}});
    CHECK(p6.terminal_order == 2);

    const auto c = ews_reducible(corona_p3());
    CHECK(c.reducible);

    const auto spider = ews_reducible(oracle::make_spider(3, 3));
    CHECK_FALSE(spider.reducible);
    CHECK_FALSE(spider.greedy_reducible);

    const auto k2 = ews_reducible(oracle::make_path(2));
    CHECK(k2.reducible);
    CHECK(k2.steps.empty());
    CHECK(ews_reducible(oracle::make_path(3)).reducible);
    CHECK_FALSE(ews_reducible(oracle::make_star(3)).reducible);
}

TEST_CASE("beta equality verdicts") {
    const auto p6 = check_beta_equality(oracle::make_path(6));
    CHECK(p6.beta == 3);
    CHECK(p6.equality());
    CHECK(p6.consistent());

    const auto spider = check_beta_equality(oracle::make_spider(3, 3));
    CHECK(spider.beta == 6);
    CHECK(spider.gamma_m_inf == 5);
    CHECK_FALSE(spider.equality());
    CHECK(spider.consistent());

    const auto k2 = check_beta_equality(oracle::make_path(2));
    CHECK(k2.equality());
    CHECK(k2.reduction.steps.empty());
    CHECK_THROWS_AS(check_beta_equality(oracle::make_path(1)), std::invalid_argument);
}

TEST_CASE("K_2 / P_3 minimum partitions") {
    const auto p6 = check_k2_p3_neocolonization(oracle::make_path(6));
    CHECK(p6.holds);
    REQUIRE(p6.witness.has_value());
    CHECK(p6.witness->parts == std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}, {4, 5}});

    const auto p5 = check_k2_p3_neocolonization(oracle::make_path(5));
    CHECK(p5.holds);
    REQUIRE(p5.witness.has_value());
    CHECK(p5.witness->total_weight == 3);

    // the spider has no partition into K_2's and a single P_3 at all, and
    // its best K_2/P_3 split (two P_3's) weighs 6 > 5
    const Tree spider = oracle::make_spider(3, 3);
    CHECK_FALSE(check_k2_p3_neocolonization(spider).holds);
    CHECK_FALSE(check_k2_p3_neocolonization(spider, K2P3Method::Matching).holds);
    const auto two_p3 = make_neocolonization(spider, {{0, 1, 4}, {2, 3}, {5, 6}, {7, 8, 9}});
    CHECK(two_p3.total_weight == 6);

    for (int n = 2; n <= 10; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            CHECK(check_k2_p3_neocolonization(t, K2P3Method::Exhaustive).holds ==
                  check_k2_p3_neocolonization(t, K2P3Method::Matching).holds);
        }
    }
}

TEST_CASE("2gamma conditions") {
    SUBCASE("K_{1,3}") {
        const auto r = check_2gamma_conditions(oracle::make_star(3));
        REQUIRE(r.per_set.size() == 1);
        CHECK(r.per_set[0].all());
        CHECK(r.verdict);
        CHECK(r.labeling_verdict);
        CHECK(r.fat_finest == true);
    }
    SUBCASE("P_4 fails independence for {1,2}") {
        const auto r = check_2gamma_conditions(oracle::make_path(4));
        CHECK_FALSE(r.verdict);
        const auto it = std::find_if(r.per_set.begin(), r.per_set.end(),
                                     [](const auto& s) { return s.d.vertices == std::vector<Vertex>{1, 2}; });
        REQUIRE(it != r.per_set.end());
        CHECK_FALSE(it->b.holds);
        CHECK(it->b.witness == std::vector<Vertex>{1, 2});
    }
    SUBCASE("P_6 with {1,4} fails the induced-path condition") {
        const auto r = check_2gamma_conditions(oracle::make_path(6));
        CHECK_FALSE(r.verdict);
        const auto it = std::find_if(r.per_set.begin(), r.per_set.end(),
                                     [](const auto& s) { return s.d.vertices == std::vector<Vertex>{1, 4}; });
        REQUIRE(it != r.per_set.end());
        CHECK(it->a.holds);
        CHECK(it->b.holds);
        CHECK(it->d_cond.holds);
        CHECK_FALSE(it->e.holds);
        CHECK(it->e.witness == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
        CHECK_FALSE(it->le.holds);
    }
    SUBCASE("forms agree on small trees") {
        for (int n = 2; n <= 9; ++n) {
            for (const Tree& t : enumerate_trees(n)) CHECK(check_2gamma_conditions(t).forms_agree);
        }
    }
}

TEST_CASE("fat dominating set partitions") {
    const Tree star = oracle::make_star(3);
    CHECK(is_fat_dominating_set_partition(star, make_neocolonization(star, {{0, 1, 2, 3}}), 1));
    const Tree p6 = oracle::make_path(6);
    CHECK(is_fat_dominating_set_partition(p6, make_neocolonization(p6, {{0, 1, 2}, {3, 4, 5}}), 2));
    CHECK_FALSE(is_fat_dominating_set_partition(p6, make_neocolonization(p6, {{0, 1}, {2, 3}, {4, 5}}), 2));
    CHECK_FALSE(is_fat_dominating_set_partition(p6, make_neocolonization(p6, {{0, 1, 2, 3}, {4, 5}}), 2));
}

TEST_CASE("gamma_c + 1 verdicts") {
    const auto star = check_gammac_plus_one(oracle::make_star(3));
    CHECK(star.equality());
    CHECK_FALSE(star.witness.has_value());
    CHECK(star.consistent());

    const auto p6 = check_gammac_plus_one(oracle::make_path(6));
    CHECK_FALSE(p6.equality());
    REQUIRE(p6.witness.has_value());
    CHECK(p6.witness->k == 0);
    CHECK(p6.witness->r == 3);

    const auto p4 = check_gammac_plus_one(oracle::make_path(4));
    REQUIRE(p4.witness.has_value());
    CHECK(p4.witness->r == 2);
    CHECK(p4.witness->k == 0);
}

TEST_CASE("reference game numbers") {
    const auto solver = reference_game_numbers(oracle::make_spider(3, 3));
    CHECK(solver.source == GameSource::Solver);
    CHECK(solver.gamma_m_inf == 5);

    ClassifyOptions off;
    off.use_solver = false;
    const auto theta = reference_game_numbers(oracle::make_spider(3, 3), off);
    CHECK(theta.source == GameSource::ThetaC);
    CHECK(theta.gamma_m_inf == 5);
    CHECK_FALSE(theta.note.empty());

    ClassifyOptions tiny;
    tiny.budget = 10;
    CHECK(reference_game_numbers(oracle::make_spider(3, 3), tiny).source == GameSource::ThetaC);
}

TEST_CASE("classification reports") {
    SUBCASE("corona of P_3") {
        const auto r = classify(corona_p3());
        REQUIRE(r.equalities.has_value());
        CHECK(r.equalities->gamma);
        CHECK_FALSE(r.equalities->two_gamma);
        CHECK(r.equalities->beta);
        CHECK_FALSE(r.equalities->gamma_c_plus_one);
        CHECK(r.equalities->half_ceil);
        CHECK(r.gamma_m_inf == 3);
        CHECK(r.consistent);
    }
    SUBCASE("K_{1,3}") {
        const auto r = classify(oracle::make_star(3));
        REQUIRE(r.equalities.has_value());
        CHECK_FALSE(r.equalities->gamma);
        CHECK(r.equalities->two_gamma);
        CHECK_FALSE(r.equalities->beta);
        CHECK(r.equalities->gamma_c_plus_one);
        CHECK(r.equalities->half_ceil);
    }
    SUBCASE("path with two pendants") {
        const auto r = classify(path9_two_pendants());
        CHECK(r.gamma_m_inf == 6);
        CHECK(r.half_ceil == 6);
        CHECK(r.equalities->half_ceil);
        CHECK(r.game_status == "verified");
    }
    SUBCASE("non-tree graphs skip the tree checks") {
        const Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
        const auto r = classify(c6);
        CHECK_FALSE(r.is_tree);
        CHECK(r.gamma_m_inf == 2);
        CHECK(r.theta_c == 3);
        CHECK_FALSE(r.corona.has_value());
        CHECK_FALSE(r.two_gamma.has_value());
        CHECK(r.consistent);
        const auto j = to_json(r);
        CHECK(j["checks"]["corona"]["applicable"] == false);
        CHECK(j["graph"]["is_tree"] == false);
    }
    SUBCASE("budget errors are reported per field") {
        ClassifyOptions tiny;
        tiny.budget = 10;
        const Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
        const auto r = classify(c6, tiny);
        CHECK(r.budget_error());
        CHECK(r.errors.contains("game"));
        CHECK(r.game_status == "unverified");

        const auto t = classify(oracle::make_spider(3, 3), tiny);
        CHECK_FALSE(t.budget_error());
        CHECK(t.game_status == "unverified");
        CHECK(t.gamma_m_inf == 5);
    }
    SUBCASE("single vertex") {
        const auto r = classify(oracle::make_path(1));
        CHECK(r.n == 1);
        CHECK_FALSE(r.notices.empty());
    }
}

TEST_CASE("JSON reports round-trip") {
    for (const Tree& t : {corona_p3(), oracle::make_spider(3, 3), oracle::make_path(1), oracle::make_star(4)}) {
        const std::string first = to_json(classify(t)).dump(2);
        CHECK(nlohmann::json::parse(first).dump(2) == first);
    }
    const auto j = to_json(classify(oracle::make_path(4)));
    for (const char* key : {"graph", "parameters", "game", "equalities", "roles", "theta_witness", "checks", "errors",
                            "notices", "consistent"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["parameters"]["gamma"] == 2);
    CHECK(j["parameters"]["gamma_m_inf"] == 2);
    CHECK(j["checks"]["corona"]["corona"] == true);
}
