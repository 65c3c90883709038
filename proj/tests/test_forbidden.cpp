#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "turan/constructions.hpp"
#include "turan/forbidden.hpp"
#include "turan/named_graphs.hpp"
#include "turan/rng.hpp"

using namespace turan;

TEST_CASE("forbidden set views") {
    ForbiddenSet a{3, 4, 6, 7};
    CHECK(a.evens().lengths == std::set<int>{4, 6});
    CHECK(a.odds().lengths == std::set<int>{3, 7});
    CHECK(ForbiddenSet::up_to(5).lengths == std::set<int>{3, 4, 5});
    CHECK_THROWS_AS(ForbiddenSet({2}), std::invalid_argument);
}

TEST_CASE("girth") {
    CHECK(girth(petersen_graph()) == 5);
    CHECK(girth(theta_graph(3, 3)) == 6);
    CHECK_FALSE(girth(path_graph(6)).has_value());
    CHECK(girth(complete_graph(3)) == 3);
    CHECK(girth(named_graph("k_2_3")) == 4);
    CHECK_FALSE(girth(empty_graph(4)).has_value());
}

TEST_CASE("girth agrees with the smallest positive cycle count") {
    for (int i = 0; i < 60; ++i) {
        Graph g = random_graph(9, 0.22, 2500 + i);
        CHECK(girth(g) == oracles::girth(g));
    }
}

TEST_CASE("has_cycle_of_length") {
    CHECK_FALSE(has_cycle_of_length(named_graph("k_2_3"), 6));
    CHECK(has_cycle_of_length(named_graph("k_3_3"), 6));
    CHECK(has_cycle_of_length(cycle_graph(7), 7));
    CHECK_FALSE(has_cycle_of_length(cycle_graph(7), 5));
    CHECK_THROWS_AS(has_cycle_of_length(cycle_graph(7), 2), std::invalid_argument);

    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(8, 0.35, 3600 + i);
        for (int k = 3; k <= 8; ++k)
            CHECK(has_cycle_of_length(g, k) == (count_cycles(g, k).count > 0));
    }
}

TEST_CASE("is_free and witnesses") {
    CHECK(is_free(complete_bipartite(2, 8), ForbiddenSet{6}).free);
    CHECK(is_free(path_graph(7), ForbiddenSet{3, 4, 5, 6}).free);

    FreeCheck chk = is_free(blown_up_cycle(6, 3), ForbiddenSet{3, 4, 5});
    REQUIRE_FALSE(chk.free);
    CHECK(chk.violated_length == 4);
    REQUIRE(chk.witness.size() == 4);

    // witness cycles must be genuine: distinct vertices, consecutive adjacent
    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(9, 0.4, 5100 + i);
        FreeCheck c = is_free(g, ForbiddenSet{3, 5, 6});
        if (c.free) continue;
        std::set<int> distinct(c.witness.begin(), c.witness.end());
        CHECK(distinct.size() == c.witness.size());
        CHECK(static_cast<int>(c.witness.size()) == c.violated_length);
        for (std::size_t j = 0; j < c.witness.size(); ++j)
            CHECK(g.adjacent(c.witness[j], c.witness[(j + 1) % c.witness.size()]));
    }
}

TEST_CASE("cycle spectrum") {
    SECTION("theta-(15,C3,3): hexagons inside thetas, 9-cycles around") {
        Graph g = theta_of_graph(15, cycle_graph(3), 3);
        CycleSpectrum s = cycle_spectrum(g, 9);
        CHECK(s.present_lengths() == std::set<int>{6, 9});
        CHECK(s.girth == 6);
    }
    SECTION("petersen up to 6") {
        CycleSpectrum s = cycle_spectrum(petersen_graph(), 6);
        CHECK(s.present_lengths() == std::set<int>{5, 6});
        CHECK(s.girth == 5);
    }
    SECTION("K4") {
        CycleSpectrum s = cycle_spectrum(complete_graph(4), 4);
        CHECK(s.present_at(3));
        CHECK(s.present_at(4));
    }
    SECTION("consistency with counts") {
        for (int i = 0; i < 25; ++i) {
            Graph g = random_graph(8, 0.3, 6200 + i);
            CycleSpectrum s = cycle_spectrum(g, 8);
            for (int k = 3; k <= 8; ++k) CHECK(s.present_at(k) == (count_cycles(g, k).count > 0));
        }
    }
}

TEST_CASE("even and odd girth helpers") {
    CHECK(even_girth(petersen_graph(), 8) == 6);
    CHECK(odd_girth(petersen_graph(), 8) == 5);
    CHECK_FALSE(odd_girth(named_graph("k_3_3"), 9).has_value());
    CHECK(even_girth(named_graph("k_3_3"), 9) == 4);
}

TEST_CASE("bipartite graphs avoid every odd set") {
    for (int i = 0; i < 20; ++i) {
        Graph g = random_bipartite_graph(5, 6, 0.5, 7300 + i);
        CHECK(is_free(g, ForbiddenSet{3, 5, 7, 9, 11}).free);
    }
}
