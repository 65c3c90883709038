#include <catch2/catch_amalgamated.hpp>

#include "turan/constructions.hpp"
#include "turan/forbidden.hpp"
#include "turan/named_graphs.hpp"
#include "turan/reductions.hpp"

using namespace turan;

TEST_CASE("bipartition subgraph") {
    Graph g = petersen_graph();
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph sub = random_bipartition_subgraph(g, seed);
        CHECK(bipartition(sub).has_value());
        for (const auto& [u, v] : sub.edges()) CHECK(g.adjacent(u, v));   // subgraph
    }
    CHECK(random_bipartition_subgraph(g, 7) == random_bipartition_subgraph(g, 7));
}

TEST_CASE("cyclic partition subgraph") {
    Graph g = complete_graph(8);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph sub = random_cyclic_partition_subgraph(g, 5, seed);
        CHECK(is_free(sub, ForbiddenSet{3}).free);
        auto og = odd_girth(sub, 8);
        if (og) CHECK(*og >= 5);
        for (const auto& [u, v] : sub.edges()) CHECK(g.adjacent(u, v));
    }
    CHECK(random_cyclic_partition_subgraph(g, 5, 3) == random_cyclic_partition_subgraph(g, 5, 3));
    CHECK_THROWS_AS(random_cyclic_partition_subgraph(g, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_cyclic_partition_subgraph(g, 1, 1), std::invalid_argument);
}

TEST_CASE("exact single-cycle retention by enumeration") {
    // bipartition: exactly the 2 alternating colorings survive
    CHECK(exact_bipartition_retention(4) == Rational(1, 8));
    CHECK(exact_bipartition_retention(6) == Rational(1, 32));
    CHECK(exact_bipartition_retention(3) == 0);   // odd cycles never survive

    // cyclic partition: the two orientations of the all-consecutive walk
    CHECK(exact_cyclic_retention(5, 5) == Rational(2, 625));
    CHECK(exact_cyclic_retention(7, 7) == Rational(2, Count(117649)));   // 2/7^6
    CHECK(exact_cyclic_retention(3, 5) == 0);   // C_3 cannot wrap 5 classes
}

TEST_CASE("retention estimates") {
    Graph k44 = complete_bipartite(4, 4);
    SECTION("floor fields") {
        RetentionEstimate e = estimate_retention(k44, 4, ReductionKind::Bipartition, 0, 10, 5);
        CHECK(e.base_count == 36);
        CHECK(e.analytic_floor == Rational(1, 8));
        RetentionEstimate c = estimate_retention(complete_graph(5), 5, ReductionKind::CyclicPartition, 5, 10, 5);
        CHECK(c.base_count == 12);
        CHECK(c.analytic_floor == Rational(1, 625));
    }
    SECTION("reproducible single trial") {
        RetentionEstimate a = estimate_retention(k44, 4, ReductionKind::Bipartition, 0, 1, 77);
        RetentionEstimate b = estimate_retention(k44, 4, ReductionKind::Bipartition, 0, 1, 77);
        CHECK(a.mean == b.mean);
    }
    SECTION("mean lands near 1/8 on a medium run") {
        RetentionEstimate e = estimate_retention(k44, 4, ReductionKind::Bipartition, 0, 2000, 11);
        CHECK(e.mean > 0.09);
        CHECK(e.mean < 0.16);
        CHECK(e.standard_error > 0.0);
    }
    SECTION("base count must be positive") {
        CHECK_THROWS_AS(estimate_retention(path_graph(4), 4, ReductionKind::Bipartition, 0, 5, 1),
                        std::invalid_argument);
    }
}
