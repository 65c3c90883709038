#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "turan/constructions.hpp"
#include "turan/named_graphs.hpp"
#include "turan/rng.hpp"
#include "turan/spectral.hpp"

using namespace turan;

TEST_CASE("spectral radius on graphs with known spectra") {
    CHECK(spectral_radius(complete_bipartite(4, 9)).mu == Catch::Approx(6.0).margin(1e-8));
    for (int n : {5, 8, 13}) CHECK(spectral_radius(cycle_graph(n)).mu == Catch::Approx(2.0).margin(1e-8));
    for (int n : {5, 7}) CHECK(spectral_radius(complete_graph(n)).mu == Catch::Approx(n - 1.0).margin(1e-8));

    SpectralReport empty = spectral_radius(empty_graph(4));
    CHECK(empty.edgeless);
    CHECK(empty.mu == 0.0);

    CHECK_THROWS_AS(spectral_radius(complete_graph(3), 0.0), std::invalid_argument);
}

TEST_CASE("mu(K_ab)^2 = ab across the grid") {
    for (int a = 1; a <= 12; a += 2)
        for (int b = a; b <= 12; b += 3) {
            double mu = spectral_radius(complete_bipartite(a, b)).mu;
            CHECK(mu * mu == Catch::Approx(static_cast<double>(a) * b).epsilon(1e-8));
        }
}

TEST_CASE("spectral radius sits between average and max degree") {
    for (int i = 0; i < 25; ++i) {
        Graph g = random_graph(16, 0.3, 14000 + i);
        if (g.edge_count() == 0) continue;
        double mu = spectral_radius(g).mu;
        double avg = 2.0 * g.edge_count() / g.order();
        int maxdeg = 0;
        for (int v = 0; v < g.order(); ++v) maxdeg = std::max(maxdeg, g.degree(v));
        CHECK(mu >= avg - 1e-9);
        CHECK(mu <= maxdeg + 1e-9);
    }
}

TEST_CASE("walk chain") {
    SECTION("l=2 is the equality case") {
        for (int i = 0; i < 10; ++i) {
            Graph g = random_graph(10, 0.4, 15000 + i);
            if (g.edge_count() == 0) continue;
            SpectralReport r = walk_chain_check(g, 2);
            CHECK(r.path_lhs == r.walk_ratio);
            CHECK(r.chain_holds);
        }
    }
    SECTION("K_23 and C_6") {
        SpectralReport r = walk_chain_check(named_graph("k_2_3"), 3);
        CHECK(r.path_lhs == Rational(2 * 9, 5));   // N(P_3, K_{2,3}) = 9
        CHECK(r.chain_holds);
        SpectralReport c = walk_chain_check(cycle_graph(6), 4);
        CHECK(c.mu == Catch::Approx(2.0).margin(1e-9));
        CHECK(c.chain_holds);
    }
    SECTION("seeded batch, l in 2..6") {
        for (int i = 0; i < 12; ++i) {
            Graph g = random_graph(8 + (i * 3) % 20, 0.3, 16000 + i);
            if (g.edge_count() == 0) continue;
            for (int l = 2; l <= 6; ++l) CHECK(walk_chain_check(g, l).chain_holds);
        }
    }
}

TEST_CASE("nikiforov bound formulas") {
    CHECK(nikiforov_odd_bound(100) == Catch::Approx(50.0));
    CHECK(nikiforov_even_bound(100, 2) == Catch::Approx(0.5 + 10.0));
    CHECK(nikiforov_odd_applicable(3000, 2));
    CHECK_FALSE(nikiforov_odd_applicable(100, 2));

    // K_{50,50} is C_5-free and attains mu = n/2
    double mu = spectral_radius(complete_bipartite(50, 50)).mu;
    CHECK(mu == Catch::Approx(50.0).margin(1e-8));
    CHECK(mu <= nikiforov_odd_bound(100) + 1e-8);
}

TEST_CASE("path upper bounds") {
    SECTION("odd case asserts exactly") {
        PathBoundReport r = path_upper_bound_check(complete_bipartite(10, 10), 3, true);
        CHECK(r.path_count == 900);
        CHECK(r.holds);
        PathBoundReport r4 = path_upper_bound_check(complete_bipartite(12, 12), 4, true);
        CHECK(r4.path_count <= Count(12) * 12 * 12 * 12);
        CHECK(r4.holds);
    }
    SECTION("odd n uses the exact 2^l scaling") {
        PathBoundReport r = path_upper_bound_check(complete_bipartite(4, 5), 3, true);
        CHECK(r.holds);   // N(P_3,K_{4,5}) = 70 <= (9/2)^3
    }
    SECTION("even case reports without asserting") {
        PathBoundReport r = path_upper_bound_check(complete_bipartite(2, 20), 3, false, 3);
        CHECK(r.holds);
        CHECK(r.formula > 0.0);
    }
    SECTION("triangle-free random graphs, l=3") {
        for (int i = 0; i < 15; ++i) {
            Graph g = random_bipartite_graph(6, 7, 0.5, 17000 + i);
            CHECK(path_upper_bound_check(g, 3, true).holds);
        }
    }
}
