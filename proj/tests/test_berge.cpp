#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "oracles.hpp"
#include "turan/berge.hpp"
#include "turan/constructions.hpp"
#include "turan/forbidden.hpp"
#include "turan/rng.hpp"

using namespace turan;

namespace {

Hypergraph random_hypergraph(int n, int max_edges, int max_size, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::vector<int>> edges;
    int m = 1 + static_cast<int>(rng.below(max_edges));
    for (int i = 0; i < m; ++i) {
        int sz = 2 + static_cast<int>(rng.below(max_size - 1));
        edges.push_back(sample_distinct(rng, n, sz));
    }
    return Hypergraph::make(n, std::move(edges));
}

} // namespace

TEST_CASE("hypergraph construction") {
    Hypergraph h = Hypergraph::make(5, {{2, 0, 1}, {0, 1, 2}, {3, 4}});
    CHECK(h.edges.size() == 2);   // duplicate collapsed after sorting
    CHECK(h.edges[0] == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(Hypergraph::make(3, {{0}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph::make(3, {{0, 5}}), std::invalid_argument);
    CHECK(sum_edge_sizes(h) == 5);
    CHECK(sum_edge_sizes(Hypergraph{}) == 0);
}

TEST_CASE("berge cycles, small instances") {
    Hypergraph triangle = Hypergraph::make(3, {{0, 1}, {1, 2}, {0, 2}});
    auto w3 = find_berge_cycle(triangle, 3);
    REQUIRE(w3.has_value());
    CHECK(berge_witness_valid(triangle, *w3));
    CHECK_FALSE(find_berge_cycle(triangle, 2).has_value());
    CHECK(hypergraph_girth(triangle, 5) == 3);

    Hypergraph sharing = Hypergraph::make(4, {{0, 1, 2}, {1, 2, 3}});
    auto w2 = find_berge_cycle(sharing, 2);
    REQUIRE(w2.has_value());
    CHECK(berge_witness_valid(sharing, *w2));
    CHECK(hypergraph_girth(sharing, 5) == 2);

    Hypergraph path = Hypergraph::make(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_FALSE(find_berge_cycle(path, 3).has_value());
    CHECK_FALSE(hypergraph_girth(path, 4).has_value());

    Hypergraph matching = Hypergraph::make(6, {{0, 1, 2}, {3, 4, 5}});
    CHECK_FALSE(hypergraph_girth(matching, 6).has_value());

    CHECK_THROWS_AS(find_berge_cycle(triangle, 1), std::invalid_argument);
}

TEST_CASE("berge detection matches exhaustive enumeration") {
    for (int i = 0; i < 120; ++i) {
        Hypergraph h = random_hypergraph(7, 5, 4, 11000 + i);
        for (int k = 2; k <= 5; ++k) {
            auto found = find_berge_cycle(h, k);
            CHECK(found.has_value() == oracles::has_berge_cycle(h, k));
            if (found) CHECK(berge_witness_valid(h, *found));
        }
    }
}

TEST_CASE("2-uniform berge cycles are graph cycles") {
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(7, 0.4, 12000 + i);
        std::vector<std::vector<int>> edges;
        for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
        if (edges.empty()) continue;
        Hypergraph h = Hypergraph::make(7, std::move(edges));
        for (int k = 3; k <= 6; ++k)
            CHECK(has_berge_cycle(h, k) == has_cycle_of_length(g, k));
    }
}

TEST_CASE("random greedy hypergraph generator") {
    SECTION("certified girth") {
        Hypergraph h = random_greedy_hypergraph(25, 5, 7, 10, 1);
        CHECK(h.uniform(5));
        CHECK(h.edges.size() >= 2);
        CHECK_FALSE(hypergraph_girth(h, 6).has_value());
    }
    SECTION("only one 5-set exists on 5 vertices") {
        Hypergraph h = random_greedy_hypergraph(5, 5, 3, 2, 99);
        CHECK(h.edges.size() == 1);
    }
    SECTION("deterministic per seed") {
        Hypergraph a = random_greedy_hypergraph(20, 3, 5, 12, 42);
        Hypergraph b = random_greedy_hypergraph(20, 3, 5, 12, 42);
        CHECK(a.edges == b.edges);
        Hypergraph c = random_greedy_hypergraph(20, 3, 5, 12, 43);
        CHECK(a.edges != c.edges);
    }
    SECTION("girth floors recertify across a seed grid") {
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            Hypergraph h = random_greedy_hypergraph(18, 3, 5, 10, seed);
            CHECK_FALSE(hypergraph_girth(h, 4).has_value());
        }
    }
}

TEST_CASE("regular uniform high girth generator") {
    SECTION("2-uniform 2-regular is a union of long cycles") {
        auto h = regular_uniform_high_girth(2, 2, 5, 7);
        REQUIRE(h.has_value());
        CHECK(h->uniform(2));
        std::vector<int> deg(h->order, 0);
        for (const auto& e : h->edges)
            for (int v : e) ++deg[v];
        for (int v = 0; v < h->order; ++v) CHECK(deg[v] == 2);
        CHECK_FALSE(hypergraph_girth(*h, 4).has_value());
    }
    SECTION("3-uniform 2-regular linear") {
        auto h = regular_uniform_high_girth(3, 2, 3, 5);
        if (h) {
            CHECK(h->uniform(3));
            std::vector<int> deg(h->order, 0);
            for (const auto& e : h->edges)
                for (int v : e) ++deg[v];
            for (int v = 0; v < h->order; ++v) CHECK(deg[v] == 2);
            CHECK_FALSE(hypergraph_girth(*h, 2).has_value());
        }
    }
}

TEST_CASE("expansion of generated hypergraphs avoids short cycles") {
    // uniformity 2l+1 = 5; ceilings 2k for k = 3, 4
    for (int k : {3, 4}) {
        const int g_floor = 2 * k + 1;
        Hypergraph h = random_greedy_hypergraph(30, 5, g_floor, 8, 17 + k);
        REQUIRE_FALSE(h.edges.empty());
        REQUIRE_FALSE(hypergraph_girth(h, g_floor - 1).has_value());
        Graph expanded = hyperedge_cycle_expansion(h, 5);
        for (int len = 3; len <= std::min(g_floor, 2 * k); ++len) {
            if (len == 5) continue;
            CHECK_FALSE(has_cycle_of_length(expanded, len));
        }
        CHECK(has_cycle_of_length(expanded, 5));
    }
}

TEST_CASE("ellis-linial vertex bound") {
    CHECK(ellis_linial_vertex_bound(2, 5, 2) == 11);
    // r=3,d=2,g=3: ratio x=2, sum=7, (r-1)(1+d(r-1)*7) = 2*(1+2*2*7) = 58
    CHECK(ellis_linial_vertex_bound(3, 3, 2) == 58);
    CHECK_THROWS_AS(ellis_linial_vertex_bound(1, 3, 2), std::invalid_argument);
}

TEST_CASE("hypergraph file round trip") {
    Hypergraph h = Hypergraph::make(6, {{0, 1, 2}, {2, 3}, {3, 4, 5}});
    std::string text = write_hypergraph(h);
    std::istringstream in(text);
    Hypergraph back = read_hypergraph(in);
    CHECK(back.order == h.order);
    CHECK(back.edges == h.edges);
}
