#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Counter-based deterministic generator (splitmix64): the state walks a
/// fixed gamma and the output is a bijective mix of it, so one 64-bit seed
/// gives an identical stream on every platform.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Uniform in [0,1) with 53 significand bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

/// r distinct values from [0,n), ascending draw by partial Fisher-Yates.
inline std::vector<int> sample_distinct(SplitMix64& rng, int n, int r) {
    if (r > n) throw std::invalid_argument("sample_distinct: r > n");
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::vector<int> out(r);
    for (int i = 0; i < r; ++i) {
        int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[i], pool[j]);
        out[i] = pool[i];
    }
    return out;
}

/// G(n,p) with each edge kept independently; deterministic per seed.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

/// Random bipartite graph on parts of sizes a and b (part one first).
inline Graph random_bipartite_graph(int a, int b, double p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    EdgeList edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            if (rng.unit() < p) edges.emplace_back(u, a + v);
    return build_graph(a + b, edges);
}

} // namespace turan
