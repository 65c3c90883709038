#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

#include "turan/counting.hpp"
#include "turan/graph.hpp"
#include "turan/rng.hpp"

namespace turan {

using Rational = boost::multiprecision::cpp_rational;

/// Random 2-coloring, monochromatic edges deleted; the output is bipartite.
inline Graph random_bipartition_subgraph(const Graph& g, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const int n = g.order();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = static_cast<int>(rng.next() & 1);
    EdgeList kept;
    for (const auto& [u, v] : g.edges())
        if (color[u] != color[v]) kept.emplace_back(u, v);
    return build_graph(n, kept);
}

/// Random partition into `classes` cyclically ordered classes, keeping only
/// edges between consecutive classes; every odd cycle of the output has
/// length >= classes.
inline Graph random_cyclic_partition_subgraph(const Graph& g, int classes, std::uint64_t seed) {
    if (classes < 3 || classes % 2 == 0)
        throw std::invalid_argument("random_cyclic_partition_subgraph: classes must be odd and >= 3");
    SplitMix64 rng(seed);
    const int n = g.order();
    std::vector<int> cls(n);
    for (int v = 0; v < n; ++v) cls[v] = static_cast<int>(rng.below(classes));
    EdgeList kept;
    for (const auto& [u, v] : g.edges()) {
        int d = (cls[u] - cls[v] + classes) % classes;
        if (d == 1 || d == classes - 1) kept.emplace_back(u, v);
    }
    return build_graph(n, kept);
}

enum class ReductionKind { Bipartition, CyclicPartition };

struct RetentionEstimate {
    ReductionKind reduction = ReductionKind::Bipartition;
    int cycle_length = 0;
    int classes = 0;            // CyclicPartition only
    int trials = 0;
    Count base_count;           // exact count in G
    double mean = 0.0;          // average retained fraction
    double standard_error = 0.0;
    Rational analytic_floor;       // 2^-(2k-1) resp. (2k+1)^-2k
};

/// Monte-Carlo estimate of the per-trial retained fraction of cycle_length
/// cycles under one of the two reductions. Trial seeds derive as
/// seed XOR trial index; results are reproducible per seed.
inline RetentionEstimate estimate_retention(const Graph& g, int cycle_length, ReductionKind kind,
                                            int classes, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("estimate_retention: need trials >= 1");
    Count base = count_cycles(g, cycle_length).count;
    if (base == 0) throw std::invalid_argument("estimate_retention: graph has no cycle of that length");

    RetentionEstimate est;
    est.reduction = kind;
    est.cycle_length = cycle_length;
    est.classes = kind == ReductionKind::CyclicPartition ? classes : 0;
    est.trials = trials;
    est.base_count = base;
    if (kind == ReductionKind::Bipartition) {
        Rational half(1, 2);
        est.analytic_floor = 1;
        for (int i = 0; i < cycle_length - 1; ++i) est.analytic_floor *= half;
    } else {
        Rational inv(1, classes);
        est.analytic_floor = 1;
        for (int i = 0; i < classes - 1; ++i) est.analytic_floor *= inv;
    }

    const double base_d = static_cast<double>(base);
    double sum = 0.0, sumsq = 0.0;
    for (int t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = seed ^ static_cast<std::uint64_t>(t);
        Graph sub = kind == ReductionKind::Bipartition
                        ? random_bipartition_subgraph(g, trial_seed)
                        : random_cyclic_partition_subgraph(g, classes, trial_seed);
        Count retained = count_cycles(sub, cycle_length).count;
        if (retained > base) throw std::logic_error("estimate_retention: retained exceeds base");
        double frac = static_cast<double>(retained) / base_d;
        sum += frac;
        sumsq += frac * frac;
    }
    est.mean = sum / trials;
    double var = trials > 1 ? (sumsq - sum * sum / trials) / (trials - 1) : 0.0;
    est.standard_error = trials > 1 ? std::sqrt(var / trials) : 0.0;
    return est;
}

/// Exactly enumerates the 2^k colorings of one fixed C_k and returns the
/// retained fraction; the alternating colorings are the only survivors, so
/// the value is 2/2^k.
inline Rational exact_bipartition_retention(int cycle_length) {
    if (cycle_length < 3) throw std::invalid_argument("exact_bipartition_retention: need length >= 3");
    long long survivors = 0;
    const long long total = 1LL << cycle_length;
    for (long long mask = 0; mask < total; ++mask) {
        bool alternating = true;
        for (int i = 0; i < cycle_length && alternating; ++i) {
            int a = (mask >> i) & 1, b = (mask >> ((i + 1) % cycle_length)) & 1;
            if (a == b) alternating = false;
        }
        if (alternating) ++survivors;
    }
    return Rational(survivors, total);
}

/// Same exhaustive enumeration for the cyclic partition: fraction of the
/// classes^k class assignments of one fixed C_k that keep every edge.
inline Rational exact_cyclic_retention(int cycle_length, int classes) {
    if (cycle_length < 3 || classes < 3)
        throw std::invalid_argument("exact_cyclic_retention: bad arguments");
    Count total = 1;
    long long survivors = 0;
    std::vector<int> cls(cycle_length, 0);
    while (true) {
        bool ok = true;
        for (int i = 0; i < cycle_length && ok; ++i) {
            int d = (cls[i] - cls[(i + 1) % cycle_length] + classes) % classes;
            if (d != 1 && d != classes - 1) ok = false;
        }
        if (ok) ++survivors;
        int pos = 0;
        while (pos < cycle_length && ++cls[pos] == classes) cls[pos++] = 0;
        if (pos == cycle_length) break;
    }
    for (int i = 0; i < cycle_length; ++i) total *= classes;
    return Rational(Count(survivors), total);
}

} // namespace turan
