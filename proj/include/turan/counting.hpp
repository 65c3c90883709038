#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Exact counts; copy counts grow like n^l and overflow 64-bit at moderate n.
using Count = boost::multiprecision::cpp_int;

/// (n)_l = n(n-1)...(n-l+1); zero when l > n.
inline Count falling_factorial(long long n, int l) {
    if (n < 0 || l < 0) throw std::invalid_argument("falling_factorial: negative argument");
    Count r = 1;
    for (int i = 0; i < l; ++i) r *= (n - i);
    return r;
}

inline Count binomial(long long n, int k) {
    if (k < 0 || k > n) return 0;
    Count num = falling_factorial(n, k), den = 1;
    for (int i = 2; i <= k; ++i) den *= i;
    return num / den;
}

enum class Pattern { Cycle, Path, Walk };

inline std::string pattern_name(Pattern p) {
    switch (p) {
        case Pattern::Cycle: return "cycle";
        case Pattern::Path: return "path";
        default: return "walk";
    }
}

struct CountReport {
    Pattern pattern = Pattern::Cycle;
    int k = 0;
    Count count;
    int n = 0;        // graph fingerprint
    long long m = 0;
};

/// Default thread count for shardable enumerations; TURAN_THREADS overrides.
inline int thread_count() {
    static const int t = [] {
        const char* e = std::getenv("TURAN_THREADS");
        int v = e ? std::atoi(e) : 1;
        return v < 1 ? 1 : v;
    }();
    return t;
}

namespace detail {

/// Sums f(anchor) over anchors 0..n-1, optionally sharded across threads.
/// Integer addition commutes, so the result is bit-identical either way.
template <class PerAnchor>
Count sharded_anchor_sum(int n, PerAnchor f) {
    const int t = thread_count();
    if (t <= 1 || n < 2 * t) {
        Count total = 0;
        for (int a = 0; a < n; ++a) total += f(a);
        return total;
    }
    std::vector<Count> partial(t);
    std::vector<std::thread> workers;
    workers.reserve(t);
    for (int tid = 0; tid < t; ++tid)
        workers.emplace_back([&, tid] {
            Count s = 0;
            for (int a = tid; a < n; a += t) s += f(a);
            partial[tid] = s;
        });
    for (auto& w : workers) w.join();
    Count total = 0;
    for (const Count& p : partial) total += p;
    return total;
}

// Cycle enumeration anchored at the minimum-index vertex of each cycle, with
// the direction fixed by second vertex < last vertex, so every copy is
// counted exactly once and no divide-by-2k is needed.
struct CycleSearch {
    const Graph& g;
    int k;
    int anchor;
    BitRow on_path;
    std::vector<int> path;
    Count found = 0;

    CycleSearch(const Graph& g_, int k_, int anchor_) : g(g_), k(k_), anchor(anchor_), on_path(g_.order()) {}

    Count run() {
        path.assign(1, anchor);
        on_path.set(anchor);
        extend();
        return found;
    }

    void extend() {
        const int u = path.back();
        if (static_cast<int>(path.size()) == k) {
            if (path[1] < u && g.adjacent(u, anchor)) ++found;
            return;
        }
        g.neighbors(u).for_each_above(anchor, [&](int v) {
            if (on_path.test(v)) return;
            on_path.set(v);
            path.push_back(v);
            extend();
            path.pop_back();
            on_path.reset(v);
        });
    }
};

// Path enumeration: every P_k yields two directed traversals; keep the one
// whose first endpoint is smaller.
struct PathSearch {
    const Graph& g;
    int k;
    BitRow on_path;
    std::vector<int> path;
    Count found = 0;

    PathSearch(const Graph& g_, int k_) : g(g_), k(k_), on_path(g_.order()) {}

    Count run(int start) {
        found = 0;
        path.assign(1, start);
        on_path = BitRow(g.order());
        on_path.set(start);
        extend();
        return found;
    }

    void extend() {
        const int u = path.back();
        if (static_cast<int>(path.size()) == k) {
            if (path.front() < u) ++found;
            return;
        }
        g.neighbors(u).for_each([&](int v) {
            if (on_path.test(v)) return;
            on_path.set(v);
            path.push_back(v);
            extend();
            path.pop_back();
            on_path.reset(v);
        });
    }
};

} // namespace detail

/// Number of unlabeled k-cycle subgraphs, each counted once.
inline CountReport count_cycles(const Graph& g, int k) {
    if (k < 3) throw std::invalid_argument("count_cycles: cycle length must be >= 3");
    Count total = 0;
    if (k <= g.order())
        total = detail::sharded_anchor_sum(g.order(), [&](int a) { return detail::CycleSearch(g, k, a).run(); });
    return {Pattern::Cycle, k, total, g.order(), g.edge_count()};
}

/// Number of unlabeled P_k subgraphs (k vertices, k-1 edges).
inline CountReport count_paths(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("count_paths: need k >= 1");
    Count total = 0;
    if (k == 1)
        total = g.order();
    else if (k <= g.order())
        total = detail::sharded_anchor_sum(g.order(), [&](int s) { return detail::PathSearch(g, k).run(s); });
    return {Pattern::Path, k, total, g.order(), g.edge_count()};
}

/// Number of walks on k vertices: ones * A^(k-1) * ones, exact.
inline CountReport count_walks(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("count_walks: need k >= 1");
    const int n = g.order();
    std::vector<Count> w(n, 1), next(n);
    for (int step = 1; step < k; ++step) {
        for (int u = 0; u < n; ++u) {
            Count s = 0;
            g.neighbors(u).for_each([&](int v) { s += w[v]; });
            next[u] = s;
        }
        w.swap(next);
    }
    Count total = 0;
    for (const Count& x : w) total += x;
    return {Pattern::Walk, k, total, n, g.edge_count()};
}

/// f_l(a,b): number of simple paths with l edges between a and b, for every
/// unordered pair. l=1 reproduces adjacency, l=2 is the common-neighbor
/// count f(a,b).
struct PairFunctionTable {
    int l = 0;
    int n = 0;
    std::vector<Count> values; // n*n, symmetric

    const Count& at(int a, int b) const { return values[static_cast<std::size_t>(a) * n + b]; }
    Count& at(int a, int b) { return values[static_cast<std::size_t>(a) * n + b]; }
};

inline PairFunctionTable pair_counts(const Graph& g, int l) {
    if (l < 1) throw std::invalid_argument("pair_counts: need l >= 1");
    const int n = g.order();
    PairFunctionTable tbl{l, n, std::vector<Count>(static_cast<std::size_t>(n) * n)};

    BitRow on_path(n);
    std::vector<int> path;
    // DFS over simple paths of exactly l edges from each a; record endpoints
    // b > a once, mirror for symmetry.
    auto extend = [&](auto&& self, int a) -> void {
        const int u = path.back();
        if (static_cast<int>(path.size()) == l + 1) {
            if (u > a) {
                tbl.at(a, u) += 1;
                tbl.at(u, a) += 1;
            }
            return;
        }
        g.neighbors(u).for_each([&](int v) {
            if (on_path.test(v)) return;
            on_path.set(v);
            path.push_back(v);
            self(self, a);
            path.pop_back();
            on_path.reset(v);
        });
    };
    for (int a = 0; a < n; ++a) {
        path.assign(1, a);
        on_path = BitRow(n);
        on_path.set(a);
        extend(extend, a);
    }
    return tbl;
}

/// Both sides of the C_4 identity: half the sum of C(f(a,b),2) over unordered
/// pairs equals the number of C_4's.
inline std::pair<Count, Count> c4_identity_check(const Graph& g) {
    PairFunctionTable f = pair_counts(g, 2);
    Count sum = 0;
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b) {
            const Count& v = f.at(a, b);
            sum += v * (v - 1) / 2;
        }
    if (sum % 2 != 0) throw std::logic_error("c4_identity_check: odd diagonal sum");
    return {sum / 2, count_cycles(g, 4).count};
}

/// Number of P_3's with endpoint a; equals the row sum of f(a,.).
inline Count p3_from_vertex(const Graph& g, int a) {
    if (a < 0 || a >= g.order()) throw std::invalid_argument("p3_from_vertex: invalid vertex");
    Count total = 0;
    g.neighbors(a).for_each([&](int w) { total += g.degree(w) - 1; });
    return total;
}

/// Counts cycles of length k that pass through v, each once.
inline Count cycles_through_vertex(const Graph& g, int v, int k) {
    if (k < 3) throw std::invalid_argument("cycles_through_vertex: need k >= 3");
    if (v < 0 || v >= g.order()) throw std::invalid_argument("cycles_through_vertex: invalid vertex");
    if (k > g.order()) return 0;
    BitRow on_path(g.order());
    std::vector<int> path{v};
    on_path.set(v);
    Count found = 0;
    auto extend = [&](auto&& self) -> void {
        const int u = path.back();
        if (static_cast<int>(path.size()) == k) {
            if (path[1] < u && g.adjacent(u, v)) ++found;
            return;
        }
        g.neighbors(u).for_each([&](int w) {
            if (on_path.test(w)) return;
            on_path.set(w);
            path.push_back(w);
            self(self);
            path.pop_back();
            on_path.reset(w);
        });
    };
    extend(extend);
    return found;
}

/// The identity behind odd-girth counting: in a graph with no cycle of length
/// <= 2l, the C_{2l+1}'s through v are in bijection with the edges inside
/// N_l(v). Returns (edges in N_l(v), direct cycle count); unequal values
/// flag a violated precondition rather than crash.
inline std::pair<Count, Count> odd_cycles_through_vertex(const Graph& g, int v, int l) {
    if (l < 1) throw std::invalid_argument("odd_cycles_through_vertex: need l >= 1");
    BfsLayers layers = bfs_layers(g, v);
    Count inside = 0;
    if (l < static_cast<int>(layers.layers.size())) {
        BitRow mask(g.order());
        for (int u : layers.layers[l]) mask.set(u);
        for (int u : layers.layers[l])
            g.neighbors(u).for_each_above(u, [&](int w) {
                if (mask.test(w)) ++inside;
            });
    }
    return {inside, cycles_through_vertex(g, v, 2 * l + 1)};
}

/// (a)_l (b)_l / 2l: the exact C_{2l} count of K_{a,b}.
inline Count closed_form_bipartite_cycles(long long a, long long b, int l) {
    if (l < 2) throw std::invalid_argument("closed_form_bipartite_cycles: need l >= 2");
    Count num = falling_factorial(a, l) * falling_factorial(b, l);
    if (num % (2 * l) != 0) throw std::logic_error("closed_form_bipartite_cycles: non-integral result");
    return num / (2 * l);
}

} // namespace turan
