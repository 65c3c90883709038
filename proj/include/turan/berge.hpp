#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "turan/counting.hpp"
#include "turan/rng.hpp"

namespace turan {

/// Vertex set 0..order-1 plus a deduplicated list of hyperedges, each a
/// sorted vertex set of size >= 2.
struct Hypergraph {
    int order = 0;
    std::vector<std::vector<int>> edges;

    static Hypergraph make(int n, std::vector<std::vector<int>> raw) {
        if (n < 0) throw std::invalid_argument("Hypergraph: negative order");
        std::set<std::vector<int>> seen;
        Hypergraph h;
        h.order = n;
        for (auto& e : raw) {
            std::sort(e.begin(), e.end());
            e.erase(std::unique(e.begin(), e.end()), e.end());
            if (e.size() < 2) throw std::invalid_argument("Hypergraph: edge with fewer than 2 vertices");
            for (int v : e)
                if (v < 0 || v >= n) throw std::invalid_argument("Hypergraph: vertex index out of range");
            if (seen.insert(e).second) h.edges.push_back(e);
        }
        return h;
    }

    bool uniform(int r) const {
        for (const auto& e : edges)
            if (static_cast<int>(e.size()) != r) return false;
        return true;
    }

    std::vector<std::vector<int>> incidence() const {
        std::vector<std::vector<int>> inc(order);
        for (int i = 0; i < static_cast<int>(edges.size()); ++i)
            for (int v : edges[i]) inc[v].push_back(i);
        return inc;
    }
};

inline long long sum_edge_sizes(const Hypergraph& h) {
    long long s = 0;
    for (const auto& e : h.edges) s += static_cast<long long>(e.size());
    return s;
}

/// Alternating sequence v_1 h_1 v_2 h_2 ... v_k h_k (v_1): vertices distinct,
/// edges distinct, v_i and v_{i+1} both in h_i, wrapping at the end.
struct BergeCycleWitness {
    std::vector<int> vertices;
    std::vector<int> edge_indices;
};

inline bool berge_witness_valid(const Hypergraph& h, const BergeCycleWitness& w) {
    const int k = static_cast<int>(w.vertices.size());
    if (k < 2 || static_cast<int>(w.edge_indices.size()) != k) return false;
    std::set<int> vs(w.vertices.begin(), w.vertices.end());
    std::set<int> es(w.edge_indices.begin(), w.edge_indices.end());
    if (static_cast<int>(vs.size()) != k || static_cast<int>(es.size()) != k) return false;
    for (int i = 0; i < k; ++i) {
        const auto& e = h.edges[w.edge_indices[i]];
        int a = w.vertices[i], b = w.vertices[(i + 1) % k];
        if (!std::binary_search(e.begin(), e.end(), a) || !std::binary_search(e.begin(), e.end(), b)) return false;
    }
    return true;
}

namespace detail {

// Backtracking over alternating sequences. v_1 is pinned to the minimum
// vertex of the cycle (valid by rotation), later vertices must exceed it.
// skip_edge, when set, excludes one edge index; require_edge forces the
// closing edge h_k, which is how the incremental generator asks "is there a
// short Berge cycle through the edge I just added".
struct BergeSearch {
    const Hypergraph& h;
    const std::vector<std::vector<int>>& inc;
    int k;
    int require_closing_edge;       // -1 = any
    std::vector<char> v_used, e_used;
    std::vector<int> vs, es;

    BergeSearch(const Hypergraph& h_, const std::vector<std::vector<int>>& inc_, int k_, int closing)
        : h(h_), inc(inc_), k(k_), require_closing_edge(closing),
          v_used(h_.order, 0), e_used(h_.edges.size(), 0) {}

    std::optional<BergeCycleWitness> run() {
        if (require_closing_edge >= 0) {
            // v_1 ranges over the closing edge only: v_k, v_1 must lie in it.
            for (int v1 : h.edges[require_closing_edge]) {
                vs.assign(1, v1);
                v_used[v1] = 1;
                if (extend()) return BergeCycleWitness{vs, es};
                v_used[v1] = 0;
            }
            return std::nullopt;
        }
        for (int v1 = 0; v1 < h.order; ++v1) {
            vs.assign(1, v1);
            v_used[v1] = 1;
            if (extend()) return BergeCycleWitness{vs, es};
            v_used[v1] = 0;
        }
        return std::nullopt;
    }

    bool close() {
        const int last = vs.back(), first = vs.front();
        if (require_closing_edge >= 0) {
            const auto& e = h.edges[require_closing_edge];
            if (e_used[require_closing_edge]) return false;
            if (!std::binary_search(e.begin(), e.end(), last) || !std::binary_search(e.begin(), e.end(), first))
                return false;
            es.push_back(require_closing_edge);
            return true;
        }
        for (int ei : inc[last]) {
            if (e_used[ei]) continue;
            const auto& e = h.edges[ei];
            if (!std::binary_search(e.begin(), e.end(), first)) continue;
            es.push_back(ei);
            return true;
        }
        return false;
    }

    bool extend() {
        if (static_cast<int>(vs.size()) == k) return close();
        const int u = vs.back(), v1 = vs.front();
        // Pinning v_1 to the cycle minimum is only sound when rotation is
        // free, i.e. when no closing edge is prescribed.
        const bool min_pin = require_closing_edge < 0;
        for (int ei : inc[u]) {
            if (e_used[ei] || ei == require_closing_edge) continue;
            e_used[ei] = 1;
            es.push_back(ei);
            for (int w : h.edges[ei]) {
                if ((min_pin && w <= v1) || v_used[w]) continue;
                v_used[w] = 1;
                vs.push_back(w);
                if (extend()) return true;
                vs.pop_back();
                v_used[w] = 0;
            }
            es.pop_back();
            e_used[ei] = 0;
        }
        return false;
    }
};

} // namespace detail

inline std::optional<BergeCycleWitness> find_berge_cycle(const Hypergraph& h, int k) {
    if (k < 2) throw std::invalid_argument("find_berge_cycle: need k >= 2");
    auto inc = h.incidence();
    return detail::BergeSearch(h, inc, k, -1).run();
}

inline bool has_berge_cycle(const Hypergraph& h, int k) { return find_berge_cycle(h, k).has_value(); }

/// Shortest Berge-cycle length if <= ceiling, absent otherwise.
inline std::optional<int> hypergraph_girth(const Hypergraph& h, int ceiling) {
    if (ceiling < 2) throw std::invalid_argument("hypergraph_girth: ceiling < 2");
    for (int k = 2; k <= ceiling; ++k)
        if (has_berge_cycle(h, k)) return k;
    return std::nullopt;
}

namespace detail {

/// Does any Berge cycle of length <= max_len pass through edge ei?
inline bool berge_cycle_through_edge(const Hypergraph& h, const std::vector<std::vector<int>>& inc,
                                     int ei, int max_len) {
    for (int k = 2; k <= max_len; ++k)
        if (BergeSearch(h, inc, k, ei).run()) return true;
    return false;
}

} // namespace detail

/// Randomized-greedy r-uniform hypergraph with certified girth >= g: sample
/// r-sets with the seeded generator, accept only when no Berge cycle of
/// length < g appears through the new edge, stop at target_m edges or after
/// 50*target_m rejections. Deterministic per seed; may return fewer edges
/// than asked.
inline Hypergraph random_greedy_hypergraph(int n, int r, int g, int target_m, std::uint64_t seed) {
    if (r < 2 || g < 2) throw std::invalid_argument("random_greedy_hypergraph: need r >= 2, g >= 2");
    if (n < r) throw std::invalid_argument("random_greedy_hypergraph: n < r");
    Hypergraph h;
    h.order = n;
    std::set<std::vector<int>> seen;
    SplitMix64 rng(seed);
    long long rejections = 0;
    const long long budget = 50LL * std::max(target_m, 1);
    while (static_cast<int>(h.edges.size()) < target_m && rejections < budget) {
        std::vector<int> e = sample_distinct(rng, n, r);
        std::sort(e.begin(), e.end());
        if (seen.count(e)) {
            ++rejections;
            continue;
        }
        h.edges.push_back(e);
        auto inc = h.incidence();
        if (g >= 3 && detail::berge_cycle_through_edge(h, inc, static_cast<int>(h.edges.size()) - 1, g - 1)) {
            h.edges.pop_back();
            ++rejections;
            continue;
        }
        seen.insert(e);
    }
    return h;
}

/// d-regular r-uniform hypergraph with girth >= g, found by randomized
/// search with restarts over growing vertex counts. The vertex count is
/// whatever the search settles on, no optimality claim. Absent when the
/// restart budget runs out.
inline std::optional<Hypergraph> regular_uniform_high_girth(int r, int d, int g, std::uint64_t seed) {
    if (r < 2 || d < 2 || g < 3)
        throw std::invalid_argument("regular_uniform_high_girth: need r >= 2, d >= 2, g >= 3");
    SplitMix64 rng(seed);
    int n = std::max({r + 1, g, r * d});
    while (n % r != 0 || (static_cast<long long>(n) * d) % r != 0) ++n;
    for (int growth = 0; growth < 6; ++growth) {
        const long long m_goal = static_cast<long long>(n) * d / r;
        for (int restart = 0; restart < 60; ++restart) {
            Hypergraph h;
            h.order = n;
            std::set<std::vector<int>> seen;
            std::vector<int> cap(n, d);
            int stuck = 0;
            while (static_cast<long long>(h.edges.size()) < m_goal && stuck < 400) {
                std::vector<int> pool;
                for (int v = 0; v < n; ++v)
                    if (cap[v] > 0) pool.push_back(v);
                if (static_cast<int>(pool.size()) < r) break;
                std::vector<int> pick = sample_distinct(rng, static_cast<int>(pool.size()), r);
                std::vector<int> e(r);
                for (int i = 0; i < r; ++i) e[i] = pool[pick[i]];
                std::sort(e.begin(), e.end());
                if (seen.count(e)) {
                    ++stuck;
                    continue;
                }
                h.edges.push_back(e);
                auto inc = h.incidence();
                if (detail::berge_cycle_through_edge(h, inc, static_cast<int>(h.edges.size()) - 1, g - 1)) {
                    h.edges.pop_back();
                    ++stuck;
                    continue;
                }
                seen.insert(e);
                for (int v : e) --cap[v];
                stuck = 0;
            }
            if (static_cast<long long>(h.edges.size()) == m_goal) return h;
        }
        n *= 2;
        while (n % r != 0 || (static_cast<long long>(n) * d) % r != 0) ++n;
    }
    return std::nullopt;
}

/// The n_r(g,d) vertex-count bound, evaluated exactly via the geometric sum
/// (r-1)(1 + d(r-1) * sum_{i<g} ((d-1)(r-1))^i); the closed form divides by
/// (d-1)(r-1)-1, which the sum sidesteps when the ratio is 1.
inline Count ellis_linial_vertex_bound(int r, int g, int d) {
    if (r < 2 || d < 2 || g < 1) throw std::invalid_argument("ellis_linial_vertex_bound: bad arguments");
    Count x = static_cast<long long>(d - 1) * (r - 1);
    Count geom = 0, pw = 1;
    for (int i = 0; i < g; ++i) {
        geom += pw;
        pw *= x;
    }
    return Count(r - 1) * (1 + Count(d) * (r - 1) * geom);
}

// ---------------------------------------------------------------------------
// File format: line 1 "n m", then m lines of space-separated vertex indices.
// ---------------------------------------------------------------------------

inline Hypergraph read_hypergraph(std::istream& in) {
    long long n, m;
    if (!(in >> n >> m) || n < 0 || m < 0) throw std::runtime_error("hypergraph: bad header");
    std::string rest;
    std::getline(in, rest);
    std::vector<std::vector<int>> edges;
    for (long long i = 0; i < m; ++i) {
        std::string line;
        if (!std::getline(in, line)) throw std::runtime_error("hypergraph: unexpected end of input");
        std::istringstream row(line);
        std::vector<int> e;
        long long v;
        while (row >> v) e.push_back(static_cast<int>(v));
        edges.push_back(std::move(e));
    }
    return Hypergraph::make(static_cast<int>(n), std::move(edges));
}

inline std::string write_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << h.order << ' ' << h.edges.size() << '\n';
    for (const auto& e : h.edges) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

} // namespace turan
