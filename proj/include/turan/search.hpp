#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "turan/counting.hpp"
#include "turan/forbidden.hpp"
#include "turan/graph.hpp"

namespace turan {

struct Target {
    Pattern pattern = Pattern::Cycle;
    int k = 0;

    static Target cycle(int k) { return {Pattern::Cycle, k}; }
    static Target path(int k) { return {Pattern::Path, k}; }

    Count count_in(const Graph& g) const {
        return pattern == Pattern::Cycle ? count_cycles(g, k).count : count_paths(g, k).count;
    }
    std::string str() const { return pattern_name(pattern) + ":" + std::to_string(k); }
};

/// One exact extremal value: the maximum of the target count over all
/// forbidden-free graphs on n labeled vertices, with a witness. Ties break
/// to the lexicographically least edge set, so witnesses are reproducible.
struct ExtremalRecord {
    int n = 0;
    Target target;
    ForbiddenSet forbidden;
    Count maximum;
    Graph witness;
    std::string method;
};

namespace detail {

inline std::vector<std::pair<int, int>> all_edge_slots(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    return slots;
}

// Sorted-index-list lexicographic order; the empty set is least.
inline bool edge_indices_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Mutable adjacency used inside the searches; Graph itself stays immutable.
struct Scratch {
    int n;
    std::vector<BitRow> adj;

    explicit Scratch(int n_) : n(n_), adj(n_, BitRow(n_)) {}

    void add(int u, int v) {
        adj[u].set(v);
        adj[v].set(u);
    }
    void remove(int u, int v) {
        adj[u].reset(v);
        adj[v].reset(u);
    }

    Graph freeze(const std::vector<std::pair<int, int>>& slots, const std::vector<int>& chosen) const {
        EdgeList e;
        for (int idx : chosen) e.push_back(slots[idx]);
        return build_graph(n, e);
    }

    // Is there a simple path with exactly `edges` edges from u to v? Adding
    // edge uv closes a C_{edges+1} exactly when one exists.
    bool has_path_of_length(int u, int v, int edges) const {
        BitRow seen(n);
        seen.set(u);
        std::vector<int> stack{u};
        bool found = false;
        auto dfs = [&](auto&& self) -> void {
            if (found) return;
            int cur = stack.back();
            if (static_cast<int>(stack.size()) == edges + 1) {
                if (cur == v) found = true;
                return;
            }
            adj[cur].for_each([&](int w) {
                if (found || seen.test(w)) return;
                // v may only appear as the final vertex
                if (w == v && static_cast<int>(stack.size()) != edges) return;
                seen.set(w);
                stack.push_back(w);
                self(self);
                stack.pop_back();
                seen.reset(w);
            });
        };
        dfs(dfs);
        return found;
    }

    bool closes_forbidden_cycle(int u, int v, const ForbiddenSet& forbidden) const {
        for (int k : forbidden.lengths)
            if (has_path_of_length(u, v, k - 1)) return true;
        return false;
    }
};

} // namespace detail

/// Brute force over all 2^(n choose 2) labeled graphs. The independent
/// oracle: no pruning, no cleverness.
inline ExtremalRecord exact_extremal_naive(int n, Target target, const ForbiddenSet& forbidden) {
    if (n < 1 || n > 7) throw std::invalid_argument("exact_extremal_naive: need 1 <= n <= 7");
    const auto slots = detail::all_edge_slots(n);
    const int e = static_cast<int>(slots.size());

    Count best = -1;
    std::vector<int> best_edges;
    for (long long mask = 0; mask < (1LL << e); ++mask) {
        EdgeList edges;
        std::vector<int> chosen;
        for (int i = 0; i < e; ++i)
            if (mask & (1LL << i)) {
                edges.push_back(slots[i]);
                chosen.push_back(i);
            }
        Graph g = build_graph(n, edges);
        if (!is_free(g, forbidden).free) continue;
        Count c = target.count_in(g);
        if (c > best || (c == best && detail::edge_indices_less(chosen, best_edges))) {
            best = c;
            best_edges = chosen;
        }
    }
    Graph witness = build_graph(n, [&] {
        EdgeList ee;
        for (int i : best_edges) ee.push_back(slots[i]);
        return ee;
    }());
    return {n, target, forbidden, best, witness, "naive"};
}

/// Branch and bound over edge slots in lexicographic order. An edge is only
/// added when it closes no forbidden cycle, and a subtree is abandoned when
/// even adding every undecided edge cannot beat the incumbent (copy counts
/// are monotone under edge addition). Ties are never pruned, so the
/// lexicographically least maximizer is always visited.
inline ExtremalRecord exact_extremal_pruned(int n, Target target, const ForbiddenSet& forbidden) {
    if (n < 1 || n > 9) throw std::invalid_argument("exact_extremal_pruned: need 1 <= n <= 9");
    const auto slots = detail::all_edge_slots(n);
    const int e = static_cast<int>(slots.size());
    // Bound evaluation is only worthwhile deep in the tree where the
    // supergraph is close to the current graph.
    constexpr int kBoundWindow = 14;

    detail::Scratch scratch(n);
    Count best = -1;
    std::vector<int> best_edges, chosen;

    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == e) {
            Graph g = scratch.freeze(slots, chosen);
            Count c = target.count_in(g);
            if (c > best || (c == best && detail::edge_indices_less(chosen, best_edges))) {
                best = c;
                best_edges = chosen;
            }
            return;
        }
        if (e - idx <= kBoundWindow && best >= 0) {
            for (int i = idx; i < e; ++i) scratch.add(slots[i].first, slots[i].second);
            Graph super = scratch.freeze(slots, [&] {
                std::vector<int> all = chosen;
                for (int i = idx; i < e; ++i) all.push_back(i);
                return all;
            }());
            for (int i = idx; i < e; ++i) scratch.remove(slots[i].first, slots[i].second);
            if (target.count_in(super) < best) return;
        }
        const auto [u, v] = slots[idx];
        if (!scratch.closes_forbidden_cycle(u, v, forbidden)) {
            scratch.add(u, v);
            chosen.push_back(idx);
            self(self, idx + 1);
            chosen.pop_back();
            scratch.remove(u, v);
        }
        self(self, idx + 1);
    };
    rec(rec, 0);

    Graph witness = scratch.freeze(slots, best_edges);
    return {n, target, forbidden, best, witness, "pruned"};
}

inline std::vector<ExtremalRecord> extremal_table(int n_lo, int n_hi, Target target,
                                                  const ForbiddenSet& forbidden, bool pruned = false) {
    std::vector<ExtremalRecord> rows;
    for (int n = n_lo; n <= n_hi; ++n)
        rows.push_back(pruned ? exact_extremal_pruned(n, target, forbidden)
                              : exact_extremal_naive(n, target, forbidden));
    return rows;
}

} // namespace turan
