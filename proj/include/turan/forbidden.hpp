#pragma once

#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "turan/counting.hpp"
#include "turan/graph.hpp"

namespace turan {

/// A set A of forbidden cycle lengths, with even/odd views.
struct ForbiddenSet {
    std::set<int> lengths;

    ForbiddenSet() = default;
    ForbiddenSet(std::initializer_list<int> ls) : lengths(ls) { validate(); }
    explicit ForbiddenSet(const std::set<int>& ls) : lengths(ls) { validate(); }

    void validate() const {
        for (int k : lengths)
            if (k < 3) throw std::invalid_argument("ForbiddenSet: cycle length " + std::to_string(k) + " < 3");
    }

    bool contains(int k) const { return lengths.count(k) > 0; }
    bool empty() const { return lengths.empty(); }

    ForbiddenSet evens() const {
        ForbiddenSet s;
        for (int k : lengths)
            if (k % 2 == 0) s.lengths.insert(k);
        return s;
    }
    ForbiddenSet odds() const {
        ForbiddenSet s;
        for (int k : lengths)
            if (k % 2 == 1) s.lengths.insert(k);
        return s;
    }

    /// The prefix set {3,4,...,k}.
    static ForbiddenSet up_to(int k) {
        ForbiddenSet s;
        for (int i = 3; i <= k; ++i) s.lengths.insert(i);
        return s;
    }

    std::string str() const {
        std::string out = "{";
        for (int k : lengths) out += (out.size() > 1 ? "," : "") + std::to_string(k);
        return out + "}";
    }
};

/// Finds one k-cycle as a vertex sequence, or absent. Same anchored search as
/// the counter, stopping at the first hit.
inline std::optional<std::vector<int>> find_cycle_of_length(const Graph& g, int k) {
    if (k < 3) throw std::invalid_argument("find_cycle_of_length: need k >= 3");
    if (k > g.order()) return std::nullopt;
    const int n = g.order();
    BitRow on_path(n);
    std::vector<int> path;
    auto extend = [&](auto&& self, int anchor) -> bool {
        const int u = path.back();
        if (static_cast<int>(path.size()) == k) return path[1] < u && g.adjacent(u, anchor);
        bool hit = false;
        g.neighbors(u).for_each_above(anchor, [&](int v) {
            if (hit || on_path.test(v)) return;
            on_path.set(v);
            path.push_back(v);
            if (self(self, anchor))
                hit = true;
            else {
                path.pop_back();
                on_path.reset(v);
            }
        });
        return hit;
    };
    for (int anchor = 0; anchor < n; ++anchor) {
        path.assign(1, anchor);
        on_path = BitRow(n);
        on_path.set(anchor);
        if (extend(extend, anchor)) return path;
    }
    return std::nullopt;
}

inline bool has_cycle_of_length(const Graph& g, int k) { return find_cycle_of_length(g, k).has_value(); }

/// Exact girth via one BFS per root: the minimum over all roots of
/// dist(u)+dist(w)+1 over non-tree edges (u,w) is the girth. Absent for
/// forests.
inline std::optional<int> girth(const Graph& g) {
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n && best > 3; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[root] = 0;
        std::vector<int> frontier{root};
        while (!frontier.empty() && 2 * dist[frontier.front()] + 1 < best) {
            std::vector<int> next;
            for (int u : frontier)
                g.neighbors(u).for_each([&](int w) {
                    if (dist[w] < 0) {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        next.push_back(w);
                    } else if (w != parent[u]) {
                        int cand = dist[u] + dist[w] + 1;
                        if (cand < best) best = cand;
                    }
                });
            frontier = std::move(next);
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

struct FreeCheck {
    bool free = true;
    int violated_length = 0;       // meaningful when !free
    std::vector<int> witness;      // a concrete cycle, length in A
};

/// True iff no length in A occurs as a cycle; on failure carries a witness.
inline FreeCheck is_free(const Graph& g, const ForbiddenSet& a) {
    for (int k : a.lengths)
        if (auto w = find_cycle_of_length(g, k)) return {false, k, *w};
    return {};
}

/// Presence table for cycle lengths 3..ceiling.
struct CycleSpectrum {
    int ceiling = 0;
    std::vector<bool> present;     // present[k-3] for k in 3..ceiling
    std::optional<int> girth;      // smallest present length, absent if none <= ceiling

    bool present_at(int k) const { return k >= 3 && k <= ceiling && present[k - 3]; }
    std::set<int> present_lengths() const {
        std::set<int> s;
        for (int k = 3; k <= ceiling; ++k)
            if (present[k - 3]) s.insert(k);
        return s;
    }
};

inline CycleSpectrum cycle_spectrum(const Graph& g, int ceiling) {
    if (ceiling < 3) throw std::invalid_argument("cycle_spectrum: ceiling < 3");
    CycleSpectrum s;
    s.ceiling = ceiling;
    s.present.assign(ceiling - 2, false);
    for (int k = 3; k <= ceiling; ++k) {
        s.present[k - 3] = has_cycle_of_length(g, k);
        if (s.present[k - 3] && !s.girth) s.girth = k;
    }
    return s;
}

inline std::optional<int> even_girth(const Graph& g, int ceiling) {
    CycleSpectrum s = cycle_spectrum(g, ceiling);
    for (int k = 4; k <= ceiling; k += 2)
        if (s.present_at(k)) return k;
    return std::nullopt;
}

inline std::optional<int> odd_girth(const Graph& g, int ceiling) {
    CycleSpectrum s = cycle_spectrum(g, ceiling);
    for (int k = 3; k <= ceiling; k += 2)
        if (s.present_at(k)) return k;
    return std::nullopt;
}

} // namespace turan
