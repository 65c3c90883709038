#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "turan/berge.hpp"
#include "turan/counting.hpp"
#include "turan/forbidden.hpp"
#include "turan/graph.hpp"
#include "turan/named_graphs.hpp"

namespace turan {

/// Binds a generator run to its checkable contract: the instantiated graph
/// must pass is_free(expected_free) and carry at least guaranteed.at_least
/// copies of the guaranteed pattern.
struct ConstructionSpec {
    std::string name;
    std::map<std::string, long long> params;
    ForbiddenSet expected_free;
    struct Guarantee {
        Pattern pattern = Pattern::Cycle;
        int k = 0;
        Count at_least;
    };
    std::optional<Guarantee> guaranteed;

    bool check(const Graph& g) const {
        if (!is_free(g, expected_free).free) return false;
        if (guaranteed) {
            Count c = guaranteed->pattern == Pattern::Cycle ? count_cycles(g, guaranteed->k).count
                                                            : count_paths(g, guaranteed->k).count;
            if (c < guaranteed->at_least) return false;
        }
        return true;
    }
};

/// K_{a,b}: part one occupies indices 0..a-1, part two a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("complete_bipartite: negative part size");
    EdgeList e;
    e.reserve(static_cast<std::size_t>(a) * b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return build_graph(a + b, e);
}

inline ConstructionSpec complete_bipartite_spec(int a, int b) {
    ConstructionSpec s;
    s.name = "complete_bipartite";
    s.params = {{"a", a}, {"b", b}};
    int mn = std::min(a, b);
    s.expected_free = ForbiddenSet{2 * mn + 2};   // shortest even cycle K_{a,b} misses
    if (mn >= 2) s.guaranteed = {Pattern::Cycle, 4, closed_form_bipartite_cycles(a, b, 2)};
    return s;
}

/// (l,t)-theta-graph: endpoints 0 and 1 joined by t internally disjoint
/// paths of length l; path p's interior occupies 2+p(l-1) .. 2+(p+1)(l-1)-1.
inline Graph theta_graph(int l, int t) {
    if (l < 2) throw std::invalid_argument("theta_graph: need path length l >= 2");
    if (t < 1) throw std::invalid_argument("theta_graph: need t >= 1");
    const int n = 2 + t * (l - 1);
    EdgeList e;
    for (int p = 0; p < t; ++p) {
        int base = 2 + p * (l - 1);
        e.emplace_back(0, base);
        for (int i = 0; i + 1 < l - 1; ++i) e.emplace_back(base + i, base + i + 1);
        e.emplace_back(base + l - 2, 1);
    }
    return build_graph(n, e);
}

inline ConstructionSpec theta_graph_spec(int l, int t) {
    ConstructionSpec s;
    s.name = "theta";
    s.params = {{"l", l}, {"t", t}};
    if (t >= 2) s.expected_free = ForbiddenSet{ForbiddenSet::up_to(2 * l - 1).lengths};
    s.guaranteed = {Pattern::Cycle, 2 * l, binomial(t, 2)};
    return s;
}

inline long long theta_of_graph_t(long long n, const Graph& f, int l) {
    return (n - f.order()) / (static_cast<long long>(f.edges().size()) * (l - 1));
}

/// theta-(n,F,l): every edge of F becomes a fresh (l,t)-theta-graph sharing
/// only its endpoints, t as large as the order budget allows, isolated
/// vertices appended to reach exactly n. F keeps its indices 0..|V(F)|-1;
/// interiors are appended edge by edge in F's lexicographic edge order.
inline Graph theta_of_graph(int n, const Graph& f, int l) {
    if (l < 2) throw std::invalid_argument("theta_of_graph: need l >= 2");
    const EdgeList fe = f.edges();
    if (fe.empty()) throw std::invalid_argument("theta_of_graph: F needs at least one edge");
    const long long t = theta_of_graph_t(n, f, l);
    if (t < 1) throw std::invalid_argument("theta_of_graph: n too small for t >= 1");
    EdgeList e;
    int next = f.order();
    for (const auto& [x, y] : fe) {
        for (long long p = 0; p < t; ++p) {
            int prev = x;
            for (int i = 0; i < l - 1; ++i) {
                e.emplace_back(prev, next);
                prev = next++;
            }
            e.emplace_back(prev, y);
        }
    }
    // next == t*|E(F)|*(l-1) + |V(F)|; the rest of [0,n) stays isolated.
    return build_graph(n, e);
}

inline ConstructionSpec theta_of_cycle_spec(int n, int m, int l) {
    Graph f = cycle_graph(m);
    ConstructionSpec s;
    s.name = "theta_of_cycle";
    s.params = {{"n", n}, {"m", m}, {"l", l}};
    s.expected_free = ForbiddenSet{ForbiddenSet::up_to(2 * l - 1).lengths};
    long long t = theta_of_graph_t(n, f, l);
    Count tm = 1;
    for (int i = 0; i < m; ++i) tm *= t;
    s.guaranteed = {Pattern::Cycle, m * l, tm};
    return s;
}

/// Blown-up even cycle C_{2l}: every second vertex becomes an independent
/// b-set. The l kept cycle vertices are 0..l-1; the class between kept
/// vertices j and j+1 (mod l) occupies l+j*b .. l+(j+1)*b-1.
inline Graph blown_up_cycle(int two_l, int b) {
    if (two_l < 6 || two_l % 2 != 0) throw std::invalid_argument("blown_up_cycle: need even cycle length >= 6");
    if (b < 1) throw std::invalid_argument("blown_up_cycle: need b >= 1");
    const int l = two_l / 2;
    EdgeList e;
    for (int j = 0; j < l; ++j)
        for (int c = 0; c < b; ++c) {
            e.emplace_back(j, l + j * b + c);
            e.emplace_back(l + j * b + c, (j + 1) % l);
        }
    return build_graph(l + l * b, e);
}

/// Order-normalized variant: class sizes floor/ceil of (n-l)/l so the order
/// is exactly n. Kept vertices 0..l-1, classes appended in order.
inline Graph blown_up_cycle_order(int two_l, int n) {
    if (two_l < 6 || two_l % 2 != 0) throw std::invalid_argument("blown_up_cycle_order: need even length >= 6");
    const int l = two_l / 2;
    if (n < 2 * l) throw std::invalid_argument("blown_up_cycle_order: n too small");
    const int total = n - l, base = total / l, extra = total % l;
    EdgeList e;
    int next = l;
    for (int j = 0; j < l; ++j) {
        const int sz = base + (j < extra ? 1 : 0);
        for (int c = 0; c < sz; ++c) {
            e.emplace_back(j, next);
            e.emplace_back(next, (j + 1) % l);
            ++next;
        }
    }
    return build_graph(n, e);
}

inline ConstructionSpec blown_up_cycle_spec(int two_l, int b) {
    ConstructionSpec s;
    s.name = "blown_cycle";
    s.params = {{"two_l", two_l}, {"b", b}};
    // Spectrum is contained in {4, 2l}; encode freeness up to 2l+2.
    std::set<int> banned;
    for (int k = 3; k <= two_l + 2; ++k)
        if (k != 4 && k != two_l) banned.insert(k);
    s.expected_free = ForbiddenSet(banned);
    Count bl = 1;
    for (int i = 0; i < two_l / 2; ++i) bl *= b;
    s.guaranteed = {Pattern::Cycle, two_l, bl};
    return s;
}

/// Blown-up path P_l: odd positions (1st, 3rd, ...) become independent
/// b-sets. Even-position vertices keep indices 0..floor(l/2)-1 in order;
/// the class replacing the i-th odd position occupies
/// floor(l/2)+i*b .. floor(l/2)+(i+1)*b-1.
inline Graph blown_up_path(int l, int b) {
    if (l < 2 || b < 1) throw std::invalid_argument("blown_up_path: need l >= 2, b >= 1");
    const int evens = l / 2, odds = (l + 1) / 2;
    EdgeList e;
    auto vertex_at = [&](int pos, int copy) {  // pos 0-based along the path
        return pos % 2 == 1 ? pos / 2 : evens + (pos / 2) * b + copy;
    };
    for (int pos = 0; pos + 1 < l; ++pos) {
        const bool odd_first = pos % 2 == 0;  // 0-based even positions are the blown (1st, 3rd, ...) vertices
        for (int c = 0; c < b; ++c) {
            int u = odd_first ? vertex_at(pos, c) : vertex_at(pos, 0);
            int v = odd_first ? vertex_at(pos + 1, 0) : vertex_at(pos + 1, c);
            e.emplace_back(u, v);
        }
    }
    return build_graph(evens + odds * b, e);
}

inline ConstructionSpec blown_up_path_spec(int l, int b) {
    ConstructionSpec s;
    s.name = "blown_path";
    s.params = {{"l", l}, {"b", b}};
    std::set<int> banned;
    for (int k = 3; k <= 8; ++k)
        if (k != 4) banned.insert(k);   // only C_4's arise
    s.expected_free = ForbiddenSet(banned);
    Count want = 1;
    for (int i = 0; i < (l + 1) / 2; ++i) want *= b;
    s.guaranteed = {Pattern::Path, l, want};
    return s;
}

namespace detail {

inline bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

} // namespace detail

/// Polarity graph of the projective plane over F_q, q prime: points in
/// standard normalization (first nonzero coordinate 1), listed in
/// lexicographic order of (x,y,z); u ~ v iff u.v = 0 mod q and u != v.
/// C_4-free: two points have at most one common orthogonal point.
inline Graph polarity_graph(int q) {
    if (!detail::is_prime(q)) throw std::invalid_argument("polarity_graph: q must be prime");
    std::vector<std::array<int, 3>> pts;
    for (int y = 0; y < q; ++y)
        for (int z = 0; z < q; ++z) pts.push_back({1, y, z});
    for (int z = 0; z < q; ++z) pts.push_back({0, 1, z});
    pts.push_back({0, 0, 1});
    const int n = static_cast<int>(pts.size());   // q^2+q+1
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long long dot = 0;
            for (int c = 0; c < 3; ++c) dot += static_cast<long long>(pts[i][c]) * pts[j][c];
            if (dot % q == 0) e.emplace_back(i, j);
        }
    return build_graph(n, e);
}

inline ConstructionSpec polarity_graph_spec(int q) {
    ConstructionSpec s;
    s.name = "polarity";
    s.params = {{"q", q}};
    s.expected_free = ForbiddenSet{4};
    if (q >= 3) s.guaranteed = {Pattern::Cycle, 6, 1};
    return s;
}

/// Replaces each hyperedge of a c-uniform hypergraph by the cycle over its
/// vertices in ascending order; the union graph keeps H's vertex set.
inline Graph hyperedge_cycle_expansion(const Hypergraph& h, int c) {
    if (c < 3) throw std::invalid_argument("hyperedge_cycle_expansion: need c >= 3");
    if (!h.uniform(c)) throw std::invalid_argument("hyperedge_cycle_expansion: hypergraph is not c-uniform");
    EdgeList e;
    for (const auto& edge : h.edges)
        for (int i = 0; i < c; ++i) e.emplace_back(edge[i], edge[(i + 1) % c]);
    return build_graph(h.order, e);
}

/// A certified-girth hypergraph expands to a graph whose short cycles are
/// exactly the hyperedge cycles: freeness on {3..g-1} minus {c}.
inline ConstructionSpec hyperedge_cycle_expansion_spec(const Hypergraph& h, int c, int certified_girth) {
    ConstructionSpec s;
    s.name = "berge_expansion";
    s.params = {{"c", c}, {"girth", certified_girth}, {"edges", static_cast<long long>(h.edges.size())}};
    std::set<int> banned;
    for (int k = 3; k < certified_girth; ++k)
        if (k != c) banned.insert(k);
    s.expected_free = ForbiddenSet(banned);
    if (!h.edges.empty() && certified_girth >= 3)
        s.guaranteed = {Pattern::Cycle, c, Count(h.edges.size())};
    return s;
}

/// Incidence expansion: keep H's vertices 0..n-1, give hyperedge i a fresh
/// pendant set S_i of s vertices at n+i*s .. n+(i+1)*s-1, join S_i
/// completely to h_i. Bipartite; every pendant vertex has degree r.
inline Graph incidence_expansion(const Hypergraph& h, int s) {
    if (s < 1) throw std::invalid_argument("incidence_expansion: need s >= 1");
    const int m = static_cast<int>(h.edges.size());
    EdgeList e;
    for (int i = 0; i < m; ++i)
        for (int c = 0; c < s; ++c)
            for (int v : h.edges[i]) e.emplace_back(v, h.order + i * s + c);
    return build_graph(h.order + m * s, e);
}

} // namespace turan
