#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "turan/bitrow.hpp"

namespace turan {

using VertexId = int;
using EdgeList = std::vector<std::pair<int, int>>;

/// Finite simple undirected graph. Immutable after construction: adjacency
/// is symmetric, loop-free, one bit row per vertex. Safe to share across
/// threads, every operation on it is a pure read.
class Graph {
public:
    Graph() = default;

    int order() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const BitRow& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    /// Edges as (u,v) with u < v, lexicographically sorted.
    EdgeList edges() const {
        EdgeList out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < order(); ++u)
            adj_[u].for_each_above(u, [&](int v) { out.emplace_back(u, v); });
        return out;
    }

    bool operator==(const Graph&) const = default;

    friend Graph build_graph(int n, const EdgeList& edges);

private:
    std::vector<BitRow> adj_;
    long long m_ = 0;
};

/// Builds a graph from an edge list. Duplicate edges collapse; endpoints out
/// of range or loops throw.
inline Graph build_graph(int n, const EdgeList& edges) {
    if (n < 0) throw std::invalid_argument("build_graph: negative order");
    Graph g;
    g.adj_.assign(n, BitRow(n));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("build_graph: endpoint " + std::to_string(u >= n || u < 0 ? u : v) +
                                        " out of range [0," + std::to_string(n) + ")");
        if (u == v) throw std::invalid_argument("build_graph: loop edge at vertex " + std::to_string(u));
        if (!g.adj_[u].test(v)) {
            g.adj_[u].set(v);
            g.adj_[v].set(u);
            ++g.m_;
        }
    }
    return g;
}

/// BFS layering from a source: layers[i] holds the vertices at distance
/// exactly i, unreachable collects the rest.
struct BfsLayers {
    int source = 0;
    std::vector<std::vector<int>> layers;
    std::vector<int> unreachable;
};

inline BfsLayers bfs_layers(const Graph& g, int source) {
    const int n = g.order();
    if (source < 0 || source >= n) throw std::invalid_argument("bfs_layers: invalid vertex");
    std::vector<int> dist(n, -1);
    dist[source] = 0;
    BfsLayers out;
    out.source = source;
    out.layers.push_back({source});
    std::vector<int> frontier{source};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int u : frontier) {
            g.neighbors(u).for_each([&](int v) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    next.push_back(v);
                }
            });
        }
        if (next.empty()) break;
        out.layers.push_back(next);
        frontier = std::move(next);
    }
    for (int v = 0; v < n; ++v)
        if (dist[v] < 0) out.unreachable.push_back(v);
    return out;
}

/// Shortest-path distances from a source, -1 for unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int source) {
    const int n = g.order();
    std::vector<int> dist(n, -1);
    dist[source] = 0;
    std::vector<int> frontier{source};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int u : frontier)
            g.neighbors(u).for_each([&](int v) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    next.push_back(v);
                }
            });
        frontier = std::move(next);
    }
    return dist;
}

/// 2-coloring per connected component when no odd cycle exists; absent
/// otherwise. Part assignment is deterministic: each component is rooted at
/// its smallest vertex, which lands in the first part.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            bool odd = false;
            g.neighbors(u).for_each([&](int v) {
                if (color[v] < 0) {
                    color[v] = color[u] ^ 1;
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    odd = true;
                }
            });
            if (odd) return std::nullopt;
        }
    }
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? parts.first : parts.second).push_back(v);
    return parts;
}

} // namespace turan
