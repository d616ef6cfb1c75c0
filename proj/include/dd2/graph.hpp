#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "dd2/errors.hpp"

namespace dd2 {

using Edge = std::pair<int, int>;       // canonical: first < second
using VertexSet = std::vector<int>;     // sorted ascending
using EdgeSet = std::vector<Edge>;      // sorted lexicographically

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Immutable simple undirected graph on vertices 0..n-1.
/// Adjacency lists and the edge list are kept sorted, so iteration order is
/// canonical everywhere downstream.
class Graph {
public:
    Graph() = default;

    Graph(int n, EdgeSet edges) : n_(n) {
        if (n < 0) throw precondition_error("vertex count must be non-negative");
        adj_.resize(static_cast<size_t>(n));
        for (auto& e : edges) e = make_edge(e.first, e.second);
        std::sort(edges.begin(), edges.end());
        for (size_t i = 0; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            if (u < 0 || v >= n)
                throw precondition_error("edge endpoint out of range");
            if (u == v) throw precondition_error("self-loop not allowed");
            if (i > 0 && edges[i] == edges[i - 1])
                throw precondition_error("duplicate edge");
            adj_[static_cast<size_t>(u)].push_back(v);
            adj_[static_cast<size_t>(v)].push_back(u);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
        edges_ = std::move(edges);
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const EdgeSet& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    bool has_edge(int u, int v) const {
        const auto& nb = adj_[static_cast<size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    int min_degree() const {
        int d = n_ > 0 ? degree(0) : 0;
        for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    bool is_regular(int k) const {
        for (int v = 0; v < n_; ++v)
            if (degree(v) != k) return false;
        return n_ > 0;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    EdgeSet edges_;
};

/// Leaves and their supports. A support with exactly one pendant neighbor is
/// weak, with two or more it is strong.
struct VertexClassification {
    VertexSet leaves;            // degree-1 vertices
    VertexSet weak_supports;     // exactly one pendant neighbor
    VertexSet strong_supports;   // two or more pendant neighbors
    std::vector<VertexSet> pendant_map;  // pendant_map[v] = pendant neighbors of v

    bool is_leaf(int v) const { return std::binary_search(leaves.begin(), leaves.end(), v); }
    bool is_support(int v) const { return !pendant_map[static_cast<size_t>(v)].empty(); }
    bool is_weak_support(int v) const { return pendant_map[static_cast<size_t>(v)].size() == 1; }
};

inline VertexClassification classify_vertices(const Graph& g) {
    VertexClassification c;
    c.pendant_map.resize(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 1) {
            c.leaves.push_back(v);
            c.pendant_map[static_cast<size_t>(g.neighbors(v)[0])].push_back(v);
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        size_t pendants = c.pendant_map[static_cast<size_t>(v)].size();
        if (pendants == 1) c.weak_supports.push_back(v);
        else if (pendants >= 2) c.strong_supports.push_back(v);
    }
    return c;
}

/// Connected components as a partition of 0..n-1; each sorted, ordered by
/// minimum member.
inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<bool> seen(static_cast<size_t>(g.vertex_count()), false);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        VertexSet comp;
        std::queue<int> q;
        q.push(s);
        seen[static_cast<size_t>(s)] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = true;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

/// 2-coloring of one component; X holds the minimum-id vertex.
struct Bipartition {
    VertexSet x;
    VertexSet y;
};

/// For each component (in components() order) the bipartition if the component
/// is bipartite, nullopt for odd-cycle components.
inline std::vector<std::optional<Bipartition>> bipartition(const Graph& g) {
    std::vector<std::optional<Bipartition>> out;
    std::vector<int> color(static_cast<size_t>(g.vertex_count()), -1);
    for (const auto& comp : components(g)) {
        int root = comp.front();
        color[static_cast<size_t>(root)] = 0;
        std::queue<int> q;
        q.push(root);
        bool ok = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    q.push(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    ok = false;
                }
            }
        }
        if (!ok) {
            out.push_back(std::nullopt);
            continue;
        }
        Bipartition b;
        for (int v : comp) (color[static_cast<size_t>(v)] == 0 ? b.x : b.y).push_back(v);
        out.push_back(std::move(b));
    }
    return out;
}

/// Same vertex set, only the kept edges. Every kept edge must exist in g.
inline Graph subgraph_with_edges(const Graph& g, const EdgeSet& keep) {
    for (const auto& [u, v] : keep)
        if (!g.has_edge(u, v))
            throw precondition_error("kept edge not present in parent graph");
    return Graph(g.vertex_count(), keep);
}

inline bool contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace dd2
