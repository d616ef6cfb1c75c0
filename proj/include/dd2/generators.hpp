#pragma once

#include <limits>
#include <random>
#include <set>
#include <string>

#include "dd2/graph.hpp"
#include "dd2/recognition.hpp"

namespace dd2 {

namespace detail {

// std::mt19937 is bit-exact across implementations; the distributions are
// not, so bounded draws and coin flips are done by hand.
class Rng {
public:
    explicit Rng(uint32_t seed) : eng_(seed) {}

    uint32_t next() { return eng_(); }

    int below(int k) { return static_cast<int>(next() % static_cast<uint32_t>(k)); }

    bool coin(double p) {
        return static_cast<double>(next() >> 8) * 0x1.0p-24 < p;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<size_t>(below(static_cast<int>(i)))]);
    }

private:
    std::mt19937 eng_;
};

} // namespace detail

inline Graph gen_path(int n) {
    if (n < 1) throw precondition_error("path needs at least 1 vertex");
    EdgeSet es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return Graph(n, std::move(es));
}

inline Graph gen_cycle(int n) {
    if (n < 3) throw precondition_error("cycle needs at least 3 vertices");
    EdgeSet es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    es.push_back({0, n - 1});
    return Graph(n, std::move(es));
}

/// K_{1,leaves} with center 0.
inline Graph gen_star(int leaves) {
    if (leaves < 1) throw precondition_error("star needs at least 1 leaf");
    EdgeSet es;
    for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
    return Graph(leaves + 1, std::move(es));
}

inline Graph gen_complete(int n) {
    if (n < 1) throw precondition_error("complete graph needs at least 1 vertex");
    EdgeSet es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return Graph(n, std::move(es));
}

/// Sides 0..a-1 and a..a+b-1.
inline Graph gen_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw precondition_error("bipartite sides must be non-empty");
    EdgeSet es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.push_back({u, a + v});
    return Graph(a + b, std::move(es));
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph gen_petersen() {
    EdgeSet es;
    for (int i = 0; i < 5; ++i) {
        es.push_back(make_edge(i, (i + 1) % 5));
        es.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
        es.push_back({i, i + 5});
    }
    return Graph(10, std::move(es));
}

inline Graph gen_named(const std::string& name, const std::vector<long long>& params) {
    auto p = [&](size_t i) -> int {
        if (i >= params.size())
            throw precondition_error("generator '" + name + "' is missing a parameter");
        return static_cast<int>(params[i]);
    };
    if (name == "path") return gen_path(p(0));
    if (name == "cycle") return gen_cycle(p(0));
    if (name == "star") return gen_star(p(0));
    if (name == "complete") return gen_complete(p(0));
    if (name == "complete_bipartite") return gen_complete_bipartite(p(0), p(1));
    if (name == "petersen") return gen_petersen();
    throw precondition_error("unknown named generator '" + name + "'");
}

/// Binomial random graph: each pair becomes an edge with probability p,
/// visiting pairs in lexicographic order. Fully determined by the seed.
inline Graph gen_random_graph(int n, double p, uint32_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0)
        throw precondition_error("gen_random_graph needs n >= 0 and p in [0,1]");
    detail::Rng rng(seed);
    EdgeSet es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin(p)) es.push_back({u, v});
    return Graph(n, std::move(es));
}

/// Simple 3-regular graph by the pairing model: shuffle 3n stubs, pair them
/// up, and redraw on loops or duplicate edges. The seed fixes the outcome.
inline Graph gen_random_cubic(int n, uint32_t seed) {
    if (n < 4 || n % 2 != 0)
        throw precondition_error("gen_random_cubic needs even n >= 4");
    detail::Rng rng(seed);
    std::vector<int> stubs(static_cast<size_t>(3 * n));
    for (int i = 0; i < 3 * n; ++i) stubs[static_cast<size_t>(i)] = i / 3;
    for (int attempt = 0; attempt < 100000; ++attempt) {
        rng.shuffle(stubs);
        EdgeSet es;
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) { ok = false; break; }
            Edge e = make_edge(u, v);
            for (const auto& prev : es)
                if (prev == e) { ok = false; break; }
            if (ok) es.push_back(e);
        }
        if (ok) return Graph(n, std::move(es));
    }
    throw precondition_error("pairing model failed to produce a simple cubic graph");
}

/// Connected corona multigraph: every vertex is a leaf (exactly one incident
/// edge instance) or adjacent to a leaf. Parallel edges are allowed.
struct CoronaSpec {
    int base_vertices = 0;
    EdgeSet base_edges;  // multiset, repeats allowed
};

namespace detail {

inline void validate_corona(const CoronaSpec& spec) {
    const int n = spec.base_vertices;
    if (n < 2 || spec.base_edges.empty())
        throw precondition_error("corona base needs at least 2 vertices and 1 edge");
    std::vector<int> deg(static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (auto [u, v] : spec.base_edges) {
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw precondition_error("corona base edge out of range or a loop");
        ++deg[static_cast<size_t>(u)];
        ++deg[static_cast<size_t>(v)];
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : adj[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
    }
    if (reached != n) throw precondition_error("corona base must be connected");
    for (int v = 0; v < n; ++v) {
        if (deg[static_cast<size_t>(v)] == 1) continue;
        bool near_leaf = false;
        for (int w : adj[static_cast<size_t>(v)])
            if (deg[static_cast<size_t>(w)] == 1) { near_leaf = true; break; }
        if (!near_leaf)
            throw precondition_error("base is not a corona multigraph: vertex " +
                                     std::to_string(v) + " is neither a leaf nor next to one");
    }
}

} // namespace detail

/// Subdivision of a connected corona multigraph: one new vertex per edge
/// instance (ids base_vertices + edge rank in sorted order). The result always
/// classifies as a corona subdivision.
inline Graph gen_corona_subdivision(const CoronaSpec& spec) {
    detail::validate_corona(spec);
    EdgeSet base = spec.base_edges;
    for (auto& e : base) e = make_edge(e.first, e.second);
    std::sort(base.begin(), base.end());
    EdgeSet es;
    for (size_t r = 0; r < base.size(); ++r) {
        int mid = spec.base_vertices + static_cast<int>(r);
        es.push_back(make_edge(base[r].first, mid));
        es.push_back(make_edge(base[r].second, mid));
    }
    return Graph(spec.base_vertices + static_cast<int>(base.size()), std::move(es));
}

/// Random corona subdivision: seeded random tree on `tree_vertices` vertices
/// (decoded from a random Pruefer sequence), one pendant attached to every
/// tree vertex, then subdivided.
inline Graph gen_random_corona_subdivision(int tree_vertices, uint32_t seed) {
    if (tree_vertices < 1) throw precondition_error("tree size must be positive");
    const int k = tree_vertices;
    CoronaSpec spec;
    spec.base_vertices = 2 * k;
    if (k >= 2) {
        detail::Rng rng(seed);
        std::vector<int> pruefer(static_cast<size_t>(std::max(0, k - 2)));
        for (auto& x : pruefer) x = rng.below(k);
        std::vector<int> child_count(static_cast<size_t>(k), 0);
        for (int x : pruefer) ++child_count[static_cast<size_t>(x)];
        std::set<int> leaves;
        for (int v = 0; v < k; ++v)
            if (child_count[static_cast<size_t>(v)] == 0) leaves.insert(v);
        for (int x : pruefer) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            spec.base_edges.push_back(make_edge(leaf, x));
            if (--child_count[static_cast<size_t>(x)] == 0) leaves.insert(x);
        }
        int a = *leaves.begin();
        int b = *std::next(leaves.begin());
        spec.base_edges.push_back(make_edge(a, b));
    }
    for (int v = 0; v < k; ++v) spec.base_edges.push_back({v, k + v});
    return gen_corona_subdivision(spec);
}

/// One new pendant per vertex. The result is never DD2: every original vertex
/// ends up a support whose whole neighborhood consists of leaves and supports.
inline Graph gen_non_dd2(const Graph& g) {
    if (g.vertex_count() == 0 || g.min_degree() == 0)
        throw precondition_error("gen_non_dd2 requires a graph without isolated vertices");
    const int n = g.vertex_count();
    EdgeSet es = g.edges();
    for (int v = 0; v < n; ++v) es.push_back({v, n + v});
    return Graph(2 * n, std::move(es));
}

// ---------------------------------------------------------------------------
// Hardness-reduction gadgets
// ---------------------------------------------------------------------------

enum class GadgetKind { min_vc, max_is, max_min_vc };

struct VertexGadgetIds {
    int p = -1, q = -1, r = -1, s = -1, t = -1;
};

/// Vertex correspondence tables for the three reductions. Original vertices
/// keep their ids; auxiliary vertices follow in construction order (edge
/// vertices by edge rank, then per-vertex gadgets, then the hub).
struct GadgetMap {
    GadgetKind kind = GadgetKind::min_vc;
    Graph source;
    Graph target;
    std::vector<int> edge_vertex;                  // e_uv by source edge rank
    std::vector<VertexGadgetIds> vertex_gadget;    // per source vertex
    std::vector<int> pendant_leaf;                 // l_uv (max_min_vc only)
    std::vector<std::vector<int>> pendant_bundle;  // a_i^j (max_min_vc only)
    int hub = -1;                                  // p (max_min_vc only)

    int edge_rank(int u, int v) const {
        Edge e = make_edge(u, v);
        auto it = std::lower_bound(source.edges().begin(), source.edges().end(), e);
        if (it == source.edges().end() || *it != e)
            throw precondition_error("not a source edge");
        return static_cast<int>(it - source.edges().begin());
    }
};

namespace detail {

inline bool is_vertex_cover_of(const Graph& g, const VertexSet& s) {
    for (const auto& [u, v] : g.edges())
        if (!contains(s, u) && !contains(s, v)) return false;
    return true;
}

inline bool is_minimal_vertex_cover_of(const Graph& g, const VertexSet& s) {
    if (!is_vertex_cover_of(g, s)) return false;
    for (int v : s) {
        bool has_private = false;
        for (int w : g.neighbors(v))
            if (!contains(s, w)) { has_private = true; break; }
        // an S-S edge is never private; v without a private edge is removable
        if (!has_private) return false;
    }
    return true;
}

inline bool is_independent_set_of(const Graph& g, const VertexSet& s) {
    for (int v : s)
        for (int w : g.neighbors(v))
            if (contains(s, w)) return false;
    return true;
}

inline bool is_maximal_independent_set_of(const Graph& g, const VertexSet& s) {
    if (!is_independent_set_of(g, s)) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (contains(s, v)) continue;
        bool blocked = false;
        for (int w : g.neighbors(v))
            if (contains(s, w)) { blocked = true; break; }
        if (!blocked) return false;
    }
    return true;
}

} // namespace detail

/// Minimum-vertex-cover reduction target: subdivide every edge, attach a
/// 5-vertex gadget (4-cycle p q r s plus tail s-t, t-v) to every original
/// vertex. For a cubic source: 6n + 3n/2 vertices, 2m + 6n edges, min degree 2.
inline GadgetMap gen_minvc_gadget(const Graph& g) {
    if (!g.is_regular(3))
        throw precondition_error("the min-VC gadget requires a 3-regular source");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    GadgetMap map;
    map.kind = GadgetKind::min_vc;
    map.source = g;
    EdgeSet es;
    for (int r = 0; r < m; ++r) {
        int ev = n + r;
        map.edge_vertex.push_back(ev);
        es.push_back(make_edge(g.edges()[static_cast<size_t>(r)].first, ev));
        es.push_back(make_edge(g.edges()[static_cast<size_t>(r)].second, ev));
    }
    for (int i = 0; i < n; ++i) {
        int base = n + m + 5 * i;
        VertexGadgetIds ids{base, base + 1, base + 2, base + 3, base + 4};
        map.vertex_gadget.push_back(ids);
        es.push_back({ids.p, ids.q});
        es.push_back({ids.q, ids.r});
        es.push_back({ids.r, ids.s});
        es.push_back({ids.p, ids.s});
        es.push_back({ids.s, ids.t});
        es.push_back(make_edge(ids.t, i));
    }
    map.target = Graph(n + m + 5 * n, std::move(es));
    return map;
}

/// Forward map of the min-VC reduction: an ordered minimal cover becomes a
/// minimal spanning DD2 subgraph of the gadget with exactly 11n/2 + |S| edges.
/// Covered vertices get their full 4-cycle plus a star over t and the edge
/// vertices they claim first; uncovered vertices split into two paths.
inline SpanningSubgraph vc_to_min_subgraph(const GadgetMap& map, const std::vector<int>& ordered_cover) {
    if (map.kind != GadgetKind::min_vc) throw precondition_error("gadget kind mismatch");
    VertexSet cover(ordered_cover.begin(), ordered_cover.end());
    std::sort(cover.begin(), cover.end());
    if (!detail::is_minimal_vertex_cover_of(map.source, cover))
        throw precondition_error("S is not a minimal vertex cover of the source");

    const int n = map.source.vertex_count();
    std::vector<int> pos(static_cast<size_t>(n), std::numeric_limits<int>::max());
    for (size_t j = 0; j < ordered_cover.size(); ++j)
        pos[static_cast<size_t>(ordered_cover[j])] = static_cast<int>(j);

    EdgeSet kept;
    for (int v = 0; v < n; ++v) {
        const VertexGadgetIds& ids = map.vertex_gadget[static_cast<size_t>(v)];
        if (pos[static_cast<size_t>(v)] != std::numeric_limits<int>::max()) {
            kept.push_back(make_edge(ids.p, ids.q));
            kept.push_back(make_edge(ids.q, ids.r));
            kept.push_back(make_edge(ids.r, ids.s));
            kept.push_back(make_edge(ids.p, ids.s));
            kept.push_back(make_edge(ids.t, v));
            for (int x : map.source.neighbors(v))
                if (pos[static_cast<size_t>(x)] > pos[static_cast<size_t>(v)])
                    kept.push_back(make_edge(v, map.edge_vertex[static_cast<size_t>(map.edge_rank(v, x))]));
        } else {
            kept.push_back(make_edge(ids.p, ids.q));
            kept.push_back(make_edge(ids.q, ids.r));
            kept.push_back(make_edge(v, ids.t));
            kept.push_back(make_edge(ids.t, ids.s));
        }
    }
    std::sort(kept.begin(), kept.end());
    return SpanningSubgraph{map.target, std::move(kept)};
}

namespace detail {

inline std::set<Edge> edge_set_of(const EdgeSet& edges) {
    return std::set<Edge>(edges.begin(), edges.end());
}

inline VertexSet component_of(const Graph& parent, const std::set<Edge>& kept, int start) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(parent.vertex_count()));
    for (const auto& [u, v] : kept) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    VertexSet comp;
    std::vector<char> seen(static_cast<size_t>(parent.vertex_count()), 0);
    std::vector<int> stack{start};
    seen[static_cast<size_t>(start)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (int w : adj[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

} // namespace detail

/// Backward map of the min-VC reduction: start from the associated set (the
/// vertices owning a complete 4-cycle), complete it to a cover with the
/// smaller endpoint of each uncovered edge, prune to a minimal cover, and
/// rebuild the normalized subgraph, which has exactly 11n/2 + |S| edges.
///
/// Minimal subgraphs of the gadget can keep a whole gadget path p-q-r-s-t as
/// one component with the original vertex served by edge vertices alone; such
/// solutions fall below 11n/2 + tau(source) and admit no size-preserving
/// normalization, so the rebuild replaces the in-place component surgery.
inline VertexSet minvc_subgraph_to_vc(const GadgetMap& map, const SpanningSubgraph& h) {
    if (map.kind != GadgetKind::min_vc) throw precondition_error("gadget kind mismatch");
    if (!is_minimal_spanning_dd2(map.target, h))
        throw precondition_error("subgraph is not a minimal spanning DD2 subgraph of the gadget");
    const int n = map.source.vertex_count();
    std::set<Edge> kept = detail::edge_set_of(h.kept);

    auto has_c4 = [&](int i) {
        const VertexGadgetIds& ids = map.vertex_gadget[static_cast<size_t>(i)];
        return kept.count(make_edge(ids.p, ids.q)) && kept.count(make_edge(ids.q, ids.r)) &&
               kept.count(make_edge(ids.r, ids.s)) && kept.count(make_edge(ids.p, ids.s));
    };

    std::vector<char> in_s(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        if (has_c4(i)) in_s[static_cast<size_t>(i)] = 1;
    for (const auto& [u, v] : map.source.edges())
        if (!in_s[static_cast<size_t>(u)] && !in_s[static_cast<size_t>(v)])
            in_s[static_cast<size_t>(std::min(u, v))] = 1;
    // prune to a minimal cover, ascending
    for (int v = 0; v < n; ++v) {
        if (!in_s[static_cast<size_t>(v)]) continue;
        bool removable = true;
        for (int w : map.source.neighbors(v))
            if (!in_s[static_cast<size_t>(w)]) { removable = false; break; }
        if (removable) in_s[static_cast<size_t>(v)] = 0;
    }
    VertexSet s;
    for (int i = 0; i < n; ++i)
        if (in_s[static_cast<size_t>(i)]) s.push_back(i);

    if (!detail::is_minimal_vertex_cover_of(map.source, s))
        throw precondition_error("backward map did not reach a minimal vertex cover");
    SpanningSubgraph normalized = vc_to_min_subgraph(map, std::vector<int>(s.begin(), s.end()));
    if (static_cast<long long>(normalized.kept.size()) !=
        11ll * n / 2 + static_cast<long long>(s.size()))
        throw precondition_error("backward map size identity failed");
    return s;
}

/// Maximum-independent-set reduction target: subdivide every edge, attach a
/// path gadget (p-q-r-s, s-v) to every original vertex. For a cubic source:
/// 5n + 3n/2 vertices, 2m + 4n edges.
inline GadgetMap gen_maxis_gadget(const Graph& g) {
    if (!g.is_regular(3))
        throw precondition_error("the max-IS gadget requires a 3-regular source");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    GadgetMap map;
    map.kind = GadgetKind::max_is;
    map.source = g;
    EdgeSet es;
    for (int r = 0; r < m; ++r) {
        int ev = n + r;
        map.edge_vertex.push_back(ev);
        es.push_back(make_edge(g.edges()[static_cast<size_t>(r)].first, ev));
        es.push_back(make_edge(g.edges()[static_cast<size_t>(r)].second, ev));
    }
    for (int i = 0; i < n; ++i) {
        int base = n + m + 4 * i;
        VertexGadgetIds ids{base, base + 1, base + 2, base + 3, -1};
        map.vertex_gadget.push_back(ids);
        es.push_back({ids.p, ids.q});
        es.push_back({ids.q, ids.r});
        es.push_back({ids.r, ids.s});
        es.push_back(make_edge(ids.s, i));
    }
    map.target = Graph(n + m + 4 * n, std::move(es));
    return map;
}

/// Forward map of the max-IS reduction: a maximal independent set becomes a
/// minimal spanning DD2 subgraph with exactly 9n/2 + |I| edges. Independent
/// vertices take their whole gadget path as a P5; the others keep a P3 and a
/// star over s, themselves, and the edge vertices they claim first.
inline SpanningSubgraph is_to_max_subgraph(const GadgetMap& map, const VertexSet& independent) {
    if (map.kind != GadgetKind::max_is) throw precondition_error("gadget kind mismatch");
    if (!detail::is_maximal_independent_set_of(map.source, independent))
        throw precondition_error("I is not a maximal independent set of the source");
    const int n = map.source.vertex_count();
    std::vector<int> pos(static_cast<size_t>(n), std::numeric_limits<int>::max());
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!contains(independent, v)) pos[static_cast<size_t>(v)] = next++;

    EdgeSet kept;
    for (int v = 0; v < n; ++v) {
        const VertexGadgetIds& ids = map.vertex_gadget[static_cast<size_t>(v)];
        if (contains(independent, v)) {
            kept.push_back(make_edge(ids.p, ids.q));
            kept.push_back(make_edge(ids.q, ids.r));
            kept.push_back(make_edge(ids.r, ids.s));
            kept.push_back(make_edge(ids.s, v));
        } else {
            kept.push_back(make_edge(ids.p, ids.q));
            kept.push_back(make_edge(ids.q, ids.r));
            kept.push_back(make_edge(ids.s, v));
            for (int x : map.source.neighbors(v))
                if (pos[static_cast<size_t>(x)] > pos[static_cast<size_t>(v)])
                    kept.push_back(make_edge(v, map.edge_vertex[static_cast<size_t>(map.edge_rank(v, x))]));
        }
    }
    std::sort(kept.begin(), kept.end());
    return SpanningSubgraph{map.target, std::move(kept)};
}

/// Backward map of the max-IS reduction: normalize away every P5 component
/// that runs through an edge vertex (swap it for the gadget-path P5 of its
/// smaller endpoint, size unchanged), then read off the vertices whose
/// component is exactly their gadget path.
inline VertexSet maxis_subgraph_to_is(const GadgetMap& map, const SpanningSubgraph& h) {
    if (map.kind != GadgetKind::max_is) throw precondition_error("gadget kind mismatch");
    if (!is_minimal_spanning_dd2(map.target, h))
        throw precondition_error("subgraph is not a minimal spanning DD2 subgraph of the gadget");
    const int n = map.source.vertex_count();
    std::set<Edge> kept = detail::edge_set_of(h.kept);

    // component of v_i is (s_i, v_i, e_uv, v_j, s_j)?
    auto five_path_through_edge = [&](int vi) -> int {
        const VertexGadgetIds& ids = map.vertex_gadget[static_cast<size_t>(vi)];
        if (!kept.count(make_edge(ids.s, vi))) return -1;
        int ev = -1;
        for (int x : map.source.neighbors(vi)) {
            int cand = map.edge_vertex[static_cast<size_t>(map.edge_rank(vi, x))];
            if (kept.count(make_edge(vi, cand))) {
                if (ev >= 0) return -1;  // degree > 2
                ev = cand;
            }
        }
        if (ev < 0) return -1;
        VertexSet comp = detail::component_of(map.target, kept, vi);
        if (comp.size() != 5) return -1;
        return ev;
    };

    for (int guard = 0; guard <= n; ++guard) {
        int vi = -1, ev = -1;
        for (int v = 0; v < n && vi < 0; ++v) {
            int cand = five_path_through_edge(v);
            if (cand >= 0) { vi = v; ev = cand; }
        }
        if (vi < 0) break;
        if (guard == n)
            throw precondition_error("backward map exceeded its update bound");
        const VertexGadgetIds& ids = map.vertex_gadget[static_cast<size_t>(vi)];
        kept.insert(make_edge(ids.r, ids.s));
        kept.erase(make_edge(vi, ev));
    }

    VertexSet s;
    for (int v = 0; v < n; ++v) {
        const VertexGadgetIds& ids = map.vertex_gadget[static_cast<size_t>(v)];
        VertexSet comp = detail::component_of(map.target, kept, v);
        VertexSet gadget_path{ids.p, ids.q, ids.r, ids.s, v};
        std::sort(gadget_path.begin(), gadget_path.end());
        if (comp == gadget_path) s.push_back(v);
    }
    if (!detail::is_independent_set_of(map.source, s))
        throw precondition_error("backward map did not reach an independent set");
    if (static_cast<long long>(kept.size()) != 9ll * n / 2 + static_cast<long long>(s.size()))
        throw precondition_error("backward map size identity failed");
    return s;
}

/// Max-min edge-addition reduction target: m+1 pendants per original vertex,
/// a subdivision vertex with its own pendant per edge, and a hub adjacent to
/// every original vertex. Bipartite and never DD2.
inline GadgetMap gen_maxmin_gadget(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (n < 1 || m < 1)
        throw precondition_error("the max-min gadget requires a non-empty source");
    GadgetMap map;
    map.kind = GadgetKind::max_min_vc;
    map.source = g;
    EdgeSet es;
    for (int r = 0; r < m; ++r) {
        int ev = n + 2 * r;
        int lv = n + 2 * r + 1;
        map.edge_vertex.push_back(ev);
        map.pendant_leaf.push_back(lv);
        es.push_back(make_edge(ev, lv));
        es.push_back(make_edge(g.edges()[static_cast<size_t>(r)].first, ev));
        es.push_back(make_edge(g.edges()[static_cast<size_t>(r)].second, ev));
    }
    map.pendant_bundle.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= m; ++j) {
            int a = n + 2 * m + (m + 1) * i + j;
            map.pendant_bundle[static_cast<size_t>(i)].push_back(a);
            es.push_back(make_edge(i, a));
        }
    }
    map.hub = n + 2 * m + (m + 1) * n;
    for (int i = 0; i < n; ++i) es.push_back(make_edge(i, map.hub));
    map.target = Graph(map.hub + 1, std::move(es));
    return map;
}

/// Forward map: join every pendant of every covered vertex to the hub,
/// |plan| = |S|(m+1). Feasible, and minimal because each covered vertex has a
/// private edge whose subdivision vertex relies on it.
inline EdgeAdditionPlan vc_to_edge_addition(const GadgetMap& map, const VertexSet& cover) {
    if (map.kind != GadgetKind::max_min_vc) throw precondition_error("gadget kind mismatch");
    if (!detail::is_minimal_vertex_cover_of(map.source, cover))
        throw precondition_error("S is not a minimal vertex cover of the source");
    EdgeAdditionPlan plan;
    for (int v : cover)
        for (int a : map.pendant_bundle[static_cast<size_t>(v)])
            plan.additions.push_back(make_edge(a, map.hub));
    std::sort(plan.additions.begin(), plan.additions.end());
    EdgeSet all = map.target.edges();
    all.insert(all.end(), plan.additions.begin(), plan.additions.end());
    if (!is_dd2(Graph(map.target.vertex_count(), all)).is_dd2)
        throw precondition_error("forward map produced an infeasible plan");
    return plan;
}

/// Backward map: normalize the plan into bundle form (complete the bundle of
/// an endpoint of every uncovered edge, dropping replaced helper edges when
/// feasibility allows), then read off the fully-bundled vertices.
inline VertexSet edge_addition_to_vc(const GadgetMap& map, const EdgeAdditionPlan& plan) {
    if (map.kind != GadgetKind::max_min_vc) throw precondition_error("gadget kind mismatch");
    std::set<Edge> additions;
    for (const auto& e : plan.additions) {
        if (map.target.has_edge(e.first, e.second))
            throw precondition_error("plan overlaps the gadget's own edges");
        additions.insert(make_edge(e.first, e.second));
    }
    auto feasible = [&]() {
        EdgeSet all = map.target.edges();
        all.insert(all.end(), additions.begin(), additions.end());
        return is_dd2(Graph(map.target.vertex_count(), all)).is_dd2;
    };
    if (!feasible()) throw precondition_error("plan is not feasible for the gadget");

    const int n = map.source.vertex_count();
    auto bundled = [&](int i) {
        for (int a : map.pendant_bundle[static_cast<size_t>(i)])
            if (!additions.count(make_edge(a, map.hub))) return false;
        return true;
    };

    for (int guard = 0; guard <= map.source.edge_count(); ++guard) {
        int vi = -1, vj = -1;
        for (const auto& [u, v] : map.source.edges()) {
            if (!bundled(u) && !bundled(v)) { vi = u; vj = v; break; }
        }
        if (vi < 0) break;
        if (guard == map.source.edge_count())
            throw precondition_error("backward map exceeded its update bound");
        for (int a : map.pendant_bundle[static_cast<size_t>(vi)])
            additions.insert(make_edge(a, map.hub));
        // drop helper edges around this edge's subdivision pair when possible
        int r = map.edge_rank(vi, vj);
        int ev = map.edge_vertex[static_cast<size_t>(r)];
        int lv = map.pendant_leaf[static_cast<size_t>(r)];
        std::vector<Edge> touching;
        for (const auto& e : additions)
            if (e.first == ev || e.second == ev || e.first == lv || e.second == lv)
                touching.push_back(e);
        for (const auto& e : touching) {
            additions.erase(e);
            if (!feasible()) additions.insert(e);
        }
    }

    VertexSet s;
    for (int i = 0; i < n; ++i)
        if (bundled(i)) s.push_back(i);
    if (!detail::is_vertex_cover_of(map.source, s))
        throw precondition_error("backward map did not reach a vertex cover");
    return s;
}

} // namespace dd2
