#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstdlib>

#include "dd2/graph.hpp"
#include "dd2/recognition.hpp"

namespace dd2 {

/// Hard caps for the exhaustive solvers. Enumeration aborts with budget_error
/// instead of running unbounded.
struct OracleBudget {
    int max_vertices = 20;
    int max_edges = 22;
    long long max_subsets = 1ll << 22;
};

enum class WitnessKind { vertex_set, edge_set };

struct OracleResult {
    long long value = 0;
    WitnessKind kind = WitnessKind::vertex_set;
    VertexSet witness_vertices;
    EdgeSet witness_edges;
    long long explored = 0;
};

namespace detail {

constexpr int kMaskMaxVertices = 26;

inline void require_vertex_budget(const Graph& g, const OracleBudget& b) {
    if (g.vertex_count() > b.max_vertices || g.vertex_count() > kMaskMaxVertices)
        throw budget_error("graph has " + std::to_string(g.vertex_count()) +
                           " vertices, oracle budget is " + std::to_string(b.max_vertices));
}

inline void require_edge_budget(const Graph& g, const OracleBudget& b) {
    if (g.edge_count() > b.max_edges || g.edge_count() > 31)
        throw budget_error("graph has " + std::to_string(g.edge_count()) +
                           " edges, oracle budget is " + std::to_string(b.max_edges));
    if (g.vertex_count() > kMaskMaxVertices)
        throw budget_error("edge-subset oracle supports at most " +
                           std::to_string(kMaskMaxVertices) + " vertices");
}

inline void count_explored(long long& explored, const OracleBudget& b) {
    if (++explored > b.max_subsets)
        throw budget_error("enumeration exceeded subset budget of " +
                           std::to_string(b.max_subsets));
}

struct AdjMasks {
    int n = 0;
    std::array<uint32_t, kMaskMaxVertices> open{};

    explicit AdjMasks(const Graph& g) : n(g.vertex_count()) {
        for (const auto& [u, v] : g.edges()) {
            open[static_cast<size_t>(u)] |= 1u << v;
            open[static_cast<size_t>(v)] |= 1u << u;
        }
    }
    AdjMasks() = default;

    uint32_t closed(int v) const { return open[static_cast<size_t>(v)] | (1u << v); }
};

// Adjacency masks of the subgraph selected by an edge-subset bitmask.
inline void build_subset_adj(const EdgeSet& edges, uint32_t subset, int n, uint32_t* adj) {
    for (int v = 0; v < n; ++v) adj[v] = 0;
    uint32_t bits = subset;
    while (bits) {
        int e = std::countr_zero(bits);
        bits &= bits - 1;
        auto [u, v] = edges[static_cast<size_t>(e)];
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
}

// Spanning + DD2 over adjacency masks: no isolated vertex and every weak
// support has a neighbor outside leaves-and-supports.
inline bool mask_spanning_dd2(int n, const uint32_t* adj) {
    uint32_t leaf = 0;
    for (int v = 0; v < n; ++v) {
        if (adj[v] == 0) return false;
        if (std::popcount(adj[v]) == 1) leaf |= 1u << v;
    }
    uint32_t support = 0, weak = 0;
    for (int v = 0; v < n; ++v) {
        int pendants = std::popcount(adj[v] & leaf);
        if (pendants >= 1) support |= 1u << v;
        if (pendants == 1) weak |= 1u << v;
    }
    uint32_t free_mask = ~(leaf | support);
    uint32_t w = weak;
    while (w) {
        int v = std::countr_zero(w);
        w &= w - 1;
        if ((adj[v] & free_mask) == 0) return false;
    }
    return true;
}

// Next bitmask with the same popcount (Gosper); returns 0 on wraparound.
inline uint32_t next_same_popcount(uint32_t x) {
    uint32_t c = x & (0u - x);
    uint32_t r = x + c;
    if (r == 0) return 0;
    return (((r ^ x) >> 2) / c) | r;
}

} // namespace detail

/// Smallest edge subset that forms a spanning DD2 subgraph. The minimum-size
/// solution is automatically minimal, so bit-count order with early exit works.
inline OracleResult exact_min_spanning_dd2(const Graph& g,
                                           const OracleBudget& budget = {}) {
    if (!is_dd2(g).is_dd2)
        throw precondition_error("exact_min_spanning_dd2 requires a DD2 input");
    detail::require_edge_budget(g, budget);
    const int m = g.edge_count();
    const int n = g.vertex_count();
    uint32_t adj[detail::kMaskMaxVertices];
    OracleResult res;
    res.kind = WitnessKind::edge_set;
    for (int k = 0; k <= m; ++k) {
        uint32_t subset = (k == 0) ? 0u : ((1u << k) - 1u);
        uint32_t last = (k == 0) ? 0u : (((1u << k) - 1u) << (m - k));
        while (true) {
            detail::count_explored(res.explored, budget);
            detail::build_subset_adj(g.edges(), subset, n, adj);
            if (detail::mask_spanning_dd2(n, adj)) {
                res.value = k;
                for (int e = 0; e < m; ++e)
                    if (subset & (1u << e)) res.witness_edges.push_back(g.edges()[static_cast<size_t>(e)]);
                return res;
            }
            if (k == 0 || subset == last) break;
            subset = detail::next_same_popcount(subset);
        }
    }
    throw precondition_error("no spanning DD2 subgraph found despite DD2 input");
}

/// Largest minimal spanning DD2 subgraph; scans all subsets, minimality by the
/// per-edge deletion test (independent of the structural classifier).
inline OracleResult exact_max_minimal_spanning_dd2(const Graph& g,
                                                   const OracleBudget& budget = {}) {
    if (!is_dd2(g).is_dd2)
        throw precondition_error("exact_max_minimal_spanning_dd2 requires a DD2 input");
    detail::require_edge_budget(g, budget);
    const int m = g.edge_count();
    const int n = g.vertex_count();
    if ((1ll << m) > budget.max_subsets)
        throw budget_error("full edge-subset scan exceeds subset budget");
    uint32_t adj[detail::kMaskMaxVertices];
    OracleResult res;
    res.kind = WitnessKind::edge_set;
    res.value = -1;
    uint32_t best = 0;
    const uint32_t all = (m == 32) ? 0xffffffffu : ((1u << m) - 1u);
    for (uint32_t subset = 0;; ++subset) {
        detail::count_explored(res.explored, budget);
        detail::build_subset_adj(g.edges(), subset, n, adj);
        if (detail::mask_spanning_dd2(n, adj)) {
            bool minimal = true;
            uint32_t bits = subset;
            while (bits) {
                uint32_t low = bits & (0u - bits);
                bits ^= low;
                detail::build_subset_adj(g.edges(), subset ^ low, n, adj);
                if (detail::mask_spanning_dd2(n, adj)) { minimal = false; break; }
            }
            if (minimal && std::popcount(subset) > res.value) {
                res.value = std::popcount(subset);
                best = subset;
            }
        }
        if (subset == all) break;
    }
    if (res.value < 0)
        throw precondition_error("no minimal spanning DD2 subgraph found despite DD2 input");
    for (int e = 0; e < m; ++e)
        if (best & (1u << e)) res.witness_edges.push_back(g.edges()[static_cast<size_t>(e)]);
    return res;
}

/// First valid DD2 pair in ascending A-mask order, or nullopt.
inline std::optional<DD2Pair> exact_has_dd2_pair(const Graph& g,
                                                 const OracleBudget& budget = {}) {
    detail::require_vertex_budget(g, budget);
    const int n = g.vertex_count();
    if ((1ll << n) > budget.max_subsets)
        throw budget_error("bipartition scan exceeds subset budget");
    detail::AdjMasks masks(g);
    const uint32_t all = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
    for (uint32_t a = 0;; ++a) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (a & (1u << v)) {
                ok = std::popcount(masks.open[static_cast<size_t>(v)] & ~a & all) >= 2;
            } else {
                ok = (masks.open[static_cast<size_t>(v)] & a) != 0;
            }
        }
        if (ok) {
            DD2Pair p;
            for (int v = 0; v < n; ++v) ((a >> v) & 1u ? p.a : p.b).push_back(v);
            return p;
        }
        if (a == all) break;
    }
    return std::nullopt;
}

inline OracleResult exact_min_vertex_cover(const Graph& g, const OracleBudget& budget = {}) {
    detail::require_vertex_budget(g, budget);
    const int n = g.vertex_count();
    std::vector<uint32_t> edge_bits;
    for (const auto& [u, v] : g.edges()) edge_bits.push_back((1u << u) | (1u << v));
    OracleResult res;
    for (int k = 0; k <= n; ++k) {
        uint32_t s = (k == 0) ? 0u : ((1u << k) - 1u);
        uint32_t last = (k == 0) ? 0u : (((1u << k) - 1u) << (n - k));
        while (true) {
            detail::count_explored(res.explored, budget);
            bool cover = true;
            for (uint32_t eb : edge_bits)
                if ((eb & s) == 0) { cover = false; break; }
            if (cover) {
                res.value = k;
                for (int v = 0; v < n; ++v)
                    if (s & (1u << v)) res.witness_vertices.push_back(v);
                return res;
            }
            if (k == 0 || s == last) break;
            s = detail::next_same_popcount(s);
        }
    }
    throw precondition_error("unreachable: V itself is a vertex cover");
}

namespace detail {

inline bool mask_is_vertex_cover(const std::vector<uint32_t>& edge_bits, uint32_t s) {
    for (uint32_t eb : edge_bits)
        if ((eb & s) == 0) return false;
    return true;
}

inline bool mask_is_minimal_vertex_cover(const std::vector<uint32_t>& edge_bits, uint32_t s) {
    if (!mask_is_vertex_cover(edge_bits, s)) return false;
    uint32_t bits = s;
    while (bits) {
        uint32_t low = bits & (0u - bits);
        bits ^= low;
        if (mask_is_vertex_cover(edge_bits, s ^ low)) return false;
    }
    return true;
}

} // namespace detail

/// Maximum-cardinality minimal vertex cover (full scan).
inline OracleResult exact_max_min_vertex_cover(const Graph& g, const OracleBudget& budget = {}) {
    detail::require_vertex_budget(g, budget);
    const int n = g.vertex_count();
    if ((1ll << n) > budget.max_subsets)
        throw budget_error("vertex-subset scan exceeds subset budget");
    std::vector<uint32_t> edge_bits;
    for (const auto& [u, v] : g.edges()) edge_bits.push_back((1u << u) | (1u << v));
    OracleResult res;
    res.value = -1;
    uint32_t best = 0;
    const uint32_t all = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
    for (uint32_t s = 0;; ++s) {
        detail::count_explored(res.explored, budget);
        if (detail::mask_is_minimal_vertex_cover(edge_bits, s) &&
            std::popcount(s) > res.value) {
            res.value = std::popcount(s);
            best = s;
        }
        if (s == all) break;
    }
    for (int v = 0; v < n; ++v)
        if (best & (1u << v)) res.witness_vertices.push_back(v);
    return res;
}

inline OracleResult exact_max_independent_set(const Graph& g, const OracleBudget& budget = {}) {
    detail::require_vertex_budget(g, budget);
    const int n = g.vertex_count();
    detail::AdjMasks masks(g);
    OracleResult res;
    for (int k = n; k >= 0; --k) {
        uint32_t s = (k == 0) ? 0u : ((1u << k) - 1u);
        uint32_t last = (k == 0) ? 0u : (((1u << k) - 1u) << (n - k));
        while (true) {
            detail::count_explored(res.explored, budget);
            bool indep = true;
            uint32_t bits = s;
            while (bits && indep) {
                int v = std::countr_zero(bits);
                bits &= bits - 1;
                indep = (masks.open[static_cast<size_t>(v)] & s) == 0;
            }
            if (indep) {
                res.value = k;
                for (int v = 0; v < n; ++v)
                    if (s & (1u << v)) res.witness_vertices.push_back(v);
                return res;
            }
            if (k == 0 || s == last) break;
            s = detail::next_same_popcount(s);
        }
    }
    return res;  // k = 0 always succeeds
}

/// Instance of weighted T-domination: find D minimizing total weight with
/// D meeting the closed neighborhood of every target vertex.
struct WeightedTDomInstance {
    Graph h;
    std::vector<long long> weights;  // per vertex, all >= 1
    VertexSet targets;
};

inline OracleResult exact_min_weight_tdom(const WeightedTDomInstance& inst,
                                          const OracleBudget& budget = {}) {
    detail::require_vertex_budget(inst.h, budget);
    const int n = inst.h.vertex_count();
    if (static_cast<int>(inst.weights.size()) != n)
        throw precondition_error("weight vector size mismatch");
    for (long long w : inst.weights)
        if (w < 1) throw precondition_error("weights must be >= 1");
    for (int t : inst.targets)
        if (t < 0 || t >= n) throw precondition_error("target vertex out of range");
    if ((1ll << n) > budget.max_subsets)
        throw budget_error("vertex-subset scan exceeds subset budget");
    detail::AdjMasks masks(inst.h);
    std::vector<uint32_t> target_closed;
    for (int t : inst.targets) target_closed.push_back(masks.closed(t));
    OracleResult res;
    long long best_w = -1;
    uint32_t best = 0;
    const uint32_t all = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
    for (uint32_t s = 0;; ++s) {
        detail::count_explored(res.explored, budget);
        bool feasible = true;
        for (uint32_t tc : target_closed)
            if ((tc & s) == 0) { feasible = false; break; }
        if (feasible) {
            long long w = 0;
            uint32_t bits = s;
            while (bits) {
                int v = std::countr_zero(bits);
                bits &= bits - 1;
                w += inst.weights[static_cast<size_t>(v)];
            }
            if (best_w < 0 || w < best_w) {
                best_w = w;
                best = s;
            }
        }
        if (s == all || n == 0) break;
    }
    res.value = best_w;
    for (int v = 0; v < n; ++v)
        if (best & (1u << v)) res.witness_vertices.push_back(v);
    return res;
}

/// Iterative deepening over non-edge subsets until the augmented graph is DD2.
inline OracleResult exact_min_edge_addition(const Graph& g, const OracleBudget& budget = {}) {
    if (is_dd2(g).is_dd2)
        throw precondition_error("exact_min_edge_addition requires a non-DD2 input");
    detail::require_vertex_budget(g, budget);
    const int n = g.vertex_count();
    if (n < 3)
        throw precondition_error("no edge addition can make a graph on fewer than 3 vertices DD2");
    EdgeSet non_edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) non_edges.push_back({u, v});
    detail::AdjMasks base(g);
    OracleResult res;
    res.kind = WitnessKind::edge_set;
    const int t = static_cast<int>(non_edges.size());
    uint32_t adj[detail::kMaskMaxVertices];
    for (int k = 0; k <= t; ++k) {
        std::vector<int> idx(static_cast<size_t>(k));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            detail::count_explored(res.explored, budget);
            for (int v = 0; v < n; ++v) adj[v] = base.open[static_cast<size_t>(v)];
            for (int i : idx) {
                auto [u, v] = non_edges[static_cast<size_t>(i)];
                adj[u] |= 1u << v;
                adj[v] |= 1u << u;
            }
            if (detail::mask_spanning_dd2(n, adj)) {
                res.value = k;
                for (int i : idx) res.witness_edges.push_back(non_edges[static_cast<size_t>(i)]);
                return res;
            }
            // next k-combination in lexicographic index order
            int pos = k - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == t - k + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (int j = pos + 1; j < k; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
    throw precondition_error("graph cannot be made DD2 by edge additions");
}

namespace detail {

inline OracleResult exact_min_coverage(const Graph& g, const OracleBudget& budget,
                                       int needed) {
    require_vertex_budget(g, budget);
    const int n = g.vertex_count();
    AdjMasks masks(g);
    OracleResult res;
    for (int k = 0; k <= n; ++k) {
        uint32_t s = (k == 0) ? 0u : ((1u << k) - 1u);
        uint32_t last = (k == 0) ? 0u : (((1u << k) - 1u) << (n - k));
        while (true) {
            count_explored(res.explored, budget);
            bool feasible = true;
            for (int v = 0; v < n && feasible; ++v) {
                if (s & (1u << v)) continue;
                feasible = std::popcount(masks.open[static_cast<size_t>(v)] & s) >= needed;
            }
            if (feasible) {
                res.value = k;
                for (int v = 0; v < n; ++v)
                    if (s & (1u << v)) res.witness_vertices.push_back(v);
                return res;
            }
            if (k == 0 || s == last) break;
            s = next_same_popcount(s);
        }
    }
    throw precondition_error("graph has a vertex with degree below the coverage requirement");
}

} // namespace detail

/// Domination number: every vertex outside D has a neighbor in D.
inline OracleResult exact_gamma(const Graph& g, const OracleBudget& budget = {}) {
    return detail::exact_min_coverage(g, budget, 1);
}

/// 2-domination number: every vertex outside D2 has two neighbors in D2.
inline OracleResult exact_gamma2(const Graph& g, const OracleBudget& budget = {}) {
    return detail::exact_min_coverage(g, budget, 2);
}

/// Materialized correspondence between one source instance and its reduction
/// image: optima on both sides plus (target value, mapped-back source value)
/// for every enumerated target solution.
struct LReductionEvidence {
    long long source_opt = 0;
    long long target_opt = 0;
    std::vector<std::pair<long long, long long>> solutions;  // (m2(y), m1(y'))
};

/// L-reduction inequalities with rational alpha, beta:
///   opt2 <= alpha * opt1   and   |opt1 - m1(y')| <= beta * |opt2 - m2(y)|.
inline bool verify_l_reduction(const LReductionEvidence& ev, long long alpha_num,
                               long long alpha_den, long long beta_num, long long beta_den) {
    if (alpha_den <= 0 || beta_den <= 0)
        throw precondition_error("alpha and beta denominators must be positive");
    if (ev.target_opt * alpha_den > alpha_num * ev.source_opt) return false;
    for (auto [m2, m1] : ev.solutions) {
        long long lhs = std::abs(ev.source_opt - m1) * beta_den;
        long long rhs = beta_num * std::abs(ev.target_opt - m2);
        if (lhs > rhs) return false;
    }
    return true;
}

} // namespace dd2
