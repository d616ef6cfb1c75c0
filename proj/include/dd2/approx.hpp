#pragma once

#include "dd2/graph.hpp"
#include "dd2/oracles.hpp"
#include "dd2/recognition.hpp"

namespace dd2 {

/// Factor-3 minimization: extract a DD2 pair (A, B), keep only A-B edges and
/// minimalize. The result is a minimal spanning DD2 subgraph with at most
/// 2(n-2) edges against an optimum of at least 2n/3.
inline SpanningSubgraph approx_min_dd2(const Graph& g) {
    DD2Pair pair = find_dd2_pair(g);
    std::vector<char> in_a(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : pair.a) in_a[static_cast<size_t>(v)] = 1;
    EdgeSet cross;
    for (const auto& [u, v] : g.edges())
        if (in_a[static_cast<size_t>(u)] != in_a[static_cast<size_t>(v)])
            cross.push_back({u, v});
    SpanningSubgraph mini = minimalize(Graph(g.vertex_count(), cross));
    return SpanningSubgraph{g, mini.kept};
}

/// Greedy maximal induced matching: repeatedly take the lexicographically
/// smallest remaining edge and delete both closed neighborhoods.
inline EdgeSet maximal_induced_matching(const Graph& g) {
    std::vector<char> alive(static_cast<size_t>(g.vertex_count()), 1);
    EdgeSet m;
    while (true) {
        const Edge* pick = nullptr;
        for (const auto& e : g.edges()) {
            if (alive[static_cast<size_t>(e.first)] && alive[static_cast<size_t>(e.second)]) {
                pick = &e;
                break;
            }
        }
        if (!pick) break;
        m.push_back(*pick);
        auto kill_closed = [&](int v) {
            alive[static_cast<size_t>(v)] = 0;
            for (int w : g.neighbors(v)) alive[static_cast<size_t>(w)] = 0;
        };
        kill_closed(pick->first);
        kill_closed(pick->second);
    }
    return m;
}

/// Intermediate state of the cubic minimization pass.
struct CubicTrace {
    EdgeSet induced_matching;    // M
    VertexSet matched_vertices;  // A' = endpoints of M
    VertexSet leftover;          // T = V \ (A' u N(A')), independent
    EdgeSet removed_edges;       // X: one edge per T-vertex
    EdgeSet result_edges;        // E_H before the minimalize pass
    int a = 0;                   // |A'|
    int t = 0;                   // |T|
};

/// 1.8-factor minimization for 3-regular graphs. Builds the A-B edge set of
/// the induced-matching partition (|E_H| = 2|A'| + 2|T| <= 6n/5), then runs a
/// minimalize pass, which never increases the size, to guarantee minimality
/// over all partitions.
inline std::pair<SpanningSubgraph, CubicTrace> approx_min_dd2_cubic(const Graph& g) {
    if (!g.is_regular(3))
        throw precondition_error("approx_min_dd2_cubic requires a 3-regular graph");
    const int n = g.vertex_count();

    CubicTrace trace;
    trace.induced_matching = maximal_induced_matching(g);
    std::vector<char> in_a(static_cast<size_t>(n), 0);
    for (const auto& [u, v] : trace.induced_matching) {
        in_a[static_cast<size_t>(u)] = 1;
        in_a[static_cast<size_t>(v)] = 1;
        trace.matched_vertices.push_back(u);
        trace.matched_vertices.push_back(v);
    }
    std::sort(trace.matched_vertices.begin(), trace.matched_vertices.end());

    std::vector<char> near_matched(static_cast<size_t>(n), 0);
    for (int v : trace.matched_vertices) {
        near_matched[static_cast<size_t>(v)] = 1;
        for (int w : g.neighbors(v)) near_matched[static_cast<size_t>(w)] = 1;
    }
    for (int v = 0; v < n; ++v) {
        if (!near_matched[static_cast<size_t>(v)]) {
            trace.leftover.push_back(v);
            in_a[static_cast<size_t>(v)] = 1;
        }
    }
    trace.a = static_cast<int>(trace.matched_vertices.size());
    trace.t = static_cast<int>(trace.leftover.size());

    // one removed edge per leftover vertex: its smallest-id incident edge
    std::vector<char> removed(g.edges().size(), 0);
    for (int v : trace.leftover) {
        Edge e = make_edge(v, g.neighbors(v)[0]);
        trace.removed_edges.push_back(e);
        auto it = std::lower_bound(g.edges().begin(), g.edges().end(), e);
        removed[static_cast<size_t>(it - g.edges().begin())] = 1;
    }
    std::sort(trace.removed_edges.begin(), trace.removed_edges.end());

    for (size_t i = 0; i < g.edges().size(); ++i) {
        if (removed[i]) continue;
        auto [u, v] = g.edges()[i];
        if (in_a[static_cast<size_t>(u)] != in_a[static_cast<size_t>(v)])
            trace.result_edges.push_back({u, v});
    }

    SpanningSubgraph mini = minimalize(Graph(n, trace.result_edges));
    return {SpanningSubgraph{g, mini.kept}, trace};
}

/// Factor-3 maximization (1.5 on 3-regular inputs): any minimal spanning DD2
/// subgraph works; deleting low-degree-sum edges first tends to preserve the
/// dense part.
inline SpanningSubgraph approx_max_dd2(const Graph& g) {
    return minimalize(g, make_deletion_order(g, DeletionOrder::low_degree_first));
}

/// Classic weighted greedy cover over closed neighborhoods. Ratio comparisons
/// use cross-multiplied integer arithmetic; ties go to the smaller id.
inline VertexSet greedy_weighted_dominating_set(const Graph& g,
                                                const std::vector<long long>& weights) {
    const int n = g.vertex_count();
    if (static_cast<int>(weights.size()) != n)
        throw precondition_error("weight vector size mismatch");
    for (long long w : weights)
        if (w < 1) throw precondition_error("weights must be >= 1");

    std::vector<char> covered(static_cast<size_t>(n), 0);
    std::vector<char> chosen(static_cast<size_t>(n), 0);
    VertexSet result;
    int uncovered = n;
    while (uncovered > 0) {
        int best = -1;
        long long best_gain = 0;
        for (int v = 0; v < n; ++v) {
            if (chosen[static_cast<size_t>(v)]) continue;
            long long gain = covered[static_cast<size_t>(v)] ? 0 : 1;
            for (int w : g.neighbors(v)) gain += covered[static_cast<size_t>(w)] ? 0 : 1;
            if (gain == 0) continue;
            // w(v)/gain < w(best)/best_gain  <=>  w(v)*best_gain < w(best)*gain
            if (best < 0 || weights[static_cast<size_t>(v)] * best_gain <
                                weights[static_cast<size_t>(best)] * gain) {
                best = v;
                best_gain = gain;
            }
        }
        if (best < 0)
            throw precondition_error("unreachable: every vertex covers itself");
        chosen[static_cast<size_t>(best)] = 1;
        result.push_back(best);
        if (!covered[static_cast<size_t>(best)]) {
            covered[static_cast<size_t>(best)] = 1;
            --uncovered;
        }
        for (int w : g.neighbors(best)) {
            if (!covered[static_cast<size_t>(w)]) {
                covered[static_cast<size_t>(w)] = 1;
                --uncovered;
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

/// The T-domination-to-domination reduction graph: h plus vertices t, p, q
/// (ids n, n+1, n+2), edges tp, tq and tv for every non-target v, with
/// w(t) = 1 and w(p) = w(q) = |V(h)|.
struct TDomReduction {
    Graph gprime;
    std::vector<long long> wprime;
    int t = 0, p = 0, q = 0;
};

inline TDomReduction build_tdom_reduction(const WeightedTDomInstance& inst) {
    const int n = inst.h.vertex_count();
    for (int t : inst.targets)
        if (t < 0 || t >= n) throw precondition_error("target vertex out of range");
    TDomReduction red;
    red.t = n;
    red.p = n + 1;
    red.q = n + 2;
    EdgeSet edges = inst.h.edges();
    edges.push_back({red.t, red.p});
    edges.push_back({red.t, red.q});
    std::vector<char> in_t(static_cast<size_t>(n), 0);
    for (int v : inst.targets) in_t[static_cast<size_t>(v)] = 1;
    for (int v = 0; v < n; ++v)
        if (!in_t[static_cast<size_t>(v)]) edges.push_back({v, red.t});
    red.gprime = Graph(n + 3, std::move(edges));
    red.wprime = inst.weights;
    red.wprime.push_back(1);
    red.wprime.push_back(std::max(1, n));
    red.wprime.push_back(std::max(1, n));
    return red;
}

struct TDomRun {
    VertexSet result;       // T-dominating set of the instance
    VertexSet dprime;       // minimal dominating set of the reduction graph
    TDomReduction reduction;
};

/// Greedy T-dominating set via the reduction: run the weighted dominating
/// greedy on G', swap p/q for t if picked, prune to a minimal dominating set
/// keeping t, and strip t.
inline TDomRun approx_weighted_tdom_traced(const WeightedTDomInstance& inst) {
    TDomRun run;
    if (inst.h.vertex_count() == 0) {
        run.reduction = build_tdom_reduction(inst);
        run.dprime = {run.reduction.t};
        return run;
    }
    run.reduction = build_tdom_reduction(inst);
    const TDomReduction& red = run.reduction;
    VertexSet dprime = greedy_weighted_dominating_set(red.gprime, red.wprime);

    std::vector<char> in_d(static_cast<size_t>(red.gprime.vertex_count()), 0);
    for (int v : dprime) in_d[static_cast<size_t>(v)] = 1;
    if (in_d[static_cast<size_t>(red.p)] || in_d[static_cast<size_t>(red.q)]) {
        in_d[static_cast<size_t>(red.p)] = 0;
        in_d[static_cast<size_t>(red.q)] = 0;
        in_d[static_cast<size_t>(red.t)] = 1;
    }
    if (!in_d[static_cast<size_t>(red.t)]) in_d[static_cast<size_t>(red.t)] = 1;

    auto dominates = [&](const std::vector<char>& d) {
        for (int v = 0; v < red.gprime.vertex_count(); ++v) {
            if (d[static_cast<size_t>(v)]) continue;
            bool hit = false;
            for (int w : red.gprime.neighbors(v))
                if (d[static_cast<size_t>(w)]) { hit = true; break; }
            if (!hit) return false;
        }
        return true;
    };
    for (int v = 0; v < red.gprime.vertex_count(); ++v) {
        if (!in_d[static_cast<size_t>(v)] || v == red.t) continue;
        in_d[static_cast<size_t>(v)] = 0;
        if (!dominates(in_d)) in_d[static_cast<size_t>(v)] = 1;
    }

    for (int v = 0; v < red.gprime.vertex_count(); ++v)
        if (in_d[static_cast<size_t>(v)]) run.dprime.push_back(v);
    for (int v : run.dprime)
        if (v < inst.h.vertex_count()) run.result.push_back(v);
    return run;
}

inline VertexSet approx_weighted_tdom(const WeightedTDomInstance& inst) {
    return approx_weighted_tdom_traced(inst).result;
}

struct MinToDD2Trace {
    VertexSet satisfied_weak_supports;  // U: weak supports already certified
    VertexSet target_supports;          // A = S' \ U
    VertexSet strong_neighbors;         // B = N(A) intersect S''
    WeightedTDomInstance aux_instance;  // H on A u B, remapped to dense ids
    VertexSet aux_to_original;          // aux vertex i -> original id
    VertexSet chosen_supports;          // S, original ids
    VertexSet pendant_pool;             // K: pendant neighbors of S
    EdgeAdditionPlan plan;
    bool fallback_used = false;
};

namespace detail {

// First partner x (ascending id) whose added edge (u, x) makes g+additions+ux
// pass recognition; if no single partner suffices, the smallest non-neighbor.
// Any addition to pendant u strictly shrinks the leaf set, so the repair loop
// around this terminates.
inline Edge fallback_partner(const Graph& g, const EdgeSet& additions, int u) {
    auto taken = [&](int x) {
        if (x == u || g.has_edge(u, x)) return true;
        for (const auto& e : additions)
            if (e == make_edge(u, x)) return true;
        return false;
    };
    int first_free = -1;
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (taken(x)) continue;
        if (first_free < 0) first_free = x;
        EdgeSet trial = additions;
        trial.push_back(make_edge(u, x));
        EdgeSet all = g.edges();
        all.insert(all.end(), trial.begin(), trial.end());
        if (is_dd2(Graph(g.vertex_count(), all)).is_dd2) return make_edge(u, x);
    }
    if (first_free < 0)
        throw precondition_error("no non-edge available to repair pendant vertex " +
                                 std::to_string(u));
    return make_edge(u, first_free);
}

} // namespace detail

/// O(log n)-factor edge addition: find the failing weak supports A, pick a
/// weighted T-dominating set S of the support graph H (weights = pendant
/// counts), and pair up the pendants of S.
///
/// Pairing: sort K ascending and greedily pair non-adjacent vertices; an odd
/// leftover joins the smallest-id paired vertex it is not adjacent to. A lone
/// or unpairable pendant falls back to a partner search over all non-neighbors
/// (fallback_used = true). A final recognition check repairs any remaining
/// witness the same way; with the sandwich |plan| in
/// [floor(w(S)/2), ceil(w(S)/2)] whenever no fallback fired.
inline std::pair<EdgeAdditionPlan, MinToDD2Trace> approx_min_to_dd2(const Graph& g) {
    if (is_dd2(g).is_dd2)
        throw precondition_error("approx_min_to_dd2 requires a non-DD2 input");
    if (g.vertex_count() == 0 || g.min_degree() == 0)
        throw precondition_error("approx_min_to_dd2 requires a graph without isolated vertices");

    MinToDD2Trace trace;
    VertexClassification cls = classify_vertices(g);
    std::vector<char> in_ls(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : cls.leaves) in_ls[static_cast<size_t>(v)] = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (cls.is_support(v)) in_ls[static_cast<size_t>(v)] = 1;

    for (int v : cls.weak_supports) {
        bool certified = false;
        for (int w : g.neighbors(v))
            if (!in_ls[static_cast<size_t>(w)]) { certified = true; break; }
        (certified ? trace.satisfied_weak_supports : trace.target_supports).push_back(v);
    }
    std::vector<char> in_a(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : trace.target_supports) in_a[static_cast<size_t>(v)] = 1;
    for (int v : cls.strong_supports) {
        for (int w : g.neighbors(v))
            if (in_a[static_cast<size_t>(w)]) { trace.strong_neighbors.push_back(v); break; }
    }

    // H lives on A u B; keep A-A and A-B edges, drop B-B edges
    VertexSet ab = set_union(trace.target_supports, trace.strong_neighbors);
    std::vector<int> local(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < ab.size(); ++i) local[static_cast<size_t>(ab[i])] = static_cast<int>(i);
    EdgeSet h_edges;
    for (const auto& [u, v] : g.edges()) {
        if (local[static_cast<size_t>(u)] < 0 || local[static_cast<size_t>(v)] < 0) continue;
        if (!in_a[static_cast<size_t>(u)] && !in_a[static_cast<size_t>(v)]) continue;
        h_edges.push_back(make_edge(local[static_cast<size_t>(u)], local[static_cast<size_t>(v)]));
    }
    trace.aux_to_original = ab;
    trace.aux_instance.h = Graph(static_cast<int>(ab.size()), std::move(h_edges));
    for (int v : ab)
        trace.aux_instance.weights.push_back(
            static_cast<long long>(cls.pendant_map[static_cast<size_t>(v)].size()));
    for (int v : trace.target_supports)
        trace.aux_instance.targets.push_back(local[static_cast<size_t>(v)]);

    for (int v : approx_weighted_tdom(trace.aux_instance))
        trace.chosen_supports.push_back(ab[static_cast<size_t>(v)]);
    std::sort(trace.chosen_supports.begin(), trace.chosen_supports.end());

    for (int s : trace.chosen_supports)
        for (int u : cls.pendant_map[static_cast<size_t>(s)])
            trace.pendant_pool.push_back(u);
    std::sort(trace.pendant_pool.begin(), trace.pendant_pool.end());

    EdgeSet& additions = trace.plan.additions;
    VertexSet unpaired = trace.pendant_pool;
    VertexSet paired, stuck;
    while (unpaired.size() >= 2) {
        int u = unpaired.front();
        int partner_pos = -1;
        for (size_t i = 1; i < unpaired.size(); ++i) {
            if (!g.has_edge(u, unpaired[i])) { partner_pos = static_cast<int>(i); break; }
        }
        if (partner_pos < 0) {
            // mutually-pendant K2 partners are the only way this happens
            stuck.push_back(u);
            unpaired.erase(unpaired.begin());
            continue;
        }
        int v = unpaired[static_cast<size_t>(partner_pos)];
        additions.push_back(make_edge(u, v));
        paired.push_back(u);
        paired.push_back(v);
        unpaired.erase(unpaired.begin() + partner_pos);
        unpaired.erase(unpaired.begin());
    }
    std::sort(paired.begin(), paired.end());
    if (!unpaired.empty()) {
        int u = unpaired.front();
        int joined = -1;
        if (trace.pendant_pool.size() >= 3) {
            for (int k : paired)
                if (!g.has_edge(u, k)) { joined = k; break; }
        }
        if (joined >= 0) {
            additions.push_back(make_edge(u, joined));
        } else {
            additions.push_back(detail::fallback_partner(g, additions, u));
            trace.fallback_used = true;
        }
    }
    for (int s : stuck) {
        int deg = g.degree(s);
        for (const auto& e : additions)
            if (e.first == s || e.second == s) ++deg;
        if (deg >= 2) continue;
        additions.push_back(detail::fallback_partner(g, additions, s));
        trace.fallback_used = true;
    }

    // safety net: repair any remaining witness through its pendant
    while (true) {
        EdgeSet all = g.edges();
        all.insert(all.end(), additions.begin(), additions.end());
        Graph augmented(g.vertex_count(), all);
        RecognitionReport rep = is_dd2(augmented);
        if (rep.is_dd2) break;
        if (rep.witness_is_isolated)
            throw precondition_error("unreachable: additions cannot isolate a vertex");
        VertexClassification aug_cls = classify_vertices(augmented);
        int witness = *rep.witness;
        int pendant = aug_cls.pendant_map[static_cast<size_t>(witness)].front();
        additions.push_back(detail::fallback_partner(g, additions, pendant));
        trace.fallback_used = true;
    }

    std::sort(additions.begin(), additions.end());
    return {trace.plan, trace};
}

} // namespace dd2
