// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is pinned in code; corpora are seeded and fixed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "dd2/experiment.hpp"
#include "dd2/io.hpp"

using namespace dd2;

namespace {

struct Check {
    bool ok = true;
    std::string detail;
    long long count = 0;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

std::vector<Graph> six_vertex_graphs() {
    EdgeSet pairs;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) pairs.push_back({u, v});
    std::vector<Graph> out;
    out.reserve(1u << 15);
    for (uint32_t mask = 0; mask < (1u << 15); ++mask) {
        EdgeSet es;
        for (size_t e = 0; e < pairs.size(); ++e)
            if (mask & (1u << e)) es.push_back(pairs[e]);
        out.emplace_back(6, std::move(es));
    }
    return out;
}

// --- criterion 1 -----------------------------------------------------------
Check recognition_equivalence() {
    Check c;
    for (const Graph& g : six_vertex_graphs()) {
        ++c.count;
        if (is_dd2(g).is_dd2 != exact_has_dd2_pair(g).has_value()) {
            c.fail("disagreement on a 6-vertex graph with m=" + std::to_string(g.edge_count()));
            return c;
        }
    }
    const double ps[4] = {0.2, 0.35, 0.5, 0.65};
    for (uint32_t i = 0; i < 10000; ++i) {
        Graph g = gen_random_graph(4 + static_cast<int>(i % 6), ps[i % 4], 1000 + i);
        ++c.count;
        auto pair = exact_has_dd2_pair(g);
        if (is_dd2(g).is_dd2 != pair.has_value()) {
            c.fail("disagreement on random instance i=" + std::to_string(i));
            return c;
        }
        if (pair && !verify_pair(g, *pair)) {
            c.fail("oracle returned an invalid pair at i=" + std::to_string(i));
            return c;
        }
    }
    c.detail = std::to_string(c.count) + " instances, 100% agreement";
    return c;
}

// --- criterion 2 -----------------------------------------------------------
Check minimalization_structure() {
    Check c;
    for (uint32_t i = 0; i < 1000; ++i) {
        int n = 10 + static_cast<int>(i % 51);
        double p = std::min(0.9, (3.0 + static_cast<double>(i % 5)) / n);
        Graph g;
        bool found = false;
        for (uint32_t k = 0; k < 500; ++k) {
            g = gen_random_graph(n, p, 20000 + i * 1009 + k);
            if (is_dd2(g).is_dd2) { found = true; break; }
        }
        if (!found) {
            c.fail("could not find a DD2 instance for i=" + std::to_string(i));
            return c;
        }
        ++c.count;
        SpanningSubgraph h = minimalize(g);
        long long kept = static_cast<long long>(h.kept.size());
        if (kept < (2ll * n + 2) / 3 || kept > 2ll * (n - 2)) {
            c.fail("size bounds violated at i=" + std::to_string(i));
            return c;
        }
        Graph hg = h.as_graph();
        for (const auto& comp : components(hg)) {
            if (std::holds_alternative<NotMinimal>(classify_minimal_component(hg, comp))) {
                c.fail("non-minimal component at i=" + std::to_string(i));
                return c;
            }
        }
        if (!is_minimal_spanning_dd2_by_deletion(g, h.kept)) {
            c.fail("a kept edge is deletable at i=" + std::to_string(i));
            return c;
        }
    }
    c.detail = "1000 instances (n in [10,60]); bounds, shapes, and deletion checks hold";
    return c;
}

// shared corpora for criteria 3 and 5
std::vector<Graph> dd2_corpus_small() {
    std::vector<Graph> corpus;
    for (Graph& g : six_vertex_graphs())
        if (is_dd2(g).is_dd2) corpus.push_back(std::move(g));
    int collected = 0;
    for (uint32_t seed = 0; collected < 200 && seed < 100000; ++seed) {
        Graph g = gen_random_graph(5 + static_cast<int>(seed % 6), 0.35, 50000 + seed);
        if (!is_dd2(g).is_dd2 || g.edge_count() > 22) continue;
        corpus.push_back(std::move(g));
        ++collected;
    }
    return corpus;
}

// --- criterion 3 -----------------------------------------------------------
Check min_dd2_factor(const std::vector<Graph>& corpus) {
    Check c;
    for (const Graph& g : corpus) {
        ++c.count;
        long long value = static_cast<long long>(approx_min_dd2(g).kept.size());
        long long opt = exact_min_spanning_dd2(g).value;
        if (value > 3 * opt) {
            c.fail("ratio above 3.0 on an instance with n=" + std::to_string(g.vertex_count()));
            return c;
        }
    }
    Graph k4 = gen_complete(4);
    long long k4_value = static_cast<long long>(approx_min_dd2(k4).kept.size());
    if (k4_value != 3 || exact_min_spanning_dd2(k4).value != 3) {
        c.fail("K4 did not achieve the optimum of 3");
        return c;
    }
    c.detail = std::to_string(c.count) + " DD2 instances, all within factor 3; K4 = optimum 3";
    return c;
}

// --- criterion 4 -----------------------------------------------------------
Check cubic_factor() {
    Check c;
    std::vector<Graph> corpus{gen_complete(4), gen_complete_bipartite(3, 3), gen_petersen()};
    for (int n : {4, 6, 8, 10})
        for (uint32_t seed = 1; seed <= 20; ++seed)
            corpus.push_back(gen_random_cubic(n, seed));
    for (const Graph& g : corpus) {
        ++c.count;
        const int n = g.vertex_count();
        auto [h, trace] = approx_min_dd2_cubic(g);
        long long value = static_cast<long long>(h.kept.size());
        long long opt = exact_min_spanning_dd2(g).value;
        if (5 * value > 9 * opt) {
            c.fail("ratio above 1.8 on a cubic instance with n=" + std::to_string(n));
            return c;
        }
        if (static_cast<long long>(trace.result_edges.size()) !=
            2ll * (trace.a + trace.t)) {
            c.fail("pre-pass edge identity 2(|A'|+|T|) violated");
            return c;
        }
        if (static_cast<long long>(trace.result_edges.size()) > 6ll * n / 5) {
            c.fail("pre-pass size above floor(6n/5)");
            return c;
        }
        if (static_cast<long long>(trace.induced_matching.size()) > 3ll * n / 10) {
            c.fail("induced matching above floor(3n/10)");
            return c;
        }
    }
    Graph k4 = gen_complete(4);
    auto [h4, t4] = approx_min_dd2_cubic(k4);
    if (3 * h4.kept.size() != 4 * static_cast<size_t>(exact_min_spanning_dd2(k4).value)) {
        c.fail("K4 ratio is not exactly 4/3");
        return c;
    }
    c.detail = std::to_string(c.count) + " cubic instances within 1.8; K4 ratio exactly 4/3";
    return c;
}

// --- criterion 5 -----------------------------------------------------------
Check max_dd2_factors(const std::vector<Graph>& corpus) {
    Check c;
    for (const Graph& g : corpus) {
        ++c.count;
        long long value = static_cast<long long>(approx_max_dd2(g).kept.size());
        long long opt = exact_max_minimal_spanning_dd2(g).value;
        if (opt > 3 * value) {
            c.fail("general ratio above 3.0 at n=" + std::to_string(g.vertex_count()));
            return c;
        }
    }
    std::vector<Graph> cubic{gen_complete(4), gen_complete_bipartite(3, 3), gen_petersen()};
    for (int n : {4, 6, 8, 10})
        for (uint32_t seed = 1; seed <= 20; ++seed) cubic.push_back(gen_random_cubic(n, seed));
    for (const Graph& g : cubic) {
        ++c.count;
        SpanningSubgraph h = approx_max_dd2(g);
        long long value = static_cast<long long>(h.kept.size());
        long long opt = exact_max_minimal_spanning_dd2(g).value;
        if (2 * opt > 3 * value) {
            c.fail("cubic ratio above 1.5 at n=" + std::to_string(g.vertex_count()));
            return c;
        }
        for (const EdgeSet& kept :
             {h.kept, exact_max_minimal_spanning_dd2(g).witness_edges}) {
            Graph hg = subgraph_with_edges(g, kept);
            for (const auto& comp : components(hg)) {
                long long inside = 0;
                for (int v : comp) inside += hg.degree(v);
                if (inside / 2 > static_cast<long long>(comp.size())) {
                    c.fail("a minimal component with two cycles on a cubic instance");
                    return c;
                }
            }
        }
    }
    c.detail = std::to_string(c.count) +
               " instances; max ratios within 3.0 (1.5 cubic), components unicyclic";
    return c;
}

// --- criterion 6 -----------------------------------------------------------
Check min_to_dd2() {
    Check c;
    std::vector<Graph> corpus{gen_path(4), gen_non_dd2(gen_cycle(3)),
                              Graph(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}})};
    const double ps[2] = {0.35, 0.55};
    int collected = 0;
    for (uint32_t seed = 0; collected < 200 && seed < 100000; ++seed) {
        Graph base = gen_random_graph(3 + static_cast<int>(seed % 6), ps[seed % 2], 70000 + seed);
        if (base.vertex_count() == 0 || base.min_degree() < 1) continue;
        corpus.push_back(gen_non_dd2(base));
        ++collected;
    }
    for (const Graph& g : corpus) {
        ++c.count;
        auto [plan, trace] = approx_min_to_dd2(g);
        EdgeSet all = g.edges();
        for (const auto& e : plan.additions) {
            if (g.has_edge(e.first, e.second)) {
                c.fail("plan overlaps E");
                return c;
            }
            all.push_back(e);
        }
        if (!is_dd2(Graph(g.vertex_count(), all)).is_dd2) {
            c.fail("augmented graph is not DD2");
            return c;
        }
        long long size = static_cast<long long>(plan.additions.size());
        if (!trace.fallback_used) {
            auto cls = classify_vertices(g);
            long long ws = 0;
            for (int s : trace.chosen_supports)
                ws += static_cast<long long>(cls.pendant_map[static_cast<size_t>(s)].size());
            if (size < ws / 2 || size > (ws + 1) / 2) {
                c.fail("w(S)/2 sandwich violated without fallback");
                return c;
            }
        }
        long long opt = exact_min_edge_addition(g).value;
        if (static_cast<double>(size) >
            (1.0 + std::log(static_cast<double>(g.vertex_count()))) *
                static_cast<double>(opt)) {
            c.fail("ratio above 1 + ln(n)");
            return c;
        }
    }
    if (static_cast<long long>(approx_min_to_dd2(gen_path(4)).first.additions.size()) !=
        exact_min_edge_addition(gen_path(4)).value) {
        c.fail("P4 did not achieve ratio 1.0");
        return c;
    }
    Graph cc3 = gen_non_dd2(gen_cycle(3));
    if (static_cast<long long>(approx_min_to_dd2(cc3).first.additions.size()) !=
        exact_min_edge_addition(cc3).value) {
        c.fail("corona C3 did not achieve ratio 1.0");
        return c;
    }
    c.detail = std::to_string(c.count) +
               " instances; plans feasible, sandwich and log-ratio hold, named ratios 1.0";
    return c;
}

// --- criterion 7 -----------------------------------------------------------
Check greedy_dominating() {
    Check c;
    detail::Rng wrng(99);
    for (uint32_t i = 0; i < 500; ++i) {
        int n = 4 + static_cast<int>(i % 9);
        Graph g = gen_random_graph(n, 0.35, 90000 + i);
        std::vector<long long> w(static_cast<size_t>(n));
        for (auto& x : w) x = 1 + wrng.below(10);
        ++c.count;
        VertexSet d = greedy_weighted_dominating_set(g, w);
        long long greedy_w = 0;
        for (int v : d) greedy_w += w[static_cast<size_t>(v)];
        VertexSet everything(static_cast<size_t>(n));
        std::iota(everything.begin(), everything.end(), 0);
        long long opt = exact_min_weight_tdom({g, w, everything}).value;
        long long hn_scaled = 0;  // H_n * lcm(1..12), n <= 12
        for (int k = 1; k <= n; ++k) hn_scaled += 27720 / k;
        if (greedy_w * 27720 > opt * hn_scaled) {
            c.fail("greedy weight above H_n * optimum at i=" + std::to_string(i));
            return c;
        }
        // Thm-9-style reduction identity on a derived T-dominating instance
        VertexSet targets;
        for (int v = 0; v < n; ++v)
            if (wrng.coin(0.5)) targets.push_back(v);
        TDomRun run = approx_weighted_tdom_traced({g, w, targets});
        long long wd = 0, wdp = 0;
        for (int v : run.result) wd += w[static_cast<size_t>(v)];
        for (int v : run.dprime) wdp += run.reduction.wprime[static_cast<size_t>(v)];
        if (wdp != wd + 1) {
            c.fail("reduction identity w'(D') = w(D) + 1 violated at i=" + std::to_string(i));
            return c;
        }
        for (int t : targets) {
            bool hit = contains(run.result, t);
            for (int u : g.neighbors(t)) hit = hit || contains(run.result, u);
            if (!hit) {
                c.fail("stripped set is not T-dominating at i=" + std::to_string(i));
                return c;
            }
        }
    }
    c.detail = "500 weighted instances within H_n; reduction identity holds on all";
    return c;
}

// --- criterion 8 -----------------------------------------------------------
Check gadget_identities() {
    Check c;
    Graph k4 = gen_complete(4);
    GadgetMap minvc = gen_minvc_gadget(k4);
    if (minvc.target.vertex_count() != 30 || minvc.target.edge_count() != 36) {
        c.fail("min-VC gadget counts are not 30/36");
        return c;
    }
    for (const auto& cover : all_minimal_vertex_covers(k4)) {
        ++c.count;
        auto h = vc_to_min_subgraph(minvc, std::vector<int>(cover.begin(), cover.end()));
        if (h.kept.size() != 22 + cover.size() ||
            !is_minimal_spanning_dd2(minvc.target, h)) {
            c.fail("forward min-VC image size or minimality failed");
            return c;
        }
        if (cover.size() == 3 && h.kept.size() != 25) {
            c.fail("|S|=3 image is not 25 edges");
            return c;
        }
        VertexSet back = minvc_subgraph_to_vc(minvc, h);
        if (back.size() != cover.size()) {
            c.fail("min-VC round trip changed the size");
            return c;
        }
    }
    GadgetMap maxis = gen_maxis_gadget(k4);
    if (maxis.target.vertex_count() != 26 || maxis.target.edge_count() != 28) {
        c.fail("max-IS gadget counts are not 26/28");
        return c;
    }
    for (const auto& ind : all_maximal_independent_sets(k4)) {
        ++c.count;
        auto h = is_to_max_subgraph(maxis, ind);
        if (h.kept.size() != 18 + ind.size() || !is_minimal_spanning_dd2(maxis.target, h)) {
            c.fail("forward max-IS image size or minimality failed");
            return c;
        }
        if (ind.size() == 1 && h.kept.size() != 19) {
            c.fail("|I|=1 image is not 19 edges");
            return c;
        }
        if (maxis_subgraph_to_is(maxis, h) != ind) {
            c.fail("max-IS round trip changed the set");
            return c;
        }
    }
    Graph p3 = gen_path(3);
    GadgetMap maxmin = gen_maxmin_gadget(p3);
    if (maxmin.target.vertex_count() != 17) {
        c.fail("max-min gadget vertex count is not 17");
        return c;
    }
    std::vector<size_t> sizes;
    for (const auto& cover : all_minimal_vertex_covers(p3)) {
        ++c.count;
        EdgeAdditionPlan plan = vc_to_edge_addition(maxmin, cover);
        if (plan.additions.size() != cover.size() * (p3.edge_count() + 1)) {
            c.fail("max-min plan size is not |S|(m+1)");
            return c;
        }
        sizes.push_back(plan.additions.size());
    }
    std::sort(sizes.begin(), sizes.end());
    if (sizes != std::vector<size_t>{3, 6}) {
        c.fail("max-min plan sizes are not {3, 6}");
        return c;
    }
    if (!verify_l_reduction(build_minvc_lreduction_evidence(k4), 23, 1, 1, 1)) {
        c.fail("L-reduction check (23, 1) failed on K4");
        return c;
    }
    if (!verify_l_reduction(build_maxis_lreduction_evidence(k4), 19, 1, 1, 1)) {
        c.fail("L-reduction check (19, 1) failed on K4");
        return c;
    }
    c.detail = "all gadget counts, image sizes, round trips, and (23,1)/(19,1) checks exact";
    return c;
}

// --- criterion 9 -----------------------------------------------------------
Check determinism() {
    Check c;
    json manifest{{"families", json::array({json{{"name", "cubic"}}, json{{"name", "random_dd2"}, {"p", 0.4}}})},
                  {"sizes", {6, 8}},
                  {"seeds", {1, 2, 3}},
                  {"algorithms", {"solve-min", "solve-min-cubic", "solve-max", "recognize"}},
                  {"oracle", {{"enabled", true}}}};
    std::string r1 = run_experiment(manifest).dump(2);
    std::string r2 = run_experiment(manifest).dump(2);
    if (r1 != r2) {
        c.fail("experiment reports differ between reruns");
        return c;
    }
    RunOptions opt;
    opt.oracle = true;
    for (const char* alg : {"recognize", "solve-min", "solve-max"}) {
        Graph g = gen_random_cubic(8, 5);
        if (run_algorithm(alg, g, opt).dump() != run_algorithm(alg, g, opt).dump()) {
            c.fail(std::string("record for ") + alg + " differs between reruns");
            return c;
        }
    }
    if (serialize_edge_list(gen_random_cubic(10, 7)) !=
        serialize_edge_list(gen_random_cubic(10, 7))) {
        c.fail("generator output differs between reruns");
        return c;
    }
    auto [plan1, t1] = approx_min_to_dd2(gen_non_dd2(gen_random_graph(6, 0.5, 11)));
    auto [plan2, t2] = approx_min_to_dd2(gen_non_dd2(gen_random_graph(6, 0.5, 11)));
    if (json(plan1).dump() != json(plan2).dump()) {
        c.fail("edge-addition plans differ between reruns");
        return c;
    }
    c.detail = "experiment reports, records, generators, and plans are byte-identical";
    return c;
}

} // namespace

int main() {
    int failures = 0;
    auto run = [&](int idx, const std::string& name, long long budget_ms,
                   const std::function<Check()>& fn) {
        auto start = std::chrono::steady_clock::now();
        Check c;
        try {
            c = fn();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (c.ok && budget_ms > 0 && ms > budget_ms) {
            c.ok = false;
            c.detail = "runtime budget of " + std::to_string(budget_ms) + " ms exceeded";
        }
        std::printf("%s criterion %d (%s): %s [%lld ms]\n", c.ok ? "PASS" : "FAIL", idx,
                    name.c_str(), c.detail.c_str(), static_cast<long long>(ms));
        std::fflush(stdout);
        if (!c.ok) ++failures;
    };

    run(1, "recognition equivalence", 120000, recognition_equivalence);
    run(2, "minimalization structure", 120000, minimalization_structure);
    std::vector<Graph> corpus = dd2_corpus_small();
    run(3, "min-DD2 factor 3", 600000, [&] { return min_dd2_factor(corpus); });
    run(4, "cubic min-DD2 factor 1.8", 600000, cubic_factor);
    run(5, "max-DD2 factors 3 and 1.5", 600000, [&] { return max_dd2_factors(corpus); });
    run(6, "min-to-DD2 plans", 600000, min_to_dd2);
    run(7, "weighted greedy domination", 300000, greedy_dominating);
    run(8, "gadget identities", 300000, gadget_identities);
    run(9, "determinism", 0, determinism);

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
