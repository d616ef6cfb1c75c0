#include <catch2/catch_amalgamated.hpp>

#include "dd2/generators.hpp"
#include "dd2/oracles.hpp"

using namespace dd2;

TEST_CASE("exact spanning DD2 oracles") {
    Graph k4 = gen_complete(4);
    SECTION("K4: min 3 (spanning star), max-minimal 4 (spanning C4)") {
        auto omin = exact_min_spanning_dd2(k4);
        REQUIRE(omin.value == 3);
        REQUIRE(is_spanning_dd2(k4, omin.witness_edges));
        REQUIRE(is_minimal_spanning_dd2_by_deletion(k4, omin.witness_edges));

        auto omax = exact_max_minimal_spanning_dd2(k4);
        REQUIRE(omax.value == 4);
        REQUIRE(is_minimal_spanning_dd2_by_deletion(k4, omax.witness_edges));
    }
    SECTION("P3 and C4 are rigid") {
        REQUIRE(exact_min_spanning_dd2(gen_path(3)).value == 2);
        REQUIRE(exact_max_minimal_spanning_dd2(gen_path(3)).value == 2);
        REQUIRE(exact_min_spanning_dd2(gen_cycle(4)).value == 4);
        REQUIRE(exact_max_minimal_spanning_dd2(gen_cycle(4)).value == 4);
    }
    SECTION("bounds hold on random DD2 instances") {
        int checked = 0;
        for (uint32_t seed = 0; checked < 25 && seed < 1000; ++seed) {
            int n = 5 + static_cast<int>(seed % 4);
            Graph g = gen_random_graph(n, 0.45, seed);
            if (!is_dd2(g).is_dd2) continue;
            ++checked;
            auto omin = exact_min_spanning_dd2(g);
            auto omax = exact_max_minimal_spanning_dd2(g);
            REQUIRE(omin.value >= (2ll * n + 2) / 3);
            REQUIRE(omax.value < 2ll * n);
            REQUIRE(omin.value <= omax.value);
        }
        REQUIRE(checked == 25);
    }
    SECTION("3-regular: max-minimal is at most n") {
        for (uint32_t seed = 0; seed < 6; ++seed) {
            Graph g = gen_random_cubic(8, seed);
            REQUIRE(exact_max_minimal_spanning_dd2(g).value <= 8);
        }
    }
    SECTION("budget errors") {
        OracleBudget tiny;
        tiny.max_edges = 3;
        REQUIRE_THROWS_AS(exact_min_spanning_dd2(k4, tiny), budget_error);
        OracleBudget few_subsets;
        few_subsets.max_subsets = 4;
        REQUIRE_THROWS_AS(exact_max_minimal_spanning_dd2(k4, few_subsets), budget_error);
    }
    SECTION("non-DD2 input is a precondition error") {
        REQUIRE_THROWS_AS(exact_min_spanning_dd2(gen_path(4)), precondition_error);
    }
}

TEST_CASE("mask oracles agree with a plain brute force over Graph operations") {
    for (uint32_t seed = 0; seed < 60; ++seed) {
        Graph g = gen_random_graph(5 + static_cast<int>(seed % 2), 0.5, 3000 + seed);
        if (!is_dd2(g).is_dd2) continue;
        const auto& es = g.edges();
        long long best_min = -1, best_max = -1;
        for (uint32_t mask = 0; mask < (1u << es.size()); ++mask) {
            EdgeSet subset;
            for (size_t e = 0; e < es.size(); ++e)
                if (mask & (1u << e)) subset.push_back(es[e]);
            if (!is_spanning_dd2(g, subset)) continue;
            long long sz = static_cast<long long>(subset.size());
            if (best_min < 0 || sz < best_min) best_min = sz;
            if (is_minimal_spanning_dd2_by_deletion(g, subset))
                best_max = std::max(best_max, sz);
        }
        REQUIRE(exact_min_spanning_dd2(g).value == best_min);
        REQUIRE(exact_max_minimal_spanning_dd2(g).value == best_max);
    }
}

TEST_CASE("exact_has_dd2_pair") {
    REQUIRE_FALSE(exact_has_dd2_pair(gen_path(4)).has_value());
    auto p3 = exact_has_dd2_pair(gen_path(3));
    REQUIRE(p3.has_value());
    REQUIRE(p3->a == VertexSet{1});
    REQUIRE(p3->b == VertexSet{0, 2});
    REQUIRE(exact_has_dd2_pair(gen_cycle(4)).has_value());
}

TEST_CASE("vertex cover and independent set oracles") {
    Graph k4 = gen_complete(4);
    REQUIRE(exact_min_vertex_cover(k4).value == 3);
    REQUIRE(exact_max_independent_set(k4).value == 1);
    REQUIRE(exact_max_min_vertex_cover(gen_path(3)).value == 2);
    REQUIRE(exact_max_min_vertex_cover(gen_path(3)).witness_vertices == VertexSet{0, 2});
    REQUIRE(exact_min_vertex_cover(gen_cycle(4)).value == 2);
    REQUIRE(exact_max_independent_set(gen_cycle(4)).value == 2);

    SECTION("witnesses are feasible") {
        for (uint32_t seed = 0; seed < 15; ++seed) {
            Graph g = gen_random_graph(8, 0.4, seed);
            auto vc = exact_min_vertex_cover(g);
            for (const auto& [u, v] : g.edges())
                REQUIRE((contains(vc.witness_vertices, u) || contains(vc.witness_vertices, v)));
            auto is = exact_max_independent_set(g);
            for (int v : is.witness_vertices)
                for (int w : g.neighbors(v)) REQUIRE_FALSE(contains(is.witness_vertices, w));
        }
    }
}

TEST_CASE("exact_min_weight_tdom") {
    SECTION("single edge, both targeted") {
        WeightedTDomInstance inst{Graph(2, {{0, 1}}), {1, 1}, {0, 1}};
        auto r = exact_min_weight_tdom(inst);
        REQUIRE(r.value == 1);
        REQUIRE(r.witness_vertices == VertexSet{0});
        REQUIRE(r.explored == 4);
    }
    SECTION("empty target set costs nothing") {
        WeightedTDomInstance inst{gen_path(3), {1, 1, 1}, {}};
        auto r = exact_min_weight_tdom(inst);
        REQUIRE(r.value == 0);
        REQUIRE(r.witness_vertices.empty());
    }
    SECTION("heavy star center is avoided") {
        WeightedTDomInstance inst{gen_star(3), {5, 1, 1, 1}, {1, 2, 3}};
        REQUIRE(exact_min_weight_tdom(inst).value == 3);
    }
}

TEST_CASE("exact_min_edge_addition") {
    REQUIRE(exact_min_edge_addition(gen_path(4)).value == 1);

    // one pendant on every triangle vertex
    Graph corona_c3 = gen_non_dd2(gen_cycle(3));
    REQUIRE(exact_min_edge_addition(corona_c3).value == 1);

    SECTION("witness makes the graph DD2 and is disjoint from E") {
        Graph g = gen_non_dd2(gen_path(3));
        auto r = exact_min_edge_addition(g);
        EdgeSet all = g.edges();
        for (const auto& e : r.witness_edges) {
            REQUIRE_FALSE(g.has_edge(e.first, e.second));
            all.push_back(e);
        }
        REQUIRE(is_dd2(Graph(g.vertex_count(), all)).is_dd2);
    }
    SECTION("DD2 input is rejected") {
        REQUIRE_THROWS_AS(exact_min_edge_addition(gen_path(3)), precondition_error);
    }
    SECTION("graphs below 3 vertices cannot be repaired") {
        REQUIRE_THROWS_AS(exact_min_edge_addition(gen_complete(2)), precondition_error);
    }
}

TEST_CASE("domination numbers") {
    REQUIRE(exact_gamma(gen_path(3)).value == 1);
    REQUIRE(exact_gamma2(gen_path(3)).value == 2);
    REQUIRE(exact_gamma(gen_cycle(4)).value == 2);
    REQUIRE(exact_gamma2(gen_cycle(4)).value == 2);
    REQUIRE(exact_gamma(gen_complete(4)).value == 1);
    REQUIRE(exact_gamma2(gen_complete(4)).value == 2);

    SECTION("gamma <= gamma2 always") {
        for (uint32_t seed = 0; seed < 20; ++seed) {
            Graph g = gen_random_graph(8, 0.4, seed);
            REQUIRE(exact_gamma(g).value <= exact_gamma2(g).value);
        }
    }
}

TEST_CASE("verify_l_reduction arithmetic") {
    LReductionEvidence id;
    id.source_opt = 4;
    id.target_opt = 4;
    id.solutions = {{4, 4}, {6, 6}};
    REQUIRE(verify_l_reduction(id, 1, 1, 1, 1));

    LReductionEvidence bad = id;
    bad.solutions.push_back({4, 6});  // optimal target value, suboptimal mapped value
    REQUIRE_FALSE(verify_l_reduction(bad, 1, 1, 1, 1));

    LReductionEvidence alpha_fail;
    alpha_fail.source_opt = 1;
    alpha_fail.target_opt = 30;
    REQUIRE_FALSE(verify_l_reduction(alpha_fail, 23, 1, 1, 1));
    REQUIRE(verify_l_reduction(alpha_fail, 61, 2, 1, 1));  // 30 <= 30.5
}
