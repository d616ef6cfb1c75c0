#pragma once

#include "dd2/approx.hpp"
#include "dd2/generators.hpp"
#include "dd2/oracles.hpp"

namespace dd2 {

/// All minimal vertex covers of g, each sorted, in ascending-mask order.
inline std::vector<VertexSet> all_minimal_vertex_covers(const Graph& g,
                                                        const OracleBudget& budget = {}) {
    detail::require_vertex_budget(g, budget);
    const int n = g.vertex_count();
    if ((1ll << n) > budget.max_subsets)
        throw budget_error("vertex-subset scan exceeds subset budget");
    std::vector<uint32_t> edge_bits;
    for (const auto& [u, v] : g.edges()) edge_bits.push_back((1u << u) | (1u << v));
    std::vector<VertexSet> out;
    const uint32_t all = (1u << n) - 1u;
    for (uint32_t s = 0;; ++s) {
        if (detail::mask_is_minimal_vertex_cover(edge_bits, s)) {
            VertexSet vs;
            for (int v = 0; v < n; ++v)
                if (s & (1u << v)) vs.push_back(v);
            out.push_back(std::move(vs));
        }
        if (s == all) break;
    }
    return out;
}

/// All maximal independent sets of g, each sorted, in ascending-mask order.
inline std::vector<VertexSet> all_maximal_independent_sets(const Graph& g,
                                                           const OracleBudget& budget = {}) {
    detail::require_vertex_budget(g, budget);
    const int n = g.vertex_count();
    if ((1ll << n) > budget.max_subsets)
        throw budget_error("vertex-subset scan exceeds subset budget");
    detail::AdjMasks masks(g);
    std::vector<VertexSet> out;
    const uint32_t all = (1u << n) - 1u;
    for (uint32_t s = 0;; ++s) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (s & (1u << v))
                ok = (masks.open[static_cast<size_t>(v)] & s) == 0;
            else
                ok = (masks.open[static_cast<size_t>(v)] & s) != 0;  // maximality
        }
        if (ok) {
            VertexSet vs;
            for (int v = 0; v < n; ++v)
                if (s & (1u << v)) vs.push_back(v);
            out.push_back(std::move(vs));
        }
        if (s == all) break;
    }
    return out;
}

namespace detail {

// Diverse minimal spanning DD2 subgraphs of the gadget target: one per
// deletion-order policy plus a few seeded shuffles. The full target is far
// beyond any subset budget, so the enumerated solution universe is forward
// images plus these.
inline std::vector<SpanningSubgraph> sample_minimal_subgraphs(const Graph& target) {
    std::vector<SpanningSubgraph> out;
    out.push_back(minimalize(target, DeletionOrder::lex));
    out.push_back(minimalize(target, DeletionOrder::reverse_lex));
    out.push_back(minimalize(target, DeletionOrder::low_degree_first));
    for (uint32_t seed = 1; seed <= 5; ++seed)
        out.push_back(minimalize(target, DeletionOrder::shuffled, seed));
    return out;
}

} // namespace detail

/// Evidence for the min-VC reduction: oracle-enumerated source side (every
/// minimal cover, forward-mapped and mapped back) plus minimalize-sampled
/// target solutions. target_opt is the minimum target value observed.
inline LReductionEvidence build_minvc_lreduction_evidence(const Graph& source,
                                                          const OracleBudget& budget = {}) {
    GadgetMap map = gen_minvc_gadget(source);
    LReductionEvidence ev;
    ev.source_opt = exact_min_vertex_cover(source, budget).value;
    bool first = true;
    auto add = [&](long long m2, long long m1) {
        ev.solutions.push_back({m2, m1});
        if (first || m2 < ev.target_opt) ev.target_opt = m2;
        first = false;
    };
    for (const auto& cover : all_minimal_vertex_covers(source, budget)) {
        SpanningSubgraph y = vc_to_min_subgraph(map, std::vector<int>(cover.begin(), cover.end()));
        VertexSet back = minvc_subgraph_to_vc(map, y);
        add(static_cast<long long>(y.kept.size()), static_cast<long long>(back.size()));
    }
    for (const auto& y : detail::sample_minimal_subgraphs(map.target)) {
        VertexSet back = minvc_subgraph_to_vc(map, y);
        add(static_cast<long long>(y.kept.size()), static_cast<long long>(back.size()));
    }
    return ev;
}

/// Evidence for the max-IS reduction, analogous; target_opt is the maximum
/// target value observed.
inline LReductionEvidence build_maxis_lreduction_evidence(const Graph& source,
                                                          const OracleBudget& budget = {}) {
    GadgetMap map = gen_maxis_gadget(source);
    LReductionEvidence ev;
    ev.source_opt = exact_max_independent_set(source, budget).value;
    bool first = true;
    auto add = [&](long long m2, long long m1) {
        ev.solutions.push_back({m2, m1});
        if (first || m2 > ev.target_opt) ev.target_opt = m2;
        first = false;
    };
    for (const auto& ind : all_maximal_independent_sets(source, budget)) {
        SpanningSubgraph y = is_to_max_subgraph(map, ind);
        VertexSet back = maxis_subgraph_to_is(map, y);
        add(static_cast<long long>(y.kept.size()), static_cast<long long>(back.size()));
    }
    for (const auto& y : detail::sample_minimal_subgraphs(map.target)) {
        VertexSet back = maxis_subgraph_to_is(map, y);
        add(static_cast<long long>(y.kept.size()), static_cast<long long>(back.size()));
    }
    return ev;
}

} // namespace dd2
