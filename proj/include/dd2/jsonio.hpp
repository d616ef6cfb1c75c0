#pragma once

#include <json.hpp>

#include "dd2/approx.hpp"
#include "dd2/generators.hpp"
#include "dd2/oracles.hpp"

namespace dd2 {

using nlohmann::json;

inline json edges_to_json(const EdgeSet& es) {
    json a = json::array();
    for (const auto& [u, v] : es) a.push_back(json::array({u, v}));
    return a;
}

inline void to_json(json& j, const Graph& g) {
    j = json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges_to_json(g.edges())}};
}

inline void to_json(json& j, const RecognitionReport& r) {
    j = json{{"dd2", r.is_dd2}};
    if (r.witness) {
        j["witness"] = *r.witness;
        j["witness_kind"] = r.witness_is_isolated ? "isolated" : "weak_support";
    }
}

inline void to_json(json& j, const DD2Pair& p) {
    j = json{{"a", p.a}, {"b", p.b}};
}

inline void to_json(json& j, const SpanningSubgraph& h) {
    j = json{{"n", h.parent.vertex_count()},
             {"parent_m", h.parent.edge_count()},
             {"kept", edges_to_json(h.kept)}};
}

inline void to_json(json& j, const EdgeAdditionPlan& p) {
    j = json{{"additions", edges_to_json(p.additions)}};
}

inline void to_json(json& j, const OracleResult& r) {
    j = json{{"value", r.value}, {"explored", r.explored}};
    if (r.kind == WitnessKind::edge_set)
        j["witness"] = edges_to_json(r.witness_edges);
    else
        j["witness"] = r.witness_vertices;
}

inline void to_json(json& j, const CubicTrace& t) {
    j = json{{"induced_matching", edges_to_json(t.induced_matching)},
             {"matched_vertices", t.matched_vertices},
             {"leftover", t.leftover},
             {"removed_edges", edges_to_json(t.removed_edges)},
             {"result_edges", edges_to_json(t.result_edges)},
             {"a", t.a},
             {"t", t.t}};
}

inline void to_json(json& j, const WeightedTDomInstance& inst) {
    j = json{{"graph", inst.h}, {"weights", inst.weights}, {"targets", inst.targets}};
}

inline void to_json(json& j, const MinToDD2Trace& t) {
    j = json{{"u", t.satisfied_weak_supports},
             {"a", t.target_supports},
             {"b", t.strong_neighbors},
             {"aux_instance", t.aux_instance},
             {"aux_to_original", t.aux_to_original},
             {"chosen_supports", t.chosen_supports},
             {"pendant_pool", t.pendant_pool},
             {"plan", t.plan},
             {"fallback_used", t.fallback_used}};
}

inline void to_json(json& j, const VertexGadgetIds& g) {
    j = json{{"p", g.p}, {"q", g.q}, {"r", g.r}, {"s", g.s}};
    if (g.t >= 0) j["t"] = g.t;
}

inline void to_json(json& j, const GadgetMap& m) {
    const char* kind = m.kind == GadgetKind::min_vc    ? "min_vc"
                       : m.kind == GadgetKind::max_is ? "max_is"
                                                      : "max_min_vc";
    j = json{{"kind", kind},
             {"source", m.source},
             {"target", m.target},
             {"edge_vertex", m.edge_vertex},
             {"vertex_gadget", m.vertex_gadget}};
    if (m.kind == GadgetKind::max_min_vc) {
        j["pendant_leaf"] = m.pendant_leaf;
        j["pendant_bundle"] = m.pendant_bundle;
        j["hub"] = m.hub;
    }
}

inline void to_json(json& j, const LReductionEvidence& ev) {
    json sols = json::array();
    for (auto [m2, m1] : ev.solutions)
        sols.push_back(json{{"target_value", m2}, {"mapped_source_value", m1}});
    j = json{{"source_opt", ev.source_opt}, {"target_opt", ev.target_opt}, {"solutions", sols}};
}

} // namespace dd2
