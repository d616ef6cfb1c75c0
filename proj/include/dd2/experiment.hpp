#pragma once

#include <cmath>

#include "dd2/jsonio.hpp"
#include "dd2/lreduction.hpp"

namespace dd2 {

inline long long min_dd2_lower_bound(int n) { return (2ll * n + 2) / 3; }  // ceil(2n/3)
inline long long min_dd2_upper_bound(int n) { return 2ll * (n - 2); }
inline long long cubic_prepass_bound(int n) { return 6ll * n / 5; }        // floor(6n/5)
inline long long cubic_matching_bound(int n) { return 3ll * n / 10; }      // floor(3n/10)

struct RunOptions {
    bool oracle = false;
    OracleBudget budget;
    DeletionOrder order = DeletionOrder::lex;
    uint32_t order_seed = 0;
    bool include_certificates = true;  // kept edges / plans in the record
};

/// One algorithm run on one instance as a JSON record. Records never include
/// timing, so identical inputs give byte-identical output.
inline json run_algorithm(const std::string& alg, const Graph& g, const RunOptions& opt = {}) {
    const int n = g.vertex_count();
    json rec{{"algorithm", alg}, {"n", n}, {"m", g.edge_count()}};

    if (alg == "recognize") {
        RecognitionReport rep = is_dd2(g);
        rec.update(json(rep));
        if (opt.oracle) {
            auto pair = exact_has_dd2_pair(g, opt.budget);
            rec["oracle_pair_exists"] = pair.has_value();
            rec["agree"] = pair.has_value() == rep.is_dd2;
        }
        return rec;
    }
    if (alg == "pair") {
        DD2Pair p = find_dd2_pair(g);
        rec["pair"] = p;
        rec["valid"] = verify_pair(g, p);
        return rec;
    }
    if (alg == "minimalize") {
        SpanningSubgraph h = minimalize(g, make_deletion_order(g, opt.order, opt.order_seed));
        rec["value"] = static_cast<long long>(h.kept.size());
        rec["lower_bound"] = min_dd2_lower_bound(n);
        rec["upper_bound"] = min_dd2_upper_bound(n);
        if (opt.include_certificates) rec["kept"] = edges_to_json(h.kept);
        return rec;
    }
    if (alg == "solve-min") {
        SpanningSubgraph h = approx_min_dd2(g);
        long long value = static_cast<long long>(h.kept.size());
        rec["value"] = value;
        rec["lower_bound"] = min_dd2_lower_bound(n);
        rec["upper_bound"] = min_dd2_upper_bound(n);
        rec["factor"] = 3.0;
        if (opt.include_certificates) rec["kept"] = edges_to_json(h.kept);
        if (opt.oracle) {
            OracleResult o = exact_min_spanning_dd2(g, opt.budget);
            rec["oracle"] = o.value;
            rec["ratio"] = static_cast<double>(value) / static_cast<double>(o.value);
            rec["within_factor"] = value <= 3 * o.value;
        }
        return rec;
    }
    if (alg == "solve-min-cubic") {
        auto [h, trace] = approx_min_dd2_cubic(g);
        long long value = static_cast<long long>(h.kept.size());
        rec["value"] = value;
        rec["lower_bound"] = min_dd2_lower_bound(n);
        rec["prepass_edges"] = static_cast<long long>(trace.result_edges.size());
        rec["prepass_bound"] = cubic_prepass_bound(n);
        rec["matching_size"] = static_cast<long long>(trace.induced_matching.size());
        rec["matching_bound"] = cubic_matching_bound(n);
        rec["factor"] = 1.8;
        if (opt.include_certificates) {
            rec["kept"] = edges_to_json(h.kept);
            rec["trace"] = trace;
        }
        if (opt.oracle) {
            OracleResult o = exact_min_spanning_dd2(g, opt.budget);
            rec["oracle"] = o.value;
            rec["ratio"] = static_cast<double>(value) / static_cast<double>(o.value);
            rec["within_factor"] = 5 * value <= 9 * o.value;
        }
        return rec;
    }
    if (alg == "solve-max") {
        SpanningSubgraph h = approx_max_dd2(g);
        long long value = static_cast<long long>(h.kept.size());
        bool cubic = g.is_regular(3);
        rec["value"] = value;
        rec["lower_bound"] = min_dd2_lower_bound(n);
        rec["factor"] = cubic ? 1.5 : 3.0;
        if (opt.include_certificates) rec["kept"] = edges_to_json(h.kept);
        if (opt.oracle) {
            OracleResult o = exact_max_minimal_spanning_dd2(g, opt.budget);
            rec["oracle"] = o.value;
            rec["ratio"] = static_cast<double>(o.value) / static_cast<double>(value);
            rec["within_factor"] = cubic ? 2 * o.value <= 3 * value : o.value <= 3 * value;
        }
        return rec;
    }
    if (alg == "solve-min-to") {
        auto [plan, trace] = approx_min_to_dd2(g);
        long long value = static_cast<long long>(plan.additions.size());
        VertexClassification cls = classify_vertices(g);
        long long ws = 0;
        for (int s : trace.chosen_supports)
            ws += static_cast<long long>(cls.pendant_map[static_cast<size_t>(s)].size());
        rec["value"] = value;
        rec["ws"] = ws;
        rec["fallback_used"] = trace.fallback_used;
        rec["factor"] = 1.0 + std::log(static_cast<double>(n));
        if (opt.include_certificates) {
            rec["plan"] = edges_to_json(plan.additions);
            rec["trace"] = trace;
        }
        if (opt.oracle) {
            OracleResult o = exact_min_edge_addition(g, opt.budget);
            rec["oracle"] = o.value;
            rec["ratio"] = static_cast<double>(value) / static_cast<double>(o.value);
            rec["within_factor"] =
                static_cast<double>(value) <=
                (1.0 + std::log(static_cast<double>(n))) * static_cast<double>(o.value);
        }
        return rec;
    }
    throw precondition_error("unknown algorithm '" + alg + "'");
}

/// Deterministic instance families for experiments. Random families are fully
/// determined by (size, seed); filtered families rescan seeds deterministically.
inline Graph make_family_instance(const json& family, int size, uint32_t seed) {
    const std::string name = family.at("name").get<std::string>();
    if (name == "path") return gen_path(size);
    if (name == "cycle") return gen_cycle(size);
    if (name == "star") return gen_star(size);
    if (name == "complete") return gen_complete(size);
    if (name == "complete_bipartite")
        return gen_complete_bipartite(size, family.value("b", size));
    if (name == "petersen") return gen_petersen();
    if (name == "cubic") return gen_random_cubic(size, seed);
    if (name == "random") return gen_random_graph(size, family.value("p", 0.3), seed);
    if (name == "random_dd2") {
        double p = family.value("p", 0.3);
        for (uint32_t k = 0; k < 10000; ++k) {
            Graph g = gen_random_graph(size, p, seed + 9973 * k);
            if (is_dd2(g).is_dd2) return g;
        }
        throw precondition_error("no DD2 instance found for family random_dd2");
    }
    if (name == "corona") return gen_random_corona_subdivision(size, seed);
    if (name == "nondd2") {
        double p = family.value("p", 0.5);
        for (uint32_t k = 0; k < 10000; ++k) {
            Graph base = gen_random_graph(size, p, seed + 9973 * k);
            if (base.vertex_count() > 0 && base.min_degree() >= 1) return gen_non_dd2(base);
        }
        throw precondition_error("no isolated-free base found for family nondd2");
    }
    throw precondition_error("unknown family '" + name + "'");
}

inline std::string family_label(const json& family) {
    std::string label = family.at("name").get<std::string>();
    if (family.contains("p")) label += "(p=" + json(family["p"]).dump() + ")";
    if (family.contains("b")) label += "(b=" + json(family["b"]).dump() + ")";
    return label;
}

/// Cross product of families x sizes x seeds x algorithms from a manifest
/// document. Per-instance failures become error records, not a failed run.
/// Records are sorted by instance key; the summary aggregates per
/// family/algorithm. Output is deterministic down to the byte.
inline json run_experiment(const json& manifest, const OracleBudget& default_budget = {}) {
    json records = json::array();
    const json families = manifest.value("families", json::array());
    const std::vector<int> sizes = manifest.value("sizes", std::vector<int>{});
    const std::vector<uint32_t> seeds = manifest.value("seeds", std::vector<uint32_t>{});
    const std::vector<std::string> algorithms =
        manifest.value("algorithms", std::vector<std::string>{});

    RunOptions opt;
    opt.budget = default_budget;
    opt.include_certificates = false;
    if (manifest.contains("oracle")) {
        const json& o = manifest["oracle"];
        opt.oracle = o.value("enabled", false);
        opt.budget.max_vertices = o.value("max_vertices", opt.budget.max_vertices);
        opt.budget.max_edges = o.value("max_edges", opt.budget.max_edges);
        opt.budget.max_subsets = o.value("max_subsets", opt.budget.max_subsets);
    }

    for (const json& family : families) {
        const std::string label = family_label(family);
        for (int size : sizes) {
            for (uint32_t seed : seeds) {
                for (const std::string& alg : algorithms) {
                    json rec{{"family", label}, {"size", size}, {"seed", seed}};
                    try {
                        Graph g = make_family_instance(family, size, seed);
                        rec.update(run_algorithm(alg, g, opt));
                    } catch (const std::exception& e) {
                        rec["algorithm"] = alg;
                        rec["error"] = e.what();
                    }
                    records.push_back(std::move(rec));
                }
            }
        }
    }

    std::stable_sort(records.begin(), records.end(), [](const json& a, const json& b) {
        auto key = [](const json& r) {
            return std::make_tuple(r.at("family").get<std::string>(), r.at("size").get<int>(),
                                   r.at("seed").get<uint32_t>(),
                                   r.at("algorithm").get<std::string>());
        };
        return key(a) < key(b);
    });

    json summary = json::object();
    for (const json& rec : records) {
        std::string key =
            rec.at("family").get<std::string>() + "/" + rec.at("algorithm").get<std::string>();
        json& s = summary[key];
        if (s.is_null()) s = json::object();
        s["count"] = s.value("count", 0) + 1;
        if (rec.contains("error")) s["errors"] = s.value("errors", 0) + 1;
        if (rec.contains("ratio")) {
            double r = rec["ratio"].get<double>();
            s["max_ratio"] = std::max(s.value("max_ratio", 0.0), r);
            s["ratio_sum"] = s.value("ratio_sum", 0.0) + r;
            s["ratio_count"] = s.value("ratio_count", 0) + 1;
        }
        if (rec.contains("within_factor") && !rec["within_factor"].get<bool>())
            s["factor_violations"] = s.value("factor_violations", 0) + 1;
        if (rec.contains("agree")) {
            s["agree_count"] = s.value("agree_count", 0) + (rec["agree"].get<bool>() ? 1 : 0);
            s["agree_total"] = s.value("agree_total", 0) + 1;
        }
    }
    for (auto& [key, s] : summary.items()) {
        if (s.contains("ratio_count")) {
            s["mean_ratio"] = s["ratio_sum"].get<double>() / s["ratio_count"].get<int>();
            s.erase("ratio_sum");
        }
        if (s.contains("agree_total")) {
            s["agreement"] = static_cast<double>(s["agree_count"].get<int>()) /
                             static_cast<double>(s["agree_total"].get<int>());
            s.erase("agree_count");
            s.erase("agree_total");
        }
    }

    return json{{"records", records}, {"summary", summary}};
}

} // namespace dd2
