#include <catch2/catch_amalgamated.hpp>

#include "dd2/experiment.hpp"

using namespace dd2;

TEST_CASE("run_algorithm records") {
    Graph k4 = gen_complete(4);
    RunOptions opt;
    opt.oracle = true;

    SECTION("solve-min on K4: value 3, oracle 3, ratio 1.0") {
        json rec = run_algorithm("solve-min", k4, opt);
        REQUIRE(rec["value"] == 3);
        REQUIRE(rec["oracle"] == 3);
        REQUIRE(rec["ratio"] == 1.0);
        REQUIRE(rec["within_factor"] == true);
        REQUIRE(rec["lower_bound"] == 3);
        REQUIRE(rec["upper_bound"] == 4);
    }
    SECTION("solve-min-cubic on K4: ratio 4/3, bounds present") {
        json rec = run_algorithm("solve-min-cubic", k4, opt);
        REQUIRE(rec["value"] == 4);
        REQUIRE(rec["oracle"] == 3);
        REQUIRE(rec["prepass_edges"] == 4);
        REQUIRE(rec["prepass_bound"] == 4);
        REQUIRE(rec["matching_size"] == 1);
        REQUIRE(rec["matching_bound"] == 1);
        REQUIRE(rec["within_factor"] == true);
    }
    SECTION("recognize records witness and oracle agreement") {
        json rec = run_algorithm("recognize", gen_path(4), opt);
        REQUIRE(rec["dd2"] == false);
        REQUIRE(rec["witness"] == 1);
        REQUIRE(rec["witness_kind"] == "weak_support");
        REQUIRE(rec["agree"] == true);
    }
    SECTION("solve-max reports the inverted ratio") {
        json rec = run_algorithm("solve-max", k4, opt);
        REQUIRE(rec["factor"] == 1.5);
        REQUIRE(rec["oracle"] == 4);
        REQUIRE(rec["within_factor"] == true);
    }
    SECTION("solve-min-to on a corona base") {
        json rec = run_algorithm("solve-min-to", gen_non_dd2(gen_cycle(3)), opt);
        REQUIRE(rec["value"] == 1);
        REQUIRE(rec["oracle"] == 1);
        REQUIRE(rec["ratio"] == 1.0);
        REQUIRE(rec["ws"] == 1);
    }
    SECTION("unknown algorithm") {
        REQUIRE_THROWS_AS(run_algorithm("solve-everything", k4), precondition_error);
    }
}

TEST_CASE("json serialization of domain objects") {
    Graph k4 = gen_complete(4);
    json jg = k4;
    REQUIRE(jg["n"] == 4);
    REQUIRE(jg["edges"].size() == 6);

    auto [h, trace] = approx_min_dd2_cubic(k4);
    json jt = trace;
    REQUIRE(jt["a"] == 2);
    REQUIRE(jt["result_edges"].size() == 4);

    json jo = exact_min_spanning_dd2(k4);
    REQUIRE(jo["value"] == 3);
    REQUIRE(jo["witness"].size() == 3);
    REQUIRE(jo["explored"].get<long long>() > 0);

    json jm = gen_minvc_gadget(k4);
    REQUIRE(jm["kind"] == "min_vc");
    REQUIRE(jm["edge_vertex"].size() == 6);
    REQUIRE(jm["vertex_gadget"].size() == 4);
    REQUIRE(jm["vertex_gadget"][0].contains("t"));

    json jmm = gen_maxmin_gadget(gen_path(3));
    REQUIRE(jmm["hub"] == 16);
    REQUIRE(jmm["pendant_bundle"].size() == 3);

    auto [plan, mtrace] = approx_min_to_dd2(gen_path(4));
    json jmt = mtrace;
    REQUIRE(jmt["a"] == json(VertexSet{1, 2}));
    REQUIRE(jmt["plan"]["additions"].size() == 1);
    REQUIRE(jmt["fallback_used"] == true);
}

TEST_CASE("family instances") {
    json cubic{{"name", "cubic"}};
    REQUIRE(make_family_instance(cubic, 4, 1) == gen_complete(4));
    json random{{"name", "random"}, {"p", 0.4}};
    REQUIRE(make_family_instance(random, 9, 5) == gen_random_graph(9, 0.4, 5));
    json dd2f{{"name", "random_dd2"}, {"p", 0.3}};
    REQUIRE(is_dd2(make_family_instance(dd2f, 9, 5)).is_dd2);
    json nondd2{{"name", "nondd2"}, {"p", 0.5}};
    REQUIRE_FALSE(is_dd2(make_family_instance(nondd2, 5, 3)).is_dd2);
    json unknown{{"name", "surprise"}};
    REQUIRE_THROWS_AS(make_family_instance(unknown, 5, 1), precondition_error);
}

TEST_CASE("run_experiment") {
    SECTION("empty manifest gives an empty report") {
        json report = run_experiment(json::object());
        REQUIRE(report["records"].empty());
        REQUIRE(report["summary"].empty());
    }
    SECTION("small manifest: deterministic, sorted, aggregated") {
        json manifest{{"families", json::array({json{{"name", "cubic"}}})},
                      {"sizes", {4, 6}},
                      {"seeds", {1, 2}},
                      {"algorithms", {"solve-min-cubic", "solve-min"}},
                      {"oracle", {{"enabled", true}}}};
        json report = run_experiment(manifest);
        REQUIRE(report["records"].size() == 8);
        for (const auto& rec : report["records"]) {
            REQUIRE(rec.contains("ratio"));
            REQUIRE(rec["within_factor"] == true);
        }
        // sorted by (family, size, seed, algorithm)
        for (size_t i = 1; i < report["records"].size(); ++i) {
            const auto& a = report["records"][i - 1];
            const auto& b = report["records"][i];
            auto key = [](const json& r) {
                return std::make_tuple(r["family"].get<std::string>(), r["size"].get<int>(),
                                       r["seed"].get<uint32_t>(),
                                       r["algorithm"].get<std::string>());
            };
            REQUIRE(key(a) <= key(b));
        }
        REQUIRE(report["summary"].contains("cubic/solve-min-cubic"));
        REQUIRE(report["summary"]["cubic/solve-min-cubic"]["count"] == 4);
        REQUIRE(report["summary"]["cubic/solve-min-cubic"]["max_ratio"].get<double>() <= 1.8);
        REQUIRE(report["summary"]["cubic/solve-min-cubic"].contains("mean_ratio"));

        // byte-identical on a second run
        REQUIRE(run_experiment(manifest).dump() == report.dump());
    }
    SECTION("failures are recorded, not fatal") {
        json manifest{{"families", json::array({json{{"name", "path"}}})},
                      {"sizes", {4}},
                      {"seeds", {1}},
                      {"algorithms", {"solve-min"}}};
        json report = run_experiment(manifest);
        REQUIRE(report["records"].size() == 1);
        REQUIRE(report["records"][0].contains("error"));
        REQUIRE(report["summary"]["path/solve-min"]["errors"] == 1);
    }
}
