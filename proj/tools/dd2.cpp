// dd2: recognition, approximation, exact oracles, generators, and experiment
// harness for disjoint dominating / 2-dominating set problems.
//
// Exit codes: 0 success, 1 usage or parse errors, 2 infeasible input or
// precondition violations, 3 oracle budget exceeded.

#include <CLI11.hpp>

#include <chrono>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dd2/experiment.hpp"
#include "dd2/io.hpp"

namespace {

using dd2::json;

dd2::Graph load_graph(const std::string& path) {
    if (path == "-") return dd2::parse_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw dd2::parse_error("cannot open input file '" + path + "'");
    return dd2::parse_edge_list(in);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw dd2::parse_error("cannot open file '" + path + "'");
    std::ostringstream oss;
    oss << in.rdbuf();
    return oss.str();
}

void emit(std::ostream& out, const std::string& text) { out << text; }

dd2::OracleBudget budget_from_env() {
    dd2::OracleBudget b;
    if (const char* env = std::getenv("DD2_BUDGET")) {
        long long v = 0, e = 0, s = 0;
        char comma = 0;
        std::istringstream iss(env);
        if (iss >> v >> comma >> e >> comma >> s) {
            b.max_vertices = static_cast<int>(v);
            b.max_edges = static_cast<int>(e);
            b.max_subsets = s;
        } else {
            throw dd2::parse_error("DD2_BUDGET must be 'vertices,edges,subsets'");
        }
    }
    return b;
}

dd2::DeletionOrder parse_order(const std::string& name) {
    if (name == "lex") return dd2::DeletionOrder::lex;
    if (name == "reverse") return dd2::DeletionOrder::reverse_lex;
    if (name == "degree") return dd2::DeletionOrder::low_degree_first;
    if (name == "shuffle") return dd2::DeletionOrder::shuffled;
    throw dd2::parse_error("unknown deletion order '" + name + "'");
}

struct SolveArgs {
    std::string input = "-";
    std::string format = "text";
    bool oracle = false;
    std::string order = "lex";
    uint32_t seed = 0;
};

void add_solve_flags(CLI::App* cmd, SolveArgs& args, bool with_order = false) {
    cmd->add_option("input", args.input, "edge-list file ('-' for stdin)");
    cmd->add_option("--format", args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--oracle", args.oracle, "cross-check against the exact oracle");
    if (with_order) {
        cmd->add_option("--order", args.order, "deletion order: lex, reverse, degree, shuffle");
        cmd->add_option("--seed", args.seed, "seed for the shuffled order");
    }
}

void print_solve_text(std::ostream& out, const json& rec) {
    out << rec["algorithm"].get<std::string>() << ": value " << rec["value"] << "\n";
    if (rec.contains("lower_bound"))
        out << "certified bounds: [" << rec["lower_bound"] << ", "
            << (rec.contains("upper_bound") ? rec["upper_bound"].dump() : std::string("-"))
            << "], factor " << rec["factor"] << "\n";
    else if (rec.contains("factor"))
        out << "certified factor: " << rec["factor"] << "\n";
    if (rec.contains("oracle"))
        out << "oracle " << rec["oracle"] << ", ratio " << rec["ratio"] << " (within factor: "
            << (rec["within_factor"].get<bool>() ? "yes" : "no") << ")\n";
}

int run_solver(const std::string& alg, const SolveArgs& args) {
    dd2::Graph g = load_graph(args.input);
    dd2::RunOptions opt;
    opt.oracle = args.oracle;
    opt.budget = budget_from_env();
    opt.order = parse_order(args.order);
    opt.order_seed = args.seed;
    auto start = std::chrono::steady_clock::now();
    json rec = dd2::run_algorithm(alg, g, opt);
    auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    if (args.format == "json") {
        // json records stay timing-free so reruns are byte-identical
        std::cout << rec.dump() << "\n";
    } else if (alg == "recognize") {
        if (rec["dd2"].get<bool>()) {
            std::cout << "DD2\n";
        } else {
            std::cout << "non-DD2; witness "
                      << (rec["witness_kind"] == "isolated" ? "isolated vertex " : "weak support ")
                      << rec["witness"] << "\n";
        }
        if (rec.contains("agree"))
            std::cout << "oracle agreement: " << (rec["agree"].get<bool>() ? "yes" : "no") << "\n";
    } else if (alg == "pair") {
        dd2::DD2Pair p{rec["pair"]["a"].get<dd2::VertexSet>(),
                       rec["pair"]["b"].get<dd2::VertexSet>()};
        dd2::write_vertex_set(std::cout, "A", p.a);
        dd2::write_vertex_set(std::cout, "B", p.b);
    } else if (alg == "minimalize") {
        dd2::EdgeSet kept;
        for (const auto& e : rec["kept"]) kept.push_back({e[0].get<int>(), e[1].get<int>()});
        dd2::serialize_edge_list(
            std::cout, dd2::subgraph_with_edges(g, kept),
            {"kept edges of a minimal spanning DD2 subgraph (parent m=" +
             std::to_string(g.edge_count()) + ")"});
    } else if (alg == "solve-min-to") {
        print_solve_text(std::cout, rec);
        std::cout << rec["plan"].size() << "\n";
        for (const auto& e : rec["plan"]) std::cout << e[0] << " " << e[1] << "\n";
    } else {
        print_solve_text(std::cout, rec);
        if (rec.contains("kept")) {
            std::cout << "kept:";
            for (const auto& e : rec["kept"]) std::cout << " " << e[0] << "-" << e[1];
            std::cout << "\n";
        }
    }
    // stderr so redirected text output stays parseable
    if (args.format == "text") std::cerr << "wall time: " << wall_ms << " ms\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"disjoint dominating / 2-dominating set toolkit"};
    app.require_subcommand(1);

    // recognize / pair / minimalize / solve-*
    std::map<std::string, SolveArgs> solve_args;
    for (const char* alg : {"recognize", "pair", "minimalize", "solve-min", "solve-min-cubic",
                            "solve-max", "solve-min-to"}) {
        CLI::App* cmd = app.add_subcommand(alg, "");
        add_solve_flags(cmd, solve_args[alg], std::string(alg) == "minimalize");
    }
    app.get_subcommand("recognize")->description("DD2 recognition with witness");
    app.get_subcommand("pair")->description("extract a DD2 pair (A, B)");
    app.get_subcommand("minimalize")->description("greedy minimal spanning DD2 subgraph");
    app.get_subcommand("solve-min")->description("factor-3 Min-DD2");
    app.get_subcommand("solve-min-cubic")->description("factor-1.8 Min-DD2 for cubic graphs");
    app.get_subcommand("solve-max")->description("factor-3 Max-DD2 (1.5 on cubic graphs)");
    app.get_subcommand("solve-min-to")->description("O(log n) Min-to-DD2 edge addition");

    // gen
    CLI::App* gen = app.add_subcommand("gen", "generate an instance");
    std::string gen_family;
    int gen_n = 4, gen_b = 3, gen_k = 2;
    double gen_p = 0.3;
    uint32_t gen_seed = 0;
    std::string gen_base, gen_out = "-", gen_map_out;
    gen->add_option("family", gen_family,
                    "path|cycle|star|complete|complete-bipartite|petersen|cubic|random|corona|"
                    "nondd2|gadget-minvc|gadget-maxis|gadget-maxminvc")
        ->required();
    gen->add_option("-n,--n", gen_n, "size parameter");
    gen->add_option("--b", gen_b, "second side for complete-bipartite");
    gen->add_option("--k", gen_k, "base tree size for corona");
    gen->add_option("--p", gen_p, "edge probability for random");
    CLI::Option* gen_seed_opt =
        gen->add_option("--seed", gen_seed, "seed (mandatory for random families)");
    gen->add_option("--base", gen_base, "base graph file (nondd2, gadgets, corona base)");
    gen->add_option("-o,--out", gen_out, "output file ('-' for stdout)");
    gen->add_option("--map-out", gen_map_out, "write the gadget map as JSON");

    // oracle
    CLI::App* oracle = app.add_subcommand("oracle", "exact exponential-time solvers");
    std::string oracle_problem, oracle_input = "-", oracle_format = "json";
    oracle->add_option("problem", oracle_problem,
                       "min-dd2|max-dd2|pair|gamma|gamma2|min-vc|max-min-vc|max-is|min-add")
        ->required();
    oracle->add_option("input", oracle_input, "edge-list file ('-' for stdin)");
    oracle->add_option("--format", oracle_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // verify
    CLI::App* verify = app.add_subcommand("verify", "verify solution objects");
    std::string verify_what, verify_input = "-", verify_file, verify_kind = "minvc";
    verify->add_option("what", verify_what, "pair|minimal|plan|lreduction")->required();
    verify->add_option("input", verify_input, "instance edge-list file");
    verify->add_option("--file", verify_file, "solution file (pair/kept/plan)");
    verify->add_option("--kind", verify_kind, "lreduction kind: minvc or maxis");

    // experiment
    CLI::App* experiment = app.add_subcommand("experiment", "run a manifest of instances");
    std::string manifest_path, report_path = "-";
    experiment->add_option("manifest", manifest_path, "manifest JSON file")->required();
    experiment->add_option("-o,--out", report_path, "report file ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        for (const char* alg : {"recognize", "pair", "minimalize", "solve-min", "solve-min-cubic",
                                "solve-max", "solve-min-to"}) {
            if (app.get_subcommand(alg)->parsed()) return run_solver(alg, solve_args[alg]);
        }

        if (gen->parsed()) {
            bool randomized = gen_family == "cubic" || gen_family == "random" ||
                              ((gen_family == "corona" || gen_family == "nondd2") &&
                               gen_base.empty());
            if (randomized && gen_seed_opt->count() == 0)
                throw dd2::parse_error("--seed is mandatory for random families");
            dd2::Graph g;
            std::vector<std::string> provenance;
            dd2::GadgetMap map;
            bool have_map = false;
            if (gen_family == "path" || gen_family == "cycle" || gen_family == "star" ||
                gen_family == "complete" || gen_family == "petersen") {
                g = dd2::gen_named(gen_family, {gen_n});
                provenance = {"generator: " + gen_family + " n=" + std::to_string(gen_n)};
            } else if (gen_family == "complete-bipartite") {
                g = dd2::gen_complete_bipartite(gen_n, gen_b);
                provenance = {"generator: complete_bipartite a=" + std::to_string(gen_n) +
                              " b=" + std::to_string(gen_b)};
            } else if (gen_family == "cubic") {
                g = dd2::gen_random_cubic(gen_n, gen_seed);
                provenance = {"generator: cubic n=" + std::to_string(gen_n) +
                              " seed=" + std::to_string(gen_seed)};
            } else if (gen_family == "random") {
                g = dd2::gen_random_graph(gen_n, gen_p, gen_seed);
                std::ostringstream p;
                p << "generator: random n=" << gen_n << " p=" << gen_p << " seed=" << gen_seed;
                provenance = {p.str()};
            } else if (gen_family == "corona") {
                if (!gen_base.empty()) {
                    // base multigraph: same format, duplicate lines allowed
                    std::istringstream iss(slurp(gen_base));
                    std::string line;
                    long long bn = -1, bm = -1;
                    dd2::EdgeSet base_edges;
                    while (std::getline(iss, line)) {
                        if (dd2::detail::is_blank_or_comment(line)) continue;
                        std::istringstream ls(line);
                        long long x, y;
                        ls >> x >> y;
                        if (bn < 0) {
                            bn = x;
                            bm = y;
                        } else {
                            base_edges.push_back({static_cast<int>(x), static_cast<int>(y)});
                        }
                    }
                    if (bn < 0 || static_cast<long long>(base_edges.size()) != bm)
                        throw dd2::parse_error("bad corona base file");
                    g = dd2::gen_corona_subdivision({static_cast<int>(bn), base_edges});
                    provenance = {"generator: corona base=" + gen_base};
                } else {
                    g = dd2::gen_random_corona_subdivision(gen_k, gen_seed);
                    provenance = {"generator: corona k=" + std::to_string(gen_k) +
                                  " seed=" + std::to_string(gen_seed)};
                }
            } else if (gen_family == "nondd2") {
                dd2::Graph base =
                    gen_base.empty() ? dd2::gen_random_graph(gen_n, gen_p, gen_seed)
                                     : dd2::parse_edge_list(slurp(gen_base));
                g = dd2::gen_non_dd2(base);
                provenance = {"generator: nondd2"};
            } else if (gen_family == "gadget-minvc" || gen_family == "gadget-maxis" ||
                       gen_family == "gadget-maxminvc") {
                dd2::Graph source = gen_base.empty() ? dd2::gen_complete(4)
                                                     : dd2::parse_edge_list(slurp(gen_base));
                map = gen_family == "gadget-minvc"    ? dd2::gen_minvc_gadget(source)
                      : gen_family == "gadget-maxis" ? dd2::gen_maxis_gadget(source)
                                                      : dd2::gen_maxmin_gadget(source);
                g = map.target;
                have_map = true;
                provenance = {"generator: " + gen_family};
            } else {
                throw dd2::parse_error("unknown family '" + gen_family + "'");
            }
            std::string text = dd2::serialize_edge_list(g, provenance);
            if (gen_out == "-") {
                emit(std::cout, text);
            } else {
                std::ofstream out(gen_out);
                emit(out, text);
            }
            if (have_map && !gen_map_out.empty()) {
                std::ofstream out(gen_map_out);
                out << json(map).dump(2) << "\n";
            }
            return 0;
        }

        if (oracle->parsed()) {
            dd2::Graph g = load_graph(oracle_input);
            dd2::OracleBudget budget = budget_from_env();
            json rec;
            if (oracle_problem == "pair") {
                auto p = dd2::exact_has_dd2_pair(g, budget);
                rec = json{{"problem", "pair"}, {"exists", p.has_value()}};
                if (p) rec["witness"] = *p;
            } else {
                dd2::OracleResult r;
                if (oracle_problem == "min-dd2") r = dd2::exact_min_spanning_dd2(g, budget);
                else if (oracle_problem == "max-dd2") r = dd2::exact_max_minimal_spanning_dd2(g, budget);
                else if (oracle_problem == "gamma") r = dd2::exact_gamma(g, budget);
                else if (oracle_problem == "gamma2") r = dd2::exact_gamma2(g, budget);
                else if (oracle_problem == "min-vc") r = dd2::exact_min_vertex_cover(g, budget);
                else if (oracle_problem == "max-min-vc") r = dd2::exact_max_min_vertex_cover(g, budget);
                else if (oracle_problem == "max-is") r = dd2::exact_max_independent_set(g, budget);
                else if (oracle_problem == "min-add") r = dd2::exact_min_edge_addition(g, budget);
                else throw dd2::parse_error("unknown oracle problem '" + oracle_problem + "'");
                rec = json(r);
                rec["problem"] = oracle_problem;
            }
            if (oracle_format == "json") std::cout << rec.dump() << "\n";
            else std::cout << rec.dump(2) << "\n";
            return 0;
        }

        if (verify->parsed()) {
            dd2::Graph g = load_graph(verify_input);
            bool ok = false;
            if (verify_what == "pair") {
                std::istringstream iss(slurp(verify_file));
                dd2::DD2Pair p;
                std::string label;
                while (iss >> label) {
                    dd2::VertexSet* side = label == "A:" ? &p.a : label == "B:" ? &p.b : nullptr;
                    if (!side) throw dd2::parse_error("pair file: expected 'A:' or 'B:' labels");
                    std::string rest;
                    std::getline(iss, rest);
                    std::istringstream ls(rest);
                    int v;
                    while (ls >> v) side->push_back(v);
                }
                std::sort(p.a.begin(), p.a.end());
                std::sort(p.b.begin(), p.b.end());
                ok = dd2::verify_pair(g, p);
            } else if (verify_what == "minimal") {
                dd2::Graph kept = dd2::parse_edge_list(slurp(verify_file));
                if (kept.vertex_count() != g.vertex_count())
                    throw dd2::precondition_error("kept-edge file has a different vertex count");
                dd2::SpanningSubgraph h{g, kept.edges()};
                ok = dd2::is_minimal_spanning_dd2(g, h) &&
                     dd2::is_minimal_spanning_dd2_by_deletion(g, h.kept);
            } else if (verify_what == "plan") {
                std::istringstream iss(slurp(verify_file));
                long long k;
                if (!(iss >> k)) throw dd2::parse_error("plan file: missing count");
                dd2::EdgeAdditionPlan plan;
                for (long long i = 0; i < k; ++i) {
                    int u, v;
                    if (!(iss >> u >> v)) throw dd2::parse_error("plan file: missing edge");
                    plan.additions.push_back(dd2::make_edge(u, v));
                }
                dd2::EdgeSet all = g.edges();
                for (const auto& e : plan.additions) {
                    if (g.has_edge(e.first, e.second))
                        throw dd2::precondition_error("plan overlaps existing edges");
                    all.push_back(e);
                }
                ok = dd2::is_dd2(dd2::Graph(g.vertex_count(), all)).is_dd2;
            } else if (verify_what == "lreduction") {
                dd2::OracleBudget budget = budget_from_env();
                if (verify_kind == "minvc") {
                    auto ev = dd2::build_minvc_lreduction_evidence(g, budget);
                    ok = dd2::verify_l_reduction(ev, 23, 1, 1, 1);
                } else if (verify_kind == "maxis") {
                    auto ev = dd2::build_maxis_lreduction_evidence(g, budget);
                    ok = dd2::verify_l_reduction(ev, 19, 1, 1, 1);
                } else {
                    throw dd2::parse_error("lreduction kind must be minvc or maxis");
                }
            } else {
                throw dd2::parse_error("unknown verify target '" + verify_what + "'");
            }
            std::cout << (ok ? "valid" : "invalid") << "\n";
            return ok ? 0 : 2;
        }

        if (experiment->parsed()) {
            json manifest = json::parse(slurp(manifest_path));
            json report = dd2::run_experiment(manifest, budget_from_env());
            std::string text = report.dump(2) + "\n";
            if (report_path == "-") {
                emit(std::cout, text);
            } else {
                std::ofstream out(report_path);
                emit(out, text);
            }
            return 0;
        }
    } catch (const dd2::budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const dd2::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dd2::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
