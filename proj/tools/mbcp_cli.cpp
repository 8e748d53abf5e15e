#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mbcp/bench.hpp"
#include "mbcp/instance_gen.hpp"
#include "mbcp/io.hpp"
#include "mbcp/local_search.hpp"
#include "mbcp/solver.hpp"
#include "mbcp/verify.hpp"

using namespace mbcp;

namespace {

struct CliError : std::runtime_error {
    CliError(std::string kind, const std::string& message) : std::runtime_error(message), kind(std::move(kind)) {}
    std::string kind;
};

void emit(const json& doc, const std::string& out) {
    if (out.empty() || out == "-") std::cout << doc.dump(2) << '\n';
    else write_json_file(out, doc);
}

std::vector<int> parse_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw CliError("usage", "bad integer in list: " + item);
        out.push_back(v);
    }
    return out;
}

json stats_json(const LocalSearchStats& s, const std::string& mode) {
    return {{"bestObjective", s.best_objective}, {"iterations", s.iterations},
            {"iterationOfBest", s.iteration_of_best}, {"wallMillis", s.wall_millis},
            {"millisToBest", s.millis_to_best}, {"seed", s.seed}, {"mode", mode}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bi-connected partitioning with a size constraint"};
    app.require_subcommand(1);

    // generate
    GenConfig gen;
    std::string gen_out, gen_cert;
    auto* generate = app.add_subcommand("generate", "Generate an instance with a known optimum");
    generate->add_option("--n", gen.n, "Number of roots")->required();
    generate->add_option("--m", gen.m, "Capacity M")->required();
    generate->add_option("--alpha", gen.alpha, "Density parameter")->capture_default_str();
    generate->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
    generate->add_option("--delta", gen.delta)->capture_default_str();
    generate->add_option("--gamma", gen.gamma)->capture_default_str();
    generate->add_option("--out", gen_out, "Instance JSON path")->required();
    generate->add_option("--cert", gen_cert, "Certificate path (default <out>.cert.json)");

    // solve
    std::string solve_instance, solve_out, solve_mode = "grow-n", solve_stats;
    SolverConfig cfg;
    auto* solve = app.add_subcommand("solve", "Solve an instance");
    solve->add_option("--instance", solve_instance)->required();
    solve->add_option("--mode", solve_mode)
        ->check(CLI::IsMember({"grow-r", "grow-n", "single-pass"}))
        ->capture_default_str();
    solve->add_option("--seed", cfg.seed)->capture_default_str();
    solve->add_option("--p0", cfg.p0)->capture_default_str();
    solve->add_option("--max-exp-length", cfg.max_exp_length)->capture_default_str();
    solve->add_option("--regrow-size", cfg.regrow_size)->capture_default_str();
    solve->add_option("--max-iters", cfg.max_iterations)->capture_default_str();
    solve->add_option("--stagnation", cfg.stagnation_limit)->capture_default_str();
    solve->add_option("--grow-n-attempts", cfg.grow_n_attempts)->capture_default_str();
    solve->add_option("--out", solve_out, "Solution JSON path (stdout when omitted)");
    solve->add_option("--stats", solve_stats, "Stats JSON path");

    // verify
    std::string verify_instance, verify_solution_path;
    auto* verify = app.add_subcommand("verify", "Check a solution; exit 1 when infeasible");
    verify->add_option("--instance", verify_instance)->required();
    verify->add_option("--solution", verify_solution_path)->required();

    // reduce
    int sup = 0;
    std::string demands_text, reduce_out;
    auto* reduce = app.add_subcommand("reduce", "Build the instance for a star supply/demand problem");
    reduce->add_option("--sup", sup)->required();
    reduce->add_option("--demands", demands_text, "Comma separated, e.g. 3,2,4")->required();
    reduce->add_option("--out", reduce_out)->required();

    // bench
    std::string bench_spec, bench_out;
    auto* bench = app.add_subcommand("bench", "Run a batch experiment to CSV");
    bench->add_option("--spec", bench_spec)->required();
    bench->add_option("--out", bench_out)->required();

    // oracle
    std::string oracle_instance;
    auto* oracle = app.add_subcommand("oracle", "Exact optimum for instances up to 16 nodes");
    oracle->add_option("--instance", oracle_instance)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
        return 2;
    }

    try {
        if (*generate) {
            auto g = generate_instance(gen);
            write_instance(gen_out, g.instance);
            write_json_file(gen_cert.empty() ? gen_out + ".cert.json" : gen_cert,
                            json{{"blockMembership", g.block_membership}});
            std::cout << json{{"nodes", g.instance.graph.node_count()},
                              {"edges", g.instance.graph.edge_count()},
                              {"optimum", *g.instance.known_optimum}}
                             .dump()
                      << '\n';
        } else if (*solve) {
            Instance inst = read_instance(solve_instance);
            Solution best;
            LocalSearchStats stats;
            if (solve_mode == "single-pass") {
                const auto start = std::chrono::steady_clock::now();
                Rng rng(cfg.seed);
                best = generate_solution(inst, cfg, rng);
                stats.best_objective = best.objective;
                stats.iterations = stats.iteration_of_best = 1;
                stats.wall_millis = stats.millis_to_best =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
                stats.seed = cfg.seed;
            } else {
                auto res = local_search(inst, cfg, solve_mode == "grow-r" ? RegrowMode::Random : RegrowMode::Neighbor);
                best = std::move(res.best);
                stats = res.stats;
            }
            emit(solution_to_json(best, cfg.seed), solve_out);
            json s = stats_json(stats, solve_mode);
            if (!solve_stats.empty()) write_json_file(solve_stats, s);
            else if (!solve_out.empty()) std::cout << s.dump() << '\n';
        } else if (*verify) {
            Instance inst = read_instance(verify_instance);
            Solution sol = solution_from_json(read_json_file(verify_solution_path));
            auto report = verify_solution(inst, sol);
            json v = json::array();
            for (const auto& x : report.violations)
                v.push_back({{"kind", to_string(x.kind)}, {"subgraph", x.subgraph}, {"detail", x.detail}});
            std::cout << json{{"feasible", report.feasible()}, {"objective", report.objective}, {"violations", v}}
                             .dump(2)
                      << '\n';
            return report.feasible() ? 0 : 1;
        } else if (*reduce) {
            auto demands = parse_list(demands_text);
            auto red = reduce_mpgsd_star(sup, demands);
            red.instance.known_optimum = red.oracle_value;
            write_instance(reduce_out, red.instance);
            std::cout << json{{"nodes", red.instance.graph.node_count()},
                              {"capacity", red.instance.capacity},
                              {"optimum", red.oracle_value}}
                             .dump()
                      << '\n';
        } else if (*bench) {
            auto spec = bench_spec_from_json(read_json_file(bench_spec));
            auto rows = run_bench(spec, &std::cerr);
            std::ofstream out(bench_out, std::ios::binary);
            if (!out) throw CliError("io", "cannot write " + bench_out);
            out << bench_csv(rows, spec.record_timing);
        } else if (*oracle) {
            Instance inst = read_instance(oracle_instance);
            std::cout << json{{"optimum", brute_force_optimum(inst)}}.dump() << '\n';
        }
    } catch (const CliError& e) {
        std::cerr << json{{"error", e.kind}, {"message", e.what()}}.dump() << '\n';
        return 2;
    } catch (const OracleSizeError& e) {
        std::cerr << json{{"error", "size"}, {"message", e.what()}}.dump() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", "invalid-input"}, {"message", e.what()}}.dump() << '\n';
        return 2;
    } catch (const json::exception& e) {
        std::cerr << json{{"error", "json"}, {"message", e.what()}}.dump() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "runtime"}, {"message", e.what()}}.dump() << '\n';
        return 2;
    }
    return 0;
}
