#include "mbcp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mbcp/instance_gen.hpp"

namespace mbcp {

void BenchSpec::validate() const {
    if (pairs.empty()) throw std::invalid_argument("bench spec needs at least one (n, M) pair");
    for (auto [n, m] : pairs)
        if (n < 1 || m < 3) throw std::invalid_argument("bench pairs need n >= 1 and M >= 3");
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (instances_per_pair < 1) throw std::invalid_argument("instancesPerPair must be positive");
    if (modes.empty()) throw std::invalid_argument("bench spec needs at least one mode");
    config.validate();
}

namespace {

RegrowMode parse_mode(const std::string& s) {
    if (s == "R" || s == "grow-r") return RegrowMode::Random;
    if (s == "N" || s == "grow-n") return RegrowMode::Neighbor;
    throw std::invalid_argument("unknown mode '" + s + "' (expected R or N)");
}

double mean(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

double pop_stdev(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    const double mu = mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - mu) * (x - mu);
    return std::sqrt(s / static_cast<double>(xs.size()));
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

SolverConfig solver_config_from_json(const json& doc, SolverConfig base) {
    if (!doc.is_object()) throw std::invalid_argument("solver config must be an object");
    base.p0 = doc.value("p0", base.p0);
    base.max_exp_length = doc.value("maxExpLength", base.max_exp_length);
    base.regrow_size = doc.value("regrowSize", base.regrow_size);
    base.max_iterations = doc.value("maxIterations", base.max_iterations);
    base.stagnation_limit = doc.value("stagnationLimit", base.stagnation_limit);
    base.grow_n_attempts = doc.value("growNAttempts", base.grow_n_attempts);
    base.seed = doc.value("seed", base.seed);
    base.validate();
    return base;
}

BenchSpec bench_spec_from_json(const json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("bench spec must be a JSON object");
    BenchSpec spec;
    for (const auto& p : doc.at("pairs")) {
        if (!p.is_array() || p.size() != 2) throw std::invalid_argument("each pair must be [n, M]");
        spec.pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    spec.alpha = doc.value("alpha", spec.alpha);
    spec.instances_per_pair = doc.value("instancesPerPair", spec.instances_per_pair);
    spec.base_seed = doc.value("baseSeed", spec.base_seed);
    if (doc.contains("modes")) {
        spec.modes.clear();
        for (const auto& m : doc.at("modes")) spec.modes.push_back(parse_mode(m.get<std::string>()));
    } else if (doc.contains("mode")) {
        spec.modes = {parse_mode(doc.at("mode").get<std::string>())};
    }
    if (doc.contains("config")) spec.config = solver_config_from_json(doc.at("config"));
    spec.threads = doc.value("threads", spec.threads);
    spec.record_timing = doc.value("recordTiming", spec.record_timing);
    spec.validate();
    return spec;
}

BenchRow aggregate_runs(int n, int m, double alpha, RegrowMode mode, const std::vector<BenchRun>& runs) {
    BenchRow row;
    row.n = n;
    row.m = m;
    row.alpha = alpha;
    row.mode = mode;
    row.instances = static_cast<int>(runs.size());
    std::vector<double> errs, iters, times, totals;
    for (const auto& r : runs) {
        const double err = r.optimum > 0
                               ? static_cast<double>(r.optimum - r.found) / static_cast<double>(r.optimum) * 100.0
                               : 0.0;
        errs.push_back(err);
        iters.push_back(static_cast<double>(r.iteration_of_best));
        times.push_back(r.millis_to_best);
        totals.push_back(r.wall_millis);
        if (r.found == r.optimum) ++row.hits;
    }
    row.avg_err_pct = mean(errs);
    row.stdev_err_pct = pop_stdev(errs);
    row.max_err_pct = errs.empty() ? 0.0 : *std::max_element(errs.begin(), errs.end());
    row.avg_iter = mean(iters);
    row.stdev_iter = pop_stdev(iters);
    row.avg_time_ms = mean(times);
    row.avg_total_ms = mean(totals);
    return row;
}

std::vector<BenchRow> run_bench(const BenchSpec& spec, std::ostream* log) {
    spec.validate();
    const std::size_t per = static_cast<std::size_t>(spec.instances_per_pair);
    const std::size_t modes = spec.modes.size();
    const std::size_t tasks = spec.pairs.size() * per;
    // results[task][mode]; empty when generation failed.
    std::vector<std::vector<std::optional<BenchRun>>> results(tasks, std::vector<std::optional<BenchRun>>(modes));
    std::vector<std::string> failures(tasks);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks; t = next++) {
            const auto [n, m] = spec.pairs[t / per];
            GenConfig gen;
            gen.n = n;
            gen.m = m;
            gen.alpha = spec.alpha;
            gen.seed = spec.base_seed + t % per;
            GeneratedInstance inst;
            try {
                inst = generate_instance(gen);
            } catch (const std::exception& e) {
                failures[t] = e.what();
                continue;
            }
            SolverConfig cfg = spec.config;
            cfg.seed = gen.seed;
            for (std::size_t k = 0; k < modes; ++k) {
                auto res = local_search(inst.instance, cfg, spec.modes[k]);
                results[t][k] = BenchRun{*inst.instance.known_optimum, res.stats.best_objective,
                                         res.stats.iteration_of_best, res.stats.millis_to_best,
                                         res.stats.wall_millis};
            }
        }
    };
    unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, tasks));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<BenchRow> rows;
    for (std::size_t p = 0; p < spec.pairs.size(); ++p) {
        const auto [n, m] = spec.pairs[p];
        for (std::size_t k = 0; k < modes; ++k) {
            std::vector<BenchRun> runs;
            for (std::size_t i = 0; i < per; ++i) {
                const std::size_t t = p * per + i;
                if (results[t][k]) runs.push_back(*results[t][k]);
                else if (k == 0 && log)
                    *log << "skipped n=" << n << " M=" << m << " seed=" << spec.base_seed + i << ": "
                         << failures[t] << '\n';
            }
            rows.push_back(aggregate_runs(n, m, spec.alpha, spec.modes[k], runs));
        }
    }
    return rows;
}

std::string bench_csv_header() {
    return "n,M,alpha,mode,instances,avgErrPct,stdevErrPct,maxErrPct,hits,avgIter,stdevIter,avgTimeMs,"
           "avgTotalMs";
}

std::string bench_csv_row(const BenchRow& row, bool record_timing) {
    std::ostringstream out;
    out << row.n << ',' << row.m << ',' << fixed(row.alpha, 2) << ',' << to_string(row.mode) << ','
        << row.instances << ',' << fixed(row.avg_err_pct, 4) << ',' << fixed(row.stdev_err_pct, 4) << ','
        << fixed(row.max_err_pct, 4) << ',' << row.hits << ',' << fixed(row.avg_iter, 2) << ','
        << fixed(row.stdev_iter, 2) << ',';
    if (record_timing) out << fixed(row.avg_time_ms, 3) << ',' << fixed(row.avg_total_ms, 3);
    else out << ',';
    return out.str();
}

std::string bench_csv(const std::vector<BenchRow>& rows, bool record_timing) {
    std::string out = bench_csv_header() + '\n';
    for (const auto& r : rows) out += bench_csv_row(r, record_timing) + '\n';
    return out;
}

}  // namespace mbcp
