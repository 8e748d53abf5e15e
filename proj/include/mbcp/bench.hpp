#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mbcp/io.hpp"
#include "mbcp/local_search.hpp"
#include "mbcp/solver.hpp"

namespace mbcp {

/// Batch experiment description. JSON form:
///   {"pairs":[[5,5],[5,10]], "alpha":2, "instancesPerPair":40, "baseSeed":1,
///    "modes":["N"] (or "mode":"N"), "config":{"p0":0.5, "maxExpLength":12,
///    "regrowSize":9, "maxIterations":10000, "stagnationLimit":2000,
///    "growNAttempts":50}, "threads":0, "recordTiming":true}
struct BenchSpec {
    std::vector<std::pair<int, int>> pairs;
    double alpha = 2.0;
    int instances_per_pair = 40;
    std::uint64_t base_seed = 1;
    std::vector<RegrowMode> modes{RegrowMode::Neighbor};
    SolverConfig config;
    unsigned threads = 0;  ///< 0 picks the hardware concurrency
    bool record_timing = true;

    void validate() const;
};

BenchSpec bench_spec_from_json(const json& doc);
SolverConfig solver_config_from_json(const json& doc, SolverConfig base = {});

struct BenchRow {
    int n = 0;
    int m = 0;
    double alpha = 0.0;
    RegrowMode mode = RegrowMode::Neighbor;
    int instances = 0;  ///< instances actually solved (generation failures are skipped)
    double avg_err_pct = 0.0;
    double stdev_err_pct = 0.0;
    double max_err_pct = 0.0;
    int hits = 0;
    double avg_iter = 0.0;
    double stdev_iter = 0.0;
    double avg_time_ms = 0.0;   ///< wall time to the best solution
    double avg_total_ms = 0.0;  ///< wall time of the whole run
};

/// Per-instance outcome inside a batch.
struct BenchRun {
    std::int64_t optimum = 0;
    std::int64_t found = 0;
    std::int64_t iteration_of_best = 0;
    double millis_to_best = 0.0;
    double wall_millis = 0.0;
};

/// Mean, population standard deviation, max of errors and hit count.
BenchRow aggregate_runs(int n, int m, double alpha, RegrowMode mode, const std::vector<BenchRun>& runs);

/// Generates instancesPerPair instances per (n, M) with seeds baseSeed + k and
/// solves each once per mode with the instance seed. Rows are ordered by pair,
/// then mode. Generation failures are reported to `log` and skipped.
std::vector<BenchRow> run_bench(const BenchSpec& spec, std::ostream* log = nullptr);

std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& row, bool record_timing = true);
std::string bench_csv(const std::vector<BenchRow>& rows, bool record_timing = true);

}  // namespace mbcp
