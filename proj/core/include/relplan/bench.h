#ifndef RELPLAN_BENCH_H
#define RELPLAN_BENCH_H

#include "relplan/runner.h"

#include <string>
#include <vector>

namespace relplan {

// One row of the append-only results file; reproducible from its config
// snapshot (seed, weight, rho, limits) modulo wall-clock time.
struct RunRecord {
    std::string problem;
    std::string heuristic;
    std::string status;
    double search_time_s = 0.0;
    double explore_time_s = 0.0;
    uint64_t expansions = 0;
    int64_t plan_length = -1; // -1 when unsolved
    double peak_mem_mb = 0.0;
    uint64_t seed = 0;
    int weight = 10;
    double rho = 0.2;
};

struct BenchConfig {
    std::vector<std::string> heuristics = {"relevance", "lmcount"};
    int jobs = 1;
    int weight = 10;
    SearchLimits limits{120.0, size_t{1024} * 1024 * 1024};
    ExploreConfig explore;
    // Path of the planner executable for isolated per-run worker processes;
    // empty runs everything in-process (used by tests).
    std::string worker_exe;
    std::string out_csv; // append-only results file, enables resuming
};

// (name, domain path, problem path), discovered as <name>-domain.pddl plus
// <name>-problem.pddl, sorted by name.
struct SuiteEntry {
    std::string name;
    std::string domain_path;
    std::string problem_path;
};
std::vector<SuiteEntry> discover_suite(const std::string &suite_dir);

// Runs every (problem, heuristic) pair not already present in the results
// file. Per-problem failures become status records, never abort the suite.
std::vector<RunRecord> run_suite(const std::string &suite_dir,
                                 const BenchConfig &config);

std::string record_csv_header();
std::string to_csv(const RunRecord &record);
std::vector<RunRecord> read_csv(const std::string &path);

struct RatioStat {
    double mean = 0.0;
    double stddev = 0.0; // population stddev (divide by n)
    int n = 0;
};

// Table-style comparison of two heuristics: solved counts partitioned as
// s1-only / s2-only / both / neither, and mean +- population stddev of the
// per-problem s1/s2 ratios over the both-solved subset.
struct ComparisonReport {
    std::string s1, s2;
    int solved_s1 = 0, solved_s2 = 0, solved_both = 0, solved_neither = 0;
    int total = 0;
    RatioStat time_ratio, expansions_ratio, length_ratio;

    std::string to_markdown() const;
    std::string to_csv() const;
};

ComparisonReport compare(const std::vector<RunRecord> &records,
                         const std::string &s1, const std::string &s2);

} // namespace relplan

#endif
