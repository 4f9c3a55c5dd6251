#include "relplan/bench.h"

#include "relplan/errors.h"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

namespace relplan {

namespace fs = std::filesystem;

std::vector<SuiteEntry> discover_suite(const std::string &suite_dir) {
    std::vector<SuiteEntry> out;
    const std::string suffix = "-domain.pddl";
    std::vector<std::string> names;
    for (const auto &entry : fs::directory_iterator(suite_dir)) {
        std::string file = entry.path().filename().string();
        if (file.size() > suffix.size() &&
            file.compare(file.size() - suffix.size(), suffix.size(), suffix) ==
                0)
            names.push_back(file.substr(0, file.size() - suffix.size()));
    }
    std::sort(names.begin(), names.end());
    for (const std::string &name : names) {
        fs::path domain = fs::path(suite_dir) / (name + "-domain.pddl");
        fs::path problem = fs::path(suite_dir) / (name + "-problem.pddl");
        if (fs::exists(problem))
            out.push_back({name, domain.string(), problem.string()});
    }
    return out;
}

std::string record_csv_header() {
    return "problem,heuristic,status,search_time_s,explore_time_s,expansions,"
           "plan_length,peak_mem_mb,seed,weight,rho";
}

std::string to_csv(const RunRecord &r) {
    char buf[512];
    snprintf(buf, sizeof buf, "%s,%s,%s,%.6f,%.6f,%llu,%lld,%.3f,%llu,%d,%g",
             r.problem.c_str(), r.heuristic.c_str(), r.status.c_str(),
             r.search_time_s, r.explore_time_s,
             static_cast<unsigned long long>(r.expansions),
             static_cast<long long>(r.plan_length), r.peak_mem_mb,
             static_cast<unsigned long long>(r.seed), r.weight, r.rho);
    return buf;
}

std::vector<RunRecord> read_csv(const std::string &path) {
    std::vector<RunRecord> out;
    std::ifstream in(path);
    if (!in)
        return out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (first) {
            first = false;
            if (line.rfind("problem,", 0) == 0)
                continue;
        }
        if (line.empty())
            continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            cells.push_back(cell);
        if (cells.size() != 11)
            continue;
        RunRecord r;
        r.problem = cells[0];
        r.heuristic = cells[1];
        r.status = cells[2];
        r.search_time_s = std::stod(cells[3]);
        r.explore_time_s = std::stod(cells[4]);
        r.expansions = std::stoull(cells[5]);
        r.plan_length = std::stoll(cells[6]);
        r.peak_mem_mb = std::stod(cells[7]);
        r.seed = std::stoull(cells[8]);
        r.weight = std::stoi(cells[9]);
        r.rho = std::stod(cells[10]);
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

RunRecord run_in_process(const SuiteEntry &entry, const std::string &heuristic,
                         const BenchConfig &config) {
    RunRecord r;
    r.problem = entry.name;
    r.heuristic = heuristic;
    r.seed = config.explore.seed;
    r.weight = config.weight;
    r.rho = config.explore.rho;
    try {
        Task task = load_task(entry.domain_path, entry.problem_path);
        RunOptions options;
        options.heuristic = heuristic;
        options.weight = config.weight;
        options.limits = config.limits;
        options.explore = config.explore;
        RunOutcome outcome = run_problem(task, options);
        r.status = to_string(outcome.result.status);
        r.search_time_s = outcome.result.search_time_s;
        r.explore_time_s = outcome.explore_time_s;
        r.expansions = outcome.result.expansions;
        r.plan_length = outcome.result.status == SearchStatus::Solved
                            ? outcome.result.plan_length
                            : -1;
        r.peak_mem_mb =
            static_cast<double>(outcome.result.peak_memory) / (1024.0 * 1024.0);
    } catch (const std::exception &e) {
        r.status = "input_error";
    }
    return r;
}

struct WorkerJob {
    SuiteEntry entry;
    std::string heuristic;
    std::string json_path;
};

pid_t spawn_worker(const WorkerJob &job, const BenchConfig &config) {
    std::vector<std::string> args = {
        config.worker_exe, "plan",
        "--domain", job.entry.domain_path,
        "--problem", job.entry.problem_path,
        "--heuristic", job.heuristic,
        "--weight", std::to_string(config.weight),
        "--time-limit", std::to_string(config.limits.time_limit_s),
        "--mem-limit",
        std::to_string(config.limits.mem_limit_bytes / (1024 * 1024)),
        "--seed", std::to_string(config.explore.seed),
        "--rho", std::to_string(config.explore.rho),
        "--min-nodes", std::to_string(config.explore.min_nodes),
        "--max-nodes", std::to_string(config.explore.max_nodes),
        "--json-result", job.json_path,
        "--quiet"};
    pid_t pid = fork();
    if (pid < 0)
        throw std::runtime_error("fork failed");
    if (pid == 0) {
        std::vector<char *> argv;
        for (std::string &a : args)
            argv.push_back(a.data());
        argv.push_back(nullptr);
        execv(argv[0], argv.data());
        _exit(127);
    }
    return pid;
}

RunRecord collect_worker(const WorkerJob &job, const BenchConfig &config,
                         int exit_status) {
    RunRecord r;
    r.problem = job.entry.name;
    r.heuristic = job.heuristic;
    r.seed = config.explore.seed;
    r.weight = config.weight;
    r.rho = config.explore.rho;
    std::ifstream in(job.json_path);
    if (in) {
        try {
            nlohmann::json j = nlohmann::json::parse(in);
            r.status = j.value("status", "input_error");
            r.search_time_s = j.value("search_time_s", 0.0);
            r.explore_time_s = j.value("explore_time_s", 0.0);
            r.expansions = j.value("expansions", uint64_t{0});
            r.plan_length = j.value("plan_length", int64_t{-1});
            r.peak_mem_mb = j.value("peak_mem_mb", 0.0);
            return r;
        } catch (const std::exception &) {
            // fall through to exit-status interpretation
        }
    }
    // The worker died before writing a result (e.g. hard OOM kill).
    r.status = exit_status == 0 ? "input_error" : "out_of_memory";
    return r;
}

} // namespace

std::vector<RunRecord> run_suite(const std::string &suite_dir,
                                 const BenchConfig &config) {
    std::vector<SuiteEntry> entries = discover_suite(suite_dir);
    std::vector<RunRecord> records;
    std::set<std::pair<std::string, std::string>> done;
    if (!config.out_csv.empty()) {
        records = read_csv(config.out_csv);
        for (const RunRecord &r : records)
            done.insert({r.problem, r.heuristic});
    }
    std::ofstream out;
    if (!config.out_csv.empty()) {
        bool fresh = records.empty();
        out.open(config.out_csv, std::ios::app);
        if (fresh)
            out << record_csv_header() << "\n";
    }
    auto emit = [&](RunRecord r) {
        if (out.is_open()) {
            out << to_csv(r) << "\n";
            out.flush();
        }
        records.push_back(std::move(r));
    };

    std::vector<WorkerJob> jobs;
    for (const SuiteEntry &entry : entries)
        for (const std::string &heuristic : config.heuristics)
            if (!done.count({entry.name, heuristic}))
                jobs.push_back({entry, heuristic, ""});

    if (config.worker_exe.empty()) {
        for (const WorkerJob &job : jobs)
            emit(run_in_process(job.entry, job.heuristic, config));
        return records;
    }

    // Isolated workers: at most `jobs` children in flight; results come
    // back through per-job JSON files.
    fs::path tmp_dir = fs::temp_directory_path() /
                       ("relplan-bench-" + std::to_string(getpid()));
    fs::create_directories(tmp_dir);
    std::map<pid_t, size_t> running;
    size_t next = 0;
    int max_jobs = std::max(1, config.jobs);
    while (next < jobs.size() || !running.empty()) {
        while (next < jobs.size() &&
               running.size() < static_cast<size_t>(max_jobs)) {
            jobs[next].json_path =
                (tmp_dir / ("job-" + std::to_string(next) + ".json")).string();
            pid_t pid = spawn_worker(jobs[next], config);
            running[pid] = next;
            ++next;
        }
        int status = 0;
        pid_t pid = waitpid(-1, &status, 0);
        auto it = running.find(pid);
        if (it == running.end())
            continue;
        size_t index = it->second;
        running.erase(it);
        emit(collect_worker(jobs[index], config,
                            WIFEXITED(status) ? WEXITSTATUS(status) : -1));
    }
    fs::remove_all(tmp_dir);
    return records;
}

namespace {

RatioStat ratio_stat(const std::vector<double> &ratios) {
    RatioStat s;
    s.n = static_cast<int>(ratios.size());
    if (s.n == 0)
        return s;
    double sum = 0;
    for (double r : ratios)
        sum += r;
    s.mean = sum / s.n;
    if (s.n >= 2) {
        double sq = 0;
        for (double r : ratios)
            sq += (r - s.mean) * (r - s.mean);
        // Population stddev (divide by n); the recorded ratios are the whole
        // set we summarize, not a sample from a larger one.
        s.stddev = std::sqrt(sq / s.n);
    }
    return s;
}

std::string fmt_stat(const RatioStat &s) {
    if (s.n == 0)
        return "N/A";
    char buf[64];
    snprintf(buf, sizeof buf, "%.2f +- %.2f", s.mean, s.stddev);
    return buf;
}

} // namespace

ComparisonReport compare(const std::vector<RunRecord> &records,
                         const std::string &s1, const std::string &s2) {
    ComparisonReport report;
    report.s1 = s1;
    report.s2 = s2;
    std::map<std::string, const RunRecord *> by1, by2;
    std::set<std::string> problems;
    for (const RunRecord &r : records) {
        problems.insert(r.problem);
        if (r.heuristic == s1)
            by1[r.problem] = &r;
        else if (r.heuristic == s2)
            by2[r.problem] = &r;
    }
    std::vector<double> time_ratios, exp_ratios, len_ratios;
    for (const std::string &p : problems) {
        const RunRecord *r1 = by1.count(p) ? by1[p] : nullptr;
        const RunRecord *r2 = by2.count(p) ? by2[p] : nullptr;
        bool s1_solved = r1 && r1->status == "solved";
        bool s2_solved = r2 && r2->status == "solved";
        ++report.total;
        if (s1_solved)
            ++report.solved_s1;
        if (s2_solved)
            ++report.solved_s2;
        if (s1_solved && s2_solved) {
            ++report.solved_both;
            if (r2->search_time_s > 0)
                time_ratios.push_back(r1->search_time_s / r2->search_time_s);
            if (r2->expansions > 0)
                exp_ratios.push_back(static_cast<double>(r1->expansions) /
                                     static_cast<double>(r2->expansions));
            if (r2->plan_length > 0)
                len_ratios.push_back(static_cast<double>(r1->plan_length) /
                                     static_cast<double>(r2->plan_length));
        } else if (!s1_solved && !s2_solved) {
            ++report.solved_neither;
        }
    }
    report.time_ratio = ratio_stat(time_ratios);
    report.expansions_ratio = ratio_stat(exp_ratios);
    report.length_ratio = ratio_stat(len_ratios);
    return report;
}

std::string ComparisonReport::to_markdown() const {
    std::ostringstream out;
    out << "| solved by | " << s1 << " | " << s2 << " | both | neither |\n";
    out << "|---|---|---|---|---|\n";
    out << "| problems (" << total << ") | " << solved_s1 << " | " << solved_s2
        << " | " << solved_both << " | " << solved_neither << " |\n\n";
    out << "Ratios " << s1 << "/" << s2 << " over the " << solved_both
        << " problems solved by both (mean +- population stddev):\n\n";
    out << "- search time: " << fmt_stat(time_ratio) << "\n";
    out << "- expansions: " << fmt_stat(expansions_ratio) << "\n";
    out << "- plan length: " << fmt_stat(length_ratio) << "\n";
    return out.str();
}

std::string ComparisonReport::to_csv() const {
    std::ostringstream out;
    out << "s1,s2,total,solved_s1,solved_s2,solved_both,solved_neither,"
           "time_ratio_mean,time_ratio_stddev,expansions_ratio_mean,"
           "expansions_ratio_stddev,length_ratio_mean,length_ratio_stddev\n";
    out << s1 << "," << s2 << "," << total << "," << solved_s1 << ","
        << solved_s2 << "," << solved_both << "," << solved_neither << ","
        << time_ratio.mean << "," << time_ratio.stddev << ","
        << expansions_ratio.mean << "," << expansions_ratio.stddev << ","
        << length_ratio.mean << "," << length_ratio.stddev << "\n";
    return out.str();
}

} // namespace relplan
