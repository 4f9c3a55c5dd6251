#include "relplan/bench.h"
#include "relplan/errors.h"
#include "relplan/grounding.h"
#include "relplan/landmarks.h"
#include "relplan/merge.h"
#include "relplan/oracle.h"
#include "relplan/pddl.h"
#include "relplan/relevance.h"
#include "relplan/runner.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace relplan;

namespace {

// Exit codes shared by all subcommands.
constexpr int kExitSolved = 0;
constexpr int kExitUnsolvable = 1;
constexpr int kExitResourceLimit = 2;
constexpr int kExitInputError = 3;

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + path);
    out << text;
}

struct CommonOpts {
    std::string domain, problem;
    ExploreConfig explore;
};

void add_task_options(CLI::App *cmd, CommonOpts &opts) {
    cmd->add_option("--domain", opts.domain, "domain PDDL file")->required();
    cmd->add_option("--problem", opts.problem, "problem PDDL file")
        ->required();
}

void add_explore_options(CLI::App *cmd, ExploreConfig &explore) {
    cmd->add_option("--rho", explore.rho,
                    "frontier-mass stop threshold (default 0.2)");
    cmd->add_option("--min-nodes", explore.min_nodes,
                    "explore at least this many tree nodes");
    cmd->add_option("--max-nodes", explore.max_nodes,
                    "hard cap on tree nodes");
    cmd->add_option("--seed", explore.seed, "exploration RNG seed");
}

// Parse, ground, relax, goal-compile and explore -- the shared front end
// of the tree-based subcommands.
struct TreeContext {
    // Heap-held so the tree's back-pointer to the task stays valid when
    // the context is moved.
    std::unique_ptr<Task> task;
    std::unique_ptr<Task> compiled;
    std::unique_ptr<PartialTree> tree;
};

TreeContext build_tree(const CommonOpts &opts) {
    TreeContext ctx;
    ctx.task = std::make_unique<Task>(load_task(opts.domain, opts.problem));
    ctx.compiled =
        std::make_unique<Task>(add_goal_action(delete_relax(*ctx.task)));
    ctx.tree =
        std::make_unique<PartialTree>(explore(*ctx.compiled, opts.explore));
    return ctx;
}

FactId require_fact(const Task &compiled, const std::string &name) {
    FactId f = compiled.find_fact(name);
    if (f < 0)
        throw InputError("unknown fact: " + name);
    return f;
}

int cmd_plan(const CommonOpts &opts, const RunOptions &options,
             const std::string &out_path, const std::string &json_path,
             bool quiet) {
    Task task = load_task(opts.domain, opts.problem);
    RunOutcome outcome = run_problem(task, options);
    const PlanResult &result = outcome.result;

    if (result.status == SearchStatus::Solved && !out_path.empty()) {
        std::ostringstream plan;
        for (const std::string &step : outcome.plan_actions)
            plan << step << "\n";
        write_file(out_path, plan.str());
    }
    if (!json_path.empty()) {
        nlohmann::json j;
        j["status"] = to_string(result.status);
        j["search_time_s"] = result.search_time_s;
        j["explore_time_s"] = outcome.explore_time_s;
        j["expansions"] = result.expansions;
        j["plan_length"] =
            result.status == SearchStatus::Solved ? result.plan_length : -1;
        j["peak_mem_mb"] =
            static_cast<double>(result.peak_memory) / (1024.0 * 1024.0);
        j["seed"] = options.explore.seed;
        j["weight"] = options.weight;
        j["rho"] = options.explore.rho;
        j["tree_nodes"] = outcome.tree_nodes;
        j["tree_capped"] = outcome.tree_capped;
        write_file(json_path, j.dump(2) + "\n");
    }
    if (!quiet) {
        std::cout << "status: " << to_string(result.status) << "\n";
        std::cout << "expansions: " << result.expansions << "\n";
        std::cout << "search time: " << result.search_time_s << " s\n";
        if (outcome.explore_time_s > 0)
            std::cout << "preprocessing time: " << outcome.explore_time_s
                      << " s\n";
        if (outcome.tree_nodes > 0)
            std::cout << "tree nodes: " << outcome.tree_nodes
                      << (outcome.tree_capped ? " (capped)" : "") << "\n";
        if (result.status == SearchStatus::Solved) {
            std::cout << "plan length: " << result.plan_length << "\n";
            for (const std::string &step : outcome.plan_actions)
                std::cout << step << "\n";
        }
    }
    switch (result.status) {
    case SearchStatus::Solved: return kExitSolved;
    case SearchStatus::Unsolvable: return kExitUnsolvable;
    case SearchStatus::OutOfTime:
    case SearchStatus::OutOfMemory: return kExitResourceLimit;
    }
    return kExitInputError;
}

int cmd_oracle(const CommonOpts &opts, const std::string &fact_name,
               int samples, bool exact, bool verbose) {
    TreeContext ctx = build_tree(opts);
    FactId fact = require_fact(*ctx.compiled, fact_name);
    if (exact) {
        BigRational value = enumerate_relevance(*ctx.tree, fact);
        std::cout << "exact: " << value.numerator() << "/"
                  << value.denominator() << " = " << to_double(value) << "\n";
        return kExitSolved;
    }
    Rng rng(opts.explore.seed);
    if (!verbose) {
        double estimate = estimate_relevance(*ctx.tree, fact, samples, rng);
        std::cout << "estimate (" << samples << " samples): " << estimate
                  << "\n";
        return kExitSolved;
    }
    // Verbose mode: one pass of samples, tabulating how often each fact
    // shows up in the sampled subtree.
    std::vector<long long> hits(ctx.compiled->facts.size(), 0);
    for (int i = 0; i < samples; ++i) {
        SampledSubtree sub = sample_subtree(*ctx.tree, rng);
        std::vector<char> seen(ctx.compiled->facts.size(), 0);
        for (NodeId n : sub.nodes) {
            const TreeNode &node = ctx.tree->node(n);
            if (node.kind == NodeKind::Fact && !seen[node.label]) {
                seen[node.label] = 1;
                ++hits[node.label];
            }
        }
    }
    std::cout << "estimate (" << samples << " samples): "
              << static_cast<double>(hits[fact]) / samples << "\n";
    std::cout << "subtree frequency per fact:\n";
    for (FactId f = 0; f < static_cast<FactId>(hits.size()); ++f)
        std::cout << "  " << ctx.compiled->fact_name(f) << " "
                  << static_cast<double>(hits[f]) / samples << "\n";
    return kExitSolved;
}

int cmd_score(const CommonOpts &opts, const std::string &fact_name) {
    TreeContext ctx = build_tree(opts);
    RelevanceTable table = RelevanceTable::build(*ctx.tree);
    if (!fact_name.empty()) {
        FactId fact = require_fact(*ctx.compiled, fact_name);
        const FactLcaEntry &entry = table.entry(fact);
        char buf[64];
        snprintf(buf, sizeof buf, "%.17g", table.xi_global(fact));
        std::cout << "Xi(" << ctx.compiled->fact_name(fact) << ") = " << buf
                  << "\n";
        std::cout << "occurrences: " << entry.occurrences.size() << "\n";
        std::cout << "aLCA nodes:";
        for (NodeId n : entry.alca_nodes())
            std::cout << " " << n;
        std::cout << "\nfLCA nodes:";
        for (NodeId n : entry.flca_nodes())
            std::cout << " " << n;
        std::cout << "\n";
        return kExitSolved;
    }
    table.dump_scores(std::cout);
    return kExitSolved;
}

int cmd_landmarks(const CommonOpts &opts) {
    Task task = load_task(opts.domain, opts.problem);
    Task compiled = add_goal_action(delete_relax(task));
    LandmarkSet lms = extract_landmarks(compiled);
    for (FactId f : lms.landmarks)
        std::cout << compiled.fact_name(f)
                  << (lms.trivial.test(f) ? " (trivial)" : "") << "\n";
    std::cout << lms.landmarks.size() << " landmarks, "
              << lms.nontrivial.count() << " nontrivial\n";
    return kExitSolved;
}

int cmd_merge(const std::string &domain1, const std::string &problem1,
              const std::string &domain2, const std::string &problem2,
              const std::string &out_dir, const std::string &labels) {
    std::string label1 = "p1", label2 = "p2";
    if (!labels.empty()) {
        auto comma = labels.find(',');
        if (comma == std::string::npos)
            throw InputError("--labels expects two comma-separated labels");
        label1 = labels.substr(0, comma);
        label2 = labels.substr(comma + 1);
        if (label1.empty() || label2.empty() || label1 == label2)
            throw InputError("--labels expects two distinct labels");
    }
    DomainAst d1 = parse_domain(read_file(domain1));
    ProblemAst p1 = parse_problem(read_file(problem1));
    DomainAst d2 = parse_domain(read_file(domain2));
    ProblemAst p2 = parse_problem(read_file(problem2));
    MergedSpec merged = merge(d1, p1, d2, p2, label1, label2);

    nlohmann::json manifest = nlohmann::json::parse(merged.manifest_json);
    manifest["sources"] = {{"domain1", domain1},
                           {"problem1", problem1},
                           {"domain2", domain2},
                           {"problem2", problem2}};

    fs::create_directories(out_dir);
    fs::path dir(out_dir);
    write_file((dir / "merged-domain.pddl").string(),
               write_domain(merged.domain));
    write_file((dir / "merged-problem.pddl").string(),
               write_problem(merged.problem));
    write_file((dir / "manifest.json").string(), manifest.dump(2) + "\n");
    std::cout << "wrote merged task to " << out_dir << "\n";
    return kExitSolved;
}

int cmd_gen_suite(const std::string &pool_dir, const std::string &out_dir,
                  int count, uint64_t seed) {
    std::vector<SuiteEntry> pool = discover_suite(pool_dir);
    if (pool.size() < 2)
        throw InputError("pool needs at least two problems");
    Rng rng(seed);
    fs::create_directories(out_dir);
    nlohmann::json pairing = nlohmann::json::array();
    for (int i = 0; i < count; ++i) {
        // Random pair of distinct pool entries per merged problem.
        size_t a = rng.below(pool.size());
        size_t b = rng.below(pool.size() - 1);
        if (b >= a)
            ++b;
        DomainAst d1 = parse_domain(read_file(pool[a].domain_path));
        ProblemAst p1 = parse_problem(read_file(pool[a].problem_path));
        DomainAst d2 = parse_domain(read_file(pool[b].domain_path));
        ProblemAst p2 = parse_problem(read_file(pool[b].problem_path));
        MergedSpec merged = merge(d1, p1, d2, p2, "p1", "p2", seed);
        char name[64];
        snprintf(name, sizeof name, "merged%02d", i);
        fs::path dir(out_dir);
        write_file((dir / (std::string(name) + "-domain.pddl")).string(),
                   write_domain(merged.domain));
        write_file((dir / (std::string(name) + "-problem.pddl")).string(),
                   write_problem(merged.problem));
        pairing.push_back({{"name", name},
                           {"source1", pool[a].name},
                           {"source2", pool[b].name}});
    }
    nlohmann::json manifest;
    manifest["seed"] = seed;
    manifest["pool"] = pool_dir;
    manifest["pairs"] = pairing;
    write_file((fs::path(out_dir) / "manifest.json").string(),
               manifest.dump(2) + "\n");
    std::cout << "wrote " << count << " merged problems to " << out_dir
              << "\n";
    return kExitSolved;
}

int cmd_bench(const std::string &suite_dir, BenchConfig &config,
              bool in_process, const std::string &self_exe) {
    if (!in_process && config.worker_exe.empty())
        config.worker_exe = self_exe;
    std::vector<RunRecord> records = run_suite(suite_dir, config);
    std::cout << records.size() << " records";
    if (!config.out_csv.empty())
        std::cout << " in " << config.out_csv;
    std::cout << "\n";
    if (config.heuristics.size() == 2) {
        ComparisonReport report =
            compare(records, config.heuristics[0], config.heuristics[1]);
        std::cout << "\n" << report.to_markdown();
    }
    return kExitSolved;
}

int cmd_report(const std::string &csv_path, const std::string &s1,
               const std::string &s2, bool as_csv) {
    std::vector<RunRecord> records = read_csv(csv_path);
    if (records.empty())
        throw InputError("no records in " + csv_path);
    ComparisonReport report = compare(records, s1, s2);
    std::cout << (as_csv ? report.to_csv() : report.to_markdown());
    return kExitSolved;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"relplan: relevance-score planning toolkit"};
    app.require_subcommand(1);

    // plan
    auto *plan = app.add_subcommand("plan", "solve one problem");
    CommonOpts plan_opts;
    RunOptions run_options;
    std::string plan_out, json_result, dump_tree, dump_scores;
    bool quiet = false;
    double time_limit_s = run_options.limits.time_limit_s;
    long long mem_limit_mb =
        static_cast<long long>(run_options.limits.mem_limit_bytes >> 20);
    add_task_options(plan, plan_opts);
    plan->add_option("--heuristic", run_options.heuristic,
                     "relevance | lmcount | blind");
    plan->add_option("--weight", run_options.weight, "A* weight (default 10)");
    plan->add_option("--time-limit", time_limit_s, "search time limit, s");
    plan->add_option("--mem-limit", mem_limit_mb, "search memory limit, MB");
    add_explore_options(plan, run_options.explore);
    plan->add_option("--out", plan_out, "plan file, one action per line");
    plan->add_option("--json-result", json_result,
                     "write machine-readable result JSON");
    plan->add_option("--dump-tree", dump_tree, "dump explored tree");
    plan->add_option("--dump-scores", dump_scores, "dump Xi table");
    plan->add_flag("--quiet", quiet, "suppress human-readable output");

    // oracle
    auto *oracle = app.add_subcommand("oracle", "estimate or enumerate Xi");
    CommonOpts oracle_opts;
    std::string oracle_fact;
    int oracle_samples = 10000;
    bool oracle_exact = false, oracle_verbose = false;
    add_task_options(oracle, oracle_opts);
    add_explore_options(oracle, oracle_opts.explore);
    oracle->add_option("--fact", oracle_fact, "fact to score")->required();
    oracle->add_option("--samples", oracle_samples, "Monte-Carlo samples");
    oracle->add_flag("--exact", oracle_exact,
                     "exhaustive rational enumeration (tiny trees only)");
    oracle->add_flag("--verbose", oracle_verbose,
                     "print the per-fact subtree-frequency table");

    // score
    auto *score = app.add_subcommand("score", "print Xi and decomposition");
    CommonOpts score_opts;
    std::string score_fact;
    add_task_options(score, score_opts);
    add_explore_options(score, score_opts.explore);
    score->add_option("--fact", score_fact,
                      "single fact to audit (default: full table)");

    // landmarks
    auto *landmarks = app.add_subcommand("landmarks", "print fact landmarks");
    CommonOpts lm_opts;
    add_task_options(landmarks, lm_opts);

    // merge
    auto *merge_cmd =
        app.add_subcommand("merge", "merge two tasks into a landmark-free one");
    std::string m_domain1, m_problem1, m_domain2, m_problem2, m_out_dir;
    std::string m_labels;
    merge_cmd->add_option("--domain1", m_domain1)->required();
    merge_cmd->add_option("--problem1", m_problem1)->required();
    merge_cmd->add_option("--domain2", m_domain2)->required();
    merge_cmd->add_option("--problem2", m_problem2)->required();
    merge_cmd->add_option("--out-dir", m_out_dir)->required();
    merge_cmd->add_option("--labels", m_labels, "two labels, e.g. p1,p2");

    // gen-suite
    auto *gen =
        app.add_subcommand("gen-suite", "generate a merged problem suite");
    std::string g_pool, g_out;
    int g_count = 20;
    uint64_t g_seed = 0;
    gen->add_option("--pool", g_pool, "directory of source problems")
        ->required();
    gen->add_option("--out-dir", g_out)->required();
    gen->add_option("--count", g_count, "number of merged problems");
    gen->add_option("--seed", g_seed, "pairing RNG seed");

    // bench
    auto *bench = app.add_subcommand("bench", "run a suite comparison");
    std::string b_suite, b_heuristics = "relevance,lmcount";
    BenchConfig bench_config;
    bool b_in_process = false;
    double b_time_limit = bench_config.limits.time_limit_s;
    long long b_mem_limit_mb =
        static_cast<long long>(bench_config.limits.mem_limit_bytes >> 20);
    bench->add_option("--suite", b_suite, "suite directory")->required();
    bench->add_option("--heuristics", b_heuristics,
                      "comma-separated heuristic list");
    bench->add_option("--jobs", bench_config.jobs, "parallel workers");
    bench->add_option("--weight", bench_config.weight, "A* weight");
    bench->add_option("--time-limit", b_time_limit, "per-run time limit, s");
    bench->add_option("--mem-limit", b_mem_limit_mb,
                      "per-run memory limit, MB");
    add_explore_options(bench, bench_config.explore);
    bench->add_option("--out", bench_config.out_csv,
                      "append-only results CSV (enables resuming)");
    bench->add_flag("--in-process", b_in_process,
                    "run workers in-process instead of isolated processes");

    // report
    auto *report = app.add_subcommand("report", "compare heuristics from CSV");
    std::string r_csv, r_s1 = "relevance", r_s2 = "lmcount";
    bool r_as_csv = false;
    report->add_option("--in", r_csv, "results CSV")->required();
    report->add_option("--s1", r_s1, "numerator heuristic");
    report->add_option("--s2", r_s2, "denominator heuristic");
    report->add_flag("--csv", r_as_csv, "emit CSV instead of markdown");

    CLI11_PARSE(app, argc, argv);

    try {
        if (plan->parsed()) {
            run_options.limits.time_limit_s = time_limit_s;
            run_options.limits.mem_limit_bytes =
                static_cast<size_t>(mem_limit_mb) << 20;
            run_options.dump_tree_path = dump_tree;
            run_options.dump_scores_path = dump_scores;
            return cmd_plan(plan_opts, run_options, plan_out, json_result,
                            quiet);
        }
        if (oracle->parsed())
            return cmd_oracle(oracle_opts, oracle_fact, oracle_samples,
                              oracle_exact, oracle_verbose);
        if (score->parsed())
            return cmd_score(score_opts, score_fact);
        if (landmarks->parsed())
            return cmd_landmarks(lm_opts);
        if (merge_cmd->parsed())
            return cmd_merge(m_domain1, m_problem1, m_domain2, m_problem2,
                             m_out_dir, m_labels);
        if (gen->parsed())
            return cmd_gen_suite(g_pool, g_out, g_count, g_seed);
        if (bench->parsed()) {
            bench_config.limits.time_limit_s = b_time_limit;
            bench_config.limits.mem_limit_bytes =
                static_cast<size_t>(b_mem_limit_mb) << 20;
            bench_config.heuristics.clear();
            std::stringstream ss(b_heuristics);
            std::string h;
            while (std::getline(ss, h, ','))
                if (!h.empty())
                    bench_config.heuristics.push_back(h);
            return cmd_bench(b_suite, bench_config, b_in_process,
                             fs::canonical("/proc/self/exe").string());
        }
        if (report->parsed())
            return cmd_report(r_csv, r_s1, r_s2, r_as_csv);
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
