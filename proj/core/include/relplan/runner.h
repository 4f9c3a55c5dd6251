#ifndef RELPLAN_RUNNER_H
#define RELPLAN_RUNNER_H

#include "relplan/explore.h"
#include "relplan/search.h"

#include <string>

namespace relplan {

// One end-to-end solve: parse + ground, then (for the tree-based
// heuristics) relax, goal-compile and explore, then search the original
// task. Shared between the plan CLI and the in-process bench worker.
struct RunOptions {
    std::string heuristic = "relevance"; // relevance | lmcount | blind
    int weight = 10;
    SearchLimits limits;
    ExploreConfig explore;
    // Diagnostic dumps written after exploration (relevance only); byte
    // identical across runs with the same inputs and seed.
    std::string dump_tree_path;
    std::string dump_scores_path;
};

struct RunOutcome {
    PlanResult result;
    double explore_time_s = 0.0;
    std::vector<std::string> plan_actions; // "(name arg ...)" per step
    int tree_nodes = 0;
    bool tree_capped = false;
};

Task load_task(const std::string &domain_path, const std::string &problem_path);

RunOutcome run_problem(const Task &task, const RunOptions &options);

} // namespace relplan

#endif
