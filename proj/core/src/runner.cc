#include "relplan/runner.h"

#include "relplan/errors.h"
#include "relplan/grounding.h"
#include "relplan/pddl.h"

#include <chrono>
#include <fstream>
#include <sstream>

namespace relplan {

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

Task load_task(const std::string &domain_path,
               const std::string &problem_path) {
    DomainAst domain = parse_domain(read_file(domain_path));
    ProblemAst problem = parse_problem(read_file(problem_path));
    return ground(domain, problem);
}

RunOutcome run_problem(const Task &task, const RunOptions &options) {
    using Clock = std::chrono::steady_clock;
    RunOutcome out;

    std::unique_ptr<Heuristic> heuristic;
    // Built per problem and reused for every state evaluation.
    std::unique_ptr<Task> compiled;
    std::unique_ptr<PartialTree> tree;
    std::unique_ptr<RelevanceTable> table;
    std::unique_ptr<LandmarkCounter> counter;

    if (options.heuristic == "blind") {
        heuristic = std::make_unique<BlindHeuristic>();
    } else if (options.heuristic == "relevance") {
        auto start = Clock::now();
        compiled = std::make_unique<Task>(add_goal_action(delete_relax(task)));
        tree = std::make_unique<PartialTree>(
            explore(*compiled, options.explore));
        table = std::make_unique<RelevanceTable>(RelevanceTable::build(*tree));
        out.explore_time_s =
            std::chrono::duration<double>(Clock::now() - start).count();
        out.tree_nodes = tree->num_nodes();
        out.tree_capped = tree->capped;
        if (!options.dump_tree_path.empty()) {
            std::ofstream dump(options.dump_tree_path);
            tree->dump(dump);
        }
        if (!options.dump_scores_path.empty()) {
            std::ofstream dump(options.dump_scores_path);
            table->dump_scores(dump);
        }
        heuristic = std::make_unique<RelevanceHeuristic>(*table);
    } else if (options.heuristic == "lmcount") {
        auto start = Clock::now();
        compiled = std::make_unique<Task>(add_goal_action(delete_relax(task)));
        counter = std::make_unique<LandmarkCounter>(
            *compiled, extract_landmarks(*compiled));
        out.explore_time_s =
            std::chrono::duration<double>(Clock::now() - start).count();
        heuristic = std::make_unique<LandmarkCountHeuristic>(*counter);
    } else {
        throw InputError("unknown heuristic " + options.heuristic);
    }

    out.result = weighted_astar(task, *heuristic, options.weight,
                                options.limits);
    out.result.seed = options.explore.seed;
    for (ActionId a : out.result.plan)
        out.plan_actions.push_back(task.action_name(a));
    return out;
}

} // namespace relplan
