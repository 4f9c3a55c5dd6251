#include "relplan/search.h"

#include "relplan/explore.h"
#include "relplan/runner.h"

#include "../support/test_util.h"
#include "doctest.h"

using namespace relplan;
using namespace relplan::testing;

TEST_CASE("blind weight-1 search is optimal (BFS oracle)") {
    Rng rng(51);
    RandomTaskConfig config;
    config.num_facts = 7;
    config.num_actions = 9;
    int solved = 0;
    for (int i = 0; i < 40; ++i) {
        Task task = random_task(config, rng);
        BlindHeuristic blind;
        PlanResult result = weighted_astar(task, blind, 1);
        std::optional<int> oracle = bfs_plan_length(task);
        if (oracle) {
            REQUIRE(result.status == SearchStatus::Solved);
            CHECK(result.plan_length == *oracle);
            CHECK(validate_plan(task, result.plan));
            ++solved;
        } else {
            CHECK(result.status == SearchStatus::Unsolvable);
        }
    }
    CHECK(solved > 5);
}

TEST_CASE("heuristic searches return valid plans on the data tasks") {
    for (const char *heuristic : {"relevance", "lmcount", "blind"}) {
        Task task = load_data_task("suites/standard/dchain04-domain.pddl",
                                   "suites/standard/dchain04-problem.pddl");
        RunOptions options;
        options.heuristic = heuristic;
        options.explore.min_nodes = 500;
        options.explore.max_nodes = 50000;
        RunOutcome outcome = run_problem(task, options);
        REQUIRE(outcome.result.status == SearchStatus::Solved);
        CHECK(validate_plan(task, outcome.result.plan));
        CHECK(outcome.result.plan_length ==
              static_cast<int>(outcome.result.plan.size()));
    }
}

TEST_CASE("plans never contain the synthetic goal action") {
    Task task = load_data_task("fig1-domain.pddl", "fig1-problem.pddl");
    RunOptions options;
    options.heuristic = "relevance";
    options.explore.min_nodes = 10;
    options.explore.max_nodes = 1000;
    RunOutcome outcome = run_problem(task, options);
    REQUIRE(outcome.result.status == SearchStatus::Solved);
    for (const std::string &step : outcome.plan_actions)
        CHECK(step.find("achievegoal") == std::string::npos);
}

TEST_CASE("search is deterministic") {
    Task task = load_data_task("suites/merged/merged03-domain.pddl",
                               "suites/merged/merged03-problem.pddl");
    RunOptions options;
    options.explore.min_nodes = 500;
    options.explore.max_nodes = 50000;
    RunOutcome a = run_problem(task, options);
    RunOutcome b = run_problem(task, options);
    CHECK(a.result.expansions == b.result.expansions);
    CHECK(a.plan_actions == b.plan_actions);
}

TEST_CASE("resource limits produce the matching statuses") {
    Task task = load_data_task("suites/standard/dchain09-domain.pddl",
                               "suites/standard/dchain09-problem.pddl");
    BlindHeuristic blind;

    SearchLimits tiny_mem;
    tiny_mem.mem_limit_bytes = 1;
    CHECK(weighted_astar(task, blind, 1, tiny_mem).status ==
          SearchStatus::OutOfMemory);

    SearchLimits tiny_time;
    tiny_time.time_limit_s = 0.0;
    CHECK(weighted_astar(task, blind, 1, tiny_time).status ==
          SearchStatus::OutOfTime);
}

TEST_CASE("validate_plan rejects bad plans") {
    Task task = load_data_task("pool/chain05-domain.pddl",
                               "pool/chain05-problem.pddl");
    // step2 before step1 is inapplicable; the empty plan misses the goal.
    CHECK_FALSE(validate_plan(task, {1, 0, 2, 3}));
    CHECK_FALSE(validate_plan(task, {}));
    CHECK(validate_plan(task, {0, 1, 2, 3}));
}
