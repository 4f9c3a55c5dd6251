#ifndef RELPLAN_TESTS_TEST_UTIL_H
#define RELPLAN_TESTS_TEST_UTIL_H

#include "relplan/relevance.h"
#include "relplan/rng.h"
#include "relplan/task.h"
#include "relplan/tree.h"

#include <optional>
#include <string>
#include <vector>

namespace relplan::testing {

// Absolute path of a file under the shipped data/ directory.
std::string data_path(const std::string &rel);

// Parse + ground a data/ domain/problem pair.
Task load_data_task(const std::string &domain_rel,
                    const std::string &problem_rel);

struct RandomTaskConfig {
    int num_facts = 6;       // propositional facts f0..f(n-1)
    int num_actions = 8;     // one random positive effect each
    int max_pre = 2;         // preconditions drawn uniformly in [0, max_pre]
    int init_facts = 1;      // facts set in I
    bool solvable_only = false;
};

// Random STRIPS task over 0-ary predicates with a single random goal fact.
// Deliberately unconstrained: cycles, dead ends and unreachable facts all
// occur, which is what the oracle-equivalence tests want.
Task random_task(const RandomTaskConfig &config, Rng &rng);

// Breadth-first optimal plan length on the original task; nullopt when
// unsolvable. Only usable on tiny state spaces.
std::optional<int> bfs_plan_length(const Task &task);

// Number of fact nodes with >= 2 children (the agent's choice points).
int count_choice_points(const PartialTree &tree);

// O(n^2) reference classification of L(l): for each occurrence, walk root
// paths of every pair to find divergence nodes; an occurrence belongs to
// the aLCA partition iff some pairwise divergence node above it is an
// action node.
struct NaiveLcaResult {
    std::vector<NodeId> alca_nodes; // sorted, unique
    std::vector<NodeId> flca_nodes; // sorted
};
NaiveLcaResult naive_lca(const PartialTree &tree, FactId fact);

} // namespace relplan::testing

#endif
