#ifndef RELPLAN_EXPLORE_H
#define RELPLAN_EXPLORE_H

#include "relplan/rng.h"
#include "relplan/task.h"
#include "relplan/tree.h"

#include <functional>
#include <span>

namespace relplan {

struct ExploreConfig {
    double rho = 0.2;       // frontier-mass / tree-mass stop threshold
    int min_nodes = 100000; // keep exploring below this regardless of rho
    int max_nodes = 2'000'000; // hard safety cap
    uint64_t seed = 0;
};

double sumxi(const PartialTree &tree, std::span<const NodeId> node_set);

// Draws one node with probability proportional to xi. Throws on empty input.
NodeId choose(const PartialTree &tree, std::span<const NodeId> options,
              Rng &rng);

// Back-jumping depth-first sampling of the backtracking tree: repeatedly
// pick a frontier node by xi-weighted choice, then dive, enumerating all
// children at each level but descending into only one, until a childless
// node is hit. Stops once the arena holds min_nodes and the frontier's xi
// mass has fallen to rho times the tree's, or the tree is exhausted, or
// max_nodes is reached (flagged on the tree as capped).
PartialTree explore(const Task &task, const ExploreConfig &config,
                    const std::function<void(const PartialTree &)> &on_dive = {});

} // namespace relplan

#endif
