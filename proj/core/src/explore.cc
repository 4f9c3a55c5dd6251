#include "relplan/explore.h"

#include <stdexcept>

namespace relplan {

double sumxi(const PartialTree &tree, std::span<const NodeId> node_set) {
    double sum = 0.0;
    for (NodeId id : node_set)
        sum += tree.node(id).xi;
    return sum;
}

NodeId choose(const PartialTree &tree, std::span<const NodeId> options,
              Rng &rng) {
    if (options.empty())
        throw std::logic_error("choose called with no options");
    double total = sumxi(tree, options);
    double ticket = rng.uniform() * total;
    double acc = 0.0;
    for (NodeId id : options) {
        acc += tree.node(id).xi;
        if (ticket < acc)
            return id;
    }
    return options.back(); // ticket landed on accumulated rounding slack
}

PartialTree explore(const Task &task, const ExploreConfig &config,
                    const std::function<void(const PartialTree &)> &on_dive) {
    PartialTree tree(task);
    Rng rng(config.seed);
    while (!tree.fully_explored()) {
        if (tree.num_nodes() >= config.max_nodes) {
            tree.capped = true;
            break;
        }
        if (tree.num_nodes() >= config.min_nodes &&
            tree.frontier_xi_sum() <= config.rho * tree.total_xi_sum())
            break;
        NodeId n = choose(tree, tree.frontier(), rng);
        for (;;) {
            std::span<const NodeId> kids = tree.enumerate_children(n);
            if (kids.empty())
                break;
            n = choose(tree, kids, rng);
        }
        if (on_dive)
            on_dive(tree);
    }
    return tree;
}

} // namespace relplan
