#include "relplan/tree.h"

#include "relplan/explore.h"

#include "../support/test_util.h"
#include "doctest.h"

#include <cmath>
#include <set>
#include <sstream>

using namespace relplan;
using namespace relplan::testing;

namespace {

PartialTree full_tree(const Task &compiled) {
    ExploreConfig config;
    config.min_nodes = 1;
    config.max_nodes = 200000;
    config.rho = 0.0; // exhaust
    return explore(compiled, config);
}

void check_structure(const PartialTree &tree) {
    for (NodeId id = 0; id < tree.num_nodes(); ++id) {
        const TreeNode &node = tree.node(id);
        if (id == 0) {
            CHECK(node.kind == NodeKind::Action);
            CHECK(node.parent == -1);
            CHECK(node.xi == 1.0);
        } else {
            CHECK(node.parent < id); // parents precede children
        }
        if (!node.enumerated)
            continue;
        auto children = tree.children(id);
        CHECK(static_cast<int>(children.size()) == node.num_children);
        double child_sum = 0.0;
        for (NodeId c : children) {
            // Alternation: fact children of actions and vice versa.
            CHECK(tree.node(c).kind != node.kind);
            CHECK(tree.node(c).parent == id);
            CHECK(tree.node(c).depth == node.depth + 1);
            child_sum += tree.node(c).xi;
        }
        if (node.num_children == 0)
            continue;
        if (node.kind == NodeKind::Fact) {
            // Choice split: children share the parent's mass uniformly.
            CHECK(child_sum == doctest::Approx(node.xi).epsilon(1e-12));
            for (NodeId c : children)
                CHECK(tree.node(c).xi ==
                      doctest::Approx(node.xi / node.num_children));
        } else {
            for (NodeId c : children)
                CHECK(tree.node(c).xi == node.xi);
        }
    }
}

} // namespace

TEST_CASE("tree requires a relaxed goal-compiled task") {
    Rng rng(21);
    Task task = random_task(RandomTaskConfig{}, rng);
    CHECK_THROWS(PartialTree{task});
}

TEST_CASE("fig1 tree structure and xi accounting") {
    Task compiled = add_goal_action(
        delete_relax(load_data_task("fig1-domain.pddl", "fig1-problem.pddl")));
    PartialTree tree = full_tree(compiled);
    REQUIRE(tree.fully_explored());
    CHECK_FALSE(tree.capped);
    check_structure(tree);
    CHECK(tree.node(0).label == compiled.goal_action_id);

    // Root achieves goal {g}; g has achievers a1, a2, a3 with xi 1/3 each.
    auto root_children = tree.children(0);
    REQUIRE(root_children.size() == 1);
    NodeId g = root_children[0];
    CHECK(tree.node(g).kind == NodeKind::Fact);
    REQUIRE(tree.node(g).num_children == 3);
    for (NodeId a : tree.children(g))
        CHECK(tree.node(a).xi == doctest::Approx(1.0 / 3));
}

TEST_CASE("cycle exclusion keeps fact labels unique on every path") {
    Rng rng(22);
    for (int i = 0; i < 30; ++i) {
        Task task = random_task(RandomTaskConfig{}, rng);
        Task compiled = add_goal_action(delete_relax(task));
        ExploreConfig config;
        config.min_nodes = 1;
        config.max_nodes = 3000;
        config.rho = 0.0;
        PartialTree tree = explore(compiled, config);
        check_structure(tree);
        for (NodeId id = 0; id < tree.num_nodes(); ++id) {
            std::set<int32_t> labels;
            for (NodeId n : tree.path(id))
                if (tree.node(n).kind == NodeKind::Fact)
                    CHECK(labels.insert(tree.node(n).label).second);
        }
    }
}

TEST_CASE("running xi sums match recomputation") {
    Task compiled = add_goal_action(delete_relax(
        load_data_task("suites/standard/dchain00-domain.pddl",
                       "suites/standard/dchain00-problem.pddl")));
    PartialTree tree = full_tree(compiled);
    double total = 0.0, frontier = 0.0;
    for (NodeId id = 0; id < tree.num_nodes(); ++id) {
        total += tree.node(id).xi;
        if (tree.in_frontier(id))
            frontier += tree.node(id).xi;
    }
    CHECK(tree.total_xi_sum() == doctest::Approx(total).epsilon(1e-9));
    CHECK(tree.frontier_xi_sum() ==
          doctest::Approx(frontier).epsilon(1e-9));
}

TEST_CASE("dump is deterministic") {
    Task compiled = add_goal_action(
        delete_relax(load_data_task("fig1-domain.pddl", "fig1-problem.pddl")));
    PartialTree t1 = full_tree(compiled);
    PartialTree t2 = full_tree(compiled);
    std::ostringstream a, b;
    t1.dump(a);
    t2.dump(b);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("root") != std::string::npos);
}
