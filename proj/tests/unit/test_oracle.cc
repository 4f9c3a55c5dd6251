#include "relplan/oracle.h"

#include "relplan/errors.h"
#include "relplan/explore.h"
#include "relplan/relevance.h"

#include "../support/test_util.h"
#include "doctest.h"

#include <cmath>

using namespace relplan;
using namespace relplan::testing;

namespace {

PartialTree full_tree(const Task &compiled, int cap = 500000) {
    ExploreConfig config;
    config.min_nodes = 1;
    config.max_nodes = cap;
    config.rho = 0.0;
    return explore(compiled, config);
}

} // namespace

TEST_CASE("sampled subtrees are structurally valid") {
    Task compiled = add_goal_action(
        delete_relax(load_data_task("alca-domain.pddl", "alca-problem.pddl")));
    PartialTree tree = full_tree(compiled);
    Rng rng(41);
    for (int i = 0; i < 500; ++i) {
        SampledSubtree sub = sample_subtree(tree, rng);
        REQUIRE(!sub.nodes.empty());
        CHECK(sub.nodes[0] == tree.root());
        for (NodeId n : sub.nodes) {
            REQUIRE(sub.contains[n]);
            const TreeNode &node = tree.node(n);
            if (node.kind == NodeKind::Action) {
                // Action nodes keep all their children.
                for (NodeId c : tree.children(n))
                    CHECK(sub.contains[c]);
            } else if (node.num_children > 0) {
                int picked = 0;
                for (NodeId c : tree.children(n))
                    picked += sub.contains[c] ? 1 : 0;
                CHECK(picked == 1);
            }
        }
    }
}

TEST_CASE("fig1 exact enumeration is 2/3") {
    Task compiled = add_goal_action(
        delete_relax(load_data_task("fig1-domain.pddl", "fig1-problem.pddl")));
    PartialTree tree = full_tree(compiled);
    BigRational x = enumerate_relevance(tree, compiled.find_fact("p2"));
    CHECK(x == BigRational(2, 3));
    CHECK(to_double(x) == doctest::Approx(2.0 / 3).epsilon(1e-15));
    CHECK(enumerate_relevance(tree, compiled.find_fact("p1")) ==
          BigRational(1));
    CHECK(enumerate_relevance(tree, compiled.success_fact) == BigRational(0));
}

TEST_CASE("alca exact enumeration is 3/4") {
    Task compiled = add_goal_action(
        delete_relax(load_data_task("alca-domain.pddl", "alca-problem.pddl")));
    PartialTree tree = full_tree(compiled);
    CHECK(enumerate_relevance(tree, compiled.find_fact("w")) ==
          BigRational(3, 4));
}

TEST_CASE("enumeration agrees with the production scores") {
    Rng rng(42);
    RandomTaskConfig config;
    config.num_facts = 6;
    config.num_actions = 8;
    int checked = 0;
    for (int i = 0; i < 40; ++i) {
        Task task = random_task(config, rng);
        Task compiled = add_goal_action(delete_relax(task));
        PartialTree tree = full_tree(compiled, 4000);
        if (!tree.fully_explored() || count_choice_points(tree) > 20)
            continue;
        RelevanceTable table = RelevanceTable::build(tree);
        for (FactId f = 0; f < compiled.num_facts(); ++f) {
            double exact = to_double(enumerate_relevance(tree, f));
            CHECK(std::abs(table.xi_global(f) - exact) < 1e-9);
            ++checked;
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("monte carlo estimate converges to the exact value") {
    Task compiled = add_goal_action(
        delete_relax(load_data_task("fig1-domain.pddl", "fig1-problem.pddl")));
    PartialTree tree = full_tree(compiled);
    Rng rng(43);
    double est =
        estimate_relevance(tree, compiled.find_fact("p2"), 100000, rng);
    CHECK(std::abs(est - 2.0 / 3) < 0.01);
}

TEST_CASE("enumeration guard rejects oversized trees") {
    Task compiled = add_goal_action(delete_relax(
        load_data_task("suites/standard/dchain09-domain.pddl",
                       "suites/standard/dchain09-problem.pddl")));
    PartialTree tree = full_tree(compiled);
    EnumerateGuard guard;
    guard.max_choice_points = 2;
    CHECK_THROWS_AS(
        enumerate_relevance(tree, compiled.find_fact("c1"), guard),
        InputError);
}

TEST_CASE("enumeration requires a fully explored tree") {
    Task compiled = add_goal_action(delete_relax(
        load_data_task("suites/standard/dchain09-domain.pddl",
                       "suites/standard/dchain09-problem.pddl")));
    ExploreConfig config;
    config.min_nodes = 5;
    config.max_nodes = 20;
    PartialTree tree = explore(compiled, config);
    REQUIRE_FALSE(tree.fully_explored());
    CHECK_THROWS(enumerate_relevance(tree, compiled.find_fact("c1")));
}
