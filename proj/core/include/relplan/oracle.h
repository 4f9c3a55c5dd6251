#ifndef RELPLAN_ORACLE_H
#define RELPLAN_ORACLE_H

#include "relplan/rng.h"
#include "relplan/task.h"
#include "relplan/tree.h"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <vector>

namespace relplan {

using BigRational = boost::rational<boost::multiprecision::cpp_int>;

// Subtree drawn by the non-deterministic agent: the root, all children of
// every included action node, and exactly one uniformly chosen child of
// every included non-leaf fact node. Dead leaves are kept; the sample is
// never discarded.
struct SampledSubtree {
    std::vector<NodeId> nodes; // in visit order, starts at the root
    std::vector<char> contains; // per arena node

    bool contains_fact(const PartialTree &tree, FactId fact) const;
};

SampledSubtree sample_subtree(const PartialTree &tree, Rng &rng);

// Fraction of n_samples whose subtree contains a node labeled fact.
double estimate_relevance(const PartialTree &tree, FactId fact, int n_samples,
                          Rng &rng);

struct EnumerateGuard {
    int max_choice_points = 20;    // fact nodes with >= 2 children
    long long max_outcomes = 2'000'000;
};

// Exact Xi(l) by exhaustive recursion over every joint combination of the
// agent's choices, in rational arithmetic and with no LCA shortcut. This is
// the module the production path is certified against; only usable on tiny
// trees (guard enforced).
BigRational enumerate_relevance(const PartialTree &tree, FactId fact,
                                const EnumerateGuard &guard = {});

double to_double(const BigRational &r);

} // namespace relplan

#endif
