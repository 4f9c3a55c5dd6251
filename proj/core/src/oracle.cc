#include "relplan/oracle.h"

#include "relplan/errors.h"

#include <stdexcept>

namespace relplan {

bool SampledSubtree::contains_fact(const PartialTree &tree, FactId fact) const {
    for (NodeId id : nodes) {
        const TreeNode &n = tree.node(id);
        if (n.kind == NodeKind::Fact && n.label == fact)
            return true;
    }
    return false;
}

SampledSubtree sample_subtree(const PartialTree &tree, Rng &rng) {
    if (!tree.fully_explored())
        throw std::logic_error("sample_subtree requires a fully explored tree");
    SampledSubtree out;
    out.contains.assign(tree.num_nodes(), 0);
    std::vector<NodeId> stack{tree.root()};
    out.nodes.push_back(tree.root());
    out.contains[tree.root()] = 1;
    while (!stack.empty()) {
        NodeId id = stack.back();
        stack.pop_back();
        std::span<const NodeId> kids = tree.children(id);
        const TreeNode &n = tree.node(id);
        auto take = [&](NodeId c) {
            stack.push_back(c);
            out.nodes.push_back(c);
            out.contains[c] = 1;
        };
        if (n.kind == NodeKind::Fact) {
            if (!kids.empty())
                take(kids[rng.below(kids.size())]);
        } else {
            for (NodeId c : kids)
                take(c);
        }
    }
    return out;
}

double estimate_relevance(const PartialTree &tree, FactId fact, int n_samples,
                          Rng &rng) {
    int hits = 0;
    for (int i = 0; i < n_samples; ++i)
        if (sample_subtree(tree, rng).contains_fact(tree, fact))
            ++hits;
    return static_cast<double>(hits) / n_samples;
}

namespace {

struct Enumerator {
    const PartialTree &tree;
    FactId fact;
    long long outcomes_left;

    // Probability that a node labeled `fact` turns up once every node on the
    // pending stack is processed. Branches jointly at each fact-node choice,
    // so shared labels across branches are handled by construction.
    BigRational walk(std::vector<NodeId> &pending) {
        while (!pending.empty()) {
            NodeId id = pending.back();
            pending.pop_back();
            const TreeNode &n = tree.node(id);
            if (n.kind == NodeKind::Fact && n.label == fact)
                return BigRational(1);
            std::span<const NodeId> kids = tree.children(id);
            if (n.kind == NodeKind::Action) {
                for (NodeId c : kids)
                    pending.push_back(c);
                continue;
            }
            if (kids.empty())
                continue; // dead leaf or fact true in I; walk continues
            if (kids.size() == 1) {
                pending.push_back(kids[0]);
                continue;
            }
            BigRational sum(0);
            BigRational share(1, boost::multiprecision::cpp_int(kids.size()));
            for (NodeId c : kids) {
                std::vector<NodeId> branch = pending;
                branch.push_back(c);
                sum += share * walk(branch);
            }
            return sum;
        }
        if (--outcomes_left < 0)
            throw InputError("exact enumeration exceeds the outcome guard; "
                             "use the Monte-Carlo estimate instead");
        return BigRational(0);
    }
};

} // namespace

BigRational enumerate_relevance(const PartialTree &tree, FactId fact,
                                const EnumerateGuard &guard) {
    if (!tree.fully_explored())
        throw std::logic_error(
            "enumerate_relevance requires a fully explored tree");
    int choice_points = 0;
    for (NodeId id = 0; id < tree.num_nodes(); ++id) {
        const TreeNode &n = tree.node(id);
        if (n.kind == NodeKind::Fact && n.num_children >= 2)
            ++choice_points;
    }
    if (choice_points > guard.max_choice_points)
        throw InputError(
            "tree has " + std::to_string(choice_points) +
            " choice points, more than the exact-enumeration guard of " +
            std::to_string(guard.max_choice_points) +
            "; use the Monte-Carlo estimate instead");
    Enumerator e{tree, fact, guard.max_outcomes};
    std::vector<NodeId> pending{tree.root()};
    return e.walk(pending);
}

double to_double(const BigRational &r) {
    using boost::multiprecision::cpp_rational;
    cpp_rational q(r.numerator(), r.denominator());
    return static_cast<double>(q);
}

} // namespace relplan
