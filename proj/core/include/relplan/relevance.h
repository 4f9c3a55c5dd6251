#ifndef RELPLAN_RELEVANCE_H
#define RELPLAN_RELEVANCE_H

#include "relplan/task.h"
#include "relplan/tree.h"

#include <iosfwd>
#include <string>
#include <vector>

namespace relplan {

// Per-fact LCA structure over the explored tree: the occurrences L(l)
// sorted by their root paths, plus the compressed "divergence tree" whose
// leaves are the occurrences and whose internal nodes are the pairwise
// LCAs found by scanning adjacent sorted paths. Action-kind internal nodes
// are the aLCAs; occurrences with no aLCA above them form the fLCA sum.
struct FactLcaEntry {
    struct VNode {
        NodeId arena_node = -1;
        int parent = -1; // index into vnodes, -1 for the top
        bool leaf = false;
        bool action_kind = false; // internal nodes: divergence at an action
        std::vector<int> children;
    };
    std::vector<NodeId> occurrences; // L(l), path-sorted
    std::vector<VNode> vnodes;
    int vroot = -1; // index of the topmost vnode, -1 when L(l) is empty

    std::vector<NodeId> alca_nodes() const; // action LCAs, any nesting level
    std::vector<NodeId> flca_nodes() const; // occurrences outside any aLCA
};

// Marks nodes surviving state truncation: a node is dead iff some strict
// ancestor is a fact node whose label is true in the state. The arena and
// all xi values are untouched; this is a per-state view.
std::vector<char> truncate_view(const PartialTree &tree, const State &state);

// Global and state-aware relevance scores over a finished exploration.
class RelevanceTable {
public:
    static RelevanceTable build(const PartialTree &tree);
    static FactLcaEntry build_lca_index(const PartialTree &tree, FactId fact);

    const PartialTree &tree() const { return *tree_; }
    const FactLcaEntry &entry(FactId f) const { return entries_[f]; }

    // Xi(l) on the full explored tree. 0 when L(l) is empty.
    double xi_global(FactId f) const { return xi_global_[f]; }

    // Xi_sigma(l) on the truncated view produced by truncate_view.
    double xi_in_state(FactId f, const std::vector<char> &alive) const;

    // h_Xi(state): sum of Xi_sigma(l) over facts not in the state, rounded
    // to the nearest integer with halves up.
    int h_value(const State &state) const;
    double h_raw(const State &state) const;

    // Deterministic diagnostic dump, one fact per line.
    void dump_scores(std::ostream &out) const;

private:
    const PartialTree *tree_ = nullptr;
    std::vector<FactLcaEntry> entries_;
    std::vector<double> xi_global_;
};

} // namespace relplan

#endif
