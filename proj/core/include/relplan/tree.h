#ifndef RELPLAN_TREE_H
#define RELPLAN_TREE_H

#include "relplan/task.h"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace relplan {

using NodeId = int32_t;

enum class NodeKind : uint8_t { Fact, Action };

// Node of the goal-rooted backtracking tree. A fact node's children are its
// achiever actions (minus cycle-excluded ones); an action node's children
// are its positive preconditions. xi is the probability the node appears in
// an NDA sample.
struct TreeNode {
    int32_t label;          // FactId or ActionId depending on kind
    NodeId parent;          // -1 for the root
    NodeKind kind;
    bool enumerated = false;
    int32_t first_child = 0; // slice into the child arena, valid once enumerated
    int32_t num_children = 0;
    int32_t depth = 0;
    double xi = 0.0;
};

// Lazily grown tree. Node ids are stable and parents always precede their
// children. Enumerating a node is the only mutation; everything already in
// the arena stays put.
class PartialTree {
public:
    explicit PartialTree(const Task &task);

    const Task &task() const { return *task_; }
    int num_nodes() const { return static_cast<int>(nodes_.size()); }
    const TreeNode &node(NodeId id) const { return nodes_[id]; }
    NodeId root() const { return 0; }

    std::span<const NodeId> children(NodeId id) const;
    // Enumerates all children at once (Eq. 4 needs the exact child count),
    // removing the node from the frontier. Children enter arena + frontier
    // in ascending label order. No-op if already enumerated.
    std::span<const NodeId> enumerate_children(NodeId id);

    // [node, parent, ..., root]
    std::vector<NodeId> path(NodeId id) const;

    const std::vector<NodeId> &frontier() const { return frontier_; }
    bool in_frontier(NodeId id) const { return frontier_pos_[id] >= 0; }
    double frontier_xi_sum() const { return frontier_xi_; }
    double total_xi_sum() const { return total_xi_; }
    bool fully_explored() const { return frontier_.empty(); }

    // Nodes labeled with this fact, in creation order.
    const std::vector<NodeId> &fact_nodes(FactId f) const {
        return fact_label_index_[f];
    }

    bool capped = false; // set by the explorer when max_nodes stopped growth

    // One node per line: id kind label parent xi
    void dump(std::ostream &out) const;

private:
    const Task *task_;
    std::vector<TreeNode> nodes_;
    std::vector<NodeId> child_arena_;
    std::vector<NodeId> frontier_;
    std::vector<int32_t> frontier_pos_; // per node, -1 when absent
    std::vector<std::vector<NodeId>> fact_label_index_;
    std::vector<std::vector<ActionId>> achievers_; // per fact, ascending
    double frontier_xi_ = 0.0;
    double total_xi_ = 0.0;

    NodeId add_node(int32_t label, NodeId parent, NodeKind kind, double xi);
    void frontier_remove(NodeId id);
};

} // namespace relplan

#endif
