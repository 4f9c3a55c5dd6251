#include "relplan/tree.h"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace relplan {

PartialTree::PartialTree(const Task &task) : task_(&task) {
    if (!task.relaxed || !task.goal_compiled)
        throw std::logic_error(
            "backtracking tree requires a relaxed, goal-compiled task");
    achievers_.resize(task.num_facts());
    for (ActionId a = 0; a < task.num_actions(); ++a)
        task.actions[a].eff_pos.for_each(
            [&](int f) { achievers_[f].push_back(a); });
    fact_label_index_.resize(task.num_facts());

    // Root: the achieveGoal action node, xi = 1, children pre-enumerated.
    add_node(task.goal_action_id, -1, NodeKind::Action, 1.0);
    enumerate_children(0);
}

NodeId PartialTree::add_node(int32_t label, NodeId parent, NodeKind kind,
                             double xi) {
    NodeId id = static_cast<NodeId>(nodes_.size());
    TreeNode n;
    n.label = label;
    n.parent = parent;
    n.kind = kind;
    n.depth = parent < 0 ? 0 : nodes_[parent].depth + 1;
    n.xi = xi;
    nodes_.push_back(n);
    frontier_pos_.push_back(static_cast<int32_t>(frontier_.size()));
    frontier_.push_back(id);
    frontier_xi_ += xi;
    total_xi_ += xi;
    if (kind == NodeKind::Fact)
        fact_label_index_[label].push_back(id);
    return id;
}

void PartialTree::frontier_remove(NodeId id) {
    int32_t pos = frontier_pos_[id];
    assert(pos >= 0);
    NodeId last = frontier_.back();
    frontier_[pos] = last;
    frontier_pos_[last] = pos;
    frontier_.pop_back();
    frontier_pos_[id] = -1;
    frontier_xi_ -= nodes_[id].xi;
}

std::span<const NodeId> PartialTree::children(NodeId id) const {
    const TreeNode &n = nodes_[id];
    if (!n.enumerated)
        return {};
    return {child_arena_.data() + n.first_child,
            static_cast<size_t>(n.num_children)};
}

std::span<const NodeId> PartialTree::enumerate_children(NodeId id) {
    if (nodes_[id].enumerated)
        return children(id);
    frontier_remove(id);

    // Gather child labels before touching the arena.
    std::vector<int32_t> labels;
    NodeKind child_kind;
    double child_xi;
    if (nodes_[id].kind == NodeKind::Action) {
        // All positive preconditions; xi passes down unchanged.
        task_->actions[nodes_[id].label].pre_pos.for_each(
            [&](int f) { labels.push_back(f); });
        child_kind = NodeKind::Fact;
        child_xi = nodes_[id].xi;
    } else {
        // Achiever actions surviving cycle exclusion: an achiever is out if
        // any of its preconditions is already a fact label on this path.
        FactSet path_facts(task_->num_facts());
        for (NodeId cur = id; cur >= 0; cur = nodes_[cur].parent)
            if (nodes_[cur].kind == NodeKind::Fact)
                path_facts.set(nodes_[cur].label);
        for (ActionId a : achievers_[nodes_[id].label])
            if (!task_->actions[a].pre_pos.intersects(path_facts))
                labels.push_back(a);
        child_kind = NodeKind::Action;
        child_xi = labels.empty()
                       ? 0.0
                       : nodes_[id].xi / static_cast<double>(labels.size());
    }

    int32_t first = static_cast<int32_t>(child_arena_.size());
    for (int32_t label : labels) {
        NodeId child = add_node(label, id, child_kind, child_xi);
        child_arena_.push_back(child);
    }
    TreeNode &n = nodes_[id];
    n.enumerated = true;
    n.first_child = first;
    n.num_children = static_cast<int32_t>(labels.size());
    return children(id);
}

std::vector<NodeId> PartialTree::path(NodeId id) const {
    std::vector<NodeId> out;
    for (NodeId cur = id; cur >= 0; cur = nodes_[cur].parent)
        out.push_back(cur);
    return out;
}

void PartialTree::dump(std::ostream &out) const {
    for (NodeId id = 0; id < num_nodes(); ++id) {
        const TreeNode &n = nodes_[id];
        const char *kind = n.parent < 0             ? "root"
                           : n.kind == NodeKind::Fact ? "fact"
                                                      : "action";
        std::string label = n.kind == NodeKind::Fact
                                ? task_->fact_name(n.label)
                                : task_->action_name(n.label);
        out << id << " " << kind << " " << label << " " << n.parent << " ";
        char buf[32];
        snprintf(buf, sizeof buf, "%.17g", n.xi);
        out << buf << "\n";
    }
}

} // namespace relplan
