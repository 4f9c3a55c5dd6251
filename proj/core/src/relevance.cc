#include "relplan/relevance.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace relplan {

std::vector<NodeId> FactLcaEntry::alca_nodes() const {
    std::vector<NodeId> out;
    for (const VNode &v : vnodes)
        if (!v.leaf && v.action_kind)
            out.push_back(v.arena_node);
    return out;
}

std::vector<NodeId> FactLcaEntry::flca_nodes() const {
    // Leaves whose chain of divergence ancestors is all fact nodes.
    std::vector<NodeId> out;
    for (const VNode &v : vnodes) {
        if (!v.leaf)
            continue;
        bool under_alca = false;
        for (int p = v.parent; p >= 0; p = vnodes[p].parent)
            if (vnodes[p].action_kind) {
                under_alca = true;
                break;
            }
        if (!under_alca)
            out.push_back(v.arena_node);
    }
    return out;
}

std::vector<char> truncate_view(const PartialTree &tree, const State &state) {
    std::vector<char> alive(tree.num_nodes(), 1);
    // Parents precede children in the arena, so one forward pass suffices.
    for (NodeId id = 1; id < tree.num_nodes(); ++id) {
        const TreeNode &n = tree.node(id);
        const TreeNode &p = tree.node(n.parent);
        alive[id] = alive[n.parent] &&
                    !(p.kind == NodeKind::Fact && state.test(p.label));
    }
    return alive;
}

FactLcaEntry RelevanceTable::build_lca_index(const PartialTree &tree,
                                             FactId fact) {
    FactLcaEntry entry;
    entry.occurrences = tree.fact_nodes(fact);
    if (entry.occurrences.empty())
        return entry;

    // Sort occurrences by their root-to-node paths. Sibling nodes always
    // carry distinct labels, so node ids at each level order the paths the
    // same way label sequences would.
    std::vector<std::vector<NodeId>> paths(entry.occurrences.size());
    for (size_t i = 0; i < entry.occurrences.size(); ++i) {
        paths[i] = tree.path(entry.occurrences[i]);
        std::reverse(paths[i].begin(), paths[i].end());
    }
    std::vector<size_t> order(entry.occurrences.size());
    for (size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return paths[a] < paths[b]; });
    std::vector<NodeId> sorted;
    for (size_t i : order)
        sorted.push_back(entry.occurrences[i]);
    entry.occurrences = sorted;

    // Adjacent pairs in path order give every LCA; the stack build below
    // assembles the compressed divergence tree from them.
    auto depth = [&](NodeId n) { return tree.node(n).depth; };
    auto lca_of_adjacent = [&](size_t i) {
        const auto &a = paths[order[i - 1]];
        const auto &b = paths[order[i]];
        size_t k = 0;
        while (k < a.size() && k < b.size() && a[k] == b[k])
            ++k;
        return a[k - 1]; // k >= 1: both paths start at the root
    };

    struct StackItem {
        NodeId node;
        int vindex;
    };
    auto &vnodes = entry.vnodes;
    auto make_vnode = [&](NodeId n, bool leaf) {
        FactLcaEntry::VNode v;
        v.arena_node = n;
        v.leaf = leaf;
        v.action_kind = !leaf && tree.node(n).kind == NodeKind::Action;
        vnodes.push_back(v);
        return static_cast<int>(vnodes.size() - 1);
    };
    auto link = [&](int child, int parent) {
        vnodes[child].parent = parent;
        vnodes[parent].children.push_back(child);
    };

    std::vector<StackItem> stack;
    stack.push_back({entry.occurrences[0], make_vnode(entry.occurrences[0], true)});
    for (size_t i = 1; i < entry.occurrences.size(); ++i) {
        NodeId u = lca_of_adjacent(i);
        // Pop everything strictly deeper than u, linking as we go.
        while (stack.size() >= 2 &&
               depth(stack[stack.size() - 2].node) >= depth(u)) {
            link(stack.back().vindex, stack[stack.size() - 2].vindex);
            stack.pop_back();
        }
        if (depth(stack.back().node) > depth(u)) {
            int top = stack.back().vindex;
            stack.pop_back();
            int vu = make_vnode(u, false);
            link(top, vu);
            stack.push_back({u, vu});
        }
        // Otherwise stack.back().node == u already (same depth on a shared
        // path implies the same node).
        stack.push_back({entry.occurrences[i],
                         make_vnode(entry.occurrences[i], true)});
    }
    while (stack.size() >= 2) {
        link(stack.back().vindex, stack[stack.size() - 2].vindex);
        stack.pop_back();
    }
    entry.vroot = stack.back().vindex;
    return entry;
}

namespace {

// Xi(l, vnode scope) on the divergence tree; dead leaves contribute 0.
// A fact-kind internal node sums xi-weighted child scores (Eq. 8's fLCA
// term after chain cancellation); an action-kind internal node combines
// them as 1 - prod(1 - .).
double eval_vnode(const PartialTree &tree, const FactLcaEntry &entry, int vi,
                  const std::vector<char> *alive) {
    const FactLcaEntry::VNode &v = entry.vnodes[vi];
    if (v.leaf)
        return (!alive || (*alive)[v.arena_node]) ? 1.0 : 0.0;
    double scope_xi = tree.node(v.arena_node).xi;
    bool is_action = tree.node(v.arena_node).kind == NodeKind::Action;
    if (is_action) {
        double none = 1.0;
        for (int c : v.children) {
            double child_xi = tree.node(entry.vnodes[c].arena_node).xi;
            none *= 1.0 - (child_xi / scope_xi) *
                              eval_vnode(tree, entry, c, alive);
        }
        return 1.0 - none;
    }
    double sum = 0.0;
    for (int c : v.children) {
        double child_xi = tree.node(entry.vnodes[c].arena_node).xi;
        sum += (child_xi / scope_xi) * eval_vnode(tree, entry, c, alive);
    }
    return sum;
}

double eval_entry(const PartialTree &tree, const FactLcaEntry &entry,
                  const std::vector<char> *alive) {
    if (entry.vroot < 0)
        return 0.0;
    NodeId top = entry.vnodes[entry.vroot].arena_node;
    if (alive && !(*alive)[top])
        return 0.0;
    // Transfer from the divergence-tree top to the tree root: Xi(l, root) =
    // xi(top) * Xi(l, top) since every occurrence sits below top.
    return tree.node(top).xi * eval_vnode(tree, entry, entry.vroot, alive);
}

} // namespace

RelevanceTable RelevanceTable::build(const PartialTree &tree) {
    RelevanceTable table;
    table.tree_ = &tree;
    int n = tree.task().num_facts();
    table.entries_.resize(n);
    table.xi_global_.resize(n, 0.0);
    for (FactId f = 0; f < n; ++f) {
        table.entries_[f] = build_lca_index(tree, f);
        table.xi_global_[f] = eval_entry(tree, table.entries_[f], nullptr);
    }
    return table;
}

double RelevanceTable::xi_in_state(FactId f,
                                   const std::vector<char> &alive) const {
    return eval_entry(*tree_, entries_[f], &alive);
}

double RelevanceTable::h_raw(const State &state) const {
    std::vector<char> alive = truncate_view(*tree_, state);
    double sum = 0.0;
    for (FactId f = 0; f < tree_->task().num_facts(); ++f) {
        if (state.test(f))
            continue; // already true, nothing left to achieve
        sum += eval_entry(*tree_, entries_[f], &alive);
    }
    return sum;
}

int RelevanceTable::h_value(const State &state) const {
    // Nearest integer, halves rounding up.
    return static_cast<int>(std::floor(h_raw(state) + 0.5));
}

void RelevanceTable::dump_scores(std::ostream &out) const {
    const Task &task = tree_->task();
    for (FactId f = 0; f < task.num_facts(); ++f) {
        char buf[32];
        snprintf(buf, sizeof buf, "%.17g", xi_global_[f]);
        out << task.fact_name(f) << " " << buf << "\n";
    }
}

} // namespace relplan
