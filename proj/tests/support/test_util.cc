#include "test_util.h"

#include "relplan/errors.h"
#include "relplan/grounding.h"
#include "relplan/pddl.h"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

namespace relplan::testing {

std::string data_path(const std::string &rel) {
#ifdef RELPLAN_DATA_DIR
    return std::string(RELPLAN_DATA_DIR) + "/" + rel;
#else
    return "data/" + rel;
#endif
}

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

Task load_data_task(const std::string &domain_rel,
                    const std::string &problem_rel) {
    DomainAst domain = parse_domain(read_file(data_path(domain_rel)));
    ProblemAst problem = parse_problem(read_file(data_path(problem_rel)));
    return ground(domain, problem);
}

Task random_task(const RandomTaskConfig &config, Rng &rng) {
    while (true) {
        Task task;
        std::vector<SymbolId> preds;
        for (int i = 0; i < config.num_facts; ++i) {
            SymbolId p = task.symbols.intern("f" + std::to_string(i));
            preds.push_back(p);
            task.intern_fact(p, {});
        }
        for (int i = 0; i < config.num_actions; ++i) {
            GroundAction a;
            a.name = task.symbols.intern("a" + std::to_string(i));
            a.pre_pos.resize(config.num_facts);
            a.pre_neg.resize(config.num_facts);
            a.eff_pos.resize(config.num_facts);
            a.eff_neg.resize(config.num_facts);
            int eff = static_cast<int>(rng.below(config.num_facts));
            a.eff_pos.set(eff);
            int n_pre = static_cast<int>(rng.below(config.max_pre + 1));
            for (int p = 0; p < n_pre; ++p) {
                int f = static_cast<int>(rng.below(config.num_facts));
                if (f != eff) // self-supporting achievers are uninteresting
                    a.pre_pos.set(f);
            }
            task.actions.push_back(std::move(a));
        }
        task.init.resize(config.num_facts);
        for (int i = 0; i < config.init_facts; ++i)
            task.init.set(static_cast<int>(rng.below(config.num_facts)));
        task.goal.resize(config.num_facts);
        int goal = static_cast<int>(rng.below(config.num_facts));
        task.goal.set(goal);
        if (config.solvable_only && !bfs_plan_length(task))
            continue;
        return task;
    }
}

std::optional<int> bfs_plan_length(const Task &task) {
    if (task.goal.subset_of(task.init))
        return 0;
    std::deque<std::pair<State, int>> queue{{task.init, 0}};
    std::unordered_set<FactSet, FactSetHash> seen{task.init};
    while (!queue.empty()) {
        auto [state, g] = queue.front();
        queue.pop_front();
        for (const GroundAction &a : task.actions) {
            if (!applicable(a, state))
                continue;
            State next = apply(a, state);
            if (task.goal.subset_of(next))
                return g + 1;
            if (seen.insert(next).second)
                queue.emplace_back(next, g + 1);
        }
    }
    return std::nullopt;
}

int count_choice_points(const PartialTree &tree) {
    int n = 0;
    for (NodeId id = 0; id < tree.num_nodes(); ++id) {
        const TreeNode &node = tree.node(id);
        if (node.kind == NodeKind::Fact && node.enumerated &&
            node.num_children >= 2)
            ++n;
    }
    return n;
}

NaiveLcaResult naive_lca(const PartialTree &tree, FactId fact) {
    const std::vector<NodeId> &occ = tree.fact_nodes(fact);
    // Root paths, root-first.
    std::vector<std::vector<NodeId>> paths;
    for (NodeId n : occ) {
        std::vector<NodeId> p = tree.path(n);
        std::reverse(p.begin(), p.end());
        paths.push_back(std::move(p));
    }
    std::set<NodeId> alcas;
    for (size_t i = 0; i < occ.size(); ++i) {
        for (size_t j = i + 1; j < occ.size(); ++j) {
            size_t k = 0;
            while (k < paths[i].size() && k < paths[j].size() &&
                   paths[i][k] == paths[j][k])
                ++k;
            NodeId lca = paths[i][k - 1]; // root always shared
            if (tree.node(lca).kind == NodeKind::Action)
                alcas.insert(lca);
        }
    }
    NaiveLcaResult out;
    out.alca_nodes.assign(alcas.begin(), alcas.end());
    for (size_t i = 0; i < occ.size(); ++i) {
        bool under_alca = false;
        for (size_t k = 0; k + 1 < paths[i].size(); ++k)
            if (alcas.count(paths[i][k]))
                under_alca = true;
        if (!under_alca)
            out.flca_nodes.push_back(occ[i]);
    }
    std::sort(out.flca_nodes.begin(), out.flca_nodes.end());
    return out;
}

} // namespace relplan::testing
