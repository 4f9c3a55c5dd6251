#include "relplan/search.h"

#include <algorithm>
#include <chrono>
#include <queue>
#include <tuple>
#include <unordered_map>

namespace relplan {

const char *to_string(SearchStatus status) {
    switch (status) {
    case SearchStatus::Solved: return "solved";
    case SearchStatus::Unsolvable: return "unsolvable";
    case SearchStatus::OutOfTime: return "out_of_time";
    case SearchStatus::OutOfMemory: return "out_of_memory";
    }
    return "?";
}

namespace {

struct Node {
    State state;
    int parent = -1;
    ActionId action_in = -1;
    int g = 0;
    int h = 0;
    PathData data;
};

struct OpenEntry {
    int64_t f;
    int h;
    uint64_t seq;
    int node;
    int g; // g at push time, to skip stale entries
    bool operator>(const OpenEntry &other) const {
        return std::tie(f, h, seq) > std::tie(other.f, other.h, other.seq);
    }
};

} // namespace

PlanResult weighted_astar(const Task &task, Heuristic &heuristic, int weight,
                          const SearchLimits &limits) {
    using Clock = std::chrono::steady_clock;
    auto start = Clock::now();
    PlanResult result;

    std::vector<Node> nodes;
    std::unordered_map<State, int, FactSetHash> best; // state -> node index
    std::priority_queue<OpenEntry, std::vector<OpenEntry>, std::greater<>> open;
    uint64_t seq = 0;
    size_t mem = 0;

    auto account = [&](const Node &n) {
        mem += sizeof(Node) + n.state.memory_bytes() +
               n.data.accepted.memory_bytes() + sizeof(OpenEntry) + 64;
        if (mem > result.peak_memory)
            result.peak_memory = mem;
    };

    auto push_node = [&](State state, int parent, ActionId action, int g) {
        auto it = best.find(state);
        if (it != best.end() && nodes[it->second].g <= g)
            return;
        PathData data;
        // On reopening (smaller g) the better path's mask replaces the old.
        int h = heuristic.evaluate(
            state, parent >= 0 ? &nodes[parent].data : nullptr, data);
        int idx;
        if (it != best.end()) {
            idx = it->second;
            nodes[idx].parent = parent;
            nodes[idx].action_in = action;
            nodes[idx].g = g;
            nodes[idx].h = h;
            nodes[idx].data = std::move(data);
        } else {
            idx = static_cast<int>(nodes.size());
            nodes.push_back(Node{std::move(state), parent, action, g, h,
                                 std::move(data)});
            best.emplace(nodes[idx].state, idx);
            account(nodes[idx]);
        }
        open.push(OpenEntry{static_cast<int64_t>(g) +
                                static_cast<int64_t>(weight) * h,
                            h, seq++, idx, g});
    };

    push_node(task.init, -1, -1, 0);

    uint64_t pops = 0;
    while (!open.empty()) {
        if ((pops++ & 1023) == 0) {
            double elapsed =
                std::chrono::duration<double>(Clock::now() - start).count();
            if (elapsed > limits.time_limit_s) {
                result.status = SearchStatus::OutOfTime;
                result.search_time_s = elapsed;
                return result;
            }
            if (mem > limits.mem_limit_bytes) {
                result.status = SearchStatus::OutOfMemory;
                result.search_time_s = elapsed;
                return result;
            }
        }
        OpenEntry top = open.top();
        open.pop();
        Node &n = nodes[top.node];
        if (top.g > n.g)
            continue; // stale entry, node was reopened cheaper
        if (task.goal.subset_of(n.state)) {
            result.status = SearchStatus::Solved;
            for (int cur = top.node; nodes[cur].parent >= 0;
                 cur = nodes[cur].parent)
                result.plan.push_back(nodes[cur].action_in);
            std::reverse(result.plan.begin(), result.plan.end());
            result.plan_length = static_cast<int>(result.plan.size());
            break;
        }
        ++result.expansions;
        int g = n.g;
        State state = n.state; // copy: nodes may reallocate while generating
        for (ActionId a = 0; a < task.num_actions(); ++a) {
            const GroundAction &action = task.actions[a];
            if (!applicable(action, state))
                continue;
            push_node(apply(action, state), top.node, a, g + 1);
        }
    }
    result.search_time_s =
        std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

bool validate_plan(const Task &task, const std::vector<ActionId> &plan) {
    State state = task.init;
    for (ActionId a : plan) {
        if (a < 0 || a >= task.num_actions())
            return false;
        const GroundAction &action = task.actions[a];
        if (!applicable(action, state))
            return false;
        state = apply(action, state);
    }
    return task.goal.subset_of(state);
}

} // namespace relplan
