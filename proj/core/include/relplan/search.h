#ifndef RELPLAN_SEARCH_H
#define RELPLAN_SEARCH_H

#include "relplan/landmarks.h"
#include "relplan/relevance.h"
#include "relplan/task.h"

#include <cstdint>
#include <memory>
#include <vector>

namespace relplan {

// Per-search-node data a heuristic may thread along the path (the landmark
// counter's accepted mask). Empty for path-independent heuristics.
struct PathData {
    FactSet accepted;
};

class Heuristic {
public:
    virtual ~Heuristic() = default;
    // parent is null for the initial state. Must be a pure function of
    // (state, parent data); the engine never mutates heuristic internals.
    virtual int evaluate(const State &state, const PathData *parent,
                         PathData &out) = 0;
    virtual bool uses_path_data() const { return false; }
};

class BlindHeuristic : public Heuristic {
public:
    int evaluate(const State &, const PathData *, PathData &) override {
        return 0;
    }
};

// h_Xi over a prebuilt relevance table (tree built once per problem).
class RelevanceHeuristic : public Heuristic {
public:
    explicit RelevanceHeuristic(const RelevanceTable &table) : table_(&table) {}
    int evaluate(const State &state, const PathData *, PathData &) override {
        return table_->h_value(state);
    }

private:
    const RelevanceTable *table_;
};

class LandmarkCountHeuristic : public Heuristic {
public:
    explicit LandmarkCountHeuristic(const LandmarkCounter &counter)
        : counter_(&counter) {}
    int evaluate(const State &state, const PathData *parent,
                 PathData &out) override {
        out.accepted = parent ? counter_->extend_mask(parent->accepted, state)
                              : counter_->initial_mask(state);
        return counter_->count(state, out.accepted);
    }
    bool uses_path_data() const override { return true; }

private:
    const LandmarkCounter *counter_;
};

struct SearchLimits {
    double time_limit_s = 300.0;
    size_t mem_limit_bytes = size_t{8} * 1024 * 1024 * 1024;
};

enum class SearchStatus { Solved, Unsolvable, OutOfTime, OutOfMemory };

const char *to_string(SearchStatus status);

struct PlanResult {
    SearchStatus status = SearchStatus::Unsolvable;
    std::vector<ActionId> plan;
    double search_time_s = 0.0;
    uint64_t expansions = 0; // pops of non-goal nodes
    int plan_length = 0;
    size_t peak_memory = 0; // node-arena accounting, bytes
    uint64_t seed = 0;
};

// Weighted A* on f = g + weight * h over the original task semantics.
// Duplicate detection on a closed set; states are re-opened when reached
// with strictly smaller g (h_Xi is not consistent). Ties broken by lower
// h, then insertion order.
PlanResult weighted_astar(const Task &task, Heuristic &heuristic, int weight,
                          const SearchLimits &limits = {});

bool validate_plan(const Task &task, const std::vector<ActionId> &plan);

} // namespace relplan

#endif
