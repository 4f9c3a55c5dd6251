#ifndef RELPLAN_TASK_H
#define RELPLAN_TASK_H

#include "relplan/fact_set.h"
#include "relplan/symbols.h"

#include <string>
#include <unordered_map>
#include <vector>

namespace relplan {

using FactId = int;
using ActionId = int;

// A ground predicate. Equality is structural over interned symbols; the
// owning Task guarantees a unique FactId per distinct (predicate, args).
struct Fact {
    SymbolId predicate;
    std::vector<SymbolId> args;

    bool operator==(const Fact &other) const {
        return predicate == other.predicate && args == other.args;
    }
};

struct GroundAction {
    SymbolId name;
    std::vector<SymbolId> args;
    FactSet pre_pos, pre_neg, eff_pos, eff_neg;
    // Action cost is fixed at 1; plan length and cost coincide.
};

using State = FactSet;

// Grounded planning problem <F, A, I, G>.
struct Task {
    SymbolTable symbols;
    std::vector<Fact> facts;
    std::vector<GroundAction> actions;
    FactSet init;
    FactSet goal;

    bool relaxed = false;
    bool goal_compiled = false;
    // Valid only when goal_compiled: the pre-compilation goal plus the
    // synthetic success fact and achieveGoal action.
    FactSet original_goal;
    FactId success_fact = -1;
    ActionId goal_action_id = -1;

    int num_facts() const { return static_cast<int>(facts.size()); }
    int num_actions() const { return static_cast<int>(actions.size()); }

    FactId intern_fact(SymbolId predicate, const std::vector<SymbolId> &args);
    FactId find_fact(const std::string &text) const; // "(pred arg ...)" or "pred arg ..."; -1 if absent
    std::string fact_name(FactId f) const;
    std::string action_name(ActionId a) const;

private:
    std::unordered_map<std::string, FactId> fact_ids_;
    std::string fact_key(SymbolId predicate, const std::vector<SymbolId> &args) const;
};

// Removes every negative precondition and negative effect. The input is
// left untouched; idempotent.
Task delete_relax(const Task &task);

// Adds the success fact and the achieveGoal action with pre+ = G, then
// replaces the goal by {success}. Rejects double compilation.
Task add_goal_action(const Task &task);

bool applicable(const GroundAction &a, const State &s);
// Precondition: applicable(a, s). Throws std::logic_error otherwise.
State apply(const GroundAction &a, const State &s);

} // namespace relplan

#endif
