#include "relplan/task.h"

#include "relplan/errors.h"

#include <sstream>
#include <stdexcept>

namespace relplan {

std::string Task::fact_key(SymbolId predicate,
                           const std::vector<SymbolId> &args) const {
    std::string key = std::to_string(predicate);
    for (SymbolId a : args) {
        key += ' ';
        key += std::to_string(a);
    }
    return key;
}

FactId Task::intern_fact(SymbolId predicate, const std::vector<SymbolId> &args) {
    std::string key = fact_key(predicate, args);
    auto it = fact_ids_.find(key);
    if (it != fact_ids_.end())
        return it->second;
    FactId id = static_cast<FactId>(facts.size());
    facts.push_back(Fact{predicate, args});
    fact_ids_.emplace(std::move(key), id);
    return id;
}

FactId Task::find_fact(const std::string &text) const {
    std::string stripped;
    for (char c : text)
        if (c != '(' && c != ')')
            stripped += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    std::istringstream in(stripped);
    std::string tok;
    std::vector<std::string> parts;
    while (in >> tok)
        parts.push_back(tok);
    if (parts.empty())
        return -1;
    for (FactId f = 0; f < num_facts(); ++f) {
        const Fact &fact = facts[f];
        if (symbols.name(fact.predicate) != parts[0])
            continue;
        if (fact.args.size() != parts.size() - 1)
            continue;
        bool match = true;
        for (size_t i = 0; i < fact.args.size(); ++i)
            if (symbols.name(fact.args[i]) != parts[i + 1]) {
                match = false;
                break;
            }
        if (match)
            return f;
    }
    return -1;
}

std::string Task::fact_name(FactId f) const {
    const Fact &fact = facts.at(f);
    std::string out = "(" + symbols.name(fact.predicate);
    for (SymbolId a : fact.args)
        out += " " + symbols.name(a);
    return out + ")";
}

std::string Task::action_name(ActionId a) const {
    const GroundAction &act = actions.at(a);
    std::string out = "(" + symbols.name(act.name);
    for (SymbolId s : act.args)
        out += " " + symbols.name(s);
    return out + ")";
}

Task delete_relax(const Task &task) {
    Task out = task;
    for (GroundAction &a : out.actions) {
        a.pre_neg = FactSet(out.num_facts());
        a.eff_neg = FactSet(out.num_facts());
    }
    out.relaxed = true;
    return out;
}

Task add_goal_action(const Task &task) {
    if (task.goal_compiled)
        throw InputError("task is already goal-compiled");
    Task out = task;
    SymbolId success_sym = out.symbols.intern("success");
    out.success_fact = out.intern_fact(success_sym, {});

    int n = out.num_facts();
    out.init.resize(n);
    FactSet new_goal(n);
    new_goal.set(out.success_fact);

    GroundAction goal_action;
    goal_action.name = out.symbols.intern("achievegoal");
    goal_action.pre_pos = task.goal;
    goal_action.pre_pos.resize(n);
    goal_action.pre_neg = FactSet(n);
    goal_action.eff_pos = FactSet(n);
    goal_action.eff_pos.set(out.success_fact);
    goal_action.eff_neg = FactSet(n);
    out.goal_action_id = out.num_actions();
    out.actions.push_back(std::move(goal_action));

    out.original_goal = task.goal;
    out.original_goal.resize(n);
    out.goal = std::move(new_goal);
    out.goal_compiled = true;
    return out;
}

bool applicable(const GroundAction &a, const State &s) {
    return a.pre_pos.subset_of(s) && !a.pre_neg.intersects(s);
}

State apply(const GroundAction &a, const State &s) {
    if (!applicable(a, s))
        throw std::logic_error("apply called with inapplicable action");
    State out = s;
    out |= a.eff_pos;
    out -= a.eff_neg;
    return out;
}

} // namespace relplan
