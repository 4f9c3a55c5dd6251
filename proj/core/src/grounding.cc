#include "relplan/grounding.h"

#include "relplan/errors.h"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace relplan {

namespace {

struct TypeTable {
    std::map<std::string, std::string> parent; // type -> parent type

    void declare(const std::string &type, const std::string &super) {
        if (type == "object")
            return;
        parent[type] = super;
        if (super != "object" && !parent.count(super))
            parent.emplace(super, "object");
    }

    bool is_a(const std::string &type, const std::string &ancestor) const {
        std::string cur = type;
        while (true) {
            if (cur == ancestor)
                return true;
            if (cur == "object")
                return false;
            auto it = parent.find(cur);
            cur = it == parent.end() ? "object" : it->second;
        }
    }
};

struct Grounder {
    const DomainAst &domain;
    const ProblemAst &problem;
    const GroundConfig &config;
    Task task;

    TypeTable types;
    std::vector<TypedName> objects; // constants + problem objects
    std::map<std::string, std::string> object_type;
    std::map<std::string, std::vector<PredicateDecl>::const_iterator> predicates;

    Grounder(const DomainAst &d, const ProblemAst &p, const GroundConfig &c)
        : domain(d), problem(p), config(c) {}

    Task run() {
        build_tables();
        check_schemas();
        intern_init_and_goal();
        ground_actions();
        finalize_sets();
        return std::move(task);
    }

    void build_tables() {
        for (const TypedName &t : domain.types)
            types.declare(t.name, t.type);
        for (const TypedName &c : domain.constants)
            add_object(c);
        for (const TypedName &o : problem.objects)
            add_object(o);
        for (auto it = domain.predicates.begin(); it != domain.predicates.end();
             ++it) {
            if (!predicates.emplace(it->name, it).second)
                throw ParseError(it->pos.line, it->pos.column,
                                 "duplicate predicate " + it->name);
        }
    }

    void add_object(const TypedName &o) {
        if (object_type.count(o.name))
            throw ParseError(o.pos.line, o.pos.column,
                             "duplicate object " + o.name);
        if (o.type != "object" && !types.parent.count(o.type))
            throw ParseError(o.pos.line, o.pos.column, "undeclared type " +
                                                           o.type + " for " +
                                                           o.name);
        objects.push_back(o);
        object_type[o.name] = o.type;
    }

    const PredicateDecl &predicate(const std::string &name, SourcePos pos) const {
        auto it = predicates.find(name);
        if (it == predicates.end())
            throw ParseError(pos.line, pos.column,
                             "undeclared predicate " + name);
        return *it->second;
    }

    void check_schemas() const {
        for (const ActionSchema &schema : domain.actions) {
            std::map<std::string, std::string> param_type;
            for (const TypedName &p : schema.params) {
                if (param_type.count(p.name))
                    throw ParseError(p.pos.line, p.pos.column,
                                     "duplicate parameter " + p.name +
                                         " in action " + schema.name);
                param_type[p.name] = p.type;
            }
            auto check_term = [&](const std::string &term, SourcePos pos) {
                if (!term.empty() && term[0] == '?') {
                    if (!param_type.count(term))
                        throw ParseError(pos.line, pos.column,
                                         "unbound variable " + term +
                                             " in action " + schema.name);
                } else if (!object_type.count(term)) {
                    throw ParseError(pos.line, pos.column,
                                     "undeclared constant " + term +
                                         " in action " + schema.name);
                }
            };
            auto check_literals = [&](const std::vector<Literal> &lits,
                                      bool effects) {
                for (const Literal &lit : lits) {
                    if (lit.is_equality) {
                        for (const std::string &a : lit.args)
                            check_term(a, lit.pos);
                        continue;
                    }
                    const PredicateDecl &decl =
                        predicate(lit.predicate, lit.pos);
                    if (decl.params.size() != lit.args.size())
                        throw ParseError(lit.pos.line, lit.pos.column,
                                         "arity mismatch for " + lit.predicate);
                    for (const std::string &a : lit.args)
                        check_term(a, lit.pos);
                    (void)effects;
                }
            };
            check_literals(schema.preconditions, false);
            check_literals(schema.effects, true);
        }
    }

    FactId intern_atom(const GroundAtom &atom, const char *where) {
        const PredicateDecl &decl = predicate(atom.predicate, atom.pos);
        if (decl.params.size() != atom.args.size())
            throw ParseError(atom.pos.line, atom.pos.column,
                             "arity mismatch for " + atom.predicate);
        std::vector<SymbolId> args;
        for (const std::string &a : atom.args) {
            if (!object_type.count(a))
                throw ParseError(atom.pos.line, atom.pos.column,
                                 std::string(where) +
                                     " references undeclared object " + a);
            args.push_back(task.symbols.intern(a));
        }
        return task.intern_fact(task.symbols.intern(atom.predicate), args);
    }

    std::vector<FactId> init_ids, goal_ids;

    void intern_init_and_goal() {
        for (const GroundAtom &atom : problem.init)
            init_ids.push_back(intern_atom(atom, "init"));
        for (const GroundAtom &atom : problem.goal)
            goal_ids.push_back(intern_atom(atom, "goal"));
    }

    std::vector<const TypedName *> candidates(const std::string &type) const {
        std::vector<const TypedName *> out;
        for (const TypedName &o : objects)
            if (types.is_a(o.type, type))
                out.push_back(&o);
        return out;
    }

    void ground_actions() {
        // Blow-up guard first: predicted |A| before any enumeration.
        long double predicted = 0;
        for (const ActionSchema &schema : domain.actions) {
            long double tuples = 1;
            for (const TypedName &p : schema.params)
                tuples *= static_cast<long double>(candidates(p.type).size());
            predicted += tuples;
        }
        if (predicted > static_cast<long double>(config.max_actions))
            throw InputError(
                "grounding would produce about " +
                std::to_string(static_cast<long long>(predicted)) +
                " actions, exceeding the cap of " +
                std::to_string(config.max_actions));

        for (const ActionSchema &schema : domain.actions)
            ground_schema(schema);
    }

    void ground_schema(const ActionSchema &schema) {
        std::vector<std::vector<const TypedName *>> cands;
        for (const TypedName &p : schema.params)
            cands.push_back(candidates(p.type));
        std::vector<size_t> idx(schema.params.size(), 0);
        for (auto &c : cands)
            if (c.empty())
                return;
        // Odometer over object tuples, last parameter fastest.
        while (true) {
            std::map<std::string, std::string> binding;
            for (size_t i = 0; i < idx.size(); ++i)
                binding[schema.params[i].name] = cands[i][idx[i]]->name;
            instantiate(schema, binding);
            size_t i = idx.size();
            while (i > 0) {
                --i;
                if (++idx[i] < cands[i].size())
                    break;
                idx[i] = 0;
                if (i == 0)
                    return;
            }
            if (idx.empty())
                return;
        }
    }

    void instantiate(const ActionSchema &schema,
                     const std::map<std::string, std::string> &binding) {
        auto resolve = [&](const std::string &term) -> const std::string & {
            if (!term.empty() && term[0] == '?')
                return binding.at(term);
            return term;
        };
        // Static equality constraints decide whether the tuple survives.
        for (const Literal &lit : schema.preconditions) {
            if (!lit.is_equality)
                continue;
            bool equal = resolve(lit.args[0]) == resolve(lit.args[1]);
            if (equal == lit.negated)
                return;
        }
        std::vector<std::pair<FactId, bool>> pre, eff; // (fact, negated)
        auto ground_lits = [&](const std::vector<Literal> &lits,
                               std::vector<std::pair<FactId, bool>> &out) {
            for (const Literal &lit : lits) {
                if (lit.is_equality)
                    continue;
                std::vector<SymbolId> args;
                for (const std::string &a : lit.args)
                    args.push_back(task.symbols.intern(resolve(a)));
                out.emplace_back(
                    task.intern_fact(task.symbols.intern(lit.predicate), args),
                    lit.negated);
            }
        };
        ground_lits(schema.preconditions, pre);
        ground_lits(schema.effects, eff);

        GroundAction action;
        action.name = task.symbols.intern(schema.name);
        for (const TypedName &p : schema.params)
            action.args.push_back(task.symbols.intern(binding.at(p.name)));
        pending_actions_.push_back(
            {std::move(action), std::move(pre), std::move(eff)});
    }

    struct PendingAction {
        GroundAction action;
        std::vector<std::pair<FactId, bool>> pre, eff;
    };
    std::vector<PendingAction> pending_actions_;

    // Bitsets can only be sized once |F| is final.
    void finalize_sets() {
        int n = task.num_facts();
        task.init.resize(n);
        for (FactId f : init_ids)
            task.init.set(f);
        task.goal.resize(n);
        for (FactId f : goal_ids)
            task.goal.set(f);
        for (PendingAction &p : pending_actions_) {
            GroundAction &a = p.action;
            a.pre_pos.resize(n);
            a.pre_neg.resize(n);
            a.eff_pos.resize(n);
            a.eff_neg.resize(n);
            for (auto [f, neg] : p.pre)
                (neg ? a.pre_neg : a.pre_pos).set(f);
            for (auto [f, neg] : p.eff)
                (neg ? a.eff_neg : a.eff_pos).set(f);
            task.actions.push_back(std::move(a));
        }
    }
};

} // namespace

Task ground(const DomainAst &domain, const ProblemAst &problem,
            const GroundConfig &config) {
    return Grounder(domain, problem, config).run();
}

} // namespace relplan
