#include "relplan/merge.h"

#include "relplan/errors.h"

#include "json.hpp"

#include <algorithm>
#include <set>

namespace relplan {

namespace {

std::string prefixed(const std::string &label, const std::string &name) {
    return label + "-" + name;
}

} // namespace

void prefix_rename(DomainAst &domain, ProblemAst &problem,
                   const std::string &label) {
    auto rename = [&](std::string &name) { name = prefixed(label, name); };
    auto rename_type = [&](std::string &type) {
        // `object` collapses into the fresh label type so nothing can unify
        // across merged copies through the shared root.
        if (type == "object")
            type = label;
        else
            type = prefixed(label, type);
    };
    auto rename_typed = [&](TypedName &t) {
        rename(t.name);
        rename_type(t.type);
    };
    auto rename_var_or_const = [&](std::string &term) {
        if (term.empty() || term[0] != '?')
            rename(term);
    };

    for (TypedName &t : domain.types) {
        rename(t.name);
        rename_type(t.type);
    }
    // Fresh root type named by the label itself.
    domain.types.push_back(TypedName{label, "object", {}});
    for (TypedName &c : domain.constants)
        rename_typed(c);
    for (PredicateDecl &p : domain.predicates) {
        rename(p.name);
        for (TypedName &param : p.params)
            rename_type(param.type);
    }
    for (ActionSchema &a : domain.actions) {
        rename(a.name);
        for (TypedName &param : a.params)
            rename_type(param.type);
        for (Literal *lit : [&] {
                 std::vector<Literal *> all;
                 for (Literal &l : a.preconditions)
                     all.push_back(&l);
                 for (Literal &l : a.effects)
                     all.push_back(&l);
                 return all;
             }()) {
            if (!lit->is_equality)
                rename(lit->predicate);
            for (std::string &arg : lit->args)
                rename_var_or_const(arg);
        }
    }

    for (TypedName &o : problem.objects)
        rename_typed(o);
    for (GroundAtom *atom : [&] {
             std::vector<GroundAtom *> all;
             for (GroundAtom &g : problem.init)
                 all.push_back(&g);
             for (GroundAtom &g : problem.goal)
                 all.push_back(&g);
             return all;
         }()) {
        rename(atom->predicate);
        for (std::string &arg : atom->args)
            rename(arg);
    }
    if (!domain.requirements.empty() &&
        std::find(domain.requirements.begin(), domain.requirements.end(),
                  ":typing") == domain.requirements.end())
        domain.requirements.push_back(":typing");
    domain.name = prefixed(label, domain.name);
    problem.name = prefixed(label, problem.name);
    problem.domain_name = prefixed(label, problem.domain_name);
}

MergedSpec merge(const DomainAst &domain1, const ProblemAst &problem1,
                 const DomainAst &domain2, const ProblemAst &problem2,
                 const std::string &label1, const std::string &label2,
                 std::optional<uint64_t> seed) {
    if (label1 == label2)
        throw InputError("merge labels must be distinct");
    DomainAst d1 = domain1, d2 = domain2;
    ProblemAst p1 = problem1, p2 = problem2;
    prefix_rename(d1, p1, label1);
    prefix_rename(d2, p2, label2);

    MergedSpec out;
    out.label1 = label1;
    out.label2 = label2;
    DomainAst &d = out.domain;
    d.name = "mrg-" + d1.name + "-" + d2.name;
    d.requirements = {":strips", ":typing"};
    std::set<std::string> reqs(d1.requirements.begin(), d1.requirements.end());
    reqs.insert(d2.requirements.begin(), d2.requirements.end());
    for (const std::string &r : reqs)
        if (r != ":strips" && r != ":typing")
            d.requirements.push_back(r);

    auto append = [](auto &dst, const auto &a, const auto &b) {
        dst.insert(dst.end(), a.begin(), a.end());
        dst.insert(dst.end(), b.begin(), b.end());
    };
    append(d.types, d1.types, d2.types);
    append(d.constants, d1.constants, d2.constants);
    append(d.predicates, d1.predicates, d2.predicates);
    append(d.actions, d1.actions, d2.actions);

    // Post-prefixing collisions should be impossible; assert anyway.
    std::set<std::string> names;
    auto claim = [&](const std::string &name, const char *what) {
        if (!names.insert(name).second)
            throw InputError(std::string("name collision after prefixing: ") +
                             what + " " + name);
    };
    for (const TypedName &t : d.types)
        claim(t.name, "type");
    names.clear();
    for (const PredicateDecl &p : d.predicates)
        claim(p.name, "predicate");
    names.clear();
    for (const ActionSchema &a : d.actions)
        claim(a.name, "action");
    names.clear();
    for (const TypedName &c : d.constants)
        claim(c.name, "constant");
    for (const TypedName &o : p1.objects)
        claim(o.name, "object");
    for (const TypedName &o : p2.objects)
        claim(o.name, "object");

    d.predicates.push_back(PredicateDecl{"mrg-winning", {}, {}});
    auto bridge = [&](const std::string &label, const ProblemAst &p) {
        ActionSchema a;
        a.name = "mrg-goal-" + label;
        for (const GroundAtom &g : p.goal) {
            Literal lit;
            lit.predicate = g.predicate;
            lit.args = g.args;
            a.preconditions.push_back(lit);
        }
        Literal win;
        win.predicate = "mrg-winning";
        a.effects.push_back(win);
        return a;
    };
    d.actions.push_back(bridge(label1, p1));
    d.actions.push_back(bridge(label2, p2));

    // Bridge preconditions mention problem objects, so all objects are
    // promoted to domain constants.
    append(d.constants, p1.objects, p2.objects);

    ProblemAst &p = out.problem;
    p.name = "mrg-" + p1.name + "-" + p2.name;
    p.domain_name = d.name;
    append(p.init, p1.init, p2.init);
    p.goal.push_back(GroundAtom{"mrg-winning", {}, {}});

    nlohmann::json manifest;
    manifest["sources"] = {
        {{"domain", domain1.name}, {"problem", problem1.name}, {"label", label1}},
        {{"domain", domain2.name}, {"problem", problem2.name}, {"label", label2}},
    };
    manifest["labels"] = {label1, label2};
    if (seed)
        manifest["seed"] = *seed;
    else
        manifest["seed"] = nullptr;
    out.manifest_json = manifest.dump(2) + "\n";
    return out;
}

} // namespace relplan
