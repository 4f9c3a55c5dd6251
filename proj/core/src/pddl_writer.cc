#include "relplan/pddl.h"

#include <sstream>

namespace relplan {

namespace {

void write_typed_list(std::ostream &out, const std::vector<TypedName> &list) {
    for (size_t i = 0; i < list.size(); ++i) {
        if (i)
            out << " ";
        out << list[i].name;
        if (list[i].type != "object")
            out << " - " << list[i].type;
    }
}

void write_literal(std::ostream &out, const Literal &lit) {
    if (lit.negated)
        out << "(not ";
    out << "(" << (lit.is_equality ? "=" : lit.predicate);
    for (const std::string &a : lit.args)
        out << " " << a;
    out << ")";
    if (lit.negated)
        out << ")";
}

void write_conjunction(std::ostream &out, const std::vector<Literal> &lits) {
    out << "(and";
    for (const Literal &lit : lits) {
        out << " ";
        write_literal(out, lit);
    }
    out << ")";
}

void write_atom(std::ostream &out, const GroundAtom &atom) {
    out << "(" << atom.predicate;
    for (const std::string &a : atom.args)
        out << " " << a;
    out << ")";
}

} // namespace

std::string write_domain(const DomainAst &d) {
    std::ostringstream out;
    out << "(define (domain " << d.name << ")\n";
    if (!d.requirements.empty()) {
        out << "  (:requirements";
        for (const std::string &r : d.requirements)
            out << " " << r;
        out << ")\n";
    }
    if (!d.types.empty()) {
        out << "  (:types ";
        write_typed_list(out, d.types);
        out << ")\n";
    }
    if (!d.constants.empty()) {
        out << "  (:constants ";
        write_typed_list(out, d.constants);
        out << ")\n";
    }
    out << "  (:predicates";
    for (const PredicateDecl &p : d.predicates) {
        out << "\n    (" << p.name;
        if (!p.params.empty()) {
            out << " ";
            write_typed_list(out, p.params);
        }
        out << ")";
    }
    out << ")\n";
    for (const ActionSchema &a : d.actions) {
        out << "  (:action " << a.name << "\n";
        out << "    :parameters (";
        write_typed_list(out, a.params);
        out << ")\n    :precondition ";
        write_conjunction(out, a.preconditions);
        out << "\n    :effect ";
        write_conjunction(out, a.effects);
        out << ")\n";
    }
    out << ")\n";
    return out.str();
}

std::string write_problem(const ProblemAst &p) {
    std::ostringstream out;
    out << "(define (problem " << p.name << ")\n";
    out << "  (:domain " << p.domain_name << ")\n";
    if (!p.objects.empty()) {
        out << "  (:objects ";
        write_typed_list(out, p.objects);
        out << ")\n";
    }
    out << "  (:init";
    for (const GroundAtom &atom : p.init) {
        out << " ";
        write_atom(out, atom);
    }
    out << ")\n";
    out << "  (:goal (and";
    for (const GroundAtom &atom : p.goal) {
        out << " ";
        write_atom(out, atom);
    }
    out << "))\n";
    out << ")\n";
    return out.str();
}

} // namespace relplan
