#ifndef RELPLAN_PDDL_AST_H
#define RELPLAN_PDDL_AST_H

#include <string>
#include <vector>

namespace relplan {

// ASTs keep plain lower-cased strings so that the merge tool can rename
// symbols and re-serialize without touching any interning machinery.

struct SourcePos {
    int line = 0;
    int column = 0;
};

struct TypedName {
    std::string name;
    std::string type = "object";
    SourcePos pos;
};

struct PredicateDecl {
    std::string name;
    std::vector<TypedName> params;
    SourcePos pos;
};

// One conjunct of a precondition or effect. Equality literals only occur
// in preconditions and constrain the grounding statically.
struct Literal {
    bool negated = false;
    bool is_equality = false;
    std::string predicate; // empty when is_equality
    std::vector<std::string> args; // variables (leading '?') or constants
    SourcePos pos;
};

struct ActionSchema {
    std::string name;
    std::vector<TypedName> params;
    std::vector<Literal> preconditions;
    std::vector<Literal> effects;
    SourcePos pos;
};

struct DomainAst {
    std::string name;
    std::vector<std::string> requirements;
    std::vector<TypedName> types;
    std::vector<TypedName> constants;
    std::vector<PredicateDecl> predicates;
    std::vector<ActionSchema> actions;
};

struct GroundAtom {
    std::string predicate;
    std::vector<std::string> args;
    SourcePos pos;
};

struct ProblemAst {
    std::string name;
    std::string domain_name;
    std::vector<TypedName> objects;
    std::vector<GroundAtom> init;
    std::vector<GroundAtom> goal;
};

} // namespace relplan

#endif
