#ifndef RELPLAN_PDDL_H
#define RELPLAN_PDDL_H

#include "relplan/pddl_ast.h"

#include <string_view>

namespace relplan {

// Supported requirement flags: :strips, :typing, :negative-preconditions,
// :equality. Anything else raises UnsupportedRequirementError naming the
// flag. Symbols are ASCII and normalized to lower case.
DomainAst parse_domain(std::string_view text);
ProblemAst parse_problem(std::string_view text);

std::string write_domain(const DomainAst &domain);
std::string write_problem(const ProblemAst &problem);

} // namespace relplan

#endif
