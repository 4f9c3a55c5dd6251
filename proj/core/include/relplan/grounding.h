#ifndef RELPLAN_GROUNDING_H
#define RELPLAN_GROUNDING_H

#include "relplan/pddl_ast.h"
#include "relplan/task.h"

#include <cstdint>

namespace relplan {

struct GroundConfig {
    // Refuse to ground when the number of ground actions would exceed this.
    int64_t max_actions = 5'000'000;
};

// Instantiates every schema over type-compatible object tuples, honoring
// equality constraints. The fact universe F holds every fact mentioned by
// any ground action, the initial state, or the goal, in first-mention
// order; that order is deterministic for fixed input files.
Task ground(const DomainAst &domain, const ProblemAst &problem,
            const GroundConfig &config = {});

} // namespace relplan

#endif
