#ifndef RELPLAN_MERGE_H
#define RELPLAN_MERGE_H

#include "relplan/pddl_ast.h"

#include <optional>
#include <string>

namespace relplan {

// Prefixes every domain- or problem-specific name (types, constants,
// predicates, actions, objects) with "<label>-". A fresh root type named
// after the label is introduced and replaces both untyped declarations and
// explicit uses of `object`, so merged copies can never unify through the
// shared root type.
void prefix_rename(DomainAst &domain, ProblemAst &problem,
                   const std::string &label);

struct MergedSpec {
    DomainAst domain;
    ProblemAst problem;
    std::string label1, label2;
    std::string manifest_json; // sources, labels, seed
};

// Non-interacting union of two prefixed sources plus the two bridge
// actions achieving the single `mrg-winning` goal. `seed` is recorded in
// the manifest when the pairing came from a seeded suite generator.
MergedSpec merge(const DomainAst &domain1, const ProblemAst &problem1,
                 const DomainAst &domain2, const ProblemAst &problem2,
                 const std::string &label1, const std::string &label2,
                 std::optional<uint64_t> seed = std::nullopt);

} // namespace relplan

#endif
