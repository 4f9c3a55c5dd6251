#ifndef RELPLAN_LANDMARKS_H
#define RELPLAN_LANDMARKS_H

#include "relplan/task.h"

#include <vector>

namespace relplan {

// Fact landmarks of the delete relaxation, split into trivial (true in I
// or part of the goal) and nontrivial ones.
struct LandmarkSet {
    std::vector<FactId> landmarks; // ascending fact id
    FactSet is_landmark;
    FactSet trivial;
    FactSet nontrivial;
};

// Exact extraction by achiever deletion: fact l is a landmark iff the
// relaxed task cannot reach the goal once every action achieving l is
// removed. Facts true in I are trivial landmarks by definition. Requires a
// relaxed, goal-compiled task; triviality is judged against I, the
// pre-compilation goal, and the success fact.
LandmarkSet extract_landmarks(const Task &task);

// Relaxed reachability fixpoint from `from`, with actions achieving
// `banned_fact` removed (pass -1 to ban nothing).
bool relaxed_reachable(const Task &task, const FactSet &from,
                       FactId banned_fact);

// Path-dependent landmark accounting. A landmark is accepted once true on
// the path; goal landmarks that are accepted but currently false count
// again ("required again"). The success fact stands for goal satisfaction.
class LandmarkCounter {
public:
    LandmarkCounter(const Task &compiled_task, LandmarkSet lms);

    const LandmarkSet &landmarks() const { return lms_; }

    // Mask bits index lms_.landmarks.
    FactSet initial_mask(const State &state) const;
    FactSet extend_mask(const FactSet &parent_mask, const State &state) const;
    int count(const State &state, const FactSet &mask) const;

private:
    const Task *task_;
    LandmarkSet lms_;
    std::vector<char> is_goal_lm_; // per landmark index

    bool landmark_true_in(const State &state, int index) const;
};

} // namespace relplan

#endif
