#include "relplan/landmarks.h"

#include <stdexcept>

namespace relplan {

bool relaxed_reachable(const Task &task, const FactSet &from,
                       FactId banned_fact) {
    FactSet reached = from;
    reached.resize(task.num_facts());
    bool changed = true;
    while (changed) {
        changed = false;
        for (const GroundAction &a : task.actions) {
            if (banned_fact >= 0 && a.eff_pos.test(banned_fact))
                continue;
            if (!a.pre_pos.subset_of(reached))
                continue;
            FactSet next = reached;
            next |= a.eff_pos;
            if (!(next == reached)) {
                reached = std::move(next);
                changed = true;
            }
        }
        if (task.goal.subset_of(reached))
            return true;
    }
    return task.goal.subset_of(reached);
}

LandmarkSet extract_landmarks(const Task &task) {
    if (!task.relaxed || !task.goal_compiled)
        throw std::logic_error(
            "landmark extraction requires a relaxed, goal-compiled task");
    int n = task.num_facts();
    LandmarkSet out;
    out.is_landmark = FactSet(n);
    out.trivial = FactSet(n);
    out.nontrivial = FactSet(n);
    for (FactId f = 0; f < n; ++f) {
        bool landmark;
        if (task.init.test(f))
            landmark = true;
        else
            landmark = !relaxed_reachable(task, task.init, f);
        if (!landmark)
            continue;
        out.landmarks.push_back(f);
        out.is_landmark.set(f);
        bool trivial = task.init.test(f) || task.original_goal.test(f) ||
                       f == task.success_fact;
        (trivial ? out.trivial : out.nontrivial).set(f);
    }
    return out;
}

LandmarkCounter::LandmarkCounter(const Task &compiled_task, LandmarkSet lms)
    : task_(&compiled_task), lms_(std::move(lms)) {
    for (FactId f : lms_.landmarks)
        is_goal_lm_.push_back(task_->original_goal.test(f) ||
                              f == task_->success_fact);
}

bool LandmarkCounter::landmark_true_in(const State &state, int index) const {
    FactId f = lms_.landmarks[index];
    // States come from the original task, which has no success bit; success
    // is true exactly when the pre-compilation goal holds.
    if (f == task_->success_fact)
        return task_->original_goal.subset_of(state);
    return state.test(f);
}

FactSet LandmarkCounter::initial_mask(const State &state) const {
    FactSet mask(static_cast<int>(lms_.landmarks.size()));
    for (size_t i = 0; i < lms_.landmarks.size(); ++i)
        if (landmark_true_in(state, static_cast<int>(i)))
            mask.set(static_cast<int>(i));
    return mask;
}

FactSet LandmarkCounter::extend_mask(const FactSet &parent_mask,
                                     const State &state) const {
    FactSet mask = parent_mask;
    for (size_t i = 0; i < lms_.landmarks.size(); ++i)
        if (!mask.test(static_cast<int>(i)) &&
            landmark_true_in(state, static_cast<int>(i)))
            mask.set(static_cast<int>(i));
    return mask;
}

int LandmarkCounter::count(const State &state, const FactSet &mask) const {
    int h = 0;
    for (size_t i = 0; i < lms_.landmarks.size(); ++i) {
        bool accepted = mask.test(static_cast<int>(i));
        if (!accepted)
            ++h;
        else if (is_goal_lm_[i] && !landmark_true_in(state, static_cast<int>(i)))
            ++h; // required again
    }
    return h;
}

} // namespace relplan
