#include "relplan/landmarks.h"

#include "../support/test_util.h"
#include "doctest.h"

using namespace relplan;
using namespace relplan::testing;

namespace {

Task compiled_data_task(const std::string &stem) {
    return add_goal_action(delete_relax(
        load_data_task(stem + "-domain.pddl", stem + "-problem.pddl")));
}

} // namespace

TEST_CASE("chain landmarks are the whole chain") {
    Task t = compiled_data_task("pool/chain05");
    LandmarkSet lms = extract_landmarks(t);
    // c1..c5 plus success; c1 (init), c5 (goal) and success are trivial.
    CHECK(lms.landmarks.size() == 6);
    CHECK(lms.nontrivial.count() == 3);
    for (int i = 2; i <= 4; ++i)
        CHECK(lms.nontrivial.test(t.find_fact("c" + std::to_string(i))));
    CHECK(lms.trivial.test(t.find_fact("c1")));
    CHECK(lms.trivial.test(t.find_fact("c5")));
    CHECK(lms.trivial.test(t.success_fact));
}

TEST_CASE("two-path middles are not landmarks") {
    Task t = compiled_data_task("pool/twopath35");
    LandmarkSet lms = extract_landmarks(t);
    CHECK_FALSE(lms.is_landmark.test(t.find_fact("a1")));
    CHECK_FALSE(lms.is_landmark.test(t.find_fact("b1")));
    CHECK(lms.is_landmark.test(t.find_fact("t")));
    CHECK(lms.is_landmark.test(t.find_fact("s")));
}

TEST_CASE("merged tasks have no nontrivial landmarks") {
    Task t = compiled_data_task("suites/merged/merged00");
    LandmarkSet lms = extract_landmarks(t);
    CHECK(lms.nontrivial.count() == 0);
}

TEST_CASE("extraction requires a relaxed goal-compiled task") {
    Task plain = load_data_task("pool/chain05-domain.pddl",
                                "pool/chain05-problem.pddl");
    CHECK_THROWS(extract_landmarks(plain));
}

TEST_CASE("relaxed reachability with banned achievers") {
    Task t = compiled_data_task("pool/chain05");
    // Goal unreachable once the single achiever chain of c3 is cut.
    CHECK(relaxed_reachable(t, t.init, -1));
    CHECK_FALSE(relaxed_reachable(t, t.init, t.find_fact("c3")));
}

TEST_CASE("landmark counter accepts along a plan") {
    Task original = load_data_task("pool/chain05-domain.pddl",
                                   "pool/chain05-problem.pddl");
    Task t = compiled_data_task("pool/chain05");
    LandmarkCounter counter(t, extract_landmarks(t));

    State s = original.init;
    FactSet mask = counter.initial_mask(s);
    int h = counter.count(s, mask);
    // 4 unaccepted landmarks at init: c2..c5 plus success, minus none
    // accepted; c1 is accepted immediately.
    CHECK(h == 5);
    for (int i = 1; i <= 4; ++i) {
        int applied = -1;
        for (ActionId a = 0; a < original.num_actions(); ++a)
            if (original.action_name(a) ==
                "(step" + std::to_string(i) + ")")
                applied = a;
        REQUIRE(applied >= 0);
        s = apply(original.actions[applied], s);
        mask = counter.extend_mask(mask, s);
        int next = counter.count(s, mask);
        // The final step accepts c5 and simultaneously satisfies the goal,
        // so the synthetic success landmark is reached in the same state.
        CHECK(next == (i < 4 ? h - 1 : h - 2));
        h = next;
    }
    CHECK(h == 0);
}
