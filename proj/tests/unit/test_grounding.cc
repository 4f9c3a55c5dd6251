#include "relplan/errors.h"
#include "relplan/grounding.h"
#include "relplan/pddl.h"

#include "doctest.h"

using namespace relplan;

namespace {

Task make(const std::string &domain, const std::string &problem,
          const GroundConfig &config = {}) {
    return ground(parse_domain(domain), parse_problem(problem), config);
}

const char *kPairDomain =
    "(define (domain pair) (:requirements :strips)"
    " (:predicates (link ?x ?y))"
    " (:action connect :parameters (?x ?y)"
    "  :precondition () :effect (link ?x ?y)))";

const char *kPairProblem =
    "(define (problem pair-1) (:domain pair)"
    " (:objects a b c) (:init) (:goal (link a b)))";

} // namespace

TEST_CASE("binary schema over 3 objects grounds to 9 actions") {
    Task t = make(kPairDomain, kPairProblem);
    CHECK(t.num_actions() == 9);
    CHECK(t.num_facts() == 9);
}

TEST_CASE("equality constraint filters tuples statically") {
    Task t = make(
        "(define (domain pair) (:requirements :strips :equality)"
        " (:predicates (link ?x ?y))"
        " (:action connect :parameters (?x ?y)"
        "  :precondition (not (= ?x ?y)) :effect (link ?x ?y)))",
        kPairProblem);
    CHECK(t.num_actions() == 6); // 3 * 2 ordered distinct pairs
}

TEST_CASE("typing restricts instantiation, with supertype widening") {
    Task t = make(
        "(define (domain tdom) (:requirements :strips :typing)"
        " (:types truck car - vehicle)"
        " (:predicates (moved ?v - vehicle) (fueled ?t - truck))"
        " (:action fuel :parameters (?t - truck)"
        "  :precondition () :effect (fueled ?t))"
        " (:action move :parameters (?v - vehicle)"
        "  :precondition () :effect (moved ?v)))",
        "(define (problem t1) (:domain tdom)"
        " (:objects t1 t2 - truck c1 - car)"
        " (:init) (:goal (moved c1)))");
    // fuel: 2 trucks; move: all 3 vehicles.
    CHECK(t.num_actions() == 5);
}

TEST_CASE("constants participate like objects") {
    Task t = make(
        "(define (domain cdom) (:requirements :strips)"
        " (:constants home)"
        " (:predicates (at ?x ?place))"
        " (:action go-home :parameters (?x)"
        "  :precondition () :effect (at ?x home)))",
        "(define (problem c1) (:domain cdom)"
        " (:objects me) (:init) (:goal (at me home)))");
    // ?x ranges over {home, me}.
    CHECK(t.num_actions() == 2);
    CHECK(t.find_fact("(at me home)") >= 0);
}

TEST_CASE("fact universe is first-mention ordered and deterministic") {
    Task t1 = make(kPairDomain, kPairProblem);
    Task t2 = make(kPairDomain, kPairProblem);
    REQUIRE(t1.num_facts() == t2.num_facts());
    for (FactId f = 0; f < t1.num_facts(); ++f)
        CHECK(t1.fact_name(f) == t2.fact_name(f));
    // Init and goal facts are interned before action effects.
    CHECK(t1.find_fact("(link a b)") == 0);
}

TEST_CASE("negative preconditions survive grounding") {
    Task t = make(
        "(define (domain ndom) (:requirements :strips :negative-preconditions)"
        " (:predicates (p) (q))"
        " (:action a :parameters ()"
        "  :precondition (and (p) (not (q))) :effect (q)))",
        "(define (problem n1) (:domain ndom) (:init (p)) (:goal (q)))");
    REQUIRE(t.num_actions() == 1);
    CHECK(t.actions[0].pre_neg.count() == 1);
    CHECK(applicable(t.actions[0], t.init));
    State s = apply(t.actions[0], t.init);
    CHECK_FALSE(applicable(t.actions[0], s));
}

TEST_CASE("grounding blow-up guard") {
    GroundConfig config;
    config.max_actions = 5;
    CHECK_THROWS_AS(make(kPairDomain, kPairProblem, config), InputError);
}

TEST_CASE("undeclared names are input errors") {
    CHECK_THROWS_AS(make(kPairDomain,
                         "(define (problem bad) (:domain pair)"
                         " (:objects a) (:init) (:goal (nosuch a)))"),
                    InputError);
    CHECK_THROWS_AS(make("(define (domain d) (:requirements :strips)"
                         " (:predicates (p ?x))"
                         " (:action a :parameters ()"
                         "  :precondition () :effect (p ?y)))",
                         "(define (problem b) (:domain d)"
                         " (:objects o) (:init) (:goal (p o)))"),
                    InputError);
}
