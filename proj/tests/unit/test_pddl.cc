#include "relplan/errors.h"
#include "relplan/pddl.h"

#include "doctest.h"

using namespace relplan;

namespace {

const char *kToyDomain = R"((define (domain toy)
  (:requirements :strips :negative-preconditions)
  (:predicates (clear ?x) (held ?x))
  (:action pick
    :parameters (?x)
    :precondition (and (clear ?x) (not (held ?x)))
    :effect (and (held ?x) (not (clear ?x)))))
)";

const char *kToyProblem = R"((define (problem toy-1)
  (:domain toy)
  (:objects a b)
  (:init (clear a) (clear b))
  (:goal (held a)))
)";

} // namespace

TEST_CASE("domain parsing") {
    DomainAst d = parse_domain(kToyDomain);
    CHECK(d.name == "toy");
    REQUIRE(d.predicates.size() == 2);
    CHECK(d.predicates[0].name == "clear");
    CHECK(d.predicates[0].params.size() == 1);
    REQUIRE(d.actions.size() == 1);
    const ActionSchema &a = d.actions[0];
    CHECK(a.name == "pick");
    REQUIRE(a.params.size() == 1);
    CHECK(a.params[0].name == "?x");
    REQUIRE(a.preconditions.size() == 2);
    CHECK_FALSE(a.preconditions[0].negated);
    CHECK(a.preconditions[1].negated);
    REQUIRE(a.effects.size() == 2);
    CHECK(a.effects[1].negated);
}

TEST_CASE("problem parsing") {
    ProblemAst p = parse_problem(kToyProblem);
    CHECK(p.name == "toy-1");
    CHECK(p.domain_name == "toy");
    CHECK(p.objects.size() == 2);
    CHECK(p.init.size() == 2);
    REQUIRE(p.goal.size() == 1);
    CHECK(p.goal[0].predicate == "held");
}

TEST_CASE("symbols are case-normalized") {
    DomainAst d = parse_domain(
        "(define (domain CaseTest) (:requirements :strips)"
        " (:predicates (P ?X)))");
    CHECK(d.name == "casetest");
    CHECK(d.predicates[0].name == "p");
    CHECK(d.predicates[0].params[0].name == "?x");
}

TEST_CASE("unsupported requirement is rejected by flag name") {
    try {
        parse_domain("(define (domain x) (:requirements :strips :adl))");
        FAIL("expected UnsupportedRequirementError");
    } catch (const UnsupportedRequirementError &e) {
        CHECK(std::string(e.what()).find(":adl") != std::string::npos);
    }
}

TEST_CASE("parse errors carry position") {
    try {
        parse_domain("(define (domain x)\n  (:predicates (p)");
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(e.line >= 1);
    }
    CHECK_THROWS_AS(parse_domain("(define (domain x) non-ascii \xc3\xa9)"),
                    ParseError);
}

TEST_CASE("negative goals are rejected") {
    CHECK_THROWS_AS(
        parse_problem("(define (problem p) (:domain d) (:init)"
                      " (:goal (not (q))))"),
        ParseError);
}

TEST_CASE("equality literals only in preconditions, arity 2") {
    DomainAst d = parse_domain(
        "(define (domain x) (:requirements :strips :equality)"
        " (:predicates (p ?a))"
        " (:action a :parameters (?a ?b)"
        "  :precondition (and (p ?a) (not (= ?a ?b)))"
        "  :effect (p ?b)))");
    REQUIRE(d.actions[0].preconditions.size() == 2);
    CHECK(d.actions[0].preconditions[1].is_equality);
    CHECK_THROWS_AS(
        parse_domain("(define (domain x) (:requirements :strips :equality)"
                     " (:predicates (p ?a))"
                     " (:action a :parameters (?a)"
                     "  :precondition (p ?a) :effect (= ?a ?a)))"),
        ParseError);
}

TEST_CASE("typed lists") {
    DomainAst d = parse_domain(
        "(define (domain x) (:requirements :strips :typing)"
        " (:types truck car - vehicle)"
        " (:predicates (at ?v - vehicle))"
        " (:constants t1 - truck)"
        " (:action go :parameters (?v - vehicle)"
        "  :precondition () :effect (at ?v)))");
    REQUIRE(d.types.size() >= 2);
    CHECK(d.predicates[0].params[0].type == "vehicle");
    CHECK(d.constants[0].type == "truck");
}

TEST_CASE("writer round-trips through the parser") {
    DomainAst d1 = parse_domain(kToyDomain);
    ProblemAst p1 = parse_problem(kToyProblem);
    std::string dom_text = write_domain(d1);
    std::string prob_text = write_problem(p1);
    DomainAst d2 = parse_domain(dom_text);
    ProblemAst p2 = parse_problem(prob_text);
    // Serialization is a fixed point after one round.
    CHECK(write_domain(d2) == dom_text);
    CHECK(write_problem(p2) == prob_text);
    CHECK(d2.name == d1.name);
    CHECK(d2.actions.size() == d1.actions.size());
    CHECK(p2.init.size() == p1.init.size());
}
