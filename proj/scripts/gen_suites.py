#!/usr/bin/env python3
"""Regenerate the shipped problem suites under data/.

Standard suite: single chains with a short auxiliary chain that offers an
alternative achiever for a mid-chain fact, so some facts keep several
achievers while the tail of the chain stays a landmark chain.

Pool: plain chains and two-path problems used as sources for the merged
suite (the merged suite itself is produced by `relplan gen-suite`).
"""

import os

ROOT = os.path.join(os.path.dirname(__file__), "..", "data")


def write(path, text):
    with open(path, "w") as f:
        f.write(text)


def chain_domain(name, n):
    lines = [f"(define (domain {name})", "  (:requirements :strips)"]
    preds = " ".join(f"(c{i})" for i in range(1, n + 1))
    lines.append(f"  (:predicates {preds})")
    for i in range(1, n):
        lines += [
            f"  (:action step{i}",
            "    :parameters ()",
            f"    :precondition (c{i})",
            f"    :effect (c{i + 1}))",
        ]
    lines[-1] += ")"
    return "\n".join(lines) + "\n"


def chain_problem(name, n):
    return (
        f"(define (problem {name}-problem)\n"
        f"  (:domain {name})\n"
        f"  (:init (c1))\n"
        f"  (:goal (c{n})))\n"
    )


def dchain_domain(name, n, k):
    """Chain c1..cn with unreachable bypass achievers and k noise facts.

    Every c(i+1) has a second achiever gated on the unreachable fact u, so
    the chain facts stay landmarks (the bypass can never fire) while the
    noise facts x1..xk riding on the bypasses look attractive without
    being useful.
    """
    lines = [f"(define (domain {name})", "  (:requirements :strips)"]
    preds = [f"(c{i})" for i in range(1, n + 1)]
    preds += ["(u)"]
    preds += [f"(x{j})" for j in range(1, k + 1)]
    lines.append("  (:predicates " + " ".join(preds) + ")")
    for i in range(1, n):
        lines += [
            f"  (:action step{i}",
            "    :parameters ()",
            f"    :precondition (c{i})",
            f"    :effect (c{i + 1}))",
        ]
        x = i % k + 1
        lines += [
            f"  (:action bypass{i}",
            "    :parameters ()",
            f"    :precondition (and (u) (x{x}))",
            f"    :effect (c{i + 1}))",
        ]
    for j in range(1, k + 1):
        lines += [
            f"  (:action get-x{j}",
            "    :parameters ()",
            "    :precondition ()",
            f"    :effect (x{j}))",
        ]
    lines[-1] += ")"
    return "\n".join(lines) + "\n"


def dchain_problem(name, n):
    return (
        f"(define (problem {name}-problem)\n"
        f"  (:domain {name})\n"
        f"  (:init (c1))\n"
        f"  (:goal (c{n})))\n"
    )


def twopath_domain(name, a, b):
    """init s, goal t, reachable via an a-step path or a b-step path."""
    lines = [f"(define (domain {name})", "  (:requirements :strips)"]
    preds = ["(s)", "(t)"]
    preds += [f"(a{i})" for i in range(1, a + 1)]
    preds += [f"(b{i})" for i in range(1, b + 1)]
    lines.append("  (:predicates " + " ".join(preds) + ")")

    def path(prefix, length):
        out = []
        prev = "s"
        for i in range(1, length + 1):
            out += [
                f"  (:action {prefix}step{i}",
                "    :parameters ()",
                f"    :precondition ({prev})",
                f"    :effect ({prefix}{i}))",
            ]
            prev = f"{prefix}{i}"
        out += [
            f"  (:action {prefix}finish",
            "    :parameters ()",
            f"    :precondition ({prev})",
            "    :effect (t))",
        ]
        return out

    lines += path("a", a)
    lines += path("b", b)
    lines[-1] += ")"
    return "\n".join(lines) + "\n"


def twopath_problem(name):
    return (
        f"(define (problem {name}-problem)\n"
        f"  (:domain {name})\n"
        f"  (:init (s))\n"
        f"  (:goal (t)))\n"
    )


def main():
    standard = os.path.join(ROOT, "suites", "standard")
    pool = os.path.join(ROOT, "pool")
    os.makedirs(standard, exist_ok=True)
    os.makedirs(pool, exist_ok=True)

    # Standard suite: 10 distractor chains of growing length.
    for idx, n in enumerate(range(6, 16)):
        name = f"dchain{idx:02d}"
        write(os.path.join(standard, f"{name}-domain.pddl"),
              dchain_domain(name, n, 4))
        write(os.path.join(standard, f"{name}-problem.pddl"),
              dchain_problem(name, n))

    # Pool for the merged suite: plain chains and two-path problems.
    for n in range(5, 13):
        name = f"chain{n:02d}"
        write(os.path.join(pool, f"{name}-domain.pddl"),
              chain_domain(name, n))
        write(os.path.join(pool, f"{name}-problem.pddl"),
              chain_problem(name, n))
    for a, b in [(3, 5), (4, 4), (2, 6), (5, 7)]:
        name = f"twopath{a}{b}"
        write(os.path.join(pool, f"{name}-domain.pddl"),
              twopath_domain(name, a, b))
        write(os.path.join(pool, f"{name}-problem.pddl"),
              twopath_problem(name))


if __name__ == "__main__":
    main()
