#!/usr/bin/env python3
"""Run the shipped reference rubric over a batch of criterion-score triples.

Prints one line per project with the fired rules, the defuzzified success
score and its label.  Useful as a smoke test and as a quick look at how
the rule base behaves across the score space.

Usage:
    python3 scripts/simulate.py                 # built-in demo triples
    python3 scripts/simulate.py 61 74 68        # one triple from the CLI
    python3 scripts/simulate.py --sweep 20      # a uniform grid sweep
"""

import argparse
import itertools

from projeval.rubric import ProjectScores, evaluate_project, load_reference_rubric

DEMO = [
    (61.0, 74.0, 68.0),
    (100.0, 82.0, 84.0),
    (67.0, 34.0, 100.0),
    (100.0, 63.0, 100.0),
    (0.0, 0.0, 0.0),
    (100.0, 100.0, 100.0),
]


def describe(rubric, triple, resolution):
    result = evaluate_project(
        ProjectScores(*triple), list(rubric.criteria), rubric.rule_base, resolution
    )
    rules = ", ".join(f"{rid}:{s:.2f}" for rid, s in result.fired_rules)
    print(
        f"clean={triple[0]:6.1f} func={triple[1]:6.1f} inh={triple[2]:6.1f}"
        f"  ->  {result.success_score:6.2f} ({result.label})  rules [{rules}]"
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("scores", nargs="*", type=float, help="clean-code, functionality and inheritance scores")
    parser.add_argument("--sweep", type=int, metavar="N", help="evaluate an NxNxN uniform grid instead")
    parser.add_argument("--resolution", type=int, default=1001)
    args = parser.parse_args()

    rubric = load_reference_rubric()
    if args.sweep:
        steps = [100.0 * i / (args.sweep - 1) for i in range(args.sweep)]
        triples = itertools.product(steps, repeat=3)
    elif args.scores:
        if len(args.scores) != 3:
            parser.error("expected exactly three scores")
        triples = [tuple(args.scores)]
    else:
        triples = DEMO
    for triple in triples:
        describe(rubric, triple, args.resolution)


if __name__ == "__main__":
    main()
