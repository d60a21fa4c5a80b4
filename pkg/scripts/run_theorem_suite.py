#!/usr/bin/env python3
"""Sweep every structural check over seeded random corpora and tabulate.

Each theorem tag is run against `--count` instances of the matching kind
(categories or complexes), seeds `--seed .. --seed+count-1`.  Any
counterexample is dumped as replayable canonical JSON and the run exits 1.

    python3 scripts/run_theorem_suite.py --count 200
    python3 scripts/run_theorem_suite.py --tags B_minimal adjunction --seed 17
"""

import argparse
import json
import sys
import time

from collapsar import (
    GeneratorParams,
    OracleBudget,
    check_theorem,
    random_acyclic_category,
    random_delta_complex,
)
from collapsar.oracles import _CAT_CHECKS, THEOREM_TAGS


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200,
                    help="instances per tag (default 200)")
    ap.add_argument("--seed", type=int, default=0, help="first seed")
    ap.add_argument("--tags", nargs="+", default=list(THEOREM_TAGS),
                    choices=list(THEOREM_TAGS), metavar="TAG")
    ap.add_argument("--budget-secs", type=float, default=None,
                    help="per-check time budget override")
    args = ap.parse_args()

    budget = None if args.budget_secs is None else \
        OracleBudget(seconds=args.budget_secs)
    width = max(len(t) for t in args.tags)
    failures = []
    for tag in args.tags:
        make = random_acyclic_category if tag in _CAT_CHECKS \
            else random_delta_complex
        t0 = time.monotonic()
        holds = 0
        for k in range(args.count):
            instance = make(GeneratorParams(seed=args.seed + k))
            report = check_theorem(tag, instance, budget)
            if report.holds:
                holds += 1
            else:
                failures.append(report)
        dt = time.monotonic() - t0
        print(f"{tag:<{width}}  {holds:>4}/{args.count:<4} hold  {dt:7.2f}s")

    if failures:
        print(f"\n{len(failures)} counterexample(s):", file=sys.stderr)
        for r in failures:
            print(json.dumps(r.to_payload(), indent=2), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
