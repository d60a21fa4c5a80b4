#!/usr/bin/env python3
"""Regenerate the bundled example documents under fixtures/.

With --check, verify the files on disk are byte-identical to what the
builders produce (useful in CI) instead of rewriting them.
"""

import argparse
import sys
from pathlib import Path

from collapsar.documents import dump_document, payload_for
from collapsar import fixtures

BUILDERS = {
    "s0_cat": fixtures.s0_category,
    "s1_cat": fixtures.s1_category,
    "chain3_cat": fixtures.chain3_category,
    "point_delta": fixtures.point_delta,
    "s1_delta": fixtures.s1_delta,
    "s2_delta": fixtures.s2_delta,
    "disc_delta": fixtures.disc_delta,
    "full_triangle": fixtures.full_triangle,
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path,
                    default=Path(__file__).resolve().parent.parent / "fixtures")
    ap.add_argument("--check", action="store_true",
                    help="fail on drift instead of rewriting")
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    drifted = []
    for name, build in BUILDERS.items():
        path = args.out / f"{name}.json"
        text = dump_document(payload_for(build()))
        if args.check:
            if not path.exists() or path.read_text() != text:
                drifted.append(path)
            continue
        path.write_text(text)
        print(f"wrote {path}")
    if drifted:
        for path in drifted:
            print(f"drift: {path}", file=sys.stderr)
        return 1
    if args.check:
        print(f"{len(BUILDERS)} fixture files match their builders")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
