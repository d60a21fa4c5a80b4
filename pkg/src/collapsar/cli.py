"""Command-line surface: JSON results on stdout, human summaries on stderr.

Exit codes: 0 success, 1 domain errors (reported as {"error": {...}} JSON,
never a traceback), 2 usage errors (argparse).  Any document argument may be
`-` for stdin, so stages pipe together.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .categories import AcyclicCategory, are_isomorphic_cat, core_category, \
    underlying_poset
from .complexes import DeltaComplex, are_isomorphic_delta, \
    core_delta, find_domination
from .documents import (
    dump_document,
    load_document,
    payload_for,
    render_token,
)
from .errors import CollapsarError
from .nerve import classifying_space, face_poset_category, sd_category, sd_delta
from .oracles import (
    GeneratorParams,
    OracleBudget,
    check_theorem,
    random_acyclic_category,
    random_delta_complex,
    _CAT_CHECKS,
    _Deadline,
    _DELTA_CHECKS,
)
from .simple_collapse import (
    elementary_simple_collapse,
    euler_characteristic,
    free_faces,
    strong_to_simple,
)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load(path: str):
    return load_document(_read(path))


def _kind(value) -> str:
    if isinstance(value, AcyclicCategory):
        return "category"
    if isinstance(value, DeltaComplex):
        return "complex"
    return "map"


def _budget() -> OracleBudget:
    secs = os.environ.get("COLLAPSAR_BUDGET_SECS")
    if secs is None:
        return OracleBudget()
    return OracleBudget(seconds=float(secs))


def _render_dict(d):
    return {render_token(k): render_token(v) for k, v in d.items()}


# -- subcommands --------------------------------------------------------------


def cmd_validate(args):
    value = _load(args.doc)
    kind = _kind(value)
    if kind == "category":
        counts = {"objects": len(value.objects),
                  "morphisms": len(value.morphisms)}
        note = f"{counts['objects']} objects, {counts['morphisms']} morphisms"
    elif kind == "complex":
        counts = {"simplices": list(value.counts())}
        note = "simplex counts " + "/".join(map(str, value.counts()))
    else:
        counts = {"source": list(value.source.counts()),
                  "target": list(value.target.counts())}
        note = f"assigns {len(value.assign)} simplices"
    return {"kind": kind, "valid": True, "counts": counts}, \
        f"valid {kind}: {note}"


def _witness_payload(w):
    if hasattr(w, "direction"):  # beat witness
        return {"object": render_token(w.obj), "direction": w.direction,
                "morphism": render_token(w.morphism)}
    return {"vertex": render_token(w.vertex), "by": render_token(w.by),
            "edge": render_token(w.edge)}


def cmd_core(args):
    value = _load(args.doc)
    kind = _kind(value)
    if kind == "category":
        core, seq = core_category(value)
    elif kind == "complex":
        core, seq = core_delta(value)
    else:
        raise CollapsarError("core expects a category or complex document")
    removed = [_witness_payload(s.witness) for s in seq.steps]
    payload = {"kind": kind, "minimal": not removed, "removed": removed,
               "core": payload_for(core)}
    return payload, (f"{kind} core after {len(removed)} removals"
                     if removed else f"{kind} is already minimal")


def cmd_collapse(args):
    value = _load(args.doc)
    kind = _kind(value)
    if kind == "category":
        core, seq = core_category(value)
        collapsible = len(core.objects) == 1
    elif kind == "complex":
        core, seq = core_delta(value)
        collapsible = core.counts() == (1,)
    else:
        raise CollapsarError("collapse expects a category or complex document")
    steps = [{"digest": s.digest, "witness": _witness_payload(s.witness)}
             for s in seq.steps]
    payload = {"kind": kind, "strongly_collapsible": collapsible,
               "steps": steps, "final": payload_for(core)}
    word = "strongly collapsible" if collapsible else "not strongly collapsible"
    return payload, f"{kind}: {word} ({len(steps)} steps recorded)"


def cmd_iso(args):
    left, right = _load(args.left), _load(args.right)
    if _kind(left) != _kind(right):
        raise CollapsarError("iso expects two documents of the same kind")
    kind = _kind(left)
    if kind == "category":
        iso = are_isomorphic_cat(left, right)
        witness = None if iso is None else \
            {"objects": _render_dict(iso.objects),
             "morphisms": _render_dict(iso.morphisms)}
    elif kind == "complex":
        iso = are_isomorphic_delta(left, right)
        witness = None if iso is None else \
            {"simplices": _render_dict(iso.simplices)}
    else:
        raise CollapsarError("iso expects category or complex documents")
    payload = {"kind": kind, "isomorphic": iso is not None, "witness": witness}
    return payload, ("isomorphic" if iso else "not isomorphic")


def cmd_bspace(args):
    value = _load(args.doc)
    if not isinstance(value, AcyclicCategory):
        raise CollapsarError("bspace expects a category document")
    B = classifying_space(value)
    return payload_for(B), \
        "classifying space with counts " + "/".join(map(str, B.counts()))


def cmd_facet_poset(args):
    value = _load(args.doc)
    if not isinstance(value, DeltaComplex):
        raise CollapsarError("facet-poset expects a complex document")
    P = face_poset_category(value)
    return payload_for(P), \
        f"face poset with {len(P.objects)} objects, {len(P.morphisms)} morphisms"


def cmd_sd(args):
    value = _load(args.doc)
    if isinstance(value, AcyclicCategory):
        out = sd_category(value)
        note = f"subdivision poset with {len(out.objects)} objects"
    elif isinstance(value, DeltaComplex):
        out = sd_delta(value)
        note = "subdivision with counts " + "/".join(map(str, out.counts()))
    else:
        raise CollapsarError("sd expects a category or complex document")
    return payload_for(out), note


def cmd_simple_collapse(args):
    value = _load(args.doc)
    if not isinstance(value, DeltaComplex):
        raise CollapsarError("simple-collapse expects a complex document")
    if args.vertex is None:
        steps = free_faces(value)
        payload = {"kind": "complex",
                   "euler": euler_characteristic(value),
                   "free_faces": [{"free": render_token(s.free),
                                   "coface": render_token(s.coface)}
                                  for s in steps]}
        return payload, f"{len(steps)} free faces"
    w = find_domination(value, args.vertex, by=args.by)
    if w is None:
        target = f"by {args.by!r} " if args.by else ""
        payload = {"kind": "complex", "vertex": args.vertex,
                   "dominated": False}
        return payload, f"vertex {args.vertex!r} is not dominated {target}".strip()
    steps = strong_to_simple(value, w)
    cur = value
    euler = [euler_characteristic(cur)]
    for s in steps:
        cur = elementary_simple_collapse(cur, s)
        euler.append(euler_characteristic(cur))
    payload = {"kind": "complex", "vertex": args.vertex, "dominated": True,
               "by": render_token(w.by),
               "steps": [{"free": render_token(s.free),
                          "coface": render_token(s.coface)} for s in steps],
               "euler": euler, "final": payload_for(cur)}
    return payload, (f"expanded into {len(steps)} simple collapses, "
                     f"euler constant at {euler[0]}")


def cmd_check(args):
    budget = _budget()
    deadline = _Deadline(budget.seconds)  # bounds the whole corpus run
    reports = []
    if args.doc is not None:
        reports.append(check_theorem(args.theorem, _load(args.doc), budget))
    else:
        for k in range(args.count):
            deadline.check()
            p = GeneratorParams(seed=args.seed + k)
            if args.theorem in _CAT_CHECKS:
                instance = random_acyclic_category(p)
            else:
                instance = random_delta_complex(p)
            reports.append(check_theorem(args.theorem, instance, budget))
    holds = sum(1 for r in reports if r.holds)
    payload = {"theorem": args.theorem, "count": len(reports), "holds": holds,
               "reports": [r.to_payload() for r in reports]}
    summary = f"{args.theorem}: {holds}/{len(reports)} hold"
    return payload, summary, (0 if holds == len(reports) else 1)


def cmd_random(args):
    p = GeneratorParams(seed=args.seed,
                        max_objects=args.max_objects,
                        max_vertices=args.max_vertices,
                        max_dim=args.max_dim)
    if args.kind == "category":
        value = random_acyclic_category(p)
        note = (f"seed {args.seed}: {len(value.objects)} objects, "
                f"{len(value.morphisms)} morphisms")
    else:
        value = random_delta_complex(p)
        note = f"seed {args.seed}: counts " + "/".join(map(str, value.counts()))
    return payload_for(value), note


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def cmd_render(args):
    value = _load(args.doc)
    lines = ["digraph {", "  rankdir=BT;"]
    if isinstance(value, AcyclicCategory):
        P = underlying_poset(value)
        # covering arrows only: drop every arrow that factors through a third
        reach = {o: {P.dst[m] for m in P.outof(o)} for o in P.objects}
        for o in P.objects:
            lines.append(f'  "{_dot_escape(render_token(o))}";')
        for m in P.morphisms:
            s, d = P.src[m], P.dst[m]
            if any(d in reach[mid] for mid in reach[s] if mid != d):
                continue
            lines.append(f'  "{_dot_escape(render_token(s))}" -> '
                         f'"{_dot_escape(render_token(d))}";')
        note = f"poset diagram on {len(P.objects)} nodes"
    elif isinstance(value, DeltaComplex):
        for s in value.all_simplices():
            lines.append(f'  "{_dot_escape(render_token(s))}";')
        for s in value.all_simplices():
            for t in value.cofaces1[s]:
                lines.append(f'  "{_dot_escape(render_token(s))}" -> '
                             f'"{_dot_escape(render_token(t))}";')
        note = f"face relation on {len(value.all_simplices())} simplices"
    else:
        raise CollapsarError("render expects a category or complex document")
    lines.append("}")
    return "\n".join(lines) + "\n", note


# -- dispatch -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="collapsar",
        description="Strong collapses of acyclic categories and "
                    "unordered Delta-complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def doc_command(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("doc", help="document path, or - for stdin")
        p.set_defaults(func=func)
        return p

    doc_command("validate", cmd_validate, "parse and validate a document")
    doc_command("core", cmd_core, "greedy strong collapse to the core")
    doc_command("collapse", cmd_collapse,
                "record the full greedy collapse sequence")
    p = sub.add_parser("iso", help="decide isomorphism of two documents")
    p.add_argument("left", help="document path, or - for stdin")
    p.add_argument("right", help="document path")
    p.set_defaults(func=cmd_iso)
    doc_command("bspace", cmd_bspace,
                "classifying space of an acyclic category")
    doc_command("facet-poset", cmd_facet_poset,
                "face poset of a complex, as a category document")
    doc_command("sd", cmd_sd, "barycentric subdivision")
    p = doc_command("simple-collapse", cmd_simple_collapse,
                    "free faces, or a strong-to-simple expansion")
    p.add_argument("--vertex", help="expand the removal of this vertex")
    p.add_argument("--by", help="require this dominating vertex")
    p = sub.add_parser("check", help="run a structural check")
    p.add_argument("doc", nargs="?", default=None,
                   help="optional document to check (default: random corpus)")
    p.add_argument("--theorem", required=True,
                   choices=sorted(set(_CAT_CHECKS) | set(_DELTA_CHECKS)))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=cmd_check)
    p = sub.add_parser("random", help="generate a seeded random instance")
    p.add_argument("--kind", choices=["category", "complex"], required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-objects", type=int, default=6)
    p.add_argument("--max-vertices", type=int, default=7)
    p.add_argument("--max-dim", type=int, default=2)
    p.set_defaults(func=cmd_random)
    doc_command("render", cmd_render, "DOT diagram of a poset/face relation")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except CollapsarError as e:
        error = {"error": {"tag": e.tag, "message": str(e)}}
        sys.stdout.write(dump_document(error))
        print(f"error[{e.tag}]: {e}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as e:
        tag = type(e).__name__
        error = {"error": {"tag": tag, "message": str(e)}}
        sys.stdout.write(dump_document(error))
        print(f"error[{tag}]: {e}", file=sys.stderr)
        return 1
    payload, summary = result[0], result[1]
    code = result[2] if len(result) > 2 else 0
    if isinstance(payload, str):
        sys.stdout.write(payload)
    else:
        sys.stdout.write(dump_document(payload))
    print(summary, file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
