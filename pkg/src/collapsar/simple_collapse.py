"""Simple (free-face) collapses and the expansion of a strong collapse step.

A free face is a simplex whose only proper coface is a single simplex; an
elementary collapse removes the pair.  strong_to_simple turns one dominated
vertex removal into an explicit sequence of such collapses by eating the
maximal simplices around the vertex from the top down.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import DeltaComplex, DominationWitness, _subcomplex
from .errors import StaleStep
from .util import token_key


@dataclass(frozen=True)
class SimpleCollapseStep:
    free: object
    coface: object


def free_faces(X: DeltaComplex):
    """All (free face, unique proper coface) pairs, in deterministic order.

    Freeness is checked against every proper coface, not just those one
    dimension up.
    """
    out = []
    for s in X.all_simplices():
        proper = X.above[s] - {s}
        if len(proper) == 1:
            t = next(iter(proper))
            assert X.dim_of[t] == X.dim_of[s] + 1
            out.append(SimpleCollapseStep(s, t))
    out.sort(key=lambda st: (X.dim_of[st.free], token_key(st.free)))
    return out


def elementary_simple_collapse(X: DeltaComplex, step: SimpleCollapseStep) -> DeltaComplex:
    """Remove the pair {free, coface}; StaleStep if the pair is not collapsible."""
    ids = set(X.all_simplices())
    if step.free not in ids or step.coface not in ids:
        raise StaleStep("step refers to simplices that are no longer present")
    if X.above[step.free] != {step.free, step.coface}:
        raise StaleStep(f"{step.free!r} is not a free face of {step.coface!r}")
    gone = {step.free, step.coface}
    return _subcomplex(X, lambda s: s not in gone)


def euler_characteristic(X: DeltaComplex) -> int:
    return sum((-1) ** n * len(level) for n, level in enumerate(X.simplices))


def strong_to_simple(X: DeltaComplex, w: DominationWitness):
    """Expand removal of the dominated vertex into elementary collapses.

    Repeatedly take a maximal simplex t containing the vertex (highest
    dimension first, identifier order inside a dimension) and collapse the
    pair (face of t at the dominating vertex, t); the final step collapses the
    dominated edge itself.  Replaying the steps equals remove_vertex exactly.
    """
    v, v2 = w.vertex, w.by
    cur = X
    steps = []
    while v in set(cur.vertices):
        best = None
        for s in cur.all_simplices():
            if v not in cur.vertex_sets[s] or len(cur.above[s]) != 1:
                continue
            key = (-cur.dim_of[s], token_key(s))
            if best is None or key < best[0]:
                best = (key, s)
        t = best[1]
        assert v2 in cur.vertex_sets[t], \
            "maximal simplex at a dominated vertex must contain the dominating one"
        step = SimpleCollapseStep(cur.faces[(t, v2)], t)
        cur = elementary_simple_collapse(cur, step)
        steps.append(step)
    return steps
