"""Classifying spaces, face posets and barycentric subdivisions.

B sends an acyclic category to the complex of composable chains of
non-identity morphisms; chi sends a complex to its face poset viewed as a
(thin) acyclic category.  Composing the two either way gives a barycentric
subdivision: sd(A) = chi(B(A)) is always a poset, sd(X) = B(chi(X)) is
always a simplicial complex.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .categories import (
    AcyclicCategory,
    FunctorData,
    Ident,
    NaturalTransformationData,
    check_natural_transformation,
    validate_category,
)
from .complexes import DeltaComplex, DeltaMap, _contiguity_table, validate_complex
from .errors import NotContiguous, OrderViolation
from .util import sorted_tokens


@dataclass
class BarycenterIndex:
    """Bijection from derived vertices/objects back to what they refine."""

    forward: dict = field(default_factory=dict)

    def backward(self):
        inv = {v: k for k, v in self.forward.items()}
        assert len(inv) == len(self.forward), "barycenter index must be a bijection"
        return inv


def _chain_objects(A: AcyclicCategory, chain):
    objs = [A.src[chain[0]]]
    for m in chain:
        objs.append(A.dst[m])
    return objs


def classifying_space(A: AcyclicCategory) -> DeltaComplex:
    """B(A): n-simplices are chains of n composable non-identity morphisms.

    A vertex is an object token; a chain is the tuple of its morphism ids.
    Deleting an end object drops the outer morphism, deleting an inner object
    composes the two morphisms meeting there.  The result carries a
    BarycenterIndex from vertices to objects in meta.
    """
    levels = [list(A.objects)]
    vertex_sets = {o: frozenset([o]) for o in A.objects}
    faces = {}
    frontier = [(m,) for m in A.morphisms]
    while frontier:
        levels.append(frontier)
        nxt = []
        for ch in frontier:
            objs = _chain_objects(A, ch)
            vertex_sets[ch] = frozenset(objs)
            n = len(ch)
            for i, v in enumerate(objs):
                if i == 0:
                    faces[(ch, v)] = ch[1:] if n > 1 else objs[1]
                elif i == n:
                    faces[(ch, v)] = ch[:-1] if n > 1 else objs[0]
                else:
                    mid = A.compose[(ch[i], ch[i - 1])]
                    faces[(ch, v)] = ch[:i - 1] + (mid,) + ch[i + 1:]
            for m in A.outof(objs[-1]):
                nxt.append(ch + (m,))
        frontier = nxt
    X = validate_complex(levels, vertex_sets, faces)
    X.meta["barycenters"] = BarycenterIndex({o: o for o in A.objects})
    return X


def classifying_map(F: FunctorData, BX: DeltaComplex | None = None,
                    BY: DeltaComplex | None = None) -> DeltaMap:
    """B(F): map a chain to the chain of its images with identities removed.

    When every morphism of a chain collapses, the image is the (shared) image
    vertex of its objects.
    """
    BX = BX if BX is not None else classifying_space(F.source)
    BY = BY if BY is not None else classifying_space(F.target)
    assign = {}
    for o in F.source.objects:
        assign[o] = F.objects[o]
    for level in BX.simplices[1:]:
        for ch in level:
            surviving = tuple(F.morphisms[m] for m in ch
                              if not isinstance(F.morphisms[m], Ident))
            if surviving:
                assign[ch] = surviving
            else:
                assign[ch] = F.objects[F.source.src[ch[0]]]
    return DeltaMap(BX, BY, assign)


def face_poset_category(X: DeltaComplex) -> AcyclicCategory:
    """chi(X): objects are simplices, one arrow (s, t) per strict face pair."""
    objects = list(X.all_simplices())
    morphisms = []
    for s in objects:
        for t in sorted_tokens(X.above[s] - {s}):
            morphisms.append(((s, t), s, t))
    compose = {}
    for s in objects:
        ups = X.above[s] - {s}
        for t in ups:
            for r in X.above[t] - {t}:
                compose[((t, r), (s, t))] = (s, r)
    cat = validate_category(objects, morphisms, compose)
    cat.meta["barycenters"] = BarycenterIndex({s: s for s in objects})
    return cat


def face_poset_map(m: DeltaMap, PX: AcyclicCategory | None = None,
                   PY: AcyclicCategory | None = None) -> FunctorData:
    """chi of a delta map: act on simplices, collapse equalities to identities."""
    PX = PX if PX is not None else face_poset_category(m.source)
    PY = PY if PY is not None else face_poset_category(m.target)
    objects = {s: m.assign[s] for s in m.source.all_simplices()}
    morphisms = {}
    for mid in PX.morphisms:
        s, t = mid
        fs, ft = m.assign[s], m.assign[t]
        if fs == ft:
            morphisms[mid] = Ident(fs)
        else:
            if ft not in m.target.above[fs]:
                raise OrderViolation(
                    f"image of {s!r} <= {t!r} is not a face pair")
            morphisms[mid] = (fs, ft)
    return FunctorData(PX, PY, objects, morphisms)


def contiguity_join(f: DeltaMap, g: DeltaMap):
    """The join functor h with chi(f) => h and chi(g) => h for contiguous f, g.

    h sends a simplex to the unique coface of both images over the union of
    their vertex sets; both comparison transformations are verified before h
    is returned.  Raises NotContiguous when the table does not exist.
    """
    if f.source != g.source or f.target != g.target:
        raise ValueError("contiguity needs maps with equal source and target")
    table = _contiguity_table(f, g)
    if table is None:
        raise NotContiguous("maps are not contiguous")
    PX = face_poset_category(f.source)
    PY = face_poset_category(f.target)
    objects = dict(table)
    morphisms = {}
    for mid in PX.morphisms:
        s, t = mid
        hs, ht = table[s], table[t]
        if hs == ht:
            morphisms[mid] = Ident(hs)
        else:
            assert ht in f.target.above[hs], "join is not monotone"
            morphisms[mid] = (hs, ht)
    h = FunctorData(PX, PY, objects, morphisms)
    for arm in (f, g):
        chi_arm = face_poset_map(arm, PX, PY)
        comps = {}
        for s in f.source.all_simplices():
            a, b = arm.assign[s], table[s]
            comps[s] = Ident(a) if a == b else (a, b)
        t = NaturalTransformationData(chi_arm, h, comps)
        assert check_natural_transformation(PX, PY, chi_arm, h, t), \
            "join comparison transformation failed"
    return h


def sd_category(A: AcyclicCategory) -> AcyclicCategory:
    """sd(A) = chi(B(A)); always a poset."""
    B = classifying_space(A)
    cat = face_poset_category(B)
    assert cat.is_poset
    return cat


def sd_delta(X: DeltaComplex) -> DeltaComplex:
    """sd(X) = B(chi(X)); always a simplicial complex."""
    out = classifying_space(face_poset_category(X))
    assert out.is_simplicial
    return out
