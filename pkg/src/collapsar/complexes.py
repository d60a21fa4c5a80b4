"""Unordered delta-complexes and their strong collapses.

Simplices carry explicit vertex sets and per-vertex face maps; parallel
simplices over the same vertex set are allowed, so a complex is generally not
determined by vertex sets alone.  Domination of a vertex is witnessed by
unique coface extensions, and removal of a dominated vertex is one strong
collapse step.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    Condition1Violation,
    Condition2Violation,
    DuplicateId,
    MissingFace,
    StaleStep,
    VertexSetSizeMismatch,
)
from .util import canon, digest_payload, sorted_tokens


class DeltaComplex:
    """Immutable complex with precomputed face-relation indexes.

    simplices[n] lists the n-simplices in canonical order; vertex_sets maps a
    simplex to its frozenset of vertices; faces maps (simplex, vertex) to the
    facet obtained by deleting that vertex.  above[s] is the set of all
    cofaces of s including s itself (the face relation), by_vset groups
    simplices sharing a vertex set.
    """

    __slots__ = ("simplices", "vertex_sets", "faces", "meta",
                 "dim_of", "cofaces1", "above", "by_vset",
                 "_digest", "_simplicial", "_all")

    def __init__(self, simplices_by_dim, vertex_sets, faces):
        levels = [tuple(sorted_tokens(level)) for level in simplices_by_dim]
        while levels and not levels[-1]:
            levels.pop()
        self.simplices = tuple(levels)
        self.vertex_sets = {s: frozenset(v) for s, v in vertex_sets.items()}
        self.faces = dict(faces)
        self.meta = {}
        self.dim_of = {}
        for n, level in enumerate(self.simplices):
            for s in level:
                self.dim_of[s] = n
        self._all = tuple(s for level in self.simplices for s in level)
        cof = {s: [] for s in self._all}
        for (s, v), t in self.faces.items():
            cof[t].append(s)
        self.cofaces1 = {s: tuple(sorted_tokens(set(v))) for s, v in cof.items()}
        above = {}
        for level in reversed(self.simplices):
            for s in level:
                acc = {s}
                for t in self.cofaces1[s]:
                    acc |= above[t]
                above[s] = frozenset(acc)
        self.above = above
        by_vset = {}
        for s in self._all:
            by_vset.setdefault(self.vertex_sets[s], []).append(s)
        self.by_vset = {k: tuple(sorted_tokens(v)) for k, v in by_vset.items()}
        self._digest = None
        self._simplicial = None

    # -- queries --------------------------------------------------------------

    @property
    def vertices(self):
        return self.simplices[0] if self.simplices else ()

    @property
    def dim(self) -> int:
        return len(self.simplices) - 1

    def all_simplices(self):
        return self._all

    def vertex_set(self, s):
        return self.vertex_sets[s]

    def face(self, s, v):
        return self.faces[(s, v)]

    def counts(self):
        return tuple(len(level) for level in self.simplices)

    @property
    def is_simplicial(self) -> bool:
        """V is injective: no two distinct simplices share a vertex set."""
        if self._simplicial is None:
            self._simplicial = all(len(v) == 1 for v in self.by_vset.values())
        return self._simplicial

    def maximal_simplices(self):
        return tuple(s for s in self._all if len(self.above[s]) == 1)

    # -- canonical form -------------------------------------------------------

    def canonical(self):
        return {
            "simplices": [[canon(s) for s in level] for level in self.simplices],
            "vertex_sets": [[canon(s), sorted(canon(v) for v in self.vertex_sets[s])]
                            for s in self._all],
            "faces": sorted([[canon(s), canon(v), canon(t)]
                             for (s, v), t in self.faces.items()]),
        }

    @property
    def digest(self) -> str:
        if self._digest is None:
            self._digest = digest_payload(self.canonical())
        return self._digest

    def __eq__(self, other):
        if not isinstance(other, DeltaComplex):
            return NotImplemented
        return (self.simplices == other.simplices
                and self.vertex_sets == other.vertex_sets
                and self.faces == other.faces)

    def __hash__(self):
        return hash(self.digest)

    def __repr__(self):
        return f"DeltaComplex(counts={self.counts()})"


def validate_complex(simplices_by_dim, vertex_sets, faces) -> DeltaComplex:
    """Check a raw description and build the complex.

    simplices_by_dim: list (indexed by dimension) of iterables of ids;
    vertex_sets: mapping id -> iterable of vertex ids; faces: mapping
    (id, vertex) -> id.  Raises VertexSetSizeMismatch, Condition1Violation,
    Condition2Violation, MissingFace or DuplicateId.
    """
    levels = [list(level) for level in simplices_by_dim]
    all_ids = [s for level in levels for s in level]
    if len(set(all_ids)) != len(all_ids):
        raise DuplicateId("simplex ids are not pairwise distinct")
    idset = set(all_ids)
    dim_of = {}
    for n, level in enumerate(levels):
        for s in level:
            dim_of[s] = n
    vsets = {s: frozenset(v) for s, v in vertex_sets.items()}
    if set(vsets) != idset:
        raise VertexSetSizeMismatch("vertex_sets must cover exactly the simplices")
    verts = set(levels[0]) if levels else set()
    for s in all_ids:
        n = dim_of[s]
        if len(vsets[s]) != n + 1:
            raise VertexSetSizeMismatch(
                f"{s!r} has dimension {n} but {len(vsets[s])} vertices")
        if not vsets[s] <= verts:
            raise VertexSetSizeMismatch(f"{s!r} lists a non-vertex in its vertex set")
    for v in verts:
        if vsets[v] != frozenset([v]):
            raise VertexSetSizeMismatch(f"vertex {v!r} must have vertex set {{{v!r}}}")
    ftab = dict(faces)
    for (s, v), t in ftab.items():
        if s not in idset:
            raise MissingFace(f"face entry for unknown simplex {s!r}")
        if v not in vsets[s]:
            raise MissingFace(f"face entry ({s!r}, {v!r}) is outside the domain")
        if t not in idset:
            raise MissingFace(f"face of ({s!r}, {v!r}) is the unknown {t!r}")
    for s in all_ids:
        if dim_of[s] == 0:
            continue
        for v in vsets[s]:
            if (s, v) not in ftab:
                raise MissingFace(f"no face entry for ({s!r}, {v!r})")
            t = ftab[(s, v)]
            if vsets[t] != vsets[s] - {v}:
                raise Condition1Violation(
                    f"vertex_set(face({s!r}, {v!r})) != vertex_set({s!r}) - {{{v!r}}}")
    for s in all_ids:
        if dim_of[s] < 2:
            continue
        vs = sorted_tokens(vsets[s])
        for i, v in enumerate(vs):
            for w in vs[i + 1:]:
                if ftab[(ftab[(s, v)], w)] != ftab[(ftab[(s, w)], v)]:
                    raise Condition2Violation(
                        f"faces of {s!r} do not commute at {v!r}, {w!r}")
    return DeltaComplex(levels, vsets, ftab)


def _subcomplex(X: DeltaComplex, keep_pred) -> DeltaComplex:
    """Rebuild on the simplices selected by keep_pred (assumed face-closed)."""
    levels = [[s for s in level if keep_pred(s)] for level in X.simplices]
    kept = {s for level in levels for s in level}
    vsets = {s: X.vertex_sets[s] for s in kept}
    faces = {(s, v): t for (s, v), t in X.faces.items() if s in kept}
    return DeltaComplex(levels, vsets, faces)


def from_simplicial_complex(facets) -> DeltaComplex:
    """Downward closure of facet vertex sets; one simplex per subset.

    Vertices keep their tokens; a higher simplex gets the sorted tuple of its
    vertices as id.
    """
    subsets = set()
    for facet in facets:
        fs = frozenset(facet)
        if not fs:
            continue
        stack = [fs]
        while stack:
            cur = stack.pop()
            if cur in subsets or not cur:
                continue
            subsets.add(cur)
            for v in cur:
                stack.append(cur - {v})
    def sid(vs):
        if len(vs) == 1:
            return next(iter(vs))
        return tuple(sorted_tokens(vs))
    levels = []
    for vs in subsets:
        n = len(vs) - 1
        while len(levels) <= n:
            levels.append([])
        levels[n].append(sid(vs))
    vsets = {sid(vs): vs for vs in subsets}
    faces = {}
    for vs in subsets:
        if len(vs) == 1:
            continue
        for v in vs:
            faces[(sid(vs), v)] = sid(vs - {v})
    return validate_complex(levels, vsets, faces)


# -- domination ---------------------------------------------------------------


def unique_coface_extension(X: DeltaComplex, s, v2):
    """The unique coface of s whose vertex set adds v2, if it exists.

    Returns s itself when v2 already lies in s; None when the extension is
    absent or ambiguous.
    """
    vs = X.vertex_sets[s]
    if v2 in vs:
        return s
    want = vs | {v2}
    found = None
    for t in X.cofaces1[s]:
        if X.vertex_sets[t] == want:
            if found is not None:
                return None
            found = t
    return found


@dataclass
class DominationWitness:
    """v is dominated by vertex by; edge spans them; cofaces maps each
    simplex containing v to its unique extension by by."""

    vertex: object
    by: object
    edge: object
    cofaces: dict = field(default_factory=dict)


def _dominates(X: DeltaComplex, v, v2, use_fast=None) -> bool:
    fast = X.is_simplicial if use_fast is None else use_fast
    if fast:
        # classical criterion, exact in the injective case
        return all(v2 in X.vertex_sets[m]
                   for m in X.maximal_simplices() if v in X.vertex_sets[m])
    for s in X.all_simplices():
        vs = X.vertex_sets[s]
        if v in vs and v2 not in vs:
            if unique_coface_extension(X, s, v2) is None:
                return False
    return True


def find_domination(X: DeltaComplex, v, by=None):
    """Witness that v is dominated, trying candidates in identifier order.

    With by given, only that dominating vertex is considered.  Returns a
    DominationWitness or None.
    """
    vset = set(X.vertices)
    if v not in vset:
        return None
    candidates = [by] if by is not None else \
        [u for u in X.vertices if u != v]
    containing = [s for s in X.all_simplices() if v in X.vertex_sets[s]]
    for v2 in candidates:
        if v2 == v or v2 not in vset:
            continue
        if X.is_simplicial and not _dominates(X, v, v2):
            continue
        cofaces = {}
        ok = True
        for s in containing:
            t = unique_coface_extension(X, s, v2)
            if t is None:
                ok = False
                break
            cofaces[s] = t
        if not ok:
            continue
        edge = cofaces[v]
        return DominationWitness(v, v2, edge, cofaces)
    return None


def is_minimal_delta(X: DeltaComplex) -> bool:
    return all(find_domination(X, v) is None for v in X.vertices)


def remove_vertex(X: DeltaComplex, v) -> DeltaComplex:
    """Delete every simplex whose vertex set contains v."""
    if v not in set(X.vertices):
        raise MissingFace(f"no vertex {v!r}")
    return _subcomplex(X, lambda s: v not in X.vertex_sets[s])


# -- delta maps ---------------------------------------------------------------


@dataclass
class DeltaMap:
    """Simplexwise map; assign[s] is the image simplex, k(s) its dimension."""

    source: DeltaComplex
    target: DeltaComplex
    assign: dict = field(default_factory=dict)

    def k(self, s) -> int:
        return self.target.dim_of[self.assign[s]]

    def vertex_map(self):
        return {v: self.assign[v] for v in self.source.vertices}

    def same_maps(self, other) -> bool:
        return self.assign == other.assign

    def __eq__(self, other):
        if not isinstance(other, DeltaMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.assign == other.assign)


def delta_map_violation(m: DeltaMap):
    """First violation as (simplex, vertex-or-None, message), else None."""
    X, Y = m.source, m.target
    if set(m.assign) != set(X.all_simplices()):
        return (None, None, "assignment does not cover the source exactly")
    yids = set(Y.all_simplices())
    for s in X.all_simplices():
        if m.assign[s] not in yids:
            return (s, None, "image is not a simplex of the target")
    for v in X.vertices:
        if Y.dim_of[m.assign[v]] != 0:
            return (v, None, "vertex image is not a vertex")
    vmap = m.vertex_map()
    for s in X.all_simplices():
        image_vs = frozenset(vmap[v] for v in X.vertex_sets[s])
        if Y.vertex_sets[m.assign[s]] != image_vs:
            return (s, None, "vertex_set(f(s)) differs from the image vertex set")
    for s in X.all_simplices():
        n = X.dim_of[s]
        if n == 0:
            continue
        vs = X.vertex_sets[s]
        for w in sorted_tokens(vs):
            preimages = [u for u in vs if vmap[u] == vmap[w]]
            got = m.assign[X.faces[(s, w)]]
            if len(preimages) == 1:
                want = Y.faces[(m.assign[s], vmap[w])]
            else:
                want = m.assign[s]
            if got != want:
                return (s, w, "face condition fails")
    return None


def validate_delta_map(m: DeltaMap) -> bool:
    """Vertex sets map onto image vertex sets and faces are respected.

    A deleted vertex (one whose image has other preimages in the simplex)
    sends the face to the image of the whole simplex.
    """
    return delta_map_violation(m) is None


def identity_map(X: DeltaComplex) -> DeltaMap:
    return DeltaMap(X, X, {s: s for s in X.all_simplices()})


def inclusion_map(sub: DeltaComplex, sup: DeltaComplex) -> DeltaMap:
    ids = set(sup.all_simplices())
    assert all(s in ids for s in sub.all_simplices()), "not a subcomplex"
    return DeltaMap(sub, sup, {s: s for s in sub.all_simplices()})


def compose_delta_maps(outer: DeltaMap, inner: DeltaMap) -> DeltaMap:
    assert inner.target == outer.source, "maps do not chain"
    assign = {s: outer.assign[inner.assign[s]]
              for s in inner.source.all_simplices()}
    return DeltaMap(inner.source, outer.target, assign)


def retraction_map(X: DeltaComplex, w: DominationWitness) -> DeltaMap:
    """r(s) = s away from v, else the v-face of the unique extension by w.by.

    The dimension drops by one exactly on simplices containing both v and
    w.by; the result lands in X minus v.
    """
    v = w.vertex
    Y = remove_vertex(X, v)
    assign = {}
    for s in X.all_simplices():
        vs = X.vertex_sets[s]
        if v not in vs:
            assign[s] = s
        else:
            t = w.cofaces[s]
            assign[s] = X.faces[(t, v)]
    return DeltaMap(X, Y, assign)


def _contiguity_table(f: DeltaMap, g: DeltaMap):
    """Per-simplex unique joins, or None when some join is absent/ambiguous."""
    X, Y = f.source, f.target
    table = {}
    for s in X.all_simplices():
        fs, gs = f.assign[s], g.assign[s]
        want = Y.vertex_sets[fs] | Y.vertex_sets[gs]
        hits = [t for t in Y.by_vset.get(want, ())
                if t in Y.above[fs] and t in Y.above[gs]]
        if len(hits) != 1:
            return None
        table[s] = hits[0]
    return table


def is_contiguous(f: DeltaMap, g: DeltaMap) -> bool:
    """Every pair of image simplices has a unique common coface over the
    union of their vertex sets."""
    if f.source != g.source or f.target != g.target:
        raise ValueError("contiguity needs maps with equal source and target")
    return _contiguity_table(f, g) is not None


# -- cores --------------------------------------------------------------------


@dataclass(frozen=True)
class DeltaCollapseStep:
    digest: str
    witness: object  # DominationWitness


@dataclass
class DeltaCollapseSequence:
    steps: tuple
    final: DeltaComplex


def core_delta(X: DeltaComplex):
    """Greedy core: scan vertices in identifier order, remove first dominated."""
    if not X.simplices:
        raise ValueError("core_delta needs a nonempty complex")
    cur = X
    steps = []
    while True:
        found = None
        for v in cur.vertices:
            w = find_domination(cur, v)
            if w is not None:
                found = w
                break
        if found is None:
            break
        steps.append(DeltaCollapseStep(cur.digest, found))
        cur = remove_vertex(cur, found.vertex)
    return cur, DeltaCollapseSequence(tuple(steps), cur)


def replay_delta_collapse(X: DeltaComplex, seq: DeltaCollapseSequence):
    cur = X
    for step in seq.steps:
        if cur.digest != step.digest:
            raise StaleStep("complex digest does not match the recorded step")
        w = step.witness
        if find_domination(cur, w.vertex, by=w.by) is None:
            raise StaleStep(f"domination of {w.vertex!r} by {w.by!r} is gone")
        cur = remove_vertex(cur, w.vertex)
    if cur != seq.final:
        raise StaleStep("replay did not reach the recorded final complex")
    return cur


def is_strongly_collapsible_delta(X: DeltaComplex) -> bool:
    core, _ = core_delta(X)
    return core.counts() == (1,)


# -- isomorphism --------------------------------------------------------------


@dataclass
class DeltaIsomorphism:
    vertices: dict
    simplices: dict


def _vertex_signature(X: DeltaComplex, v):
    by_dim = [0] * (X.dim + 1)
    for s in X.all_simplices():
        if v in X.vertex_sets[s]:
            by_dim[X.dim_of[s]] += 1
    return tuple(by_dim)


def complex_fingerprint(X: DeltaComplex):
    sigs = {v: _vertex_signature(X, v) for v in X.vertices}
    profile = sorted(
        (X.dim_of[s], tuple(sorted(sigs[v] for v in X.vertex_sets[s])),
         len(X.cofaces1[s]))
        for s in X.all_simplices())
    return (X.counts(), tuple(sorted(sigs.values())), tuple(profile))


def are_isomorphic_delta(X: DeltaComplex, Y: DeltaComplex):
    """Vertex bijection extended to a face-commuting simplex bijection."""
    if X.counts() != Y.counts():
        return None
    if complex_fingerprint(X) != complex_fingerprint(Y):
        return None
    sig_x = {v: _vertex_signature(X, v) for v in X.vertices}
    sig_y = {}
    for u in Y.vertices:
        sig_y.setdefault(_vertex_signature(Y, u), []).append(u)
    higher = [s for level in X.simplices[1:] for s in level]
    vmap = {}
    used_v = set()
    smap = {}
    used_s = set()

    def extend(i):
        if i == len(higher):
            return DeltaIsomorphism(dict(vmap), {**vmap, **smap})
        s = higher[i]
        want = frozenset(vmap[v] for v in X.vertex_sets[s])
        for t in Y.by_vset.get(want, ()):
            if t in used_s or Y.dim_of[t] != X.dim_of[s]:
                continue
            ok = True
            for v in X.vertex_sets[s]:
                fs = X.faces[(s, v)]
                mapped = vmap[fs] if X.dim_of[fs] == 0 else smap.get(fs)
                if Y.faces[(t, vmap[v])] != mapped:
                    ok = False
                    break
            if not ok:
                continue
            smap[s] = t
            used_s.add(t)
            result = extend(i + 1)
            if result is not None:
                return result
            del smap[s]
            used_s.discard(t)
        return None

    verts = list(X.vertices)

    def assign_vertex(i):
        if i == len(verts):
            return extend(0)
        v = verts[i]
        for u in sig_y.get(sig_x[v], []):
            if u in used_v:
                continue
            vmap[v] = u
            used_v.add(u)
            result = assign_vertex(i + 1)
            if result is not None:
                return result
            del vmap[v]
            used_v.discard(u)
        return None

    return assign_vertex(0)


def check_delta_isomorphism(X, Y, iso: DeltaIsomorphism) -> bool:
    smap = iso.simplices
    if set(smap) != set(X.all_simplices()):
        return False
    if set(smap.values()) != set(Y.all_simplices()) or \
            len(set(smap.values())) != len(smap):
        return False
    for s in X.all_simplices():
        if Y.dim_of.get(smap[s]) != X.dim_of[s]:
            return False
        if Y.vertex_sets[smap[s]] != frozenset(smap[v] for v in X.vertex_sets[s]):
            return False
    for (s, v), t in X.faces.items():
        if Y.faces[(smap[s], smap[v])] != smap[t]:
            return False
    return True


def relabel_complex(X: DeltaComplex, smap):
    """Rename all simplices through a bijection; returns (Y, DeltaIsomorphism)."""
    levels = [[smap[s] for s in level] for level in X.simplices]
    vsets = {smap[s]: frozenset(smap[v] for v in X.vertex_sets[s])
             for s in X.all_simplices()}
    faces = {(smap[s], smap[v]): smap[t] for (s, v), t in X.faces.items()}
    Y = validate_complex(levels, vsets, faces)
    vmap = {v: smap[v] for v in X.vertices}
    return Y, DeltaIsomorphism(vmap, dict(smap))


def same_strong_homotopy_type(X: DeltaComplex, Y: DeltaComplex) -> bool:
    """Cores isomorphic (the decidable route to strong equivalence)."""
    core_x, _ = core_delta(X)
    core_y, _ = core_delta(Y)
    return are_isomorphic_delta(core_x, core_y) is not None
