"""Finite acyclic categories and their strong collapses.

An acyclic category stores only non-identity morphisms; identities are
implicit.  The composition table is explicit input and is validated for
closure and associativity.  Beat objects are detected through punctured
over/under categories, removal is full-subcategory restriction, and the core
is reached by greedy removal in identifier order (down beats checked first).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    CompositionNotClosed,
    DanglingEndpoint,
    DuplicateId,
    LoopDetected,
    NotAssociative,
    NotEndofunctor,
    StaleStep,
)
from .util import canon, digest_payload, sorted_tokens, token_key


@dataclass(frozen=True)
class Ident:
    """Tag for the (never stored) identity arrow at an object."""

    obj: object


class AcyclicCategory:
    """Immutable finite acyclic category with hom/degree indexes.

    Construct through validate_category (checked) or the module-internal
    helpers (for provably valid restrictions).  Equality and digests look at
    objects, morphism endpoints and the composition table only.
    """

    __slots__ = ("objects", "src", "dst", "compose", "meta",
                 "_hom", "_into", "_outof", "_digest", "_pairs_by_composite")

    def __init__(self, objects, src, dst, compose):
        self.objects = tuple(sorted_tokens(objects))
        self.src = dict(src)
        self.dst = dict(dst)
        self.compose = dict(compose)
        self.meta = {}
        hom = {}
        into = {o: [] for o in self.objects}
        outof = {o: [] for o in self.objects}
        for m in sorted_tokens(self.src):
            s, d = self.src[m], self.dst[m]
            hom.setdefault((s, d), []).append(m)
            into[d].append(m)
            outof[s].append(m)
        self._hom = {k: tuple(v) for k, v in hom.items()}
        self._into = {o: tuple(v) for o, v in into.items()}
        self._outof = {o: tuple(v) for o, v in outof.items()}
        self._digest = None
        self._pairs_by_composite = None

    # -- queries --------------------------------------------------------------

    @property
    def morphisms(self):
        """All stored morphism ids, sorted."""
        return tuple(sorted_tokens(self.src))

    def hom(self, x, y):
        return self._hom.get((x, y), ())

    def into(self, x):
        return self._into.get(x, ())

    def outof(self, x):
        return self._outof.get(x, ())

    @property
    def is_poset(self) -> bool:
        return all(len(v) <= 1 for v in self._hom.values())

    def compose_arrows(self, g, f):
        """g after f, absorbing identity tags."""
        if isinstance(f, Ident):
            return g
        if isinstance(g, Ident):
            return f
        return self.compose[(g, f)]

    def arrow_src(self, a):
        return a.obj if isinstance(a, Ident) else self.src[a]

    def arrow_dst(self, a):
        return a.obj if isinstance(a, Ident) else self.dst[a]

    def pairs_by_composite(self):
        if self._pairs_by_composite is None:
            index = {}
            for (g, f), c in self.compose.items():
                index.setdefault(c, []).append((g, f))
            self._pairs_by_composite = index
        return self._pairs_by_composite

    # -- canonical form -------------------------------------------------------

    def canonical(self):
        return {
            "objects": [canon(o) for o in self.objects],
            "morphisms": [[canon(m), canon(self.src[m]), canon(self.dst[m])]
                          for m in self.morphisms],
            "compose": sorted(
                [[canon(g), canon(f), canon(c)] for (g, f), c in self.compose.items()]
            ),
        }

    @property
    def digest(self) -> str:
        if self._digest is None:
            self._digest = digest_payload(self.canonical())
        return self._digest

    def __eq__(self, other):
        if not isinstance(other, AcyclicCategory):
            return NotImplemented
        return (self.objects == other.objects and self.src == other.src
                and self.dst == other.dst and self.compose == other.compose)

    def __hash__(self):
        return hash(self.digest)

    def __repr__(self):
        return (f"AcyclicCategory({len(self.objects)} objects, "
                f"{len(self.src)} morphisms)")


def validate_category(objects, morphisms, compose) -> AcyclicCategory:
    """Check a raw description and build the category.

    objects: iterable of tokens; morphisms: iterable of (id, src, dst);
    compose: mapping (g, f) -> id for every composable ordered pair.
    Raises LoopDetected, CompositionNotClosed, NotAssociative,
    DanglingEndpoint or DuplicateId.
    """
    objs = list(objects)
    objset = set(objs)
    if len(objset) != len(objs):
        raise DuplicateId("object ids are not pairwise distinct")
    src, dst = {}, {}
    for m, s, d in morphisms:
        if m in src or m in objset:
            raise DuplicateId(f"identifier reused: {m!r}")
        src[m], dst[m] = s, d
    for m in src:
        if src[m] not in objset or dst[m] not in objset:
            raise DanglingEndpoint(f"morphism {m!r} has an unknown endpoint")
        if src[m] == dst[m]:
            raise LoopDetected(f"endomorphism {m!r} at {src[m]!r}")
    seen_pairs = set()
    for m in src:
        pair = (src[m], dst[m])
        seen_pairs.add(pair)
    for s, d in seen_pairs:
        if (d, s) in seen_pairs:
            raise LoopDetected(f"morphisms both ways between {s!r} and {d!r}")
    table = dict(compose)
    for (g, f), c in table.items():
        for m in (g, f, c):
            if m not in src:
                raise DanglingEndpoint(f"composition entry refers to unknown {m!r}")
        if dst[f] != src[g]:
            raise CompositionNotClosed(f"entry for non-composable pair ({g!r}, {f!r})")
        if src[c] != src[f] or dst[c] != dst[g]:
            raise CompositionNotClosed(
                f"composite {c!r} of ({g!r}, {f!r}) has wrong endpoints")
    for f in src:
        for g in src:
            if dst[f] == src[g] and (g, f) not in table:
                raise CompositionNotClosed(f"no composite for ({g!r}, {f!r})")
    for (g, f), c in table.items():
        # extend on the left by every h composable with g
        for h in src:
            if src[h] == dst[g]:
                if table[(h, c)] != table[(table[(h, g)], f)]:
                    raise NotAssociative(
                        f"h(gf) != (hg)f for h={h!r}, g={g!r}, f={f!r}")
    return AcyclicCategory(objs, src, dst, table)


def _restrict(A: AcyclicCategory, keep) -> AcyclicCategory:
    """Full subcategory on a subset of objects (provably valid, unchecked)."""
    keep = set(keep)
    src = {m: s for m, s in A.src.items() if s in keep and A.dst[m] in keep}
    dst = {m: A.dst[m] for m in src}
    compose = {(g, f): c for (g, f), c in A.compose.items() if g in src and f in src}
    return AcyclicCategory(keep, src, dst, compose)


def remove_object(A: AcyclicCategory, x) -> AcyclicCategory:
    """Full subcategory on objects minus x."""
    if x not in set(A.objects):
        raise DanglingEndpoint(f"no object {x!r}")
    return _restrict(A, (o for o in A.objects if o != x))


def opposite_category(A: AcyclicCategory) -> AcyclicCategory:
    """Same objects and morphism ids, endpoints flipped, table transposed."""
    compose = {(f, g): c for (g, f), c in A.compose.items()}
    return AcyclicCategory(A.objects, A.dst, A.src, compose)


def underlying_poset(A: AcyclicCategory) -> AcyclicCategory:
    """P(A): one arrow x -> y per nonempty hom set; arrows are (x, y) pairs."""
    rel = sorted({(A.src[m], A.dst[m]) for m in A.src}, key=token_key)
    morphisms = [((s, d), s, d) for s, d in rel]
    relset = set(rel)
    compose = {}
    for s, d in rel:
        for d2 in (p[1] for p in rel if p[0] == d):
            compose[((d, d2), (s, d))] = (s, d2)
            assert (s, d2) in relset, "transitivity broken in a valid category"
    return AcyclicCategory(A.objects, {m: s for m, s, _ in morphisms},
                           {m: d for m, _, d in morphisms}, compose)


# -- beat objects -------------------------------------------------------------


@dataclass(frozen=True)
class BeatWitness:
    """x is a beat object via the terminal/initial nontrivial morphism."""

    obj: object
    direction: str  # "down" | "up"
    morphism: object


def punctured_over_category(A: AcyclicCategory, x):
    """Over category of nontrivial morphisms into x.

    Objects are the morphism ids g: z -> x; an arrow f1 -> f2 is a stored h
    with f2 . h = f1 and gets id (h, f2).  Returns (category, tag) where tag
    maps each object token back to the morphism of A it stands for.
    """
    objs = list(A.into(x))
    morphisms = []
    for f2 in objs:
        y = A.src[f2]
        for f1 in objs:
            if f1 == f2:
                continue
            for h in A.hom(A.src[f1], y):
                if A.compose[(f2, h)] == f1:
                    morphisms.append(((h, f2), f1, f2))
    src = {m: s for m, s, _ in morphisms}
    dst = {m: d for m, _, d in morphisms}
    compose = {}
    for (h2, f3), f1b, f2b in morphisms:
        # arrows out of f2b compose with arrows into f2b
        for (h1, f2c), f0, f2d in morphisms:
            if f2d == f1b:
                # (h2, f3): f1b -> f3 after (h1, f2c): f0 -> f1b
                compose[(((h2, f3)), ((h1, f2c)))] = (A.compose[(h2, h1)], f3)
    cat = validate_category(objs, morphisms, compose)
    return cat, {o: o for o in objs}


def _terminal_factoring(A: AcyclicCategory, x):
    """Down-beat witness morphism at x, or None; asserts uniqueness."""
    into = A.into(x)
    best = None
    for f in into:
        y = A.src[f]
        ok = True
        for g in into:
            if g == f:
                continue
            z = A.src[g]
            count = sum(1 for h in A.hom(z, y) if A.compose[(f, h)] == g)
            if count != 1:
                ok = False
                break
        if ok:
            assert best is None, "two terminal objects in a punctured over category"
            best = f
    return best


def _initial_factoring(A: AcyclicCategory, x):
    """Up-beat witness morphism at x, or None; asserts uniqueness."""
    outof = A.outof(x)
    best = None
    for f in outof:
        y = A.dst[f]
        ok = True
        for g in outof:
            if g == f:
                continue
            z = A.dst[g]
            count = sum(1 for h in A.hom(y, z) if A.compose[(h, f)] == g)
            if count != 1:
                ok = False
                break
        if ok:
            assert best is None, "two initial objects in a punctured under category"
            best = f
    return best


def find_beat(A: AcyclicCategory, x):
    """Beat witness at x, down direction checked before up; None if neither."""
    f = _terminal_factoring(A, x)
    if f is not None:
        return BeatWitness(x, "down", f)
    f = _initial_factoring(A, x)
    if f is not None:
        return BeatWitness(x, "up", f)
    return None


def check_beat_witness(A: AcyclicCategory, w: BeatWitness) -> bool:
    """Verify one specific claimed witness (no search, no tie-breaks)."""
    if w.morphism not in A.src:
        return False
    if w.direction == "down":
        if A.dst[w.morphism] != w.obj:
            return False
        y = A.src[w.morphism]
        for g in A.into(w.obj):
            if g == w.morphism:
                continue
            count = sum(1 for h in A.hom(A.src[g], y)
                        if A.compose[(w.morphism, h)] == g)
            if count != 1:
                return False
        return True
    if w.direction == "up":
        if A.src[w.morphism] != w.obj:
            return False
        y = A.dst[w.morphism]
        for g in A.outof(w.obj):
            if g == w.morphism:
                continue
            count = sum(1 for h in A.hom(y, A.dst[g])
                        if A.compose[(h, w.morphism)] == g)
            if count != 1:
                return False
        return True
    return False


def is_minimal_cat(A: AcyclicCategory) -> bool:
    return all(find_beat(A, x) is None for x in A.objects)


# -- functors and natural transformations -------------------------------------


@dataclass
class FunctorData:
    """Object map plus morphism map; identity images use the Ident tag."""

    source: AcyclicCategory
    target: AcyclicCategory
    objects: dict = field(default_factory=dict)
    morphisms: dict = field(default_factory=dict)

    def on_arrow(self, a):
        if isinstance(a, Ident):
            return Ident(self.objects[a.obj])
        return self.morphisms[a]

    def same_maps(self, other) -> bool:
        return self.objects == other.objects and self.morphisms == other.morphisms


def identity_functor(A: AcyclicCategory) -> FunctorData:
    return FunctorData(A, A, {o: o for o in A.objects},
                       {m: m for m in A.morphisms})


def check_functor(F: FunctorData) -> bool:
    """Endpoint compatibility, F(gf) = F(g)F(f), image closed under composition."""
    A, B = F.source, F.target
    bobj = set(B.objects)
    if set(F.objects) != set(A.objects):
        return False
    if any(F.objects[o] not in bobj for o in A.objects):
        return False
    if set(F.morphisms) != set(A.morphisms):
        return False
    for m in A.morphisms:
        im = F.morphisms[m]
        fs, fd = F.objects[A.src[m]], F.objects[A.dst[m]]
        if isinstance(im, Ident):
            if not (fs == fd == im.obj):
                return False
        else:
            if im not in B.src or B.src[im] != fs or B.dst[im] != fd:
                return False
    for (g, f), c in A.compose.items():
        left = B.compose_arrows(F.morphisms[g], F.morphisms[f])
        if not _arrows_equal(left, F.morphisms[c]):
            return False
    image = {im for im in F.morphisms.values() if not isinstance(im, Ident)}
    for g in image:
        for f in image:
            if B.dst[f] == B.src[g] and B.compose[(g, f)] not in image:
                return False
    return True


def compose_functors(G: FunctorData, F: FunctorData) -> FunctorData:
    objects = {o: G.objects[F.objects[o]] for o in F.source.objects}
    morphisms = {m: G.on_arrow(F.morphisms[m]) for m in F.source.morphisms}
    return FunctorData(F.source, G.target, objects, morphisms)


@dataclass
class NaturalTransformationData:
    """Components source(a): F(a) -> G(a), identity tags allowed."""

    source: FunctorData
    target: FunctorData
    components: dict = field(default_factory=dict)


def check_natural_transformation(A, B, F: FunctorData, G: FunctorData,
                                 t: NaturalTransformationData) -> bool:
    """True iff components have the right endpoints and all squares commute."""
    if set(t.components) != set(A.objects):
        return False
    for a in A.objects:
        c = t.components[a]
        fa, ga = F.objects[a], G.objects[a]
        if isinstance(c, Ident):
            if not (fa == ga == c.obj):
                return False
        else:
            if c not in B.src or B.src[c] != fa or B.dst[c] != ga:
                return False
    for m in A.morphisms:
        p, q = A.src[m], A.dst[m]
        left = B.compose_arrows(t.components[q], F.morphisms[m])
        right = B.compose_arrows(G.morphisms[m], t.components[p])
        if _arrows_equal(left, right):
            continue
        return False
    return True


def _arrows_equal(a, b) -> bool:
    if isinstance(a, Ident) and isinstance(b, Ident):
        return a.obj == b.obj
    return a == b


def find_natural_transformation(F: FunctorData, G: FunctorData):
    """Search components object by object, pruning with naturality squares."""
    A, B = F.source, F.target
    objs = list(A.objects)
    incident = {o: [] for o in objs}
    for m in A.morphisms:
        incident[A.src[m]].append(m)
        incident[A.dst[m]].append(m)

    def candidates(a):
        fa, ga = F.objects[a], G.objects[a]
        cands = []
        if fa == ga:
            cands.append(Ident(fa))
        cands.extend(B.hom(fa, ga))
        return cands

    assignment = {}

    def consistent(a):
        for m in incident[a]:
            p, q = A.src[m], A.dst[m]
            if p in assignment and q in assignment:
                left = B.compose_arrows(assignment[q], F.morphisms[m])
                right = B.compose_arrows(G.morphisms[m], assignment[p])
                if not _arrows_equal(left, right):
                    return False
        return True

    def search(i):
        if i == len(objs):
            return True
        a = objs[i]
        for c in candidates(a):
            assignment[a] = c
            if consistent(a) and search(i + 1):
                return True
            del assignment[a]
        return False

    if search(0):
        return NaturalTransformationData(F, G, dict(assignment))
    return None


# -- retraction functors ------------------------------------------------------


def retraction_functor(A: AcyclicCategory, w: BeatWitness):
    """The collapse-onto-the-witness endofunctor F and its comparison t.

    Down beat at x via f: y -> x gives F(x) = y, F(g: x->b) = g.f,
    F(g: a->x) = the unique lift through f, and t: F => 1 with t_x = f.
    The up case is dual (t: 1 => F).
    """
    if w.direction == "up":
        Fop, top = retraction_functor(opposite_category(A), BeatWitness(
            w.obj, "down", w.morphism))
        F = FunctorData(A, A, Fop.objects, Fop.morphisms)
        t = NaturalTransformationData(identity_functor(A), F, top.components)
        return F, t
    x, f = w.obj, w.morphism
    assert check_beat_witness(A, w), "retraction_functor needs a valid witness"
    y = A.src[f]
    objects = {o: (y if o == x else o) for o in A.objects}
    morphisms = {}
    for m in A.morphisms:
        a, b = A.src[m], A.dst[m]
        if a != x and b != x:
            morphisms[m] = m
        elif a == x:
            morphisms[m] = A.compose[(m, f)]
        else:  # b == x
            if m == f:
                morphisms[m] = Ident(y)
            else:
                lifts = [h for h in A.hom(a, y) if A.compose[(f, h)] == m]
                assert len(lifts) == 1, "beat witness lost its unique factorization"
                morphisms[m] = lifts[0]
    F = FunctorData(A, A, objects, morphisms)
    components = {o: Ident(o) for o in A.objects if o != x}
    components[x] = f
    t = NaturalTransformationData(F, identity_functor(A), components)
    return F, t


def check_descending(A: AcyclicCategory, F: FunctorData):
    """(F is idempotent and admits t: F => 1, witness) for an endofunctor F."""
    if F.source is not A and F.source != A:
        raise NotEndofunctor("functor source is not the given category")
    if F.target is not A and F.target != A:
        raise NotEndofunctor("functor target is not the given category")
    if not check_functor(F):
        raise NotEndofunctor("morphism data is not functorial")
    for o in A.objects:
        if F.objects[F.objects[o]] != F.objects[o]:
            return False, None
    for m in A.morphisms:
        if not _arrows_equal(F.on_arrow(F.morphisms[m]), F.morphisms[m]):
            return False, None
    t = find_natural_transformation(F, identity_functor(A))
    if t is None:
        return False, None
    return True, t


def check_adjunction(A: AcyclicCategory, F: FunctorData) -> bool:
    """For descending F: A(Fy, x) -> F(A)(Fy, Fx) is a bijection inverted by t_x."""
    ok, t = check_descending(A, F)
    if not ok:
        raise ValueError("check_adjunction requires a descending functor")
    image_objects = sorted_tokens({F.objects[o] for o in A.objects})
    image_morphisms = {im for im in F.morphisms.values()
                       if not isinstance(im, Ident)}
    for fy in image_objects:
        for x in A.objects:
            fx = F.objects[x]
            dom = list(A.hom(fy, x))
            if fy == x:
                dom.append(Ident(x))
            codom = [m for m in image_morphisms
                     if A.src[m] == fy and A.dst[m] == fx]
            if fy == fx:
                codom.append(Ident(fy))
            images = [F.on_arrow(u) for u in dom]
            # forward map lands in the image hom set and is a bijection
            for fu in images:
                if not any(_arrows_equal(fu, v) for v in codom):
                    return False
            if len(images) != len(codom):
                return False
            for i in range(len(images)):
                for j in range(i + 1, len(images)):
                    if _arrows_equal(images[i], images[j]):
                        return False
            # the stated inverse: v |-> t_x . v
            tx = t.components[x]
            for v in codom:
                u = A.compose_arrows(tx, v)
                if not _arrows_equal(F.on_arrow(u), v):
                    return False
            for u, fu in zip(dom, images):
                if not _arrows_equal(A.compose_arrows(tx, fu), u):
                    return False
    return True


# -- cores --------------------------------------------------------------------


@dataclass(frozen=True)
class CatCollapseStep:
    digest: str
    witness: BeatWitness


@dataclass
class CatCollapseSequence:
    steps: tuple
    final: AcyclicCategory


def core_category(A: AcyclicCategory):
    """Greedy core: scan objects in identifier order, remove the first beat.

    Returns (core, CatCollapseSequence); the sequence replays from A.
    """
    cur = A
    steps = []
    while True:
        found = None
        for x in cur.objects:
            w = find_beat(cur, x)
            if w is not None:
                found = w
                break
        if found is None:
            break
        steps.append(CatCollapseStep(cur.digest, found))
        cur = remove_object(cur, found.obj)
    return cur, CatCollapseSequence(tuple(steps), cur)


def replay_cat_collapse(A: AcyclicCategory, seq: CatCollapseSequence):
    """Re-apply a recorded sequence, verifying digests and witnesses."""
    cur = A
    for step in seq.steps:
        if cur.digest != step.digest:
            raise StaleStep("category digest does not match the recorded step")
        if not check_beat_witness(cur, step.witness):
            raise StaleStep(f"witness at {step.witness.obj!r} no longer valid")
        cur = remove_object(cur, step.witness.obj)
    if cur != seq.final:
        raise StaleStep("replay did not reach the recorded final category")
    return cur


def is_strongly_collapsible_cat(A: AcyclicCategory) -> bool:
    core, _ = core_category(A)
    return len(core.objects) == 1


# -- isomorphism --------------------------------------------------------------


@dataclass
class CatIsomorphism:
    objects: dict
    morphisms: dict


def _cat_object_signature(A: AcyclicCategory, x):
    outs = sorted(len(v) for (s, _), v in A._hom.items() if s == x)
    ins = sorted(len(v) for (_, d), v in A._hom.items() if d == x)
    return (len(A.into(x)), len(A.outof(x)), tuple(outs), tuple(ins))


def category_fingerprint(A: AcyclicCategory):
    """Cheap isomorphism-invariant used to bucket before full search."""
    sigs = {x: _cat_object_signature(A, x) for x in A.objects}
    edges = sorted((sigs[s], sigs[d], len(v)) for (s, d), v in A._hom.items())
    return (len(A.objects), len(A.src), tuple(sorted(sigs.values())),
            tuple(edges))


def are_isomorphic_cat(A: AcyclicCategory, B: AcyclicCategory):
    """Backtracking isomorphism search; returns CatIsomorphism or None."""
    if len(A.objects) != len(B.objects) or len(A.src) != len(B.src):
        return None
    if category_fingerprint(A) != category_fingerprint(B):
        return None
    sig_a = {x: _cat_object_signature(A, x) for x in A.objects}
    sig_b = {}
    for y in B.objects:
        sig_b.setdefault(_cat_object_signature(B, y), []).append(y)
    objs = sorted(A.objects, key=lambda x: (len(sig_b.get(sig_a[x], [])),
                                            token_key(x)))
    omap = {}
    used = set()

    def obj_ok(x, y):
        for x2, y2 in omap.items():
            if len(A.hom(x, x2)) != len(B.hom(y, y2)):
                return False
            if len(A.hom(x2, x)) != len(B.hom(y2, y)):
                return False
        return True

    def assign_objects(i):
        if i == len(objs):
            return match_morphisms()
        x = objs[i]
        for y in sig_b.get(sig_a[x], []):
            if y in used or not obj_ok(x, y):
                continue
            omap[x] = y
            used.add(y)
            result = assign_objects(i + 1)
            if result is not None:
                return result
            del omap[x]
            used.discard(y)
        return None

    def match_morphisms():
        ms = list(A.morphisms)
        mmap = {}
        taken = set()
        pairs_by_c = A.pairs_by_composite()

        def comp_ok(m):
            for f in mmap:
                for g, f2 in ((m, f), (f, m)):
                    if A.dst[f2] == A.src[g]:
                        c = A.compose[(g, f2)]
                        if c in mmap and B.compose[(mmap[g], mmap[f2])] != mmap[c]:
                            return False
            for g, f in pairs_by_c.get(m, ()):
                if g in mmap and f in mmap:
                    if B.compose[(mmap[g], mmap[f])] != mmap[m]:
                        return False
            return True

        def assign_m(j):
            if j == len(ms):
                return CatIsomorphism(dict(omap), dict(mmap))
            m = ms[j]
            for cand in B.hom(omap[A.src[m]], omap[A.dst[m]]):
                if cand in taken:
                    continue
                mmap[m] = cand
                taken.add(cand)
                if comp_ok(m):
                    result = assign_m(j + 1)
                    if result is not None:
                        return result
                del mmap[m]
                taken.discard(cand)
            return None

        return assign_m(0)

    return assign_objects(0)


def check_cat_isomorphism(A, B, iso: CatIsomorphism) -> bool:
    if sorted_tokens(iso.objects) != list(A.objects):
        return False
    if sorted_tokens(iso.objects[o] for o in A.objects) != list(B.objects):
        return False
    if sorted_tokens(iso.morphisms) != list(A.morphisms):
        return False
    if sorted_tokens(iso.morphisms[m] for m in A.morphisms) != list(B.morphisms):
        return False
    for m in A.morphisms:
        if B.src[iso.morphisms[m]] != iso.objects[A.src[m]]:
            return False
        if B.dst[iso.morphisms[m]] != iso.objects[A.dst[m]]:
            return False
    for (g, f), c in A.compose.items():
        if B.compose[(iso.morphisms[g], iso.morphisms[f])] != iso.morphisms[c]:
            return False
    return True


def relabel_category(A: AcyclicCategory, obj_map, mor_map):
    """Rename everything through bijections; returns (B, CatIsomorphism)."""
    objects = [obj_map[o] for o in A.objects]
    morphisms = [(mor_map[m], obj_map[A.src[m]], obj_map[A.dst[m]])
                 for m in A.morphisms]
    compose = {(mor_map[g], mor_map[f]): mor_map[c]
               for (g, f), c in A.compose.items()}
    B = validate_category(objects, morphisms, compose)
    return B, CatIsomorphism(dict(obj_map), dict(mor_map))


def same_strong_equivalence_type(A: AcyclicCategory, B: AcyclicCategory) -> bool:
    """Cores isomorphic (the decidable route to strong equivalence)."""
    core_a, _ = core_category(A)
    core_b, _ = core_category(B)
    return are_isomorphic_cat(core_a, core_b) is not None
