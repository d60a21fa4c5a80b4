"""Brute-force oracles, seeded generators and cylinder constructions.

Everything here is independent of the production algorithms it checks: cores
are re-derived over every removal order, maps are enumerated exhaustively,
and the structural theorems are verified instance by instance.  All
randomness flows through an explicit seed; all loops are budgeted.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .categories import (
    AcyclicCategory,
    BeatWitness,
    CatIsomorphism,
    FunctorData,
    Ident,
    check_adjunction,
    check_beat_witness,
    check_cat_isomorphism,
    check_descending,
    category_fingerprint,
    find_beat,
    find_natural_transformation,
    is_minimal_cat,
    is_strongly_collapsible_cat,
    are_isomorphic_cat,
    opposite_category,
    remove_object,
    retraction_functor,
    same_strong_equivalence_type,
    validate_category,
)
from .complexes import (
    DeltaComplex,
    DeltaIsomorphism,
    DeltaMap,
    check_delta_isomorphism,
    complex_fingerprint,
    compose_delta_maps,
    find_domination,
    identity_map,
    inclusion_map,
    is_contiguous,
    is_minimal_delta,
    is_strongly_collapsible_delta,
    are_isomorphic_delta,
    remove_vertex,
    retraction_map,
    same_strong_homotopy_type,
    validate_complex,
    validate_delta_map,
)
from .errors import BudgetExceeded, NotIsomorphism, UnknownTag
from .nerve import classifying_space, face_poset_category, sd_category, sd_delta
from .util import sorted_tokens, token_key


@dataclass(frozen=True)
class OracleBudget:
    """Hard caps for the exhaustive oracles."""

    max_objects: int = 6
    max_vertices: int = 7
    seconds: float = 10.0


@dataclass(frozen=True)
class GeneratorParams:
    """Knobs for the seeded random generators; densities live in [0, 1]."""

    seed: int = 0
    max_objects: int = 6
    max_vertices: int = 7
    max_parallel: int = 2
    max_dim: int = 2
    edge_density: float = 0.5
    parallel_density: float = 0.25
    quotient_density: float = 0.3
    fill_density: float = 0.6
    max_morphisms: int = 28
    max_simplices: int = 30


class _Deadline:
    def __init__(self, seconds):
        self.at = time.monotonic() + seconds

    def check(self):
        if time.monotonic() > self.at:
            raise BudgetExceeded("oracle ran past its time budget")


# -- random generators --------------------------------------------------------


def _all_paths(edges):
    """Every composable sequence of generator edges in a DAG, as tuples."""
    by_src = {}
    for e, s, d in edges:
        by_src.setdefault(s, []).append((e, s, d))
    endpoints = {e: (s, d) for e, s, d in edges}
    paths = {}
    frontier = [((e,), s, d) for e, s, d in sorted(edges)]
    while frontier:
        nxt = []
        for path, s, d in frontier:
            paths[path] = (s, d)
            for e2, _, d2 in by_src.get(d, ()):
                nxt.append((path + (e2,), s, d2))
        frontier = nxt
    return paths, endpoints


def random_acyclic_category(p: GeneratorParams) -> AcyclicCategory:
    """Free category on a random DAG, then a random associativity-safe quotient.

    The quotient only ever identifies parallel paths, and the identification
    is closed under left/right composition before classes are formed, so the
    class table is automatically associative.
    """
    rng = random.Random(p.seed)
    n = rng.randint(1, max(1, p.max_objects))
    objects = [f"o{i}" for i in range(n)]
    edges = []
    eid = 0
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p.edge_density:
                count = 1
                while count < p.max_parallel and rng.random() < p.parallel_density:
                    count += 1
                for _ in range(count):
                    edges.append((f"g{eid}", objects[i], objects[j]))
                    eid += 1
    while True:
        paths, _ = _all_paths(edges)
        if len(paths) <= p.max_morphisms:
            break
        edges.pop(rng.randrange(len(edges)))
    # sample identifications of long paths with parallel generator edges
    parent = {path: path for path in paths}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    merged = []

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            merged.append((a, b))

    singles = [path for path in sorted(paths) if len(path) == 1]
    for path in sorted(paths):
        if len(path) < 2:
            continue
        s, d = paths[path]
        for g in singles:
            if paths[g] == (s, d) and rng.random() < p.quotient_density:
                union(path, g)
                break
    # close under composition on both sides
    by_src, by_dst = {}, {}
    for path, (s, d) in paths.items():
        by_src.setdefault(s, []).append(path)
        by_dst.setdefault(d, []).append(path)
    while merged:
        a, b = merged.pop()
        s, d = paths[a]
        for r in by_src.get(d, ()):
            union(a + r, b + r)
        for l in by_dst.get(s, ()):
            union(l + a, l + b)
    classes = {}
    for path in paths:
        classes.setdefault(find(path), []).append(path)
    reps = {root: min(members, key=lambda q: (len(q), token_key(q)))
            for root, members in classes.items()}
    names = {}
    for k, root in enumerate(sorted(reps, key=lambda r: token_key(reps[r]))):
        names[root] = f"m{k}"
    morphisms = [(names[root], paths[reps[root]][0], paths[reps[root]][1])
                 for root in names]
    compose = {}
    for pa in paths:
        sa, da = paths[pa]
        for pb in by_src.get(da, ()):
            compose[(names[find(pb)], names[find(pa)])] = names[find(pa + pb)]
    return validate_category(objects, morphisms, compose)


def random_delta_complex(p: GeneratorParams) -> DeltaComplex:
    """Grow a complex by admissible attachments with multiplicity.

    Every candidate boundary assignment is enumerated and checked for the
    commuting-face condition before a simplex is glued on, so the result is
    valid by construction (and revalidated anyway).
    """
    rng = random.Random(p.seed ^ 0x5EED)
    n = rng.randint(1, max(1, p.max_vertices))
    vertices = [f"v{i}" for i in range(n)]
    levels = [list(vertices)]
    vsets = {v: frozenset([v]) for v in vertices}
    faces = {}
    total = n
    sid = 0
    by_vset = {}

    def add(dim, vs, boundary):
        nonlocal sid, total
        name = f"s{dim}_{sid}"
        sid += 1
        while len(levels) <= dim:
            levels.append([])
        levels[dim].append(name)
        vsets[name] = vs
        for v, t in boundary.items():
            faces[(name, v)] = t
        by_vset.setdefault(vs, []).append(name)
        total += 1
        return name

    for i, j in itertools.combinations(range(n), 2):
        if rng.random() < p.edge_density and total < p.max_simplices:
            vs = frozenset([vertices[i], vertices[j]])
            count = 1
            while count < p.max_parallel and rng.random() < p.parallel_density:
                count += 1
            for _ in range(count):
                if total >= p.max_simplices:
                    break
                add(1, vs, {vertices[i]: vertices[j], vertices[j]: vertices[i]})
    for dim in range(2, max(2, p.max_dim) + 1):
        prob = p.fill_density ** (dim - 1)
        for combo in itertools.combinations(vertices, dim + 1):
            if total >= p.max_simplices:
                break
            if rng.random() >= prob:
                continue
            vs = frozenset(combo)
            slots = sorted_tokens(vs)
            options = [by_vset.get(vs - {v}, ()) for v in slots]
            if any(not opts for opts in options):
                continue
            good = []
            for pick in itertools.product(*options):
                boundary = dict(zip(slots, pick))
                if all(faces[(boundary[v], w)] == faces[(boundary[w], v)]
                       for v, w in itertools.combinations(slots, 2)):
                    good.append(boundary)
            if not good:
                continue
            boundary = good[rng.randrange(len(good))]
            count = 1
            while count < p.max_parallel and rng.random() < p.parallel_density:
                count += 1
            for _ in range(count):
                if total >= p.max_simplices:
                    break
                add(dim, vs, boundary)
    return validate_complex(levels, vsets, faces)


# -- all-orders core oracles --------------------------------------------------


def all_orders_cores_cat(A: AcyclicCategory, budget: OracleBudget | None = None):
    """Isomorphism classes of end results over every beat-removal order."""
    budget = budget or OracleBudget()
    if len(A.objects) > budget.max_objects:
        raise BudgetExceeded(
            f"{len(A.objects)} objects exceeds the cap of {budget.max_objects}")
    deadline = _Deadline(budget.seconds)
    seen = {frozenset(A.objects)}
    minimal = {}
    stack = [A]
    while stack:
        deadline.check()
        cur = stack.pop()
        witnesses = [w for w in (find_beat(cur, x) for x in cur.objects) if w]
        if not witnesses:
            minimal[cur.digest] = cur
            continue
        for w in witnesses:
            child = remove_object(cur, w.obj)
            key = frozenset(child.objects)
            if key not in seen:
                seen.add(key)
                stack.append(child)
    return _iso_classes(sorted(minimal.values(), key=lambda c: c.digest),
                        category_fingerprint, are_isomorphic_cat)


def all_orders_cores_delta(X: DeltaComplex, budget: OracleBudget | None = None):
    """Isomorphism classes of end results over every domination-removal order."""
    budget = budget or OracleBudget()
    if len(X.vertices) > budget.max_vertices:
        raise BudgetExceeded(
            f"{len(X.vertices)} vertices exceeds the cap of {budget.max_vertices}")
    deadline = _Deadline(budget.seconds)
    seen = {frozenset(X.vertices)}
    minimal = {}
    stack = [X]
    while stack:
        deadline.check()
        cur = stack.pop()
        dominated = [v for v in cur.vertices if find_domination(cur, v)]
        if not dominated:
            minimal[cur.digest] = cur
            continue
        for v in dominated:
            child = remove_vertex(cur, v)
            key = frozenset(child.vertices)
            if key not in seen:
                seen.add(key)
                stack.append(child)
    return _iso_classes(sorted(minimal.values(), key=lambda c: c.digest),
                        complex_fingerprint, are_isomorphic_delta)


def _iso_classes(items, fingerprint, are_isomorphic):
    buckets = {}
    reps = []
    for item in items:
        fp = fingerprint(item)
        group = buckets.setdefault(fp, [])
        if not any(are_isomorphic(item, other) for other in group):
            group.append(item)
            reps.append(item)
    return reps


# -- exhaustive map / functor enumeration -------------------------------------


def enumerate_delta_maps(X: DeltaComplex, Y: DeltaComplex,
                         budget: OracleBudget | None = None):
    """Every delta map X -> Y, in deterministic order."""
    budget = budget or OracleBudget()
    if len(Y.vertices) ** max(1, len(X.vertices)) > 10 ** 6:
        raise BudgetExceeded("vertex map space is out of reach")
    deadline = _Deadline(budget.seconds)
    order = list(X.all_simplices())
    results = []
    assign = {}

    def candidates(s):
        if X.dim_of[s] == 0:
            return Y.vertices
        image_vs = frozenset(assign[v] for v in X.vertex_sets[s])
        cands = []
        for t in Y.by_vset.get(image_vs, ()):
            ok = True
            for w in X.vertex_sets[s]:
                fw = assign[w]
                preimages = [u for u in X.vertex_sets[s] if assign[u] == fw]
                got = assign[X.faces[(s, w)]]
                want = Y.faces[(t, fw)] if len(preimages) == 1 else t
                if got != want:
                    ok = False
                    break
            if ok:
                cands.append(t)
        return cands

    def search(i):
        deadline.check()
        if i == len(order):
            results.append(DeltaMap(X, Y, dict(assign)))
            return
        s = order[i]
        for t in candidates(s):
            assign[s] = t
            search(i + 1)
            del assign[s]

    search(0)
    return results


def enumerate_functors(A: AcyclicCategory, B: AcyclicCategory,
                       budget: OracleBudget | None = None):
    """Every functor A -> B, in deterministic order."""
    budget = budget or OracleBudget()
    if len(B.objects) ** max(1, len(A.objects)) > 10 ** 6:
        raise BudgetExceeded("object map space is out of reach")
    deadline = _Deadline(budget.seconds)
    objs = list(A.objects)
    ms = list(A.morphisms)
    pairs_by_c = A.pairs_by_composite()
    results = []
    omap = {}
    mmap = {}

    def mor_candidates(m):
        s, d = A.src[m], A.dst[m]
        fs, fd = omap[s], omap[d]
        cands = []
        if fs == fd:
            cands.append(Ident(fs))
        cands.extend(B.hom(fs, fd))
        return cands

    def comp_ok(m):
        for f in mmap:
            for g2, f2 in ((m, f), (f, m)):
                if A.dst[f2] == A.src[g2]:
                    c = A.compose[(g2, f2)]
                    if c in mmap:
                        left = B.compose_arrows(mmap[g2], mmap[f2])
                        if not _arrow_eq(left, mmap[c]):
                            return False
        for g2, f2 in pairs_by_c.get(m, ()):
            if g2 in mmap and f2 in mmap:
                left = B.compose_arrows(mmap[g2], mmap[f2])
                if not _arrow_eq(left, mmap[m]):
                    return False
        return True

    def assign_m(j):
        deadline.check()
        if j == len(ms):
            results.append(FunctorData(A, B, dict(omap), dict(mmap)))
            return
        m = ms[j]
        for cand in mor_candidates(m):
            mmap[m] = cand
            if comp_ok(m):
                assign_m(j + 1)
            del mmap[m]

    def assign_o(i):
        deadline.check()
        if i == len(objs):
            assign_m(0)
            return
        for y in B.objects:
            omap[objs[i]] = y
            assign_o(i + 1)
            del omap[objs[i]]

    assign_o(0)
    return results


def _arrow_eq(a, b):
    if isinstance(a, Ident) and isinstance(b, Ident):
        return a.obj == b.obj
    return a == b


def homotopic_functors_bounded(A: AcyclicCategory, B: AcyclicCategory,
                               F: FunctorData, G: FunctorData,
                               max_len: int = 4,
                               budget: OracleBudget | None = None):
    """Bounded zig-zag search between two functors.

    Returns a list of (direction, transformation) steps connecting F to G
    through intermediate functors, [] when F = G, or None when no chain of at
    most max_len natural transformations was found.  A None is only "not
    found within the bound", never a proof of non-homotopy.
    """
    budget = budget or OracleBudget()
    functors = enumerate_functors(A, B, budget)

    def index_of(H):
        for i, K in enumerate(functors):
            if K.same_maps(H):
                return i
        raise ValueError("functor is not in the enumerated family")

    start, goal = index_of(F), index_of(G)
    if start == goal:
        return []
    deadline = _Deadline(budget.seconds)
    nat_cache = {}

    def nat(i, j):
        if (i, j) not in nat_cache:
            deadline.check()
            nat_cache[(i, j)] = find_natural_transformation(
                functors[i], functors[j])
        return nat_cache[(i, j)]

    paths = {start: []}
    frontier = [start]
    for _ in range(max_len):
        nxt = []
        for i in frontier:
            for j in range(len(functors)):
                if j in paths or j == i:
                    continue
                t = nat(i, j)
                if t is not None:
                    paths[j] = paths[i] + [("forward", t)]
                else:
                    t = nat(j, i)
                    if t is not None:
                        paths[j] = paths[i] + [("backward", t)]
                    else:
                        continue
                if j == goal:
                    return paths[j]
                nxt.append(j)
        frontier = nxt
        if not frontier:
            break
    return None


# -- cylinder constructions ---------------------------------------------------


def _linear_extension(A: AcyclicCategory):
    remaining = set(A.objects)
    blocked = {o: {A.src[m] for m in A.into(o)} for o in A.objects}
    order = []
    while remaining:
        ready = [o for o in sorted_tokens(remaining)
                 if not (blocked[o] & remaining)]
        assert ready, "acyclic category must admit a linear extension"
        order.append(ready[0])
        remaining.discard(ready[0])
    return order


def _classify(idx, s, d, j):
    """Stage-j home of an arrow s -> d (indexes in the linear extension)."""
    if idx[d] < j:
        return "B"
    if idx[s] >= j:
        return "A"
    return "p"


def _cylinder_stage_cat(A, B, iso: CatIsomorphism, order, j):
    """A_j: the first j objects replaced by their images, arrows retagged."""
    idx = {a: pos for pos, a in enumerate(order)}
    objects = [("B", iso.objects[a]) for a in order[:j]] + \
              [("A", a) for a in order[j:]]

    def mid(m):
        kind = _classify(idx, A.src[m], A.dst[m], j)
        return ("B", iso.morphisms[m]) if kind == "B" else (kind, m)

    def end(o, side_b):
        return ("B", iso.objects[o]) if side_b else ("A", o)

    morphisms = []
    for m in A.morphisms:
        kind = _classify(idx, A.src[m], A.dst[m], j)
        s_b = kind == "B" or kind == "p"
        d_b = kind == "B"
        morphisms.append((mid(m), end(A.src[m], s_b), end(A.dst[m], d_b)))
    compose = {(mid(g), mid(f)): mid(c) for (g, f), c in A.compose.items()}
    return validate_category(objects, morphisms, compose)


def cylinder_cat(A: AcyclicCategory, B: AcyclicCategory,
                 iso: CatIsomorphism, i: int) -> AcyclicCategory:
    """C_i: stage i-1 and stage i glued along a connecting arrow ("k",).

    Both ("A", a_i) and ("B", F(a_i)) are beat objects witnessed by the
    connecting arrow; removing them yields stage i and stage i-1.
    """
    if not check_cat_isomorphism(A, B, iso):
        raise NotIsomorphism("cylinder_cat needs a genuine isomorphism")
    order = _linear_extension(A)
    if not 1 <= i <= len(order):
        raise ValueError(f"rung {i} out of range 1..{len(order)}")
    idx = {a: pos for pos, a in enumerate(order)}
    a_i = order[i - 1]
    fa_i = iso.objects[a_i]
    objects = [("B", iso.objects[a]) for a in order[:i]] + \
              [("A", a) for a in order[i - 1:]]
    src, dst = {}, {}

    def put(mid_, s, d):
        src[mid_] = s
        dst[mid_] = d

    for m in A.morphisms:
        s, d = A.src[m], A.dst[m]
        if idx[d] <= i - 1:
            put(("B", iso.morphisms[m]),
                ("B", iso.objects[s]), ("B", iso.objects[d]))
        if idx[s] >= i - 1:
            put(("A", m), ("A", s), ("A", d))
        if idx[s] <= i - 1 <= idx[d]:
            put(("p", m), ("B", iso.objects[s]), ("A", d))
    put(("k",), ("B", fa_i), ("A", a_i))
    compose = {}
    for (g, f), c in A.compose.items():
        gs, gd = idx[A.src[g]], idx[A.dst[g]]
        fs, fd = idx[A.src[f]], idx[A.dst[f]]
        bg, bf, bc = ("B", iso.morphisms[g]), ("B", iso.morphisms[f]), \
                     ("B", iso.morphisms[c])
        if gd <= i - 1:
            compose[(bg, bf)] = bc
        if fs >= i - 1:
            compose[(("A", g), ("A", f))] = ("A", c)
        if fd <= i - 1 <= gd:
            compose[(("p", g), bf)] = ("p", c)
        if fs <= i - 1 <= fd and gs >= i - 1:
            compose[(("A", g), ("p", f))] = ("p", c)
    for m in A.morphisms:
        if idx[A.src[m]] == i - 1:
            compose[(("A", m), ("k",))] = ("p", m)
        if idx[A.dst[m]] == i - 1:
            compose[(("k",), ("B", iso.morphisms[m]))] = ("p", m)
    triples = [(mid_, src[mid_], dst[mid_]) for mid_ in src]
    return validate_category(objects, triples, compose)


def verify_cylinder_ladder_cat(A, B, iso: CatIsomorphism) -> bool:
    """Check every rung: claimed witnesses hold and removals hit the stages."""
    if not check_cat_isomorphism(A, B, iso):
        raise NotIsomorphism("ladder needs a genuine isomorphism")
    order = _linear_extension(A)
    for i in range(1, len(order) + 1):
        C = cylinder_cat(A, B, iso, i)
        a_i = order[i - 1]
        fa_i = iso.objects[a_i]
        if not check_beat_witness(C, BeatWitness(("A", a_i), "down", ("k",))):
            return False
        if not check_beat_witness(C, BeatWitness(("B", fa_i), "up", ("k",))):
            return False
        if remove_object(C, ("A", a_i)) != _cylinder_stage_cat(A, B, iso, order, i):
            return False
        if remove_object(C, ("B", fa_i)) != _cylinder_stage_cat(A, B, iso, order, i - 1):
            return False
    return same_strong_equivalence_type(A, B)


def _cylinder_copy_delta(X: DeltaComplex, v, tag):
    levels = []
    vsets = {}
    faces = {}

    def nid(s):
        return (tag, s) if v in X.vertex_sets[s] else ("a", s)

    def nv(u):
        return (tag, u) if u == v else ("a", u)

    for n, level in enumerate(X.simplices):
        levels.append([nid(s) for s in level])
        for s in level:
            vsets[nid(s)] = frozenset(nv(u) for u in X.vertex_sets[s])
            if n:
                for u in X.vertex_sets[s]:
                    faces[(nid(s), nv(u))] = nid(X.faces[(s, u)])
    return DeltaComplex(levels, vsets, faces)


def cylinder_delta(X: DeltaComplex, Y: DeltaComplex,
                   iso: DeltaIsomorphism, i: int) -> DeltaComplex:
    """Z(i): two copies of X differing at the i-th vertex, joined by cones.

    The old copy of the vertex is dominated by the new one and conversely;
    removing either leaves a full copy of X.
    """
    if not check_delta_isomorphism(X, Y, iso):
        raise NotIsomorphism("cylinder_delta needs a genuine isomorphism")
    order = list(X.vertices)
    if not 1 <= i <= len(order):
        raise ValueError(f"rung {i} out of range 1..{len(order)}")
    v = order[i - 1]
    levels = []
    vsets = {}
    faces = {}

    def ensure(n):
        while len(levels) <= n:
            levels.append([])

    def nv(u, tag):
        return (tag, u) if u == v else ("a", u)

    for n, level in enumerate(X.simplices):
        for s in level:
            vs = X.vertex_sets[s]
            if v not in vs:
                ensure(n)
                levels[n].append(("a", s))
                vsets[("a", s)] = frozenset(("a", u) for u in vs)
                if n:
                    for u in vs:
                        faces[(("a", s), ("a", u))] = ("a", X.faces[(s, u)])
                continue
            for tag in ("new", "old"):
                sid = (tag, s)
                ensure(n)
                levels[n].append(sid)
                vsets[sid] = frozenset(nv(u, tag) for u in vs)
                if n:
                    for u in vs:
                        t = X.faces[(s, u)]
                        if u == v:
                            faces[(sid, (tag, v))] = ("a", t)
                        else:
                            faces[(sid, ("a", u))] = (tag, t)
            cone = ("cone", s)
            ensure(n + 1)
            levels[n + 1].append(cone)
            vsets[cone] = frozenset(("a", u) for u in vs if u != v) | \
                {("old", v), ("new", v)}
            faces[(cone, ("new", v))] = ("old", s)
            faces[(cone, ("old", v))] = ("new", s)
            for u in vs:
                if u != v:
                    faces[(cone, ("a", u))] = ("cone", X.faces[(s, u)])
    return validate_complex(levels, vsets, faces)


def verify_cylinder_ladder_delta(X, Y, iso: DeltaIsomorphism) -> bool:
    """Check every rung: both dominations hold and removals hit the copies."""
    if not check_delta_isomorphism(X, Y, iso):
        raise NotIsomorphism("ladder needs a genuine isomorphism")
    order = list(X.vertices)
    for i in range(1, len(order) + 1):
        Z = cylinder_delta(X, Y, iso, i)
        v = order[i - 1]
        if find_domination(Z, ("old", v), by=("new", v)) is None:
            return False
        if find_domination(Z, ("new", v), by=("old", v)) is None:
            return False
        if remove_vertex(Z, ("old", v)) != _cylinder_copy_delta(X, v, "new"):
            return False
        if remove_vertex(Z, ("new", v)) != _cylinder_copy_delta(X, v, "old"):
            return False
    return same_strong_homotopy_type(X, Y)


# -- theorem checks -----------------------------------------------------------


@dataclass
class TheoremReport:
    theorem: str
    instance_digest: str
    verdict: str  # "holds" | "counterexample"
    witness: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"

    def to_payload(self):
        return {"theorem": self.theorem, "instance": self.instance_digest,
                "verdict": self.verdict, "witness": self.witness}


def _beat_other_end(A, w: BeatWitness):
    return A.src[w.morphism] if w.direction == "down" else A.dst[w.morphism]


def _check_beat_dominated(A: AcyclicCategory):
    BA = classifying_space(A)
    for x in A.objects:
        w = find_beat(A, x)
        if w is None:
            continue
        other = _beat_other_end(A, w)
        if find_domination(BA, x, by=other) is None:
            return False, {"object": str(x), "direction": w.direction}
    return True, {}


def _check_b_minimal(A):
    lhs = is_minimal_cat(A)
    rhs = is_minimal_delta(classifying_space(A))
    return lhs == rhs, {"category_minimal": lhs, "space_minimal": rhs}


def _check_b_collapse(A):
    lhs = is_strongly_collapsible_cat(A)
    rhs = is_strongly_collapsible_delta(classifying_space(A))
    return lhs == rhs, {"category": lhs, "space": rhs}


def _check_sd_cat_collapse(A):
    lhs = is_strongly_collapsible_cat(A)
    rhs = is_strongly_collapsible_cat(sd_category(A))
    return lhs == rhs, {"category": lhs, "subdivision": rhs}


def _check_adjunction_tag(A):
    """Retraction at a down beat is descending and satisfies the adjunction;
    an up beat is handled as a down beat of the opposite category."""
    for x in A.objects:
        w = find_beat(A, x)
        if w is None:
            continue
        side, wdown = A, w
        if w.direction == "up":
            side = opposite_category(A)
            wdown = BeatWitness(x, "down", w.morphism)
        F, _ = retraction_functor(side, wdown)
        ok, _ = check_descending(side, F)
        if not ok or not check_adjunction(side, F):
            return False, {"object": str(x), "direction": w.direction}
    return True, {}


def _check_chi_minimal(X: DeltaComplex):
    chi_min = is_minimal_cat(face_poset_category(X))
    if chi_min and not is_minimal_delta(X):
        return False, {"face_poset_minimal": True, "complex_minimal": False}
    return True, {"face_poset_minimal": chi_min}


def _check_chi_collapse(X):
    lhs = is_strongly_collapsible_delta(X)
    rhs = is_strongly_collapsible_cat(face_poset_category(X))
    return lhs == rhs, {"complex": lhs, "face_poset": rhs}


def _check_sd_delta_collapse(X):
    lhs = is_strongly_collapsible_delta(X)
    rhs = is_strongly_collapsible_delta(sd_delta(X))
    return lhs == rhs, {"complex": lhs, "subdivision": rhs}


def _check_contiguity_retraction(X):
    for v in X.vertices:
        w = find_domination(X, v)
        if w is None:
            continue
        r = retraction_map(X, w)
        if not validate_delta_map(r):
            return False, {"vertex": str(v), "failure": "retraction invalid"}
        back = compose_delta_maps(inclusion_map(r.target, X), r)
        if not is_contiguous(back, identity_map(X)):
            return False, {"vertex": str(v), "failure": "not contiguous"}
    return True, {}


_CAT_CHECKS = {
    "beat_dominated": _check_beat_dominated,
    "B_minimal": _check_b_minimal,
    "B_collapse": _check_b_collapse,
    "sd_cat_collapse": _check_sd_cat_collapse,
    "adjunction": _check_adjunction_tag,
}

_DELTA_CHECKS = {
    "chi_minimal": _check_chi_minimal,
    "chi_collapse": _check_chi_collapse,
    "sd_delta_collapse": _check_sd_delta_collapse,
    "contiguity_retraction": _check_contiguity_retraction,
}

THEOREM_TAGS = tuple(sorted(_CAT_CHECKS) + sorted(_DELTA_CHECKS))


def check_theorem(tag: str, instance,
                  budget: OracleBudget | None = None) -> TheoremReport:
    """Run one structural check on one instance and report the verdict.

    A counterexample report carries the canonical form of the instance so the
    failure replays outside the run that found it.  The time budget is
    enforced between whole checks, not inside one, so a single check on an
    in-cap instance always runs to completion.
    """
    budget = budget or OracleBudget()
    deadline = _Deadline(budget.seconds)
    if tag in _CAT_CHECKS:
        if not isinstance(instance, AcyclicCategory):
            raise ValueError(f"{tag} expects a category instance")
        holds, witness = _CAT_CHECKS[tag](instance)
    elif tag in _DELTA_CHECKS:
        if not isinstance(instance, DeltaComplex):
            raise ValueError(f"{tag} expects a complex instance")
        holds, witness = _DELTA_CHECKS[tag](instance)
    else:
        raise UnknownTag(f"unknown theorem tag {tag!r}")
    deadline.check()
    if not holds:
        witness = dict(witness)
        witness["instance"] = instance.canonical()
    return TheoremReport(tag, instance.digest,
                         "holds" if holds else "counterexample", witness)
