"""Versioned JSON documents for categories, complexes and delta maps.

Identifiers inside the library may be nested tuples (subdivisions, cylinders
and classifying spaces generate them); on save they are rendered to strings
through an injective flattening, with an explicit collision check.  Loaded
documents always carry plain string identifiers, so save(load(text)) is
byte-stable.
"""

from __future__ import annotations

import json

from .categories import AcyclicCategory, validate_category
from .complexes import DeltaComplex, DeltaMap, delta_map_violation, validate_complex
from .errors import ParseError, SchemaVersionMismatch

CATEGORY_FORMAT = "collapsar/category-v1"
COMPLEX_FORMAT = "collapsar/complex-v1"
MAP_FORMAT = "collapsar/delta-map-v1"


# -- identifier rendering -----------------------------------------------------


def render_token(token) -> str:
    if isinstance(token, str):
        return token
    if isinstance(token, bool):
        return "true" if token else "false"
    if isinstance(token, int):
        return str(token)
    if isinstance(token, tuple):
        return "(" + ",".join(render_token(t) for t in token) + ")"
    raise ValueError(f"cannot render identifier {token!r}")


def _render_bijection(tokens):
    out = {}
    seen = {}
    for t in tokens:
        r = render_token(t)
        if r in seen and seen[r] != t:
            raise ValueError(
                f"identifiers {seen[r]!r} and {t!r} both render as {r!r}")
        seen[r] = t
        out[t] = r
    return out


# -- structural helpers -------------------------------------------------------


def _field(d, key, kind, where):
    if not isinstance(d, dict):
        raise ParseError(f"{where}: expected a JSON object")
    if key not in d:
        raise ParseError(f"{where}: missing field {key!r}")
    v = d[key]
    if kind is not None and not isinstance(v, kind):
        raise ParseError(f"{where}.{key}: expected {kind.__name__}")
    return v


def _check_format(d, want, family, where):
    fmt = _field(d, "format", str, where)
    if fmt == want:
        return
    if fmt.startswith(family):
        raise SchemaVersionMismatch(
            f"{where}: got {fmt!r}, this build reads {want!r}")
    raise ParseError(f"{where}: not a {want!r} document (format {fmt!r})")


def _str_list(v, where):
    if not isinstance(v, list) or not all(isinstance(x, str) for x in v):
        raise ParseError(f"{where}: expected a list of strings")
    return v


# -- category documents -------------------------------------------------------


def category_to_payload(A: AcyclicCategory) -> dict:
    rmap = _render_bijection(list(A.objects) + list(A.morphisms))
    compose = sorted(
        ({"g": rmap[g], "f": rmap[f], "result": rmap[c]}
         for (g, f), c in A.compose.items()),
        key=lambda e: (e["g"], e["f"]))
    return {
        "format": CATEGORY_FORMAT,
        "objects": [rmap[o] for o in A.objects],
        "morphisms": [{"id": rmap[m], "src": rmap[A.src[m]],
                       "dst": rmap[A.dst[m]]} for m in A.morphisms],
        "compose": compose,
    }


def category_from_payload(d) -> AcyclicCategory:
    _check_format(d, CATEGORY_FORMAT, "collapsar/category-", "category")
    objects = _str_list(_field(d, "objects", list, "category"), "category.objects")
    morphisms = []
    for i, entry in enumerate(_field(d, "morphisms", list, "category")):
        where = f"category.morphisms[{i}]"
        morphisms.append((_field(entry, "id", str, where),
                          _field(entry, "src", str, where),
                          _field(entry, "dst", str, where)))
    compose = {}
    for i, entry in enumerate(_field(d, "compose", list, "category")):
        where = f"category.compose[{i}]"
        key = (_field(entry, "g", str, where), _field(entry, "f", str, where))
        result = _field(entry, "result", str, where)
        if key in compose:
            raise ParseError(f"{where}: duplicate entry for {key}")
        compose[key] = result
    return validate_category(objects, morphisms, compose)


# -- complex documents --------------------------------------------------------


def complex_to_payload(X: DeltaComplex) -> dict:
    rmap = _render_bijection(list(X.all_simplices()))
    simplices = [[{"id": rmap[s],
                   "vertices": sorted(rmap[v] for v in X.vertex_sets[s])}
                  for s in level] for level in X.simplices]
    faces = sorted(
        ({"simplex": rmap[s], "vertex": rmap[v], "result": rmap[t]}
         for (s, v), t in X.faces.items()),
        key=lambda e: (e["simplex"], e["vertex"]))
    return {"format": COMPLEX_FORMAT, "simplices": simplices, "faces": faces}


def complex_from_payload(d) -> DeltaComplex:
    _check_format(d, COMPLEX_FORMAT, "collapsar/complex-", "complex")
    raw_levels = _field(d, "simplices", list, "complex")
    levels = []
    vertex_sets = {}
    for n, raw in enumerate(raw_levels):
        if not isinstance(raw, list):
            raise ParseError(f"complex.simplices[{n}]: expected a list")
        level = []
        for i, entry in enumerate(raw):
            where = f"complex.simplices[{n}][{i}]"
            sid = _field(entry, "id", str, where)
            verts = _str_list(_field(entry, "vertices", list, where), where)
            level.append(sid)
            vertex_sets[sid] = frozenset(verts)
        levels.append(level)
    faces = {}
    for i, entry in enumerate(_field(d, "faces", list, "complex")):
        where = f"complex.faces[{i}]"
        key = (_field(entry, "simplex", str, where),
               _field(entry, "vertex", str, where))
        if key in faces:
            raise ParseError(f"{where}: duplicate entry for {key}")
        faces[key] = _field(entry, "result", str, where)
    return validate_complex(levels, vertex_sets, faces)


# -- map documents ------------------------------------------------------------


def map_to_payload(m: DeltaMap) -> dict:
    rs = _render_bijection(list(m.source.all_simplices()))
    rt = _render_bijection(list(m.target.all_simplices()))
    assignments = [{"simplex": rs[s], "k": m.k(s), "image": rt[m.assign[s]]}
                   for s in m.source.all_simplices()]
    return {
        "format": MAP_FORMAT,
        "source": complex_to_payload(m.source),
        "target": complex_to_payload(m.target),
        "assignments": assignments,
    }


def map_from_payload(d) -> DeltaMap:
    _check_format(d, MAP_FORMAT, "collapsar/delta-map-", "map")
    source = complex_from_payload(_field(d, "source", dict, "map"))
    target = complex_from_payload(_field(d, "target", dict, "map"))
    assign = {}
    for i, entry in enumerate(_field(d, "assignments", list, "map")):
        where = f"map.assignments[{i}]"
        s = _field(entry, "simplex", str, where)
        image = _field(entry, "image", str, where)
        k = _field(entry, "k", int, where)
        if s in assign:
            raise ParseError(f"{where}: simplex {s!r} assigned twice")
        if image not in target.dim_of:
            raise ParseError(f"{where}: image {image!r} is not in the target")
        if target.dim_of[image] != k:
            raise ParseError(
                f"{where}: k={k} but image {image!r} has dimension "
                f"{target.dim_of[image]}")
        assign[s] = image
    m = DeltaMap(source, target, assign)
    violation = delta_map_violation(m)
    if violation is not None:
        s, w, message = violation
        at = "" if s is None else f" at {s!r}" + ("" if w is None else f"/{w!r}")
        raise ParseError(f"map{at}: {message}")
    return m


# -- top level ----------------------------------------------------------------

_LOADERS = (
    ("collapsar/category-", category_from_payload),
    ("collapsar/complex-", complex_from_payload),
    ("collapsar/delta-map-", map_from_payload),
)


def payload_for(value) -> dict:
    if isinstance(value, AcyclicCategory):
        return category_to_payload(value)
    if isinstance(value, DeltaComplex):
        return complex_to_payload(value)
    if isinstance(value, DeltaMap):
        return map_to_payload(value)
    raise ValueError(f"no document form for {type(value).__name__}")


def load_document(text: str):
    """Parse any known document kind, dispatching on its format string."""
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    if not isinstance(d, dict):
        raise ParseError("document: expected a JSON object")
    fmt = _field(d, "format", str, "document")
    for prefix, loader in _LOADERS:
        if fmt.startswith(prefix):
            return loader(d)
    raise ParseError(f"document: unrecognized format {fmt!r}")


def dump_document(payload: dict) -> str:
    """Canonical text: two-space indent, insertion key order, one newline."""
    return json.dumps(payload, indent=2) + "\n"
