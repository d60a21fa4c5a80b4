"""Small named structures used by the tests, the docs and the CLI examples."""

from __future__ import annotations

from .categories import AcyclicCategory, validate_category
from .complexes import DeltaComplex, from_simplicial_complex, validate_complex


def s0_category() -> AcyclicCategory:
    """Two objects, no morphisms."""
    return validate_category(["x", "y"], [], {})


def s1_category() -> AcyclicCategory:
    """Two objects with two parallel morphisms x -> y; minimal, a circle."""
    return validate_category(
        ["x", "y"], [("f", "x", "y"), ("g", "x", "y")], {})


def chain3_category() -> AcyclicCategory:
    """0 -> 1 -> 2 with the composite c = g.f made explicit."""
    return validate_category(
        ["0", "1", "2"],
        [("f", "0", "1"), ("g", "1", "2"), ("c", "0", "2")],
        {("g", "f"): "c"})


def chain_category(n: int) -> AcyclicCategory:
    """The poset 0 < 1 < ... < n as a category with arrows m{i}_{j}."""
    objects = [str(i) for i in range(n + 1)]
    morphisms = [(f"m{i}_{j}", str(i), str(j))
                 for i in range(n + 1) for j in range(i + 1, n + 1)]
    compose = {}
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                compose[(f"m{j}_{k}", f"m{i}_{j}")] = f"m{i}_{k}"
    return validate_category(objects, morphisms, compose)


def point_delta() -> DeltaComplex:
    return validate_complex([["a"]], {"a": ["a"]}, {})


def single_edge_delta() -> DeltaComplex:
    return from_simplicial_complex([{"a", "b"}])


def s1_delta() -> DeltaComplex:
    """Two vertices joined by two parallel edges; minimal, a circle."""
    return validate_complex(
        [["a", "b"], ["e1", "e2"]],
        {"a": ["a"], "b": ["b"], "e1": ["a", "b"], "e2": ["a", "b"]},
        {("e1", "a"): "b", ("e1", "b"): "a",
         ("e2", "a"): "b", ("e2", "b"): "a"})


def s2_delta() -> DeltaComplex:
    """Two triangles glued along their whole boundary; a 2-sphere."""
    return validate_complex(
        [["a", "b", "c"], ["ab", "ac", "bc"], ["T1", "T2"]],
        {"a": ["a"], "b": ["b"], "c": ["c"],
         "ab": ["a", "b"], "ac": ["a", "c"], "bc": ["b", "c"],
         "T1": ["a", "b", "c"], "T2": ["a", "b", "c"]},
        {("ab", "a"): "b", ("ab", "b"): "a",
         ("ac", "a"): "c", ("ac", "c"): "a",
         ("bc", "b"): "c", ("bc", "c"): "b",
         ("T1", "a"): "bc", ("T1", "b"): "ac", ("T1", "c"): "ab",
         ("T2", "a"): "bc", ("T2", "b"): "ac", ("T2", "c"): "ab"})


def disc_delta() -> DeltaComplex:
    """Two triangles sharing two edges, with a doubled third edge; a disc."""
    return validate_complex(
        [["a", "b", "c"], ["ab", "ac", "bc", "bc2"], ["T1", "T2"]],
        {"a": ["a"], "b": ["b"], "c": ["c"],
         "ab": ["a", "b"], "ac": ["a", "c"],
         "bc": ["b", "c"], "bc2": ["b", "c"],
         "T1": ["a", "b", "c"], "T2": ["a", "b", "c"]},
        {("ab", "a"): "b", ("ab", "b"): "a",
         ("ac", "a"): "c", ("ac", "c"): "a",
         ("bc", "b"): "c", ("bc", "c"): "b",
         ("bc2", "b"): "c", ("bc2", "c"): "b",
         ("T1", "a"): "bc", ("T1", "b"): "ac", ("T1", "c"): "ab",
         ("T2", "a"): "bc2", ("T2", "b"): "ac", ("T2", "c"): "ab"})


def hollow_triangle() -> DeltaComplex:
    return from_simplicial_complex([{"a", "b"}, {"b", "c"}, {"a", "c"}])


def full_triangle() -> DeltaComplex:
    return from_simplicial_complex([{"a", "b", "c"}])
