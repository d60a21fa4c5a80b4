import pytest

from collapsar import (
    DeltaMap,
    Ident,
    NotContiguous,
    OrderViolation,
    check_functor,
    classifying_map,
    classifying_space,
    compose_delta_maps,
    contiguity_join,
    face_poset_category,
    face_poset_map,
    find_beat,
    find_domination,
    identity_functor,
    identity_map,
    inclusion_map,
    is_minimal_cat,
    is_minimal_delta,
    is_strongly_collapsible_cat,
    is_strongly_collapsible_delta,
    retraction_functor,
    retraction_map,
    sd_category,
    sd_delta,
    validate_delta_map,
)
from collapsar.fixtures import (
    chain3_category,
    disc_delta,
    s1_category,
    s1_delta,
    s2_delta,
)
from collapsar.simple_collapse import euler_characteristic


# -- classifying space --------------------------------------------------------

def test_classifying_space_of_s1_is_the_circle():
    B = classifying_space(s1_category())
    assert B.counts() == (2, 2)
    assert B.vertices == ("x", "y")
    assert B.faces[(("f",), "x")] == "y"
    assert B.faces[(("f",), "y")] == "x"
    bary = B.meta["barycenters"]
    assert bary.forward == {"x": "x", "y": "y"}


def test_classifying_space_of_chain3_is_the_full_triangle():
    B = classifying_space(chain3_category())
    assert B.counts() == (3, 3, 1)
    top = B.simplices[2][0]
    assert top == ("f", "g")
    # dropping the middle object composes f and g into c
    assert B.faces[(top, "1")] == ("c",)
    assert B.faces[(top, "0")] == ("g",)
    assert B.faces[(top, "2")] == ("f",)
    assert is_strongly_collapsible_delta(B)


def test_classifying_map_of_a_retraction():
    A = chain3_category()
    F, _ = retraction_functor(A, find_beat(A, "2"))
    BF = classifying_map(F)
    assert validate_delta_map(BF)
    # the chain (g,) collapses to an identity, so it lands on the vertex 1
    assert BF.assign[("g",)] == "1"
    assert BF.assign[("c",)] == ("f",)
    assert BF.assign[("f", "g")] == ("f",)


def test_classifying_map_respects_composition():
    A = chain3_category()
    F, _ = retraction_functor(A, find_beat(A, "2"))
    BF = classifying_map(F)
    # F is idempotent, so B(F . F) = B(F) . B(F)
    assert compose_delta_maps(BF, BF).assign == BF.assign
    ident = classifying_map(identity_functor(A))
    assert ident.assign == identity_map(classifying_space(A)).assign


# -- face posets --------------------------------------------------------------

def test_face_poset_of_s2():
    chi = face_poset_category(s2_delta())
    assert len(chi.objects) == 8
    assert len(chi.morphisms) == 18
    assert chi.is_poset
    assert is_minimal_cat(chi)
    assert chi.meta["barycenters"].backward()["ab"] == "ab"


def test_face_poset_map_of_a_retraction_is_a_functor():
    D = disc_delta()
    r = retraction_map(D, find_domination(D, "b"))
    chi_r = face_poset_map(r)
    assert check_functor(chi_r)
    assert chi_r.objects["T1"] == "ac"
    assert isinstance(chi_r.morphisms[("bc", "T1")], Ident)


def test_face_poset_map_rejects_order_breaking_assignments():
    D = disc_delta()
    bad = dict(identity_map(D).assign)
    bad["T1"] = "T2"  # T2 is not a coface of T1's face bc
    with pytest.raises(OrderViolation):
        face_poset_map(DeltaMap(D, D, bad))


# -- contiguity join ----------------------------------------------------------

def test_contiguity_join_on_the_disc_retraction():
    D = disc_delta()
    r = retraction_map(D, find_domination(D, "b"))
    back = compose_delta_maps(inclusion_map(r.target, D), r)
    h = contiguity_join(back, identity_map(D))
    # the join of ac and T1 over {a,b,c} is T1 itself
    assert h.objects["T1"] == "T1"
    assert h.objects["b"] == "ab"
    assert check_functor(h)


def test_contiguity_join_raises_when_not_contiguous():
    S = s1_delta()
    swap = DeltaMap(S, S, {"a": "b", "b": "a", "e1": "e1", "e2": "e2"})
    with pytest.raises(NotContiguous):
        contiguity_join(swap, identity_map(S))
    with pytest.raises(ValueError):
        contiguity_join(identity_map(S), identity_map(disc_delta()))


# -- subdivisions -------------------------------------------------------------

def test_sd_of_chain3_is_the_seven_element_poset():
    sd = sd_category(chain3_category())
    assert len(sd.objects) == 7
    assert sd.is_poset
    assert is_strongly_collapsible_cat(sd)


def test_sd_of_s1_category_is_the_four_cycle_poset():
    sd = sd_category(s1_category())
    assert len(sd.objects) == 4
    assert len(sd.morphisms) == 4
    assert is_minimal_cat(sd)
    assert not is_strongly_collapsible_cat(sd)


def test_sd_delta_of_the_circle():
    sd = sd_delta(s1_delta())
    assert sd.counts() == (4, 4)
    assert sd.is_simplicial
    assert is_minimal_delta(sd)
    assert euler_characteristic(sd) == 0


def test_sd_delta_of_the_sphere_keeps_euler():
    sd = sd_delta(s2_delta())
    assert sd.counts() == (8, 18, 12)
    assert sd.is_simplicial
    assert euler_characteristic(sd) == 2
    assert is_minimal_delta(sd)
