import json

import pytest
from hypothesis import given, strategies as st

from collapsar import (
    GeneratorParams,
    ParseError,
    SchemaVersionMismatch,
    find_domination,
    identity_map,
    random_acyclic_category,
    random_delta_complex,
    retraction_map,
    sd_delta,
)
from collapsar.documents import (
    category_from_payload,
    category_to_payload,
    complex_from_payload,
    complex_to_payload,
    dump_document,
    load_document,
    map_from_payload,
    map_to_payload,
    payload_for,
    render_token,
)
from collapsar.fixtures import chain3_category, disc_delta, s1_delta


def roundtrip(value):
    text = dump_document(payload_for(value))
    again = load_document(text)
    assert dump_document(payload_for(again)) == text
    return again


def test_render_token_flattens_nested_tuples():
    assert render_token("ab") == "ab"
    assert render_token(3) == "3"
    assert render_token(("sd", ("a", "b"), 1)) == "(sd,(a,b),1)"
    with pytest.raises(ValueError):
        render_token(frozenset())


def test_category_roundtrip_is_byte_stable():
    again = roundtrip(chain3_category())
    assert again.digest == chain3_category().digest


def test_complex_roundtrip_survives_tuple_identifiers():
    sd = sd_delta(s1_delta())  # every identifier here is a tuple
    again = roundtrip(sd)
    assert again.counts() == sd.counts()
    assert all(isinstance(s, str) for s in again.all_simplices())


def test_map_roundtrip_embeds_both_complexes():
    D = disc_delta()
    r = retraction_map(D, find_domination(D, "b"))
    payload = map_to_payload(r)
    assert payload["source"]["format"] == "collapsar/complex-v1"
    again = map_from_payload(payload)
    assert again.assign == {str(k): str(v) for k, v in r.assign.items()}
    roundtrip(r)


@given(st.integers(min_value=0, max_value=40))
def test_random_instances_roundtrip(seed):
    A = random_acyclic_category(GeneratorParams(seed=seed))
    assert category_from_payload(category_to_payload(A)).digest == A.digest
    X = random_delta_complex(GeneratorParams(seed=seed))
    assert complex_from_payload(complex_to_payload(X)).digest == X.digest


def test_fixture_file_matches_builder(fixture_dir):
    text = (fixture_dir / "s1_delta.json").read_text()
    assert load_document(text).digest == s1_delta().digest


def test_version_mismatch_is_its_own_error():
    payload = category_to_payload(chain3_category())
    payload["format"] = "collapsar/category-v2"
    with pytest.raises(SchemaVersionMismatch):
        category_from_payload(payload)
    # same family string routes through the dispatcher too
    with pytest.raises(SchemaVersionMismatch):
        load_document(dump_document(payload))
    payload["format"] = "collapsar/complex-v1"
    with pytest.raises(ParseError):
        category_from_payload(payload)


def test_parse_errors_are_located():
    with pytest.raises(ParseError, match="invalid JSON"):
        load_document("{\"format\": ")
    with pytest.raises(ParseError, match="expected a JSON object"):
        load_document("[1, 2]")
    with pytest.raises(ParseError, match="unrecognized format"):
        load_document('{"format": "collapsar/poset-v1"}')
    payload = category_to_payload(chain3_category())
    payload["compose"].append(payload["compose"][0])
    with pytest.raises(ParseError, match="duplicate"):
        category_from_payload(payload)
    bad = complex_to_payload(s1_delta())
    bad["simplices"][1][0]["id"] = 7
    with pytest.raises(ParseError, match="expected str"):
        complex_from_payload(bad)


def test_map_payload_cross_checks():
    D = disc_delta()
    r = retraction_map(D, find_domination(D, "b"))
    payload = map_to_payload(r)

    wrong_k = json.loads(dump_document(payload))
    wrong_k["assignments"][0]["k"] = 5
    with pytest.raises(ParseError, match="k=5"):
        map_from_payload(wrong_k)

    missing = json.loads(dump_document(payload))
    missing["assignments"][0]["image"] = "zzz"
    with pytest.raises(ParseError, match="not in the target"):
        map_from_payload(missing)

    twice = json.loads(dump_document(payload))
    twice["assignments"].append(twice["assignments"][0])
    with pytest.raises(ParseError, match="assigned twice"):
        map_from_payload(twice)

    broken = json.loads(dump_document(map_to_payload(identity_map(D))))
    for entry in broken["assignments"]:
        if entry["simplex"] == "T1":
            entry["image"] = "T2"  # d_a T1 = bc but d_a T2 = bc2
    with pytest.raises(ParseError, match="face condition"):
        map_from_payload(broken)


def test_payloads_match_the_published_schemas(fixture_dir):
    import jsonschema
    from referencing import Registry, Resource

    schema_dir = fixture_dir.parent / "docs" / "schemas"
    schemas = {p.name: json.loads(p.read_text())
               for p in schema_dir.glob("*.schema.json")}
    assert len(schemas) == 3
    registry = Registry().with_resources(
        (s["$id"], Resource.from_contents(s)) for s in schemas.values())

    def validator(name):
        return jsonschema.Draft202012Validator(schemas[name], registry=registry)

    cat = validator("category-v1.schema.json")
    cat.validate(payload_for(chain3_category()))
    validator("complex-v1.schema.json").validate(payload_for(disc_delta()))
    D = disc_delta()
    validator("delta-map-v1.schema.json").validate(
        payload_for(retraction_map(D, find_domination(D, "b"))))

    broken = payload_for(chain3_category())
    del broken["compose"]
    with pytest.raises(jsonschema.ValidationError):
        cat.validate(broken)


def test_rendering_collisions_are_rejected():
    from collapsar import relabel_complex
    from collapsar.fixtures import single_edge_delta

    E = single_edge_delta()
    # "(a,b)" the string collides with ("a", "b") the tuple
    clash, _ = relabel_complex(E, {"a": "a", "b": "b", ("a", "b"): "(a,b)"})
    levels = [["a", "b"], [("a", "b"), "(a,b)"]]
    vsets = {"a": frozenset("a"), "b": frozenset("b"),
             ("a", "b"): frozenset("ab"), "(a,b)": frozenset("ab")}
    faces = {(("a", "b"), "a"): "b", (("a", "b"), "b"): "a",
             ("(a,b)", "a"): "b", ("(a,b)", "b"): "a"}
    from collapsar import validate_complex
    both = validate_complex(levels, vsets, faces)
    with pytest.raises(ValueError, match="both render"):
        complex_to_payload(both)
    assert complex_to_payload(clash)  # no collision when only the string form exists
