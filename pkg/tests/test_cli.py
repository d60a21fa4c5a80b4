import io
import json
import shutil
import subprocess
import sys

import pytest

from collapsar import relabel_complex
from collapsar.cli import main
from collapsar.documents import dump_document, payload_for
from collapsar.fixtures import s1_delta


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv, **kw):
    code, out, err = run(capsys, *argv, **kw)
    return code, json.loads(out), err


def test_validate_reports_counts(capsys, fixture_dir):
    code, payload, err = run_json(capsys, "validate", str(fixture_dir / "s1_cat.json"))
    assert code == 0
    assert payload == {"kind": "category", "valid": True,
                       "counts": {"objects": 2, "morphisms": 2}}
    assert "valid category" in err


def test_core_of_a_minimal_category(capsys, fixture_dir):
    code, payload, err = run_json(capsys, "core", str(fixture_dir / "s1_cat.json"))
    assert code == 0
    assert payload["minimal"] is True
    assert payload["removed"] == []
    assert payload["core"]["format"] == "collapsar/category-v1"
    assert "already minimal" in err


def test_core_collapses_the_chain(capsys, fixture_dir):
    code, payload, _ = run_json(capsys, "core", str(fixture_dir / "chain3_cat.json"))
    assert code == 0
    assert payload["minimal"] is False
    assert [w["object"] for w in payload["removed"]] == ["0", "1"]
    assert all({"object", "direction", "morphism"} <= set(w)
               for w in payload["removed"])
    assert len(payload["core"]["objects"]) == 1


def test_collapse_records_digests(capsys, fixture_dir):
    code, payload, _ = run_json(capsys, "collapse",
                                str(fixture_dir / "disc_delta.json"))
    assert code == 0
    assert payload["strongly_collapsible"] is True
    assert len(payload["steps"]) == 2
    assert all(step["digest"] for step in payload["steps"])


def test_bspace_pipes_into_facet_poset(capsys, monkeypatch, fixture_dir):
    chain = str(fixture_dir / "chain3_cat.json")
    code, btext, _ = run(capsys, "bspace", chain)
    assert code == 0
    code, poset, _ = run_json(capsys, "facet-poset", "-",
                              stdin=btext, monkeypatch=monkeypatch)
    assert code == 0
    assert poset["format"] == "collapsar/category-v1"
    assert len(poset["objects"]) == 7
    # the pipeline is the category subdivision, up to identifier order
    code, direct, _ = run_json(capsys, "sd", chain)
    assert code == 0
    assert sorted(direct["objects"]) == sorted(poset["objects"])
    by_id = lambda entries: sorted(entries, key=lambda e: e["id"])
    assert by_id(direct["morphisms"]) == by_id(poset["morphisms"])
    assert direct["compose"] == poset["compose"]  # already sorted on save


def test_iso_finds_a_witness(capsys, tmp_path, fixture_dir):
    Y, _ = relabel_complex(s1_delta(), {"a": "p", "b": "q",
                                        "e1": "u", "e2": "w"})
    other = tmp_path / "relabeled.json"
    other.write_text(dump_document(payload_for(Y)))
    code, payload, err = run_json(capsys, "iso",
                                  str(fixture_dir / "s1_delta.json"), str(other))
    assert code == 0
    assert payload["isomorphic"] is True
    assert payload["witness"]["simplices"]["a"] in {"p", "q"}
    assert "not" not in err


def test_iso_negative_is_still_success(capsys, fixture_dir):
    code, payload, err = run_json(capsys, "iso",
                                  str(fixture_dir / "s1_delta.json"),
                                  str(fixture_dir / "point_delta.json"))
    assert code == 0
    assert payload["isomorphic"] is False and payload["witness"] is None
    assert "not isomorphic" in err


def test_kind_mismatch_is_a_domain_error(capsys, fixture_dir):
    code, payload, err = run_json(capsys, "iso",
                                  str(fixture_dir / "s1_cat.json"),
                                  str(fixture_dir / "s1_delta.json"))
    assert code == 1
    assert payload["error"]["tag"] == "CollapsarError"
    assert "same kind" in payload["error"]["message"]
    assert err.startswith("error[")


def test_missing_file_is_an_error_envelope(capsys):
    code, payload, _ = run_json(capsys, "validate", "/no/such/file.json")
    assert code == 1
    assert payload["error"]["tag"] == "FileNotFoundError"


def test_invalid_document_reports_its_tag(capsys, tmp_path):
    loop = {"format": "collapsar/category-v1", "objects": ["x"],
            "morphisms": [{"id": "e", "src": "x", "dst": "x"}],
            "compose": [{"g": "e", "f": "e", "result": "e"}]}
    path = tmp_path / "loop.json"
    path.write_text(json.dumps(loop))
    code, payload, _ = run_json(capsys, "validate", str(path))
    assert code == 1
    assert payload["error"]["tag"] == "LoopDetected"


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["check", "--theorem", "no_such_theorem"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_render_category_covering_arrows(capsys, fixture_dir):
    code, out, _ = run(capsys, "render", str(fixture_dir / "chain3_cat.json"))
    assert code == 0
    assert out.startswith("digraph {")
    assert '"0" -> "1";' in out and '"1" -> "2";' in out
    assert '"0" -> "2";' not in out  # composite, not a covering arrow


def test_render_complex_face_arrows(capsys, fixture_dir):
    code, out, _ = run(capsys, "render", str(fixture_dir / "s1_delta.json"))
    assert code == 0
    assert '"a" -> "e1";' in out and '"b" -> "e2";' in out


def test_simple_collapse_lists_free_faces(capsys, fixture_dir):
    code, payload, err = run_json(capsys, "simple-collapse",
                                  str(fixture_dir / "full_triangle.json"))
    assert code == 0
    assert payload["euler"] == 1
    assert len(payload["free_faces"]) == 3
    assert "3 free faces" in err


def test_simple_collapse_expands_a_removal(capsys, fixture_dir):
    code, payload, _ = run_json(capsys, "simple-collapse",
                                str(fixture_dir / "full_triangle.json"),
                                "--vertex", "a", "--by", "b")
    assert code == 0
    assert payload["dominated"] is True and payload["by"] == "b"
    assert len(payload["steps"]) == 2
    assert payload["euler"] == [1, 1, 1]


def test_simple_collapse_on_an_undominated_vertex(capsys, fixture_dir):
    code, payload, _ = run_json(capsys, "simple-collapse",
                                str(fixture_dir / "s1_delta.json"),
                                "--vertex", "a")
    assert code == 0
    assert payload["dominated"] is False


def test_check_over_a_seeded_corpus(capsys):
    code, payload, err = run_json(capsys, "check", "--theorem", "B_minimal",
                                  "--seed", "3", "--count", "4")
    assert code == 0
    assert payload["count"] == 4 and payload["holds"] == 4
    assert all(r["verdict"] == "holds" for r in payload["reports"])
    assert "B_minimal: 4/4 hold" in err


def test_check_a_single_document(capsys, fixture_dir):
    code, payload, _ = run_json(capsys, "check",
                                str(fixture_dir / "chain3_cat.json"),
                                "--theorem", "adjunction")
    assert code == 0
    assert payload["holds"] == 1 and payload["count"] == 1


def test_random_is_reproducible(capsys):
    code, first, _ = run(capsys, "random", "--kind", "complex", "--seed", "9")
    assert code == 0
    code, second, _ = run(capsys, "random", "--kind", "complex", "--seed", "9")
    assert first == second
    assert json.loads(first)["format"] == "collapsar/complex-v1"


def test_budget_env_var_stops_corpus_runs(capsys, monkeypatch):
    monkeypatch.setenv("COLLAPSAR_BUDGET_SECS", "0")
    code, payload, _ = run_json(capsys, "check", "--theorem", "sd_cat_collapse",
                                "--count", "3")
    assert code == 1
    assert payload["error"]["tag"] == "BudgetExceeded"


def test_console_script_and_module_entry(fixture_dir):
    doc = str(fixture_dir / "point_delta.json")
    out = subprocess.run([sys.executable, "-m", "collapsar", "validate", doc],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["kind"] == "complex"
    exe = shutil.which("collapsar")
    assert exe is not None
    out = subprocess.run([exe, "validate", doc], capture_output=True, text=True)
    assert out.returncode == 0
