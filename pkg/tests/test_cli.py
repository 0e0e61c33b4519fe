import json
from importlib.resources import files

import jsonschema
import pytest

from cubekit.classify import verify_isomorphism
from cubekit.cli import main
from cubekit.families import SMALL_SPECS, build_family
from cubekit.io import read_graph

SCHEMA = json.loads(files("cubekit").joinpath("schema/report.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    return code, report


def test_recognize(capsys):
    code, rep = run_json(capsys, "recognize", "--family", "Q:3")
    assert code == 0
    assert rep["result"]["partial_cube"] and rep["result"]["idim"] == 3
    assert rep["input"] == {"kind": "family", "descriptor": "Q:3", "vertices": 8, "edges": 12}

    code, rep = run_json(capsys, "recognize", "--family", "KB:2,3")
    assert code == 1
    assert rep["result"]["reason"] == "THETA_NOT_TRANSITIVE"
    assert len(rep["result"]["witness"]["theta_triple"]) == 3


def test_recognize_file_keeps_names(capsys, tmp_path):
    f = tmp_path / "c5.g6"
    f.write_bytes(b"Dhc\n")
    code, rep = run_json(capsys, "recognize", str(f))
    assert code == 1 and rep["result"]["reason"] == "NOT_BIPARTITE"
    assert len(rep["result"]["witness"]["odd_cycle"]) == 5

    e = tmp_path / "sq.txt"
    e.write_text("north east\neast south\nsouth west\nwest north\n")
    code, rep = run_json(capsys, "embed", str(e))
    assert code == 0
    assert [r["vertex"] for r in rep["result"]["labels"]] == ["north", "east", "south", "west"]


def test_convex_cycles(capsys):
    code, rep = run_json(capsys, "convex-cycles", "--family", "DO:3")
    assert code == 0 and rep["result"]["spectrum"] == {"6": 20}
    code, rep = run_json(capsys, "convex-cycles", "--family", "Q:3", "--oracle")
    assert rep["result"]["spectrum"] == {"4": 6} and rep["result"]["oracle"] == "MATCH"
    code, rep = run_json(capsys, "convex-cycles", "--family", "Q3MINUS")
    assert rep["result"]["spectrum"] == {"4": 3}
    code, rep = run_json(capsys, "convex-cycles", "--family", "C:5")
    assert code == 1 and rep["error"]["code"] == "NOT_PARTIAL_CUBE"
    code, rep = run_json(capsys, "convex-cycles", "--family", "Q:5", "--oracle")
    assert code == 1 and rep["error"]["code"] == "ORACLE_BOUND_EXCEEDED"


def test_classify(capsys):
    code, rep = run_json(capsys, "classify", "--family", "DO:4", "--certify")
    assert rep["result"]["label"] == "DOUBLED_ODD(4)"
    assert len(rep["result"]["certificate"]["isomorphism"]) == 70
    _, rep = run_json(capsys, "classify", "--family", "C:12")
    assert rep["result"]["label"] == "EVEN_CYCLE(6)"
    _, rep = run_json(capsys, "classify", "--family", "GRID:3x3")
    assert rep["result"]["label"] == "EXCLUDED(NOT_REGULAR)"
    _, rep = run_json(capsys, "classify", "--family", "Q:3")
    assert rep["result"]["certificate"]["labeling"][7] == {"vertex": "111", "bits": "111"}


def test_classes(capsys):
    code, rep = run_json(capsys, "classes", "--family", "Q3MINUS")
    r = rep["result"]
    assert code == 0
    assert (r["is_semi_median"], r["is_tiled"], r["is_almost_median"], r["is_median"]) == (True, True, True, False)
    _, rep = run_json(capsys, "classes", "--family", "KB:2,3")
    assert rep["result"]["is_partial_cube"] is False
    _, rep = run_json(capsys, "classes", "--family", "C:8")
    assert rep["result"]["witnesses"]["is_tiled"] == {"rank": 0, "dimension": 1}


def test_embed_text(capsys):
    code, out = run(capsys, "embed", "--family", "C:6")
    rows = out.strip().splitlines()
    assert code == 0 and len(rows) == 6
    assert all(len(r.split()[1]) == 3 for r in rows)


def test_usage_errors(capsys):
    code, rep = run_json(capsys, "recognize", "--family", "Q:99")
    assert code == 2 and rep["error"]["code"] == "PARAM_RANGE"
    code, rep = run_json(capsys, "recognize", "--family", "Q:")
    assert code == 2 and rep["error"]["code"] == "PARSE_ERROR"
    code, rep = run_json(capsys, "recognize")
    assert code == 2
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == 2


def test_parse_error_location(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("0 1\n1 2 3\n")
    code, out = run(capsys, "recognize", str(f))
    assert code == 2 and "line 2" in out


def test_timing_only_on_request(capsys):
    _, rep = run_json(capsys, "recognize", "--family", "Q:2")
    assert "timing_ms" not in rep
    _, rep = run_json(capsys, "recognize", "--family", "Q:2", "--timing")
    assert rep["timing_ms"] >= 0


@pytest.mark.parametrize("spec", SMALL_SPECS)
def test_generate_round_trip(tmp_path, spec):
    out = tmp_path / "g.g6"
    assert main(["generate", spec, "--format", "g6", "-o", str(out)]) == 0
    assert verify_isomorphism(read_graph(out), build_family(spec)) is not None
    txt = tmp_path / "g.txt"
    assert main(["generate", spec, "--format", "edges", "-o", str(txt)]) == 0
    assert read_graph(txt) == build_family(spec)


def test_generate_bad_spec(tmp_path, capsys):
    assert main(["generate", "DO:12", "-o", str(tmp_path / "x.g6")]) == 2


def test_corpus_json(capsys):
    code, rep = run_json(capsys, "corpus", "--profile", "SMALL")
    assert code == 0 and rep["violations"] == []
    assert [g["name"] for g in rep["graphs"]] == list(SMALL_SPECS)


def test_corpus_parallel_matches_serial(capsys):
    _, serial = run(capsys, "corpus", "--json")
    _, parallel = run(capsys, "corpus", "--json", "--jobs", "2")
    assert serial == parallel


def test_corpus_flags_violation(capsys, monkeypatch):
    import cubekit.checks as checks

    monkeypatch.setattr(checks, "_halfspace_cut_ok", lambda *a: False)
    code, rep = run_json(capsys, "corpus")
    assert code == 1
    assert any("halfspace_cuts" in v for v in rep["violations"])
