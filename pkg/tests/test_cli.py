import io
import json
from pathlib import Path

import pytest

from hgops.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, main

DATA = Path(__file__).parent / "data"

DUAL_JSON = {
    "name": "dual from file",
    "dimension": 2,
    "basis": ["1", "x"],
    "unit": [1, 0],
    "mul": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]],
}


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), stream=out)
    return code, out.getvalue()


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(p)


def test_verify_passes_on_the_ground_field():
    code, text = run("verify", "--algebra", "Q")
    assert code == EXIT_OK
    assert text.rstrip().endswith("overall: PASS")


def test_verify_fails_on_a_nonassociative_algebra():
    code, text = run("verify", "--algebra", "nonassoc", "--suite", "mc,cyclic", "--format", "json")
    doc = json.loads(text)
    assert code == EXIT_FAIL
    assert doc["status"] == "FAIL"
    mc = doc["suites"][0]["checks"][0]
    assert mc["status"] == "FAIL" and mc["witness"]


def test_verify_json_is_deterministic():
    a = run("verify", "--algebra", "dual", "--suite", "sdr,cyclic", "--format", "json")
    b = run("verify", "--algebra", "dual", "--suite", "sdr,cyclic", "--format", "json")
    assert a == b and a[0] == EXIT_OK


def test_homology_text_and_json():
    code, text = run("homology", "--algebra", "Q", "--nmax", "4")
    assert code == EXIT_OK
    assert "dual pipelines agree: true" in text
    code, text = run("homology", "--algebra", "Q", "--nmax", "4", "--format", "json")
    doc = json.loads(text)
    assert [r["HC"] for r in doc["degrees"] if r["trustworthy"]] == [1, 0, 1, 0]


def test_algebra_from_file(tmp_path):
    path = write(tmp_path, "dual.json", DUAL_JSON)
    code, text = run("homology", "--algebra", path, "--nmax", "3", "--format", "json")
    assert code == EXIT_OK
    assert [r["HH"] for r in json.loads(text)["degrees"]][:3] == [2, 1, 1]


@pytest.mark.parametrize("mutate, message", [
    (lambda d: d.pop("mul"), "missing field"),
    (lambda d: d.update(dimension=3), "dimension"),
    (lambda d: d.update(unit=[0, 0]), "zero unit"),
    (lambda d: d["mul"].append([0, 5, 1, "1"]), "out of range"),
    (lambda d: d["mul"].append([0, 1, 1, "1/0"]), "bad scalar"),
    (lambda d: d.update(unit=[0, 1]), "unit law"),
])
def test_bad_algebra_files_exit_2(tmp_path, capsys, mutate, message):
    doc = json.loads(json.dumps(DUAL_JSON))
    mutate(doc)
    code, _ = run("homology", "--algebra", write(tmp_path, "a.json", doc))
    assert code == EXIT_INPUT
    assert message in capsys.readouterr().err


def test_unreadable_inputs_exit_2(tmp_path, capsys):
    assert run("homology", "--algebra", str(tmp_path / "missing.json"))[0] == EXIT_INPUT
    assert run("homology", "--algebra", write(tmp_path, "b.json", "{not json"))[0] == EXIT_INPUT
    assert run("verify", "--suite", "nope")[0] == EXIT_INPUT
    assert run("verify", "--truncation", "0")[0] == EXIT_INPUT
    assert "error" in capsys.readouterr().err


def _pair(tmp_path, D, a, *extra):
    return run("pair", write(tmp_path, "D.json", D), write(tmp_path, "a.json", a), *extra)


def test_pair_with_the_identity_cochain(tmp_path):
    D = {"flavor": "cochain", "components": {"0": [[">1", "1"]]}}
    a = {"flavor": "algebra", "components": {"1": [["1", "x", "3"]], "2": [["x", "x", "x", "1/2"]]}}
    code, text = _pair(tmp_path, D, a, "--format", "json")
    doc = json.loads(text)
    assert code == EXIT_OK and doc["residual_zero"]
    assert doc["result"] == a


def test_pair_with_a_zero_chain(tmp_path):
    D = {"flavor": "cochain", "components": {"0": [["x>x", "1"], ["x>x", "-1"]]}}
    a = {"flavor": "algebra", "components": {"0": [["x", "1"]]}}
    code, text = _pair(tmp_path, D, a, "--format", "json")
    assert code == EXIT_OK
    assert json.loads(text)["result"]["components"] == {}


def test_pair_regression_fixture(tmp_path):
    fx = json.loads((DATA / "pair_fixture.json").read_text())
    code, text = _pair(tmp_path, fx["D"], fx["a"], "--algebra", fx["algebra"], "--format", "json")
    doc = json.loads(text)
    assert code == EXIT_OK and doc["residual_zero"]
    assert doc["result"] == fx["expected"]


@pytest.mark.parametrize("D, a, message", [
    ({"flavor": "cochain", "components": {"0": [["x>x", "1"]]}},
     {"flavor": "algebra", "components": {"1": [["x", "1", "1"]]}}, "unit in a slot"),
    ({"flavor": "cochain", "components": {"0": [["1>x", "1"]]}},
     {"flavor": "algebra", "components": {"0": [["x", "1"]]}}, "takes the unit"),
    ({"flavor": "cochain", "components": {"0": [["x=x", "1"]]}},
     {"flavor": "algebra", "components": {"0": [["x", "1"]]}}, "not of the form"),
    ({"flavor": "algebra", "components": {"0": [["x", "1"]]}},
     {"flavor": "algebra", "components": {"0": [["x", "1"]]}}, "expects a cochain"),
    ({"flavor": "cochain", "components": {"0": [["x>x", "1"]]}},
     {"flavor": "algebra", "components": {"1": [["x", "1"]]}}, "listed in degree"),
])
def test_pair_input_errors(tmp_path, capsys, D, a, message):
    code, _ = _pair(tmp_path, D, a)
    assert code == EXIT_INPUT
    assert message in capsys.readouterr().err


def test_homology_of_a_nonassociative_algebra_is_a_failure():
    code, text = run("homology", "--algebra", "nonassoc", "--format", "json")
    assert code == EXIT_FAIL
    assert "do not square to zero" in json.loads(text)["error"]
