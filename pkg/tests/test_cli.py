import csv
import io
import json
import subprocess
import sys

import pytest

from apolar.cli import SCHEMA_VERSION, main


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def run_json(argv):
    code, text = run(argv)
    return code, json.loads(text) if text else None


def test_ann_output():
    code, doc = run_json(["ann", "X0^2*X1^3", "--degree", "3"])
    assert code == 0
    assert doc["schema_version"] == SCHEMA_VERSION and doc["command"] == "ann"
    out = doc["outputs"]
    assert (out["d1"], out["d2"], out["g1"], out["g2"]) == (3, 4, "xi0^3", "xi1^4")
    assert (out["waring_rank"], out["cactus_rank"], out["ann_dim"]) == (4, 3, 1)
    assert out["ann_dims"] == [0, 0, 0, 1, 3, 5]
    assert all(isinstance(c, str) for c in out["g1_coeffs"])


def test_ann_accepts_json_form():
    code, doc = run_json(["ann", '{"degree": 2, "coeffs": ["1", "0", "1/2"]}'])
    assert code == 0 and doc["inputs"]["form"] == "1/2*X0^2 + X1^2"
    assert doc["outputs"]["cactus_rank"] == 2


def test_rationals_are_strings():
    code, doc = run_json(["census", "--l", "4", "--d", "1", "--samples", "7", "--seed", "1"])
    assert code == 0
    assert isinstance(doc["outputs"]["top_fraction"], str)
    assert "/" in doc["outputs"]["top_fraction"] or doc["outputs"]["top_fraction"] in ("0", "1")


def test_output_is_deterministic():
    assert run(["census", "--l", "5", "--d", "2", "--samples", "30", "--seed", "4"]) == \
        run(["census", "--l", "5", "--d", "2", "--samples", "30", "--seed", "4"])


def test_fiber_dim():
    code, doc = run_json(["fiber-dim", "--n1", "-3", "--n2", "-7", "X0^3*X1(X0+X1)"])
    assert code == 0
    assert doc["outputs"] == {"l": 5, "d": 4, "crank": 3, "fiber_dim": 0, "branch": "zero"}


def test_describe_negative_splitting():
    code, doc = run_json(["describe", "--splitting", "-3:1,-5:1"])
    assert code == 0 and doc["outputs"]["h1_dim"] == 6 and doc["outputs"]["aut_dim"] == 5


def test_census_csv():
    code, text = run(["census", "--l", "4", "--d", "1", "--samples", "20", "--seed", "2", "--format", "csv"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["crank", "fiber_dim", "count"]
    assert sum(int(r[2]) for r in rows[1:]) == 20


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("APOLAR_SEED", "9")
    code, doc = run_json(["census", "--l", "4", "--d", "0", "--samples", "5"])
    assert code == 0 and doc["inputs"]["seed"] == 9
    monkeypatch.setenv("APOLAR_SEED", "nine")
    assert run(["census", "--l", "4", "--d", "0", "--samples", "5"])[0] == 2


@pytest.mark.parametrize("suite", ["duality", "quartics", "action"])
def test_verify_passes(suite):
    code, doc = run_json(["verify", "--suite", suite, "--seed", "1", "--max-degree", "5"])
    assert code == 0 and doc["outputs"]["passed"] and doc["outputs"]["checks"] > 0


def test_verify_dims_small():
    code, doc = run_json(["verify", "--suite", "dims", "--max-degree", "4"])
    assert code == 0 and doc["outputs"]["failures"] == 0


@pytest.mark.parametrize("argv, code", [
    (["ann", "X0 + X1^2"], 2),
    (["ann", "X7"], 2),
    (["ann", "0*X0^3"], 3),
    (["ann", "X0^3", "--degree", "5"], 2),
    (["fiber-dim", "--n1", "-3", "--n2", "-7", "X0^4"], 2),
    (["fiber-dim", "--n1", "-3", "--n2", "-7", "0*X0^5"], 3),
    (["describe", "--splitting", "-5:1,-3:1"], 2),
    (["census", "--l", "4", "--d", "6"], 2),
])
def test_error_exit_codes(argv, code, capsys):
    got, out = run(argv)
    assert got == code and out == ""
    assert capsys.readouterr().err.startswith(f"apolar {argv[0]}:")


@pytest.mark.parametrize("argv", [["verify", "--suite", "nope"], ["frobnicate"], []])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv, out=io.StringIO())
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "apolar", "ann", "X0^4"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["outputs"]["waring_rank"] == 1
