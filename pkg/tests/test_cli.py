import json

import pytest

from weylkac.cli import BAD_INPUT, FAILED, OK, main
from weylkac.numerics import Grid2D, ground_state
from weylkac.numerics.fixtures import gaussian
from weylkac.numerics.io import write_function


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_axioms_filter(capsys, tmp_path):
    code, out, _ = run(capsys, "axioms", "--filter", "A13", "--out", str(tmp_path))
    doc = json.loads(out)
    assert code == OK
    assert [r["check"] for r in doc["records"]] == ["A13"]
    assert json.loads((tmp_path / "axioms_report.json").read_text()) == doc


def test_flipped_cochain_is_caught(capsys, tmp_path):
    code, _, err = run(capsys, "axioms", "--flip-theta", "--filter", "A4", "--out", str(tmp_path))
    assert code == FAILED
    assert "A4" in err


def test_unknown_identity(capsys, tmp_path):
    assert run(capsys, "axioms", "--filter", "Z9", "--out", str(tmp_path))[0] == BAD_INPUT


def test_quantize_then_recover(capsys, tmp_path):
    f = gaussian(Grid2D(64, 16.0), (0.2, -0.1), 1.0)
    write_function(f, tmp_path / "f.csv")
    assert run(capsys, "quantize", str(tmp_path / "f.csv"), "--out", str(tmp_path))[0] == OK
    code, out, _ = run(
        capsys, "recover", str(tmp_path / "kernel.csv"), "--reference", str(tmp_path / "f.csv"),
        "--out", str(tmp_path),
    )
    rec = json.loads(out)["records"][0]
    assert code == OK
    assert rec["check"] == "round_trip" and rec["value"] <= 1e-8
    assert (tmp_path / "recovered.csv").exists()


def test_wigner_and_star(capsys, tmp_path):
    code, out, _ = run(capsys, "wigner", "--state", "excited", "--out", str(tmp_path))
    assert code == OK
    assert json.loads(out)["minimum"] < 0
    F = gaussian(Grid2D(64, 16.0).dual(1.0), (0.1, 0.0), 1.2)
    write_function(F, tmp_path / "F.json")
    assert run(capsys, "star", str(tmp_path / "F.json"), str(tmp_path / "F.json"), "--out", str(tmp_path))[0] == OK
    assert (tmp_path / "star.csv").exists()


def test_wigner_from_file(capsys, tmp_path):
    write_function(ground_state(64, 16.0, 1.0), tmp_path / "xi.csv")
    assert run(capsys, "wigner", str(tmp_path / "xi.csv"), "--out", str(tmp_path))[0] == OK


def test_plancherel_default(capsys, tmp_path):
    code, out, _ = run(capsys, "plancherel", "--out", str(tmp_path))
    assert code == OK
    assert json.loads(out)["records"][0]["value"] <= 1e-8


@pytest.mark.parametrize(
    "argv",
    [
        ["quantize", "missing.csv"],
        ["suite", "--tol.no_such_check", "1"],
        ["suite", "--grid-n", "30"],
        ["suite", "--hbar", "0"],
        ["suite", "--filter", "four"],
        ["suite", "--bogus"],
        ["frobnicate"],
    ],
)
def test_bad_input(capsys, tmp_path, argv):
    assert run(capsys, *argv, "--out", str(tmp_path))[0] == BAD_INPUT


def test_tolerance_override(capsys, tmp_path):
    code, out, _ = run(capsys, "suite", "--filter", "4", "--tol.round_trip=1e-30", "--out", str(tmp_path))
    doc = json.loads(out)
    assert code == FAILED
    assert "round_trip" in doc["failures"]
    assert doc["config"]["tolerances"] == {"round_trip": 1e-30}


def test_output_directory_from_environment(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("WEYLKAC_OUT", str(tmp_path / "env"))
    assert run(capsys, "suite", "--filter", "2")[0] == OK
    assert (tmp_path / "env" / "suite_report.json").exists()


def _stable(doc):
    doc.pop("elapsed")
    doc["records"] = [r for r in doc["records"] if not r["check"].endswith("_runtime")]
    return doc


def test_suite_is_deterministic(capsys, tmp_path):
    argv = ["suite", "--filter", "2,4,5,6,9", "--seed", "7", "--out", str(tmp_path)]
    first = _stable(json.loads(run(capsys, *argv)[1]))
    second = _stable(json.loads(run(capsys, *argv)[1]))
    assert first == second


def test_coarse_grid_numerics(capsys, tmp_path):
    code, out, _ = run(capsys, "suite", "--grid-n", "32", "--filter", "4,5,6,7,8,9", "--out", str(tmp_path))
    assert code == OK, json.loads(out)["failures"]


def test_small_hbar_classical_limit(capsys, tmp_path):
    code, out, _ = run(capsys, "suite", "--hbar", "0.1", "--filter", "7,8", "--out", str(tmp_path))
    assert code == OK, json.loads(out)["failures"]
