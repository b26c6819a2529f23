import csv
import io
import json
import subprocess
import sys

import pytest

from heis_deform.cli import main

EX9 = {"rho": {"gamma1": [2, 0, 0], "gamma2": [1, 2, 0]}, "rho_prime": {"gamma1": [1, 0, 0], "gamma2": [0, 1, 0]}}
EX9_HALF = {"rho": {"gamma1": [2, "1/2", 0], "gamma2": [1, 2, 0]},
            "rho_prime": {"gamma1": [1, "1/2", 0], "gamma2": [0, 1, 0]}}
DIAG = {"rho": {"gamma1": [1, 0, 0], "gamma2": [0, 1, 0]}, "rho_prime": {"gamma1": [1, 0, 0], "gamma2": [0, 1, 0]}}
STANDARD_PARAM = {"S": [[1, 0], [0, 1]], "t": [1, 0, 0, 0], "c": [0, 0, 0, 0]}


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, (json.loads(out) if out.strip() else None), err


def test_check_example9(capsys):
    code, out, _ = run_json(capsys, "check", json.dumps(EX9))
    assert code == 0
    assert out["proper"] is True and out["fiber_value"] == "3"
    assert out["torus_matrix"] == [["1", "1"], ["0", "1"]]
    assert out["component"] == [1, 1]
    assert out["injective"] == {"rho": True, "rho_prime": True}


def test_check_not_proper_exit_1(capsys):
    code, out, _ = run_json(capsys, "check", json.dumps(DIAG))
    assert code == 1 and out["proper"] is False and out["component"] == "boundary"


def test_check_float_boundary_exit_2(capsys):
    pair = {"rho": {"gamma1": [1.0, 0.0, 0.0], "gamma2": [0.0, 1.0, 0.0]},
            "rho_prime": {"gamma1": [1.0, 0.0, 0.0], "gamma2": [0.0, 1.0, 0.0]}}
    code, out, _ = run_json(capsys, "check", json.dumps(pair))
    assert code == 2 and out["decided"] is False


@pytest.mark.parametrize("text", ['{"rho": 3', '{"rho": {"gamma1": [1, 0]}}', '[1, 2]'])
def test_check_malformed_exit_2(capsys, text):
    code, out, err = run(capsys, "check", text)
    assert code == 2 and "heis-deform" in err


def test_mixed_modes_rejected(capsys):
    pair = {"rho": {"gamma1": [1.5, 0, 0], "gamma2": ["1/2", 1, 0]}, "rho_prime": DIAG["rho_prime"]}
    code, _, err = run(capsys, "check", json.dumps(pair))
    assert code == 2 and "mixed" in err


def test_exact_flag_rejects_floats(capsys):
    pair = {"rho": {"gamma1": [1.5, 0, 0], "gamma2": [0, 2, 0]}, "rho_prime": DIAG["rho_prime"]}
    assert run(capsys, "check", json.dumps(pair))[0] == 0
    assert run(capsys, "check", "--exact", json.dumps(pair))[0] == 2


def test_param_then_check(capsys):
    code, pair, _ = run_json(capsys, "param", json.dumps(STANDARD_PARAM))
    assert code == 0
    assert pair == {"rho": {"gamma1": ["1", "0", "0"], "gamma2": ["0", "1", "0"]},
                    "rho_prime": {"gamma1": ["0", "0", "0"], "gamma2": ["0", "0", "0"]}}
    code, verdict, _ = run_json(capsys, "check", json.dumps(pair))
    assert code == 0 and verdict["proper"]


def test_param_rejects_singular(capsys):
    bad = dict(STANDARD_PARAM, S=[[1, 2], [2, 4]])
    assert run(capsys, "param", json.dumps(bad))[0] == 2


def test_param_rejects_malformed_matrix(capsys):
    bad = dict(STANDARD_PARAM, S=["1/2", 3])
    assert run(capsys, "param", json.dumps(bad))[0] == 2


def test_param_coords_roundtrip(capsys):
    point = {"S": [["1/2", "3"], ["-1", "2/3"]], "t": ["-3/2", "1", "1/4", "2"], "c": ["1", "-1/3", "0", "5"]}
    code, pair, _ = run_json(capsys, "param", json.dumps(point))
    assert code == 0
    code, back, _ = run_json(capsys, "coords", json.dumps(pair))
    assert code == 0
    assert {k: back[k] for k in ("S", "t", "c")} == point


def test_float_param_coords_roundtrip(capsys):
    point = {"S": [[0.5, 3.25], [-1.0, 2.0]], "t": [-1.5, 1.0, 0.25, 2.0], "c": [1.0, -0.5, 0.0, 5.0]}
    _, pair, _ = run_json(capsys, "param", json.dumps(point))
    _, back, _ = run_json(capsys, "coords", json.dumps(pair))
    for key in ("t", "c"):
        assert back[key] == pytest.approx(point[key], abs=1e-12)
    assert back["S"][0] == pytest.approx(point["S"][0]) and back["S"][1] == pytest.approx(point["S"][1])


def test_canon(capsys):
    code, out, _ = run_json(capsys, "canon", json.dumps(EX9))
    assert code == 0
    assert out["S"] == [["1", "1"], ["0", "1"]] and out["t0"] == "3" and out["t"] == ["-2", "0", "0"]
    rep = out["representative"]
    assert all(rep[h][g][2] == "0" for h in ("rho", "rho_prime") for g in ("gamma1", "gamma2"))
    standard = {"rho": DIAG["rho"], "rho_prime": {"gamma1": [0, 0, 0], "gamma2": [0, 0, 0]}}
    code, _, err = run(capsys, "canon", json.dumps(standard))
    assert code == 2 and "det A" in err


def test_geom(capsys):
    code, out, _ = run_json(capsys, "geom", json.dumps(EX9))
    assert code == 0 and out == {"torus_matrix": [["1", "1"], ["0", "1"]], "fiber_length": "3",
                                 "orientation": [1, 1]}
    assert run(capsys, "geom", json.dumps(DIAG))[0] == 2


def test_probe_report_schema(capsys):
    code, out, _ = run_json(capsys, "probe", json.dumps(EX9_HALF), "--N", "4,6,8")
    assert code == 0
    assert set(out) >= {"R", "N", "counts", "verdict", "witnesses", "fixed_point_words"}
    assert out["R"] == "2" and out["N"] == [4, 6, 8]
    assert out["witnesses"] == sorted(out["witnesses"])
    assert out["fixed_point_words"]["count"] == 0


def test_probe_example9_long_window_is_stable(capsys):
    code, out, _ = run_json(capsys, "probe", json.dumps(EX9_HALF), "--N", "12,24,48,64")
    assert code == 0 and out["verdict"] == "stable"


def test_probe_diagonal_growing(capsys):
    code, out, _ = run_json(capsys, "probe", json.dumps(DIAG), "--free-N", "2")
    assert out["verdict"] == "growing"
    assert out["fixed_point_words"]["count"] == 5 ** 3 - 1


def test_family_preset(capsys, tmp_path):
    plot = tmp_path / "fiber.csv"
    code, out, _ = run_json(capsys, "family", "--preset", "example9", "--emit-plot", plot)
    assert code == 0
    assert [r["param"] for r in out["rows"]] == ["0", "1/4", "1/2", "3/4", "1"]
    assert [r["fiber_length"] for r in out["rows"]] == ["3", "11/4", "5/2", "9/4", "2"]
    with open(plot, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["c", "fiber_length"] and rows[-1] == ["1.0", "2.0"]


def test_family_steps_and_text(capsys):
    code, out, _ = run(capsys, "family", "--preset", "example9", "--steps", "3", "--format", "text")
    assert code == 0
    assert "5/2" in out and "cond_b fails at: none" in out


def test_family_crossing_from_file(capsys, tmp_path):
    path = tmp_path / "fam.json"
    path.write_text(json.dumps({
        "param": "s", "range": ["0", "1"], "steps": 5,
        "rho": {"gamma1": [1, 0, 0], "gamma2": [0, 1, 0]},
        "rho_prime": {"gamma1": ["0", "-2s", "0"], "gamma2": ["2s", "0", "0"]},
    }))
    code, out, _ = run_json(capsys, "family", path)
    assert [r["proper"] for r in out["rows"]] == [True, True, False, True, True]
    assert out["crossings"] == {"cond_a": [], "cond_b": ["1/2"]}


def test_family_rejects_nonlinear(capsys):
    fam = {"rho": {"gamma1": ["c*c", 0, 0], "gamma2": [0, 1, 0]}, "rho_prime": DIAG["rho_prime"]}
    assert run(capsys, "family", json.dumps(fam))[0] == 2


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(EX9)))
    assert run(capsys, "check", "-")[0] == 0


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "heis_deform.cli", "check", json.dumps(DIAG)],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["proper"] is False


def test_unknown_command_exit_2(capsys):
    assert run(capsys, "frobnicate")[0] == 2
