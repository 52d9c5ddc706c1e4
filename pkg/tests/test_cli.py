import json
import math

import numpy as np
import pytest

from gent import cli, cm_core
from gent.standard_forms import StandardFormI, make_scaled_cm, ScaledState


def run_cli(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(list(argv))
    out = capsys.readouterr()
    return exc.value.code, out.out, out.err


def test_check_separable(capsys):
    code, out, _ = run_cli(capsys, "check", "--b", "0.5", "--c", "0", "--d", "0")
    assert code == 0
    assert "separable:          True" in out


def test_check_entangled(capsys):
    code, out, _ = run_cli(capsys, "check", "--b", "1", "--c", "0.8", "--d", "-0.6")
    assert code == 3
    assert "0.28284" in out


def test_check_unphysical(capsys):
    code, _, _ = run_cli(capsys, "check", "--b", "1", "--c", "0.99", "--d", "-0.99")
    assert code == 2


def test_parse_errors(capsys, tmp_path):
    code, _, err = run_cli(capsys, "check", "--b", "1", "--c", "0.3")
    assert code == 1
    assert "--b requires --c and --d" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run_cli(capsys, "check", "--cm", str(bad))
    assert code == 1
    assert "--cm" in err
    code, _, err = run_cli(capsys, "bures")
    assert code == 1


def test_bures_json(capsys):
    code, out, _ = run_cli(capsys, "bures", "--b", "1", "--c", "0.8", "--d", "-0.6")
    assert code == 0
    payload = json.loads(out)
    assert payload["version"]
    assert payload["e_b"] == pytest.approx(0.03924, abs=1e-5)
    assert payload["f_max"] == pytest.approx(0.9230516, abs=1e-6)


def test_bures_separable(capsys):
    code, out, _ = run_cli(capsys, "bures", "--b", "1", "--c", "0.5", "--d", "-0.25")
    assert code == 0
    payload = json.loads(out)
    assert payload["e_b"] == 0.0
    assert payload["kappa_tilde_minus"] == pytest.approx(math.sqrt(0.375), abs=1e-9)


def test_relent_json_with_verify(capsys):
    code, out, _ = run_cli(capsys, "relent", "--b", "1", "--c", "0.8", "--d", "-0.6", "--verify")
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["e_s"] - 0.199) < 0.005
    assert payload["verify"]["discrepancy"] < 1e-6


def test_asymmetric_cm_rejected(capsys, tmp_path):
    v = make_scaled_cm(ScaledState(StandardFormI(1.0, 1.3, 0.5, -0.3), 1.0, 1.0))
    path = tmp_path / "asym.json"
    cm_core.dump_cm_json(v, path)
    code, _, err = run_cli(capsys, "bures", "--cm", str(path))
    assert code == 4
    assert "not symmetric" in err


def test_cm_file_roundtrip(capsys, tmp_path):
    v = StandardFormI(1.0, 1.0, 0.8, -0.6).to_cm()
    path = tmp_path / "cm.json"
    cm_core.dump_cm_json(v, path)
    code, out, _ = run_cli(capsys, "bures", "--cm", str(path))
    assert code == 0
    assert json.loads(out)["e_b"] == pytest.approx(0.03924, abs=1e-5)


def test_sweep_monotone_and_reproducible(capsys, tmp_path):
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (out1, out2):
        code, _, _ = run_cli(
            capsys,
            "sweep", "--measure", "bures", "--parameter", "r",
            "--start", "0.05", "--stop", "1.0", "--steps", "12",
            "--output", str(path),
        )
        assert code == 0
    assert out1.read_bytes() == out2.read_bytes()
    lines = out1.read_text().strip().splitlines()
    assert lines[0] == "param,b,c,d,kappa_plus,kappa_minus,kappa_tilde_minus,e_b,e_s,x1_star,x2_star"
    e_b = [float(line.split(",")[7]) for line in lines[1:]]
    assert all(x < y for x, y in zip(e_b, e_b[1:]))
    # relent columns are empty for a bures-only sweep
    assert lines[1].endswith(",,")


def test_sweep_kappa_tilde_matches_closed_form(capsys, tmp_path):
    path = tmp_path / "kt.csv"
    code, _, _ = run_cli(
        capsys,
        "sweep", "--measure", "bures", "--parameter", "kappa_tilde",
        "--start", "0.05", "--stop", "0.45", "--steps", "9",
        "--output", str(path),
    )
    assert code == 0
    for line in path.read_text().strip().splitlines()[1:]:
        cells = line.split(",")
        kt, e_b = float(cells[0]), float(cells[7])
        assert e_b == pytest.approx((math.sqrt(2 * kt) - 1) ** 2 / (2 * kt + 1), abs=1e-9)
        assert float(cells[6]) == pytest.approx(kt, abs=1e-9)


def test_sweep_thermal_threshold(capsys, tmp_path):
    # nbar > 0: no entanglement until the squeezing crosses the threshold
    path = tmp_path / "th.csv"
    code, _, _ = run_cli(
        capsys,
        "sweep", "--measure", "bures", "--parameter", "r",
        "--start", "0.05", "--stop", "1.2", "--steps", "24",
        "--nbar", "0.5", "--output", str(path),
    )
    assert code == 0
    e_b = [float(l.split(",")[7]) for l in path.read_text().strip().splitlines()[1:]]
    assert e_b[0] == 0.0
    assert e_b[-1] > 0.0
    assert sorted(e_b) == e_b


def test_sweep_validation(capsys, tmp_path):
    code, _, err = run_cli(
        capsys,
        "sweep", "--measure", "bures", "--parameter", "kappa_tilde",
        "--start", "0.2", "--stop", "0.9", "--steps", "5",
        "--output", str(tmp_path / "x.csv"),
    )
    assert code == 1
    assert "kappa_tilde" in err


def test_oracle_fidelity_identical(capsys):
    code, out, _ = run_cli(capsys, "oracle", "fidelity", "--state1", "0.7,0.8", "--state2", "0.7,0.8")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == pytest.approx(1.0, abs=1e-7)
    assert payload["discrepancy"] < 1e-7


def test_oracle_fidelity_vacuum_thermal(capsys):
    code, out, _ = run_cli(capsys, "oracle", "fidelity", "--state1", "0.5,0.5", "--state2", "1.0,1.0")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == pytest.approx(2.0 / 3.0, abs=1e-8)


def test_oracle_entropy_thermal(capsys):
    code, out, _ = run_cli(capsys, "oracle", "entropy", "--state1", "1.0,1.0")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == pytest.approx(0.95477, abs=1e-5)
    assert payload["closed_form"] == pytest.approx(payload["value"], abs=1e-8)


def test_oracle_support_violation(capsys):
    # reference state (state2) pure, state (state1) mixed: diverges
    code, _, err = run_cli(capsys, "oracle", "relent", "--state1", "1.0,1.0", "--state2", "0.5,0.5")
    assert code == 5
    assert "support" in err.lower()


def test_oracle_relent_matches_closed_form(capsys):
    code, out, _ = run_cli(capsys, "oracle", "relent", "--state1", "0.5,0.5", "--state2", "1.0,1.0")
    assert code == 0
    payload = json.loads(out)
    assert payload["discrepancy"] < 1e-8


def test_oracle_input_validation(capsys):
    code, _, err = run_cli(capsys, "oracle", "fidelity", "--state1", "0.5,0.5")
    assert code == 1
    code, _, err = run_cli(capsys, "oracle", "entropy", "--state1", "0.5;0.5")
    assert code == 1
    assert "sigma_qq" in err
