import csv
import math

import numpy as np
import pytest

from qdchain import RealQ, RootOfUnity, SweepConfig, run_identity_check, run_max_fidelity_sweep, run_time_sweep
from qdchain.cli import main


def read_csv(path):
    with open(path, encoding="utf-8") as fh:
        comments = [line for line in fh if line.startswith("#")]
        fh.seek(0)
        rows = list(csv.DictReader(line for line in fh if not line.startswith("#")))
    return comments, rows


def test_config_validation_names_the_field(tmp_path):
    with pytest.raises(ValueError, match="t_min/t_max"):
        SweepConfig(deformations=(RealQ(1.0),), out=tmp_path / "x.csv", t_min=1.0, t_max=1.0)
    with pytest.raises(ValueError, match="steps"):
        SweepConfig(deformations=(RealQ(1.0),), out=tmp_path / "x.csv", steps=1)
    with pytest.raises(ValueError, match="deformations"):
        SweepConfig(deformations=(), out=tmp_path / "x.csv")


def test_time_sweep_csv_layout(tmp_path):
    out = tmp_path / "sweep.csv"
    config = SweepConfig(deformations=(RealQ(1.0), RootOfUnity(5)), out=out, sites=4, dim=3, steps=41)
    run_time_sweep(config)
    comments, rows = read_csv(out)
    assert any("qdchain" in line and "time-sweep" in line for line in comments)
    assert any("seed=0" in line for line in comments)
    assert any("q=1" in line and "root:5:+" in line for line in comments)
    assert list(rows[0]) == ["lambda_t", "deformation", "avg_fidelity", "f1_abs", "f2_abs"]
    assert len(rows) == 2 * 41
    # blocks ordered by deformation, times ascending inside each block
    assert [r["deformation"] for r in rows] == ["q=1"] * 41 + ["root:5:+"] * 41
    times = [float(r["lambda_t"]) for r in rows[:41]]
    assert times == sorted(times)
    with open(out, "rb") as fh:
        assert b"\r" not in fh.read()  # LF endings


def test_time_sweep_hits_the_perfect_transfer_point(tmp_path):
    out = tmp_path / "q1.csv"
    run_time_sweep(SweepConfig(deformations=(RealQ(1.0),), out=out, steps=201))
    _, rows = read_csv(out)
    at_pi = min(rows, key=lambda r: abs(float(r["lambda_t"]) - math.pi))
    assert abs(float(at_pi["avg_fidelity"]) - 1.0) < 1e-9
    assert abs(float(at_pi["f1_abs"]) - 1.0) < 1e-9
    assert abs(float(at_pi["f2_abs"]) - 1.0) < 1e-9


def test_inverse_deformations_print_identical_blocks(tmp_path):
    out = tmp_path / "sym.csv"
    run_time_sweep(SweepConfig(deformations=(RealQ(1.05), RealQ(1 / 1.05)), out=out, steps=101))
    _, rows = read_csv(out)
    a = [float(r["avg_fidelity"]) for r in rows[:101]]
    b = [float(r["avg_fidelity"]) for r in rows[101:]]
    assert np.abs(np.array(a) - np.array(b)).max() < 1e-10


def test_sweeps_are_byte_deterministic(tmp_path):
    config_a = SweepConfig(deformations=(RealQ(1.2),), out=tmp_path / "a.csv", sites=5, steps=51)
    config_b = SweepConfig(deformations=(RealQ(1.2),), out=tmp_path / "b.csv", sites=5, steps=51)
    run_time_sweep(config_a)
    run_time_sweep(config_b)
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_max_sweep(tmp_path):
    out = tmp_path / "max.csv"
    config = SweepConfig(deformations=(RealQ(1.0), RealQ(1.4)), out=out, steps=1001)
    run_max_fidelity_sweep(config)
    _, rows = read_csv(out)
    assert list(rows[0]) == ["deformation", "max_avg_fidelity", "optimal_lambda_t"]
    by_q = {r["deformation"]: r for r in rows}
    grid_step = 2 * math.pi / 1000
    assert abs(float(by_q["q=1"]["max_avg_fidelity"]) - 1.0) < 1e-9
    assert abs(float(by_q["q=1"]["optimal_lambda_t"]) - math.pi) <= grid_step
    assert float(by_q["q=1.4"]["max_avg_fidelity"]) < 0.999


def test_identity_check_report():
    report = run_identity_check(9)
    assert report.passed
    assert len(report.residuals) == 9
    assert all(r < 1e-9 for _, r in report.residuals)
    assert any("OK" in line for line in report.lines())
    with pytest.raises(ValueError, match="n_max"):
        run_identity_check(0)


def test_cli_time_sweep_end_to_end(tmp_path):
    out = tmp_path / "cli.csv"
    code = main(
        ["time-sweep", "--sites", "4", "--dim", "2", "--q", "1", "--root-of-unity", "3",
         "--steps", "21", "--out", str(out)]
    )
    assert code == 0
    comments, rows = read_csv(out)
    assert len(rows) == 42
    assert list(rows[0]) == ["lambda_t", "deformation", "avg_fidelity", "f1_abs"]


def test_cli_max_sweep_with_custom_couplings(tmp_path):
    out = tmp_path / "custom.csv"
    code = main(
        ["max-sweep", "--sites", "3", "--dim", "2", "--q", "1", "--couplings", "1.0,1.0",
         "--steps", "101", "--out", str(out)]
    )
    assert code == 0
    _, rows = read_csv(out)
    assert len(rows) == 1


def test_cli_usage_errors(tmp_path):
    out = str(tmp_path / "x.csv")
    assert main(["time-sweep", "--out", out]) == 2  # no deformation given
    assert main(["time-sweep", "--q", "1", "--t-min", "1", "--t-max", "1", "--out", out]) == 2
    assert main(["time-sweep", "--q", "-2", "--out", out]) == 2  # invalid parameter
    assert main(["max-sweep", "--sites", "4", "--dim", "2", "--q", "1", "--couplings", "1,2",
                 "--out", out]) == 2  # wrong bond count
    code = main(["time-sweep", "--q", "1", "--sites", "3", "--dim", "2", "--steps", "11",
                 "--out", str(tmp_path / "missing" / "x.csv")])
    assert code == 1  # unwritable path


def test_cli_identity_check(capsys):
    assert main(["identity-check", "--n-max", "9"]) == 0
    out = capsys.readouterr().out
    assert out.count("residual=") == 9
    assert "OK" in out


def test_cli_identity_check_rejects_nonpositive_n():
    with pytest.raises(SystemExit) as err:
        main(["identity-check", "--n-max", "0"])
    assert err.value.code == 2
