import json
import math

import pytest

from herglotz import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_digamma_at_one(capsys):
    code, out, _ = run_cli(capsys, "eval", "--fn", "digamma", "--x", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "function,x,value,error_estimate,elapsed_ms"
    fields = lines[1].split(",")
    assert fields[0] == "digamma"
    assert abs(float(fields[2]) + 0.57721566490153286) <= 1e-12


def test_eval_F_at_one(capsys):
    code, out, _ = run_cli(capsys, "eval", "--fn", "F", "--x", "1")
    assert code == 0
    value = float(out.strip().splitlines()[1].split(",")[2])
    assert abs(value + 0.9162401498442948) <= 1e-9


def test_eval_H_cross_representation(capsys):
    code, out1, _ = run_cli(capsys, "eval", "--fn", "H.contour", "--x", "1", "--tol", "1e-8")
    assert code == 0
    code, out2, _ = run_cli(capsys, "eval", "--fn", "H.single", "--x", "1", "--tol", "1e-8")
    assert code == 0
    v1 = float(out1.strip().splitlines()[1].split(",")[2])
    v2 = float(out2.strip().splitlines()[1].split(",")[2])
    assert abs(v1 - v2) <= 1e-6


def test_eval_multiple_points_order(capsys):
    code, out, _ = run_cli(capsys, "eval", "--fn", "phi0", "--x", "2,1,0.5")
    assert code == 0
    xs = [float(line.split(",")[1]) for line in out.strip().splitlines()[1:]]
    assert xs == [2.0, 1.0, 0.5]


def test_eval_jobs_matches_serial(capsys):
    code, serial, _ = run_cli(capsys, "eval", "--fn", "phi0", "--x", "0.5,1,2,3")
    assert code == 0
    code, parallel, _ = run_cli(capsys, "eval", "--fn", "phi0", "--x", "0.5,1,2,3", "--jobs", "3")
    assert code == 0
    assert serial == parallel


def test_eval_unknown_function_exit_2(capsys):
    code, _, err = run_cli(capsys, "eval", "--fn", "nope", "--x", "1")
    assert code == 2
    assert "unknown function" in err


def test_eval_domain_error_exit_3(capsys):
    code, _, err = run_cli(capsys, "eval", "--fn", "psi1", "--x", "-3")
    assert code == 3
    assert "requires x > 0" in err


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["eval", "--x", "1"])  # missing --fn
    assert exc.value.code == 2


def test_verify_single_identity(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--id", "ramanujan.w126", "--alphas", "1", "--tol", "1e-8"
    )
    assert code == 0
    assert out.startswith("PASS ramanujan.w126")
    assert "# summary ramanujan.w126" in out


def test_verify_unknown_identity_exit_2(capsys):
    code, _, err = run_cli(capsys, "verify", "--id", "bogus")
    assert code == 2
    assert "unknown identity" in err


def test_verify_failure_not_masked_exit_1(capsys, monkeypatch):
    # a failing report must surface as FAIL text and exit code 1
    from herglotz import relations
    from herglotz.specfun import EvalResult

    def broken(param, tol, budget):
        return EvalResult(0.0, 1e-16), EvalResult(1.0, 1e-16)

    monkeypatch.setitem(
        relations._DISPATCH, relations.IdentityId.KLOOSTERMAN, broken
    )
    code, out, _ = run_cli(capsys, "verify", "--id", "kloosterman", "--alphas", "1")
    assert code == 1
    assert out.startswith("FAIL kloosterman")


def test_verify_json_schema(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--id", "kloosterman", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload) == 3
    for rec in payload:
        assert set(rec) == {
            "identity", "params", "lhs", "rhs", "residual", "tolerance", "pass",
        }
        assert rec["pass"] is True
        assert set(rec["lhs"]) == {"value", "error_estimate"}


def test_verify_csv_format(capsys):
    code, out, _ = run_cli(capsys, "verify", "--id", "wigert", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "identity,param,lhs,rhs,residual,tolerance,pass"
    assert len(lines) == 5


def test_env_tolerance_and_flag_precedence(capsys, monkeypatch):
    monkeypatch.setenv("HERGLOTZ_TOL", "1e-3")
    code, out, _ = run_cli(capsys, "verify", "--id", "kloosterman", "--alphas", "1")
    assert code == 0
    assert "tol=1.0e-03" in out
    code, out, _ = run_cli(
        capsys, "verify", "--id", "kloosterman", "--alphas", "1", "--tol", "1e-7"
    )
    assert "tol=1.0e-07" in out


def test_table_csv_row_count_and_schema(capsys):
    code, out, _ = run_cli(capsys, "table", "--fn", "phi0", "--range", "0.5:2:4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "function,x,value,error_estimate,elapsed_ms"
    assert len(lines) == 5
    assert [float(l.split(",")[1]) for l in lines[1:]] == [0.5, 1.0, 1.5, 2.0]


def test_table_log_spacing(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--fn", "phi0", "--range", "0.25:4:3", "--spacing", "log"
    )
    assert code == 0
    xs = [float(l.split(",")[1]) for l in out.strip().splitlines()[1:]]
    assert xs[0] == 0.25 and abs(xs[1] - 1.0) < 1e-12 and xs[2] == 4.0


def test_table_json_records(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--fn", "digamma", "--range", "1:3:5", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload) == 5
    for rec in payload:
        assert set(rec) == {"function", "x", "value", "error_estimate", "elapsed_ms"}
        assert math.isfinite(rec["value"])


def test_table_byte_determinism(capsys):
    args = ("table", "--fn", "H.contour", "--range", "0.5:2:3", "--tol", "1e-8")
    code, out1, _ = run_cli(capsys, *args)
    assert code == 0
    code, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_table_out_file(tmp_path, capsys):
    target = tmp_path / "t.csv"
    code, out, _ = run_cli(
        capsys, "table", "--fn", "phi0", "--range", "1:2:2", "--out", str(target)
    )
    assert code == 0 and out == ""
    lines = target.read_text().strip().splitlines()
    assert lines[0] == "function,x,value,error_estimate,elapsed_ms"
    assert len(lines) == 3


def test_table_golden_bytes(capsys):
    # schema-stability golden: exact output for a fixed invocation
    code, out, _ = run_cli(capsys, "table", "--fn", "phi0", "--range", "1:2:2")
    assert code == 0
    assert out == (
        "function,x,value,error_estimate,elapsed_ms\n"
        "phi0,1,-0.07721566490153231,1.9149669962967593e-15,0\n"
        "phi0,2,-0.020362845461478041,1.7570301883886339e-15,0\n"
    )


def test_table_G_range_finite(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--fn", "G", "--range", "0.25:4:7", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload) == 7
    assert all(math.isfinite(rec["value"]) for rec in payload)


def test_table_unwritable_out_exit_3(capsys):
    code, _, err = run_cli(
        capsys, "table", "--fn", "phi0", "--range", "1:2:2",
        "--out", "/nonexistent-dir/x.csv",
    )
    assert code == 3
    assert "cannot write" in err


def test_bad_range_exit_3(capsys):
    code, _, err = run_cli(capsys, "table", "--fn", "phi0", "--range", "1:2")
    assert code == 3
    assert "start:stop:count" in err


def test_verify_bad_grid_exit_3(capsys):
    code, _, err = run_cli(capsys, "verify", "--id", "wigert", "--alphas", "1,abc")
    assert code == 3
    assert "bad point list" in err


def test_timing_flag_populates_elapsed(capsys):
    code, out, _ = run_cli(
        capsys, "eval", "--fn", "H.contour", "--x", "1", "--timing"
    )
    assert code == 0
    elapsed = float(out.strip().splitlines()[1].split(",")[4])
    assert elapsed > 0.0
