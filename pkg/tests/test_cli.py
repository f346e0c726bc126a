import csv
import io
import json

import pytest

from weylfun.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.rstrip("\n"), captured.err


def test_eval_hermite(capsys):
    code, out, _ = run_cli(capsys, "eval", "hermite", "--n", "2")
    assert code == 0
    assert out == "4*x^2 - 2"


def test_eval_hermite_json(capsys):
    code, out, _ = run_cli(capsys, "eval", "hermite", "--n", "3", "--output", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["polynomial"] == "8*x^3 - 12*x"
    assert payload["coefficients"] == ["0", "-12", "0", "8"]


def test_eval_laguerre_rational_alpha(capsys):
    code, out, _ = run_cli(capsys, "eval", "laguerre", "--n", "1", "--alpha", "1/2")
    assert code == 0
    assert out == "-x + 3/2"


def test_eval_laguerre_default_alpha(capsys):
    code, out, _ = run_cli(capsys, "eval", "laguerre", "--n", "2")
    assert code == 0
    assert out == "1/2*x^2 - 2*x + 1"


def test_eval_bessel_trivial(capsys):
    code, out, _ = run_cli(capsys, "eval", "bessel", "--n", "0", "--x", "0")
    assert code == 0
    assert out == "1"


@pytest.mark.parametrize("method", ["series", "integral", "miller"])
def test_eval_bessel_methods_agree(capsys, method):
    code, out, _ = run_cli(capsys, "eval", "bessel", "--n", "2", "--x", "1.5", "--method", method)
    assert code == 0
    assert float(out) == pytest.approx(0.23208767214421472, abs=1e-12)


def test_eval_bessel_negative_order(capsys):
    code, out, _ = run_cli(capsys, "eval", "bessel", "--n", "-1", "--x", "1.0")
    code2, out2, _ = run_cli(capsys, "eval", "bessel", "--n", "1", "--x", "1.0")
    assert code == code2 == 0
    assert float(out) == -float(out2)


def test_eval_psi(capsys):
    code, out, _ = run_cli(capsys, "eval", "psi", "--n", "0", "--x", "0")
    assert code == 0
    assert float(out) == pytest.approx(0.7511255444649425)


def test_sum_even_hermite(capsys):
    code, out, _ = run_cli(capsys, "sum", "even-hermite", "--t", "1/5", "--x", "0")
    assert code == 0
    assert out.startswith("closed = 0.74535599249992")


def test_sum_even_hermite_partial_json(capsys):
    code, out, _ = run_cli(
        capsys, "sum", "even-hermite", "--t", "0.1", "--x", "1", "--N", "80",
        "--output", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["abs_err"] <= 1e-10


def test_sum_even_hermite_singular(capsys):
    # negative rationals need the --flag=value spelling under argparse
    code, _, err = run_cli(capsys, "sum", "even-hermite", "--t=-1/4", "--x", "0")
    assert code == 1
    assert "SingularityError" in err


def test_disentangle_closed(capsys):
    code, out, _ = run_cli(capsys, "disentangle", "--t", "1/4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "f = 0.5"
    assert lines[1].startswith("g = -0.34657359027997")
    assert lines[2] == "h = -0.125"


def test_disentangle_custom_exponent(capsys):
    code, out, _ = run_cli(
        capsys, "disentangle", "--t", "0.5", "--alpha", "0", "--beta", "0", "--gamma", "1",
        "--output", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["route"] == "rk4"
    assert payload["f"]["re"] == pytest.approx(0.0, abs=1e-12)
    assert payload["h"]["re"] == pytest.approx(0.5, abs=1e-12)


def test_disentangle_complex_flag_syntax(capsys):
    code, out, _ = run_cli(
        capsys, "disentangle", "--t", "0.1",
        "--alpha", "4", "--beta=-2i", "--gamma=-1", "--output", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["f"]["re"] == pytest.approx(2.0 / 7.0, abs=1e-10)


def test_verify_filter_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--filter", "bessel_*", "--output", "json")
    assert code == 0
    report = json.loads(out)
    assert report["counts"]["fail"] == 0
    assert all(c["name"].startswith("bessel_") for c in report["checks"])
    assert all(c["pass"] for c in report["checks"])


def test_verify_text_summary(capsys):
    code, out, _ = run_cli(capsys, "verify", "--filter", "algebra_*")
    assert code == 0
    assert "PASS" in out and "checks passed" in out


def test_verify_csv(capsys):
    code, out, _ = run_cli(capsys, "verify", "--filter", "disentangle_*", "--output", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["name", "pass", "exact", "abs_err", "tolerance"]
    assert len(rows) > 1


def test_verify_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "verify", "--filter", "weyl_commutator_table", "--output", "json",
        "--out", str(target),
    )
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["counts"] == {"pass": 1, "fail": 0}


def test_verify_env_config(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"filter": "algebra_binom_integer_match"}))
    monkeypatch.setenv("WEYLFUN_CONFIG", str(cfg))
    code, out, _ = run_cli(capsys, "verify", "--output", "json")
    assert code == 0
    report = json.loads(out)
    assert [c["name"] for c in report["checks"]] == ["algebra_binom_integer_match"]


def test_verify_env_config_bad_field(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"not_a_field": 3}))
    monkeypatch.setenv("WEYLFUN_CONFIG", str(cfg))
    code, _, err = run_cli(capsys, "verify")
    assert code == 1
    assert "not_a_field" in err


def test_table_hermite_csv(capsys):
    code, out, _ = run_cli(capsys, "table", "hermite", "--n-max", "3", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "c0", "c1", "c2", "c3"]
    assert rows[1] == ["0", "1", "0", "0", "0"]
    assert rows[4] == ["3", "0", "-12", "0", "8"]


def test_table_laguerre_text(capsys):
    code, out, _ = run_cli(capsys, "table", "laguerre", "--n-max", "1", "--alpha", "1")
    assert code == 0
    assert out.splitlines() == ["L_0^(1) = 1", "L_1^(1) = -x + 2"]


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["eval", "hermite"])  # missing --n
    assert err.value.code == 2


def test_unknown_command_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2


def test_bad_rational_flag():
    with pytest.raises(SystemExit) as err:
        main(["eval", "laguerre", "--n", "1", "--alpha", "x/y"])
    assert err.value.code == 2


def test_write_failure_reports_path(capsys):
    code, _, err = run_cli(
        capsys, "table", "hermite", "--n-max", "1", "--format", "csv",
        "--out", "/nonexistent-dir/table.csv",
    )
    assert code == 1
    assert "/nonexistent-dir/table.csv" in err
