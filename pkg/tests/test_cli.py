import json
import subprocess
import sys

import pytest

from hypercx.algebra import PRESET_NAMES
from hypercx.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    rows = [json.loads(line) for line in out.splitlines() if line.startswith("{")]
    return code, rows


def test_algebra_listing(capsys):
    code, rows = run(capsys, "algebra")
    assert code == 0 and len(rows) == len(PRESET_NAMES)
    assert all(set(r) >= {"id", "paper_ref", "inputs", "value", "tolerance", "pass"} for r in rows)


def test_eval_rational(capsys):
    expr = "x0^2 + x2^2 + j*(x1^2 + x3^2) + j^2*(2*x0*x2) + j^3*(2*x1*x3)"
    code, [row] = run(capsys, "eval", "--algebra", "four_real_hyperbolic", "--expr", expr,
                      "--coeffs", "1,0,1,0", "--mode", "rational")
    assert code == 0 and row["value"] == ["2", "0", "2", "0"]


def test_check_holomorphy(capsys):
    expr = "x0^2 + x2^2 + j*(x1^2 + x3^2) + j^2*(2*x0*x2) + j^3*(2*x1*x3)"
    code, [row] = run(capsys, "check", "--algebra", "four_real_hyperbolic", "--op", "holomorphy",
                      "--expr", expr, "--points", "16")
    assert code == 0 and row["pass"]


def test_failed_check_exits_one(capsys):
    code, [row] = run(capsys, "check", "--algebra", "hyperbolic_complex", "--op", "dzstar",
                      "--expr", "x0 - j*x1", "--points", "8")
    assert code == 1 and not row["pass"]


def test_derive_cr_against_golden(capsys):
    code, [row] = run(capsys, "derive-cr", "--golden", "CR8", "--wirtinger")
    assert code == 0 and row["value"]["diff"]["missing"] == [] and row["value"]["wirtinger"]


def test_derive_cr_mismatch(capsys):
    code, [row] = run(capsys, "derive-cr", "--algebra", "bicomplex", "--ops", "dalphastar", "--golden", "CR21")
    assert code == 1 and not row["pass"]


def test_matrix_determinant(capsys):
    code, [row] = run(capsys, "matrix", "--coeffs", "1,0,2,0", "--mode", "rational")
    assert code == 0 and row["value"]["det_h"] == "9"


def test_symbol(capsys):
    code, [row] = run(capsys, "symbol", "--xi", "1,0,0,0")
    assert code == 0 and row["value"]["p"] == "-0.25" and row["value"]["char_member"] is False


def test_fundsol(capsys):
    code, [row] = run(capsys, "fundsol", "--phi", "gaussian:1.0", "--eps", "0.5")
    assert code == 0 and row["value"]["bessel_k0"] == pytest.approx(1.5415067512483028)


def test_exp(capsys):
    code, [row] = run(capsys, "exp", "--algebra", "double_complex", "--coeffs", "0.1,0.2,-0.3,0.4")
    assert code == 0 and row["value"]["residuals"]["closed_minus_series"] < 1e-12


@pytest.mark.parametrize("argv", [
    ["eval", "--algebra", "octonion", "--expr", "v", "--coeffs", "1"],
    ["eval", "--algebra", "complex", "--expr", "1 + * v", "--coeffs", "1,0"],
    ["derive-cr", "--golden", "CR99"],
    ["suite", "--only", "nonsense"],
    ["symbol"],
])
def test_usage_errors_exit_two(capsys, argv):
    code, rows = run(capsys, *argv)
    assert code == 2 and "error" in rows[0]


def test_missing_subcommand_exits_two():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_evaluation_failure_exits_one(capsys):
    code, [row] = run(capsys, "eval", "--algebra", "hyperbolic_complex", "--expr", "1/v",
                      "--coeffs", "1,1", "--mode", "rational")
    assert code == 1 and row["error"] == "ZeroDivisorError"


def test_suite_is_deterministic(capsys):
    _, a = run(capsys, "suite", "--only", "exp_holomorphic", "--seed", "7")
    _, b = run(capsys, "suite", "--only", "exp_holomorphic", "--seed", "7")
    for r in a + b:
        r.pop("seconds", None)
    assert a == b and a[0]["pass"]


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "hypercx.cli", "symbol", "--xi", "1,1,1.4142135623730951,0"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["value"]["char_member"] is True
