import json
import subprocess
import sys

import pytest

from ffhyper.cli import build_parser, main, parse_element
from ffhyper.finite_field import field_of_order
from ffhyper.hypergeometric import evaluator
from ffhyper.theorems import SweepPlan

from oracle import brute, close


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_rendering(capsys):
    code, out, _ = run(capsys, "eval", "--q", "7", "--variant", "star", "--top", "3,1", "--bottom", "2", "--x", "-1")
    assert code == 0
    assert "generator g=[3]" in out and "exp(2 pi i j/6)" in out
    lines = dict(line.split(": ", 1) for line in out.splitlines()[1:])
    coeffs = json.loads(lines["coefficients (powers of zeta_42)"])
    assert len(coeffs) == 12
    want = evaluator(field_of_order(7)).star((3, 1), (2,), field_of_order(7).neg_code(1))
    assert tuple(coeffs) == tuple(want.coeffs) and int(lines["denominator"]) == want.den
    # float oracle for the same value
    b = brute(7)
    z = sum(c * complex(__import__("cmath").exp(2j * __import__("math").pi * k / 42)) for k, c in enumerate(coeffs))
    assert close(z / want.den, b.star((3, 1), (2,), b.minus_one))


def test_eval_examples(capsys):
    code, out, _ = run(capsys, "eval", "--q", "5", "--variant", "star", "--top", "0", "--x", "1")
    assert code == 0 and out.rstrip().endswith("rational: -4")
    code, out, _ = run(capsys, "eval", "--q", "7", "--variant", "star", "--top", "1,2", "--bottom", "3", "--x", "0")
    assert code == 0 and "rational: 0" in out


def test_eval_json_and_extension_argument(capsys):
    code, out, _ = run(capsys, "eval", "--q", "9", "--variant", "greene", "--top", "1,2", "--bottom", "3", "--x", "g^3", "--format", "json")
    d = json.loads(out)
    F = field_of_order(9)
    assert code == 0 and d["x"] == F.exp_code(3) and d["q"] == 9
    assert d["generator"] == F.describe()
    assert d["value"] == evaluator(F).greene((1, 2), (3,), F.exp_code(3)).to_dict()


def test_parse_element():
    F7, F9 = field_of_order(7), field_of_order(9)
    assert parse_element(F7, "0") == 0
    assert parse_element(F7, "1") == 1
    assert parse_element(F7, "-1") == 6
    assert parse_element(F7, "g^2") == 2
    assert parse_element(F7, "g^-1") == 5
    assert parse_element(F7, "11") == 4
    assert parse_element(F9, "-1") == F9.neg_code(1)
    with pytest.raises(ValueError):
        parse_element(F9, "2")
    with pytest.raises(ValueError):
        parse_element(F9, "g^x")


def test_verify_examples(capsys):
    code, out, err = run(capsys, "verify", "--theorem", "dixon", "--q", "5,7", "--plan", "exhaustive")
    assert code == 0 and err == ""
    assert out.count("PASS theorem=dixon") == 2
    code, out, err = run(capsys, "verify", "--theorem", "dixon", "--q", "8")
    assert code == 0
    assert "warning" in err and "SKIP theorem=dixon q=8" in out
    assert "generator g=[0, 1, 0]" in out


def test_unknown_theorem_exit(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "nope", "--q", "5")
    assert code != 0 and "UnknownTheorem" in err
    code, _, err = run(capsys, "suite", "--q", "5", "--theorems", "hp,nope")
    assert code != 0 and "UnknownTheorem" in err


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "kummer", "--q", "4,5", "--plan", "exhaustive", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["plan"] == "exhaustive"
    assert [r["q"] for r in d["reports"]] == [4, 5]
    for r in d["reports"]:
        assert {"theorem_id", "q", "generator", "tuples_tested", "branches", "failures", "skipped"} <= set(r)
        assert r["skipped"] is False and r["failures"] == []


def test_suite_subset_and_timing(capsys):
    code, out, _ = run(capsys, "suite", "--q", "3", "--theorems", "hp,gauss", "--plan", "sample:10:1", "--timing")
    assert code == 0
    assert "# plan: sample:10:1" in out
    assert out.count("PASS") == 2 and "elapsed" in out


def test_modular_examples(capsys):
    code, out, _ = run(capsys, "modular", "--primes", "3,5,7,11,13")
    assert code == 0 and out.rstrip().endswith("5/5 primes match")
    code, _, err = run(capsys, "modular", "--primes", "2")
    assert code != 0 and "NotOddPrime" in err
    code, out, _ = run(capsys, "modular", "--primes", "3", "--format", "json")
    (rec,) = json.loads(out)["checks"]
    assert code == 0 and rec["p"] == 3 and rec["gamma"] == -4 and rec["rational"] == "-1" and rec["match"]


def test_usage_errors(capsys):
    for argv in (
        ["eval", "--q", "6", "--top", "1", "--x", "1"],
        ["eval", "--q", "101", "--top", "1", "--x", "1", "--max-q", "100"],
        ["eval", "--q", "5", "--top", "1", "--bottom", "1", "--x", "1", "--variant", "katz", "--x", "0"],
    ):
        code, _, err = run(capsys, *argv)
        assert code == 2 and err.startswith("error:")
    with pytest.raises(SystemExit):
        main(["verify", "--theorem", "hp", "--q", "5", "--plan", "sometimes"])
    with pytest.raises(SystemExit):
        main(["eval", "--q", "5", "--top", "a,b", "--x", "1"])


def test_plan_flag_round_trips():
    parser = build_parser()
    for text in ("exhaustive", "sample:500:42", "auto:100:5:3"):
        args = parser.parse_args(["verify", "--theorem", "hp", "--q", "5", "--plan", text])
        assert args.plan == SweepPlan.parse(str(args.plan)) and str(args.plan) == text


def test_console_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "ffhyper.cli", "verify", "--theorem", "gauss", "--q", "3", "--format", "json"],
        capture_output=True, text=True, check=True,
    ).stdout
    assert json.loads(out)["reports"][0]["theorem_id"] == "gauss"
