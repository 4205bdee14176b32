"""The command-line surface: output schemas, exit codes, determinism."""

import csv
import io
import json
from fractions import Fraction

import pmlog.cli as cli
from pmlog import DistValue, Prime


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_value_example(capsys):
    code, out, _ = run(capsys, "value", "--sign", "+", "--p", "3", "--n", "3", "--a", "3")
    assert code == 0
    assert json.loads(out) == {"num": "1", "den": "9", "p_val": -2, "zero": False}


def test_value_zero_case(capsys):
    code, out, _ = run(capsys, "value", "--sign", "+", "--p", "3", "--n", "2", "--a", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["zero"] is True and payload["num"] == "0" and payload["p_val"] is None


def test_value_oracle_flag(capsys):
    code, out, _ = run(
        capsys, "value", "--sign", "-", "--p", "3", "--n", "1", "--a", "2", "--oracle"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["agree"] is True
    assert payload["value"] == payload["oracle"]
    assert payload["value"]["den"] == "9"


def test_value_bivariate_double_minus(capsys):
    code, out, _ = run(
        capsys,
        "value", "--sign", "--", "--p", "2", "--n", "1", "--m", "1", "--a", "1", "--b", "1",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload == {"num": "1", "den": "16", "p_val": -4, "zero": False, "sign": "--"}


def test_bivalue_subcommand_matches_value(capsys):
    args = ["--sign", "+-", "--p", "3", "--n", "2", "--m", "1", "--a", "3", "--b", "0"]
    code1, out1, _ = run(capsys, "value", *args)
    code2, out2, _ = run(capsys, "bivalue", *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_bivalue_rejects_univariate_sign(capsys):
    code, _, err = run(capsys, "bivalue", "--sign", "+", "--p", "3", "--n", "1", "--a", "0")
    assert code == 2
    assert "sign" in err


def test_value_usage_errors(capsys):
    # bivariate sign without --m/--b
    code, _, _ = run(capsys, "value", "--sign", "++", "--p", "3", "--n", "1", "--a", "0")
    assert code == 2
    # univariate sign with stray --b
    code, _, _ = run(
        capsys, "value", "--sign", "+", "--p", "3", "--n", "1", "--a", "0", "--b", "1"
    )
    assert code == 2
    # composite p
    code, _, _ = run(capsys, "value", "--sign", "+", "--p", "4", "--n", "1", "--a", "0")
    assert code == 2
    # missing required --a
    code, _, _ = run(capsys, "value", "--sign", "+", "--p", "3", "--n", "1")
    assert code == 2
    # missing sign entirely
    code, _, _ = run(capsys, "value", "--p", "3", "--n", "1", "--a", "0")
    assert code == 2


def test_value_resource_error_exit_code(capsys):
    code, _, err = run(
        capsys, "value", "--sign", "+", "--p", "2", "--n", "21", "--a", "0", "--oracle"
    )
    assert code == 3
    assert "cap" in err


def test_table_minus_level_one(capsys):
    code, out, _ = run(capsys, "table", "--sign", "-", "--p", "3", "--n", "1")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 3
    assert all(r["value_num"] == "1" and r["value_den"] == "9" for r in rows)
    assert all(r["in_S"] == "true" for r in rows)


def test_table_plus_support(capsys):
    code, out, _ = run(capsys, "table", "--sign", "+", "--p", "2", "--n", "2")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["a"] for r in rows] == ["0", "1", "2", "3"]
    nonzero = [r["a"] for r in rows if r["value_num"] != "0"]
    assert nonzero == ["0", "2"]


def test_table_bivariate_row_count(capsys):
    code, out, _ = run(capsys, "table", "--sign", "-+", "--p", "2", "--n", "2", "--m", "1")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 2 ** (2 + 1)
    assert [(r["a"], r["b"]) for r in rows] == [
        (str(a), str(b)) for a in range(4) for b in range(2)
    ]


def test_table_row_cap_and_force(capsys):
    code, _, err = run(capsys, "table", "--sign", "+", "--p", "2", "--n", "17")
    assert code == 3
    assert "force" in err
    code, out, _ = run(capsys, "table", "--sign", "+", "--p", "2", "--n", "2", "--force")
    assert code == 0


def test_series_single_coefficient(capsys):
    code, out, _ = run(capsys, "series", "--sign", "+", "--p", "3", "--tprec", "1", "--pprec", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["coeffs"] == [
        {"k": 0, "num": "1", "den": "3", "guaranteed_mod_p_pow": 3}
    ]


def test_series_record_count_and_determinism(capsys):
    argv = ["series", "--sign", "-", "--p", "2", "--tprec", "8", "--pprec", "6"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert len(payload["coeffs"]) == 8
    assert payload["sign"] == "-" and payload["p"] == 2


def test_series_rejects_bivariate_sign(capsys):
    code, _, _ = run(capsys, "series", "--sign", "++", "--p", "3")
    assert code == 2


def test_verify_oracle_suite(capsys):
    code, out, err = run(capsys, "verify", "--suite", "oracle", "--p", "3", "--max-n", "4")
    assert code == 0
    report = json.loads(out)
    assert report["overall_pass"] is True
    assert report["suite"] == "oracle"
    assert len(report["cases"]) == 2 * (3 + 9 + 27 + 81)
    assert "ms" in err  # timing goes to stderr only


def test_verify_logproduct_suite(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "logproduct", "--p", "2", "--tprec", "10", "--pprec", "6"
    )
    assert code == 0
    report = json.loads(out)
    assert report["overall_pass"] is True
    assert len(report["cases"]) == 10


def test_verify_all_passes_and_is_deterministic(capsys):
    argv = ["verify", "--suite", "all", "--p", "2", "--max-n", "2"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    report = json.loads(out1)
    assert report["overall_pass"] is True
    assert "wall" not in out1  # no timing inside the report


def test_verify_failure_exit_code(capsys, monkeypatch):
    # force a disagreement to exercise the failing path
    def broken_oracle(sign, r):
        return DistValue(Prime(int(r.p)), Fraction(1, int(r.p)))

    monkeypatch.setattr(cli, "mu_oracle", broken_oracle)
    code, out, _ = run(capsys, "verify", "--suite", "oracle", "--p", "3", "--max-n", "1")
    assert code == 1
    report = json.loads(out)
    assert report["overall_pass"] is False
    assert any(not c["pass"] for c in report["cases"])


def test_verify_rejects_sign_flag(capsys):
    code, _, err = run(capsys, "verify", "--suite", "oracle", "--p", "3", "--sign", "+")
    assert code == 2
    assert "sign" in err


def test_verify_rejects_unknown_suite(capsys):
    code, _, _ = run(capsys, "verify", "--suite", "bogus", "--p", "3")
    assert code == 2


def test_version_flag(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0
    assert "pmlog" in out and "format" in out
