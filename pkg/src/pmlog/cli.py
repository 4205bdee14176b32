"""Command-line front end: value queries, coset tables, series dumps, and
the identity verification suites.

JSON and CSV go to standard output; diagnostics and timings go to standard
error.  Exit codes: 0 success, 1 verification failure, 2 usage error,
3 resource or convergence error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import __version__
from .base import ENUMERATION_CAP, ConvergenceError, ResourceCapError, Sign
from .bivariate import BiResidue, BiSign, biamice_check, bimu_oracle, bimu_value
from .cyclotomic import zeta_power
from .digits import Prime, in_S_minus, in_S_plus, residue_from_integer
from .distribution import (
    StepFunction,
    integrate,
    interpolation_rhs,
    mu_oracle,
    mu_value,
    verify_additivity,
)
from .report import Case, VerificationReport
from .series import (
    DEFAULT_P_PREC,
    DEFAULT_T_PREC,
    SeriesPrecision,
    build_log_pm,
    dump_dict,
    verify_product_identity,
)

FORMAT_VERSION = "1"
TABLE_ROW_CAP = 10**5

UNIVARIATE_SIGNS = ("+", "-")
BIVARIATE_SIGNS = ("++", "+-", "-+", "--")
ALL_SIGNS = UNIVARIATE_SIGNS + BIVARIATE_SIGNS

SUITES = ("oracle", "additivity", "amice", "biamice", "logproduct", "all")


def _extract_sign(argv: list[str]) -> tuple[list[str], str | None]:
    # argparse mangles option values that look like "--" or "-+", so the
    # sign flag is pulled out before parsing and validated per command.
    rest: list[str] = []
    sign: str | None = None
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--sign":
            if i + 1 >= len(argv):
                raise ValueError("--sign requires a value")
            sign = argv[i + 1]
            i += 2
        elif tok.startswith("--sign="):
            sign = tok[len("--sign=") :]
            i += 1
        else:
            rest.append(tok)
            i += 1
    return rest, sign


def _require_sign(token: str | None, allowed: tuple[str, ...]) -> str:
    if token is None:
        raise ValueError(f"--sign is required (one of {', '.join(allowed)})")
    if token not in allowed:
        raise ValueError(f"unknown sign {token!r} (expected one of {', '.join(allowed)})")
    return token


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pmlog",
        description="Exact plus/minus p-adic logarithms and their distributions.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"pmlog {__version__} (output format {FORMAT_VERSION})",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sign_help = "each of these commands also requires --sign {+,-,++,+-,-+,--}"

    value = sub.add_parser(
        "value", help="distribution value of one coset (JSON)", epilog=sign_help
    )
    _add_value_args(value)
    value.set_defaults(func=cmd_value, signs=ALL_SIGNS)

    bivalue = sub.add_parser(
        "bivalue", help="two-variable value of one coset pair (JSON)", epilog=sign_help
    )
    _add_value_args(bivalue)
    bivalue.set_defaults(func=cmd_value, signs=BIVARIATE_SIGNS)

    table = sub.add_parser("table", help="one CSV row per coset", epilog=sign_help)
    table.add_argument("--p", required=True, type=int)
    table.add_argument("--n", required=True, type=int)
    table.add_argument("--m", type=int, help="second modulus exponent (bivariate signs)")
    table.add_argument("--force", action="store_true", help="override the row cap")
    table.set_defaults(func=cmd_table, signs=ALL_SIGNS)

    series = sub.add_parser(
        "series",
        help="dump a plus/minus logarithm series (JSON)",
        epilog="requires --sign {+,-}",
    )
    series.add_argument("--p", required=True, type=int)
    series.add_argument("--tprec", type=int, default=DEFAULT_T_PREC)
    series.add_argument("--pprec", type=int, default=DEFAULT_P_PREC)
    series.set_defaults(func=cmd_series, signs=UNIVARIATE_SIGNS)

    verify = sub.add_parser("verify", help="run an identity verification suite (JSON report)")
    verify.add_argument("--suite", required=True, choices=SUITES)
    verify.add_argument("--p", required=True, type=int)
    verify.add_argument("--max-n", type=int, default=3, dest="max_n")
    verify.add_argument("--tprec", type=int, default=DEFAULT_T_PREC)
    verify.add_argument("--pprec", type=int, default=DEFAULT_P_PREC)
    verify.set_defaults(func=cmd_verify, signs=None)

    return parser


def _add_value_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", required=True, type=int)
    parser.add_argument("--n", required=True, type=int)
    parser.add_argument("--m", type=int, help="second modulus exponent (bivariate signs)")
    parser.add_argument("--a", required=True, type=int)
    parser.add_argument("--b", type=int, help="second coordinate (bivariate signs)")
    parser.add_argument("--oracle", action="store_true", help="also run the character-sum oracle")


def cmd_value(args) -> int:
    p = Prime(args.p)
    if len(args.sign) == 1:
        if args.m is not None or args.b is not None:
            raise ValueError("--m and --b require a two-character sign")
        sign = Sign.from_str(args.sign)
        r = residue_from_integer(args.a, p, args.n)
        value = mu_value(sign, r)
        if args.oracle:
            oracle = mu_oracle(sign, r)
            out = {
                "value": value.to_json_dict(),
                "oracle": oracle.to_json_dict(),
                "agree": value.value == oracle.value,
            }
        else:
            out = value.to_json_dict()
    else:
        if args.m is None or args.b is None:
            raise ValueError("bivariate signs require --m and --b")
        bisign = BiSign.from_str(args.sign)
        r = BiResidue(
            residue_from_integer(args.a, p, args.n),
            residue_from_integer(args.b, p, args.m),
        )
        value = bimu_value(bisign, r)
        if args.oracle:
            oracle = bimu_oracle(bisign, r)
            out = {
                "value": {**value.to_json_dict(), "sign": str(bisign)},
                "oracle": {**oracle.to_json_dict(), "sign": str(bisign)},
                "agree": value.value == oracle.value,
            }
        else:
            out = {**value.to_json_dict(), "sign": str(bisign)}
    print(json.dumps(out))
    return 0


def _digit_str(r) -> str:
    return "|".join(str(d) for d in r.digits)


def cmd_table(args) -> int:
    p = Prime(args.p)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    if len(args.sign) == 1:
        if args.m is not None:
            raise ValueError("--m requires a two-character sign")
        sign = Sign.from_str(args.sign)
        rows = p**args.n
        if rows > TABLE_ROW_CAP and not args.force:
            raise ResourceCapError(f"{rows} rows exceed the table cap (use --force)")
        member = in_S_plus if sign is Sign.PLUS else in_S_minus
        writer.writerow(["a", "digits", "in_S", "value_num", "value_den"])
        for a in range(rows):
            r = residue_from_integer(a, p, args.n)
            v = mu_value(sign, r)
            writer.writerow(
                [a, _digit_str(r), str(member(r)).lower(), v.value.numerator, v.value.denominator]
            )
    else:
        if args.m is None:
            raise ValueError("bivariate signs require --m")
        bisign = BiSign.from_str(args.sign)
        rows = p ** (args.n + args.m)
        if rows > TABLE_ROW_CAP and not args.force:
            raise ResourceCapError(f"{rows} rows exceed the table cap (use --force)")
        writer.writerow(["a", "b", "digits", "in_S", "value_num", "value_den"])
        for a in range(p**args.n):
            ra = residue_from_integer(a, p, args.n)
            for b in range(p**args.m):
                rb = residue_from_integer(b, p, args.m)
                v = bimu_value(bisign, BiResidue(ra, rb))
                writer.writerow(
                    [
                        a,
                        b,
                        f"{_digit_str(ra)}/{_digit_str(rb)}",
                        str(not v.is_zero).lower(),
                        v.value.numerator,
                        v.value.denominator,
                    ]
                )
    return 0


def cmd_series(args) -> int:
    p = Prime(args.p)
    sign = Sign.from_str(args.sign)
    prec = SeriesPrecision(t_prec=args.tprec, p_prec=args.pprec)
    series = build_log_pm(p, sign, prec)
    print(json.dumps(dump_dict(series, sign), indent=2))
    return 0


def _suite_oracle(p: Prime, max_n: int) -> list[Case]:
    cases = []
    for sign in (Sign.PLUS, Sign.MINUS):
        for n in range(1, max_n + 1):
            for a in range(p**n):
                r = residue_from_integer(a, p, n)
                expected = mu_oracle(sign, r).value
                actual = mu_value(sign, r).value
                cases.append(
                    Case(
                        input=f"oracle: sign={sign} n={n} a={a}",
                        expected=str(expected),
                        actual=str(actual),
                        passed=expected == actual,
                    )
                )
    return cases


def _suite_additivity(p: Prime, max_n: int) -> list[Case]:
    cases = []
    for sign in (Sign.PLUS, Sign.MINUS):
        for n in range(1, max_n + 1):
            report = verify_additivity(sign, p, n)
            cases.extend(
                Case(f"additivity: n={n} {c.input}", c.expected, c.actual, c.passed)
                for c in report.cases
            )
    return cases


def _suite_amice(p: Prime, max_n: int) -> list[Case]:
    cases = []
    for sign in (Sign.PLUS, Sign.MINUS):
        for n in range(1, max_n + 1):
            if p**n > ENUMERATION_CAP:
                raise ResourceCapError(f"{p}^{n} cosets exceed the enumeration cap")
            for k in range(1, n + 1):
                zeta_exp = p ** (n - k)
                f = StepFunction.from_function(p, n, lambda a, e=zeta_exp: zeta_power(p, n, e * a))
                lhs = integrate(sign, f)
                rhs = interpolation_rhs(sign, k, p, n)
                cases.append(
                    Case(
                        input=f"amice: sign={sign} k={k} n={n}",
                        expected=str(rhs),
                        actual=str(lhs),
                        passed=lhs == rhs,
                    )
                )
    return cases


def _suite_biamice(p: Prime, max_n: int) -> list[Case]:
    cases = []
    for token in BIVARIATE_SIGNS:
        bisign = BiSign.from_str(token)
        for n in range(1, max_n + 1):
            for k1 in range(1, n + 1):
                for k2 in range(1, n + 1):
                    report = biamice_check(bisign, p, k1, k2, n)
                    cases.extend(
                        Case(f"biamice: {c.input}", c.expected, c.actual, c.passed)
                        for c in report.cases
                    )
    return cases


def _suite_logproduct(p: Prime, prec: SeriesPrecision) -> list[Case]:
    report = verify_product_identity(p, prec)
    return [Case(f"logproduct: {c.input}", c.expected, c.actual, c.passed) for c in report.cases]


def cmd_verify(args) -> int:
    p = Prime(args.p)
    if args.max_n < 1:
        raise ValueError("--max-n must be >= 1")
    prec = SeriesPrecision(t_prec=args.tprec, p_prec=args.pprec)
    started = time.perf_counter()

    cases: list[Case] = []
    if args.suite in ("oracle", "all"):
        cases.extend(_suite_oracle(p, args.max_n))
    if args.suite in ("additivity", "all"):
        cases.extend(_suite_additivity(p, args.max_n))
    if args.suite in ("amice", "all"):
        cases.extend(_suite_amice(p, args.max_n))
    if args.suite in ("biamice", "all"):
        cases.extend(_suite_biamice(p, args.max_n))
    if args.suite in ("logproduct", "all"):
        cases.extend(_suite_logproduct(p, prec))

    parameters = {"p": int(p), "max_n": args.max_n, "t_prec": prec.t_prec, "p_prec": prec.p_prec}
    report = VerificationReport(suite=args.suite, parameters=parameters, cases=cases)
    report.wall_time_ms = (time.perf_counter() - started) * 1000.0
    print(json.dumps(report.to_json_dict(), indent=2))
    print(
        f"suite {args.suite}: {len(cases)} cases in {report.wall_time_ms:.1f} ms",
        file=sys.stderr,
    )
    return 0 if report.passed else 1


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        rest, sign_token = _extract_sign(list(argv))
        try:
            args = parser.parse_args(rest)
        except SystemExit as exc:
            return int(exc.code or 0)
        if args.signs is None:
            if sign_token is not None:
                raise ValueError(f"{args.command} takes no --sign flag")
        else:
            args.sign = _require_sign(sign_token, args.signs)
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ResourceCapError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
