"""Command-line front end: classify, series, verify, census.

Exit codes: 0 success (series verified), 1 an obstructed series or a failed
verification, 2 invalid input.  All rationals in JSON output are exact
"num/den" strings; the only decimal field anywhere is the census
asymptotic-ratio diagnostic.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .census import census_summary, write_census_csv
from .classify import classify
from .equation import Equation, InvalidEquation, from_factors
from .exact import parse_rational
from .laurent import SeriesSolution, build_series, default_order, verify_series


class _CliError(Exception):
    """Bad input; reported on stderr with exit code 2."""


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError as exc:
        raise _CliError(f"expected comma-separated integers, got {text!r}") from exc


def _equation_from_args(args) -> Equation:
    if args.factors is not None and args.a is not None:
        raise _CliError("give exactly one of --factors and --a, not both")
    if args.factors is None and args.a is None:
        raise _CliError("an equation needs --factors or --a")
    try:
        if args.factors is not None:
            return from_factors(args.k, _parse_int_list(args.factors))
        return Equation.from_exponents(args.k, _parse_int_list(args.a))
    except InvalidEquation as exc:
        raise _CliError(str(exc)) from exc


def _admissible_m(eq: Equation) -> int:
    from .equation import pole_multiplicity

    profile = pole_multiplicity(eq)
    if profile is None:
        raise _CliError(
            f"no admissible multiplicity: k = m*(d-1) + h has no positive integer "
            f"solution for {eq.text()} (d={eq.d}, h={eq.h})"
        )
    return profile.m


def _parse_free(items) -> dict:
    free = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise _CliError(f"--free expects root=value, got {item!r}")
        try:
            free[int(key)] = parse_rational(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise _CliError(f"bad --free assignment {item!r}: {exc}") from exc
    return free


def _parse_k_range(text: str, step: int) -> list[int]:
    if step < 1:
        raise _CliError(f"--step must be >= 1, got {step}")
    if ".." in text:
        lo_text, _, hi_text = text.partition("..")
        try:
            lo, hi = int(lo_text), int(hi_text)
        except ValueError as exc:
            raise _CliError(f"bad k range {text!r}") from exc
        if hi < lo:
            raise _CliError(f"empty k range {text!r}")
        return list(range(lo, hi + 1, step))
    try:
        return [int(text)]
    except ValueError as exc:
        raise _CliError(f"bad k value {text!r}") from exc


def _threads_from_env() -> int | None:
    raw = os.environ.get("LAURENT_LAB_THREADS")
    if raw is None:
        return None
    try:
        threads = int(raw)
    except ValueError as exc:
        raise _CliError(f"LAURENT_LAB_THREADS must be a positive integer, got {raw!r}") from exc
    if threads < 1:
        raise _CliError(f"LAURENT_LAB_THREADS must be a positive integer, got {raw!r}")
    return threads


def _emit(payload: dict, stream) -> None:
    json.dump(payload, stream, indent=2)
    stream.write("\n")


def _cmd_classify(args, stdout) -> int:
    eq = _equation_from_args(args)
    verdict = classify(eq)
    _emit(verdict.to_json_dict(eq), stdout)
    return 0


def _cmd_series(args, stdout) -> int:
    eq = _equation_from_args(args)
    m = _admissible_m(eq)
    order = args.order if args.order is not None else default_order(eq, m)
    free = _parse_free(args.free)
    try:
        sol = build_series(eq, m, order=order, free=free)
    except ValueError as exc:
        raise _CliError(str(exc)) from exc
    payload = sol.to_json_dict()
    if sol.obstructed_at is not None:
        payload["verified_through"] = None
        _emit(payload, stdout)
        return 1
    through = sol.order - eq.k
    report = verify_series(eq, sol, through)
    payload["verified_through"] = report.checked_through if report.verified else None
    _emit(payload, stdout)
    return 0 if report.verified else 1


def _cmd_verify(args, stdout) -> int:
    eq = _equation_from_args(args)
    try:
        with open(args.input, encoding="utf-8") as handle:
            sol = SeriesSolution.from_json_dict(json.load(handle))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise _CliError(f"cannot read series JSON from {args.input}: {exc}") from exc
    through = args.through if args.through is not None else sol.order - eq.k
    try:
        report = verify_series(eq, sol, through)
    except ValueError as exc:
        raise _CliError(str(exc)) from exc
    _emit(
        {
            "verified": report.verified,
            "first_mismatch_order": report.first_mismatch_order,
            "checked_through": report.checked_through,
        },
        stdout,
    )
    return 0 if report.verified else 1


def _cmd_census(args, stdout) -> int:
    ks = _parse_k_range(args.k, args.step)
    if args.l < 0 or args.m < 1:
        raise _CliError(f"census needs l >= 0 and m >= 1, got l={args.l}, m={args.m}")
    if ks[0] <= args.l:
        raise _CliError(f"census needs k > l, got k={ks[0]}, l={args.l}")
    threads = _threads_from_env()
    summaries = (census_summary(k, args.l, args.m, threads=threads) for k in ks)
    if args.output is not None:
        with open(args.output, "w", encoding="utf-8", newline="") as handle:
            write_census_csv(summaries, handle)
    else:
        write_census_csv(summaries, stdout)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laurent-lab",
        description=(
            "exact-arithmetic analysis of f^(k) = (f^(j1))...(f^(jd)): Laurent "
            "series solutions, solution-class verdicts, and parameter censuses"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_equation_flags(p):
        p.add_argument("--k", type=int, required=True, help="order of the left side")
        p.add_argument("--factors", help="comma-separated derivative orders j_1,...,j_d")
        p.add_argument("--a", help="comma-separated exponent vector a_0,...,a_l")

    p_classify = sub.add_parser("classify", help="solution-class verdict as JSON")
    add_equation_flags(p_classify)
    p_classify.set_defaults(func=_cmd_classify)

    p_series = sub.add_parser("series", help="build and self-verify a Laurent solution")
    add_equation_flags(p_series)
    p_series.add_argument("--order", type=int, help="truncation order (default 4(k+l+2m))")
    p_series.add_argument(
        "--free",
        action="append",
        metavar="ROOT=VALUE",
        help="free coefficient at a root, e.g. 6=1 or 6=-2/3 (repeatable)",
    )
    p_series.set_defaults(func=_cmd_series)

    p_verify = sub.add_parser("verify", help="re-verify a series JSON against an equation")
    add_equation_flags(p_verify)
    p_verify.add_argument("--input", required=True, help="series JSON file")
    p_verify.add_argument("--through", type=int, help="check orders 0..N' (default order-k)")
    p_verify.set_defaults(func=_cmd_verify)

    p_census = sub.add_parser("census", help="CSV census over k for fixed (l, m)")
    p_census.add_argument("--k", required=True, help="single k or inclusive range A..B")
    p_census.add_argument("--step", type=int, default=1, help="stride through the k range")
    p_census.add_argument("--l", type=int, required=True)
    p_census.add_argument("--m", type=int, required=True)
    p_census.add_argument("--output", help="CSV path (default: stdout)")
    p_census.set_defaults(func=_cmd_census)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args, sys.stdout)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
