"""Command-line surface.

Subcommands: eval, range, sweep, am, witness, check.  Exit codes:
0 success/verified, 1 usage or parse error, 2 counterexample or missing
value found, 3 precision exhausted.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import acceptance
from .enclosure import PrecisionExhausted, get_constant
from .exact import parse_alg, rational_between
from .evaluate import f_eval, f_eval_real, g_ceil_eval, h_mixed_eval
from .intervals import am_set, coverage_report, render_figure, union
from .irrational import CONSTANT_NAMES, fractional_window_witness, observed_range
from .rational import bezout_witness, conjecture317_sweep, range_rational
from .irrational import conjecture43_check, conjecture47_scan

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COUNTEREXAMPLE = 2
EXIT_PRECISION = 3


def _parse_spec(text: str):
    """Parse an alpha spec: a constant name or the canonical serialization."""
    text = text.strip()
    if text in CONSTANT_NAMES:
        return text
    return parse_alg(text)


def _cmd_eval(args) -> int:
    alpha = _parse_spec(args.alpha)
    if isinstance(alpha, str):
        if args.variant != "f":
            raise ValueError("variants g/h are defined for exact parameters only")
        value = f_eval_real(get_constant(alpha), args.n)
    elif args.variant == "f":
        value = f_eval(alpha, args.n)
    elif args.variant == "g":
        value = g_ceil_eval(alpha, args.n)
    else:
        value = h_mixed_eval(alpha, args.n)
    print(value)
    return EXIT_OK


def _cmd_range(args) -> int:
    alpha = _parse_spec(args.alpha)
    if not isinstance(alpha, str) and alpha.is_rational:
        fr = alpha.as_fraction()
        rs = range_rational(fr.numerator, fr.denominator)
        values = "{" + ",".join(map(str, rs.values)) + "}"
        if args.format == "records":
            wit = " ".join(f"{v}->{n}" for v, n in sorted(rs.witnesses.items()))
            print(f"alpha={alpha} exact range={values} witnesses=[{wit}]")
        else:
            print(f"Range(f_{fr}) = {values}  (exact, period {fr.denominator}^2)")
            for v in rs.values:
                print(f"  {v} first attained at n = {rs.witnesses[v]}")
        return EXIT_OK
    report = observed_range(alpha, args.scan)
    if args.format == "records":
        for line in report.record_lines():
            print(line)
    else:
        obs = "{" + ",".join(map(str, report.observed)) + "}"
        print(f"observed range of f_{report.alpha} over n <= {report.scan_bound}: "
              f"{obs}  classification {report.classification}")
        for v in report.observed:
            print(f"  {v} first attained at n = {report.witnesses[v]}")
        if report.note:
            print(f"  note: {report.note}")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    if args.which == "c317":
        report = conjecture317_sweep(args.bmax, args.smax)
        for line in report.record_lines():
            print(line)
        return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE
    if args.which == "c43":
        alpha = _parse_spec(args.alpha)
        rep = conjecture43_check(alpha, args.scan)
        wit = " ".join(f"{m}->{n}" for m, n in sorted(rep.witnesses.items()))
        print(f"alpha={rep.alpha} N={rep.scan_bound} witnessed=[{wit}] "
              f"missing={list(rep.missing)}")
        return EXIT_OK if rep.complete else EXIT_COUNTEREXAMPLE
    if args.which == "c45":
        rep = coverage_report(args.mmax)
        for line in rep.record_lines():
            print(line)
        return EXIT_OK if rep.consistent else EXIT_COUNTEREXAMPLE
    # c47
    family = [_parse_spec(a) for a in args.alpha_list]
    survivors = conjecture47_scan(family, args.scan)
    print("constant-range survivors: " + ", ".join(map(str, survivors)))
    return EXIT_OK


def _cmd_am(args) -> int:
    if args.m is not None:
        sets = [am_set(args.m)]
        u = sets[0]
        header = f"A_{args.m}"
    else:
        sets = [am_set(m) for m in range(2, args.union + 1)]
        u = union(sets)
        header = f"union of A_2..A_{args.union}"
    if args.format == "human":
        print(header + ":")
    for line in u.record_lines():
        print(line)
    if args.svg:
        render_figure(sets, u, args.svg)
        if args.format == "human":
            print(f"figure written to {args.svg}")
    return EXIT_OK


def _cmd_witness(args) -> int:
    if args.kind == "bezout":
        n = bezout_witness(args.a, args.b)
        f = f_eval(Fraction(args.a, args.b), n)
        print(f"n={n} f={f}")
        return EXIT_OK if f == 1 else EXIT_COUNTEREXAMPLE
    # kind == "window"
    alpha = _parse_spec(args.alpha)
    if isinstance(alpha, str):
        raise ValueError("window witness needs an exact irrational parameter")
    n = fractional_window_witness(alpha, parse_alg(args.lo), parse_alg(args.hi),
                                  args.scan)
    if n is None:
        print("not found within scan bound")
        return EXIT_COUNTEREXAMPLE
    print(f"n={n}")
    return EXIT_OK


def _cmd_check(args) -> int:
    ok = acceptance.run_all()
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="floorgap",
        description="Exact ranges of f(n) = floor(a^2 n) - floor(a floor(a n))",
    )
    parser.add_argument("--format", choices=("human", "records"),
                        default="human", help="output style")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate f (or a variant) at one point")
    p.add_argument("--alpha", required=True,
                   help="parameter: p/r, (p+q*sqrt(d))/r, pi or e")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", choices=("f", "g", "h"), default="f")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("range", help="exact or observed range of f")
    p.add_argument("--alpha", required=True)
    p.add_argument("--scan", type=int, default=20000,
                   help="scan bound for irrational parameters")
    p.set_defaults(func=_cmd_range)

    p = sub.add_parser("sweep", help="conjecture sweeps and coverage reports")
    p.add_argument("which", choices=("c317", "c43", "c45", "c47"))
    p.add_argument("--bmax", type=int, default=10)
    p.add_argument("--smax", type=int, default=6)
    p.add_argument("--mmax", type=int, default=50)
    p.add_argument("--alpha", help="parameter for c43")
    p.add_argument("--alpha-list", nargs="+", default=[],
                   help="family members for c47")
    p.add_argument("--scan", type=int, default=20000)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("am", help="A_m sets as exact interval unions")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--m", type=int)
    group.add_argument("--union", type=int)
    p.add_argument("--svg", help="also render the stacked-bars figure")
    p.set_defaults(func=_cmd_am)

    p = sub.add_parser("witness", help="Bezout and fractional-window witnesses")
    p.add_argument("kind", choices=("bezout", "window"))
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--alpha")
    p.add_argument("--lo")
    p.add_argument("--hi")
    p.add_argument("--scan", type=int, default=10000)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("check", help="run the full verification suite")
    p.set_defaults(func=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except PrecisionExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
