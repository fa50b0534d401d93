"""Command-line front end: ``dt <command> ...``.

Exit status is 0 on success, 2 for parameter regions with no formula (on
the wall, above the upper chamber bound) or bad arguments, and 1 when an
internal cross-check fails.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import chow, dtseries, localalg, partitions, torus, walls
from .errors import (
    AboveUpperUnsupported,
    BadEpsilon,
    BadWindow,
    DTError,
    IntegralityViolation,
    NonIntegerResult,
    OnWallUnsupported,
    RouteMismatch,
)
from .series import Series

REFUSED = 2
CHECK_FAILED = 1


class _Refused(Exception):
    pass


def _max_order() -> int:
    return int(os.environ.get("DT_MAX_ORDER", "16"))


def _order(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError("order must be nonnegative")
    return n


def _check_order(n: int):
    cap = _max_order()
    if n > cap:
        raise _Refused(f"order {n} exceeds DT_MAX_ORDER={cap}")


def _rational(value: str) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {value!r}") from exc


def _int_list(value: str) -> list[int]:
    return [int(x) for x in value.split(",") if x.strip()]


def _eps(value: str) -> int:
    v = int(value)
    if v not in (0, 1):
        raise argparse.ArgumentTypeError("epsilon must be 0 or 1")
    return v


def _print_table(series: Series, label: str = "lambda"):
    print(f"{'m':>4}  {label}")
    for m, c in enumerate(series.coeffs):
        print(f"{m:>4}  {c}")


def _emit_series(series: Series, as_json: bool, label: str = "lambda"):
    if as_json:
        print(series.to_json())
    else:
        _print_table(series, label)


def cmd_theorem_a(args):
    _check_order(args.order)
    report = dtseries.theorem_a_series(args.order)
    if not args.json:
        print(f"# family A, chi(Y) = {report.chiY}")
    _emit_series(report.series, args.json)


def cmd_theorem_b(args):
    _check_order(args.order)
    report = dtseries.theorem_b_series(args.eps1, args.eps2, args.r, args.order)
    if not args.json:
        print(
            f"# family B, eps=({args.eps1},{args.eps2}), r={report.r}, "
            f"{report.chamber}, k={report.k}, chi(Y)={report.chiY}"
        )
    _emit_series(report.series, args.json)


def cmd_prop_e2(args):
    _check_order(args.order)
    s = dtseries.prop_eII_series(args.n, args.eps1, args.eps2, args.order)
    for m, c in enumerate(s.coeffs):
        if c.denominator != 1 or (m % 2 and c):
            raise IntegralityViolation(f"bad coefficient {c} at q^{m}")
    _emit_series(s, args.json, label="chi")


def cmd_crosscheck(args):
    spec = None
    if args.family.upper() == "B":
        spec = walls.ChamberSpec(2, args.eps1, args.eps2, args.r)
    rep = dtseries.crosscheck_quot_model(args.family, args.m, spec)
    out = {
        "family": rep.family,
        "m": rep.m,
        "multiplicity": rep.multiplicity,
        "chiY": rep.chiY,
        "closed_form": rep.closed_form,
        "stratified": rep.stratified,
        "agree": rep.agree,
        **rep.extra,
    }
    print(json.dumps(out))


def cmd_partitions_count(args):
    print(json.dumps({"dim": args.dim, "weight": args.weight,
                      "count": partitions.count_partitions(args.dim, args.weight)}))


def cmd_partitions_series(args):
    _check_order(args.order)
    print(partitions.partition_series(args.dim, args.order).to_json())


def cmd_torus_fixed_points(args):
    pts = torus.enumerate_quot_fixed_points(args.dim, args.rank, args.weight)
    out = {"dim": args.dim, "rank": args.rank, "weight": args.weight, "count": len(pts)}
    if args.list:
        out["fixed_points"] = [[I.to_list() for I in E.ideals] for E in pts]
    print(json.dumps(out))


def _staircase(text: str) -> list[tuple[int, ...]]:
    return [tuple(b) for b in json.loads(text)]


def cmd_hom_dim(args):
    boxes1, boxes2 = _staircase(args.ideal1), _staircase(args.ideal2)
    # an empty staircase (the unit ideal) takes its size from the other ideal
    nvars = args.nvars or next((len(b[0]) for b in (boxes1, boxes2) if b), None)
    if nvars is None:
        raise ValueError("both staircases are empty; pass --nvars")
    I = torus.MonomialIdeal(nvars, frozenset(boxes1))
    J = torus.MonomialIdeal(nvars, frozenset(boxes2))
    print(json.dumps({"hom_dim": localalg.hom_dim(I, J),
                      "colength1": I.colength, "colength2": J.colength}))


def cmd_parity_scan(args):
    rep = localalg.parity_scan(args.max_colength, args.nvars or 3)
    print(json.dumps(rep))
    if not rep["passed"]:
        raise RouteMismatch("parity law failed on some pairs")


def cmd_chow_euler(args):
    dims = _int_list(args.ambient)
    if args.degree:
        divisors = [tuple(_int_list(d)) for d in args.degree]
    elif args.degrees:
        if len(dims) != 1:
            raise ValueError("--degrees lists hypersurface degrees in a single P^n; use --degree")
        divisors = _int_list(args.degrees)
    else:
        raise ValueError("give --degrees or --degree")
    print(json.dumps({"ambient": dims, "chi": chow.ci_euler(dims, divisors)}))


def cmd_chow_bogomolov(args):
    print(chow.bogomolov_discriminant(args.n, args.eps1, args.eps2))


def cmd_walls_classify(args):
    spec = walls.ChamberSpec(args.n, args.eps1, args.eps2, args.r)
    lo, up = walls.wall_bounds(args.n, args.eps1, args.eps2)
    print(json.dumps({"classification": str(walls.classify(spec)),
                      "lower": str(lo), "upper": str(up)}))


def cmd_walls_destabilize(args):
    triples = walls.destabilizer_search(args.n, args.eps1, args.eps2, args.r, args.r0, args.bound)
    print(json.dumps([t.as_tuple() for t in triples]))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dt", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def eps_args(sp):
        sp.add_argument("--eps1", type=_eps, required=True)
        sp.add_argument("--eps2", type=_eps, required=True)

    sp = sub.add_parser("theorem-a", help="DT series of the quadric-quartic 3-fold")
    sp.add_argument("--order", type=_order, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_theorem_a)

    sp = sub.add_parser("theorem-b", help="DT series of the (2,2,3) 3-fold")
    eps_args(sp)
    sp.add_argument("--r", type=_rational, required=True)
    sp.add_argument("--order", type=_order, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_theorem_b)

    sp = sub.add_parser("prop-e2", help="unweighted Euler characteristics, general n")
    sp.add_argument("--n", type=int, required=True)
    eps_args(sp)
    sp.add_argument("--order", type=_order, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_prop_e2)

    sp = sub.add_parser("crosscheck", help="closed form vs stratified fixed-point count")
    sp.add_argument("--family", choices=["a", "b", "A", "B"], required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--eps1", type=_eps, default=0)
    sp.add_argument("--eps2", type=_eps, default=0)
    sp.add_argument("--r", type=_rational, default=Fraction(3))
    sp.set_defaults(func=cmd_crosscheck)

    part = sub.add_parser("partitions").add_subparsers(dest="action", required=True)
    sp = part.add_parser("count")
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--weight", type=int, required=True)
    sp.set_defaults(func=cmd_partitions_count)
    sp = part.add_parser("series")
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--order", type=_order, required=True)
    sp.set_defaults(func=cmd_partitions_series)

    tor = sub.add_parser("torus").add_subparsers(dest="action", required=True)
    sp = tor.add_parser("fixed-points")
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--weight", type=int, required=True)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--list", action="store_true")
    g.add_argument("--count", action="store_true")
    sp.set_defaults(func=cmd_torus_fixed_points)

    loc = sub.add_parser("localalg").add_subparsers(dest="action", required=True)
    sp = loc.add_parser("hom-dim")
    sp.add_argument("--ideal1", required=True, help="staircase as JSON list of exponents")
    sp.add_argument("--ideal2", required=True)
    sp.add_argument("--nvars", type=int)
    sp.set_defaults(func=cmd_hom_dim)
    sp = loc.add_parser("parity-scan")
    sp.add_argument("--max-colength", type=int, required=True)
    sp.add_argument("--nvars", type=int)
    sp.set_defaults(func=cmd_parity_scan)

    ch = sub.add_parser("chow").add_subparsers(dest="action", required=True)
    sp = ch.add_parser("euler")
    sp.add_argument("--ambient", required=True, help="comma-separated factor dimensions")
    sp.add_argument("--degrees", help="hypersurface degrees in a single P^n, e.g. 2,4")
    sp.add_argument("--degree", action="append", help="one multidegree per divisor, e.g. 2,2,3")
    sp.set_defaults(func=cmd_chow_euler)
    sp = ch.add_parser("bogomolov")
    sp.add_argument("--n", type=int, required=True)
    eps_args(sp)
    sp.set_defaults(func=cmd_chow_bogomolov)

    wl = sub.add_parser("walls").add_subparsers(dest="action", required=True)
    sp = wl.add_parser("classify")
    sp.add_argument("--n", type=int, required=True)
    eps_args(sp)
    sp.add_argument("--r", type=_rational, required=True)
    sp.set_defaults(func=cmd_walls_classify)
    sp = wl.add_parser("destabilize")
    sp.add_argument("--n", type=int, required=True)
    eps_args(sp)
    sp.add_argument("--r", type=_rational, required=True)
    sp.add_argument("--r0", type=_rational, required=True)
    sp.add_argument("--bound", type=int, default=4)
    sp.set_defaults(func=cmd_walls_destabilize)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (OnWallUnsupported, AboveUpperUnsupported, _Refused) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return REFUSED
    except (RouteMismatch, IntegralityViolation, NonIntegerResult) as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return CHECK_FAILED
    except (BadEpsilon, BadWindow, DTError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return REFUSED
    return 0


if __name__ == "__main__":
    sys.exit(main())
