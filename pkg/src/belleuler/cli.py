"""Command-line front end: sequence values and tables, identity verification,
and Appell-basis expansion, with machine-readable output.

Exit codes: 0 = success / all checks pass, 1 = an identity check failed,
2 = usage or parameter error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .algebra import Poly, format_fraction, parse_fraction
from .identities import CHECKS as IDENTITY_CHECKS, Grid, NEGATIVE_CONTROLS
from .umbral import CHECKS as UMBRAL_CHECKS, AppellContext, expand_in_appell, reconstruct
from . import sequences as seq

REGISTRY = {**IDENTITY_CHECKS, **UMBRAL_CHECKS}

FAMILIES = {
    "bell-number": seq.Family.BELL_NUMBER,
    "bell-poly": seq.Family.BELL_POLY,
    "bivariate-bell": seq.Family.BIVARIATE_BELL,
    "euler": seq.Family.EULER_POLY,
    "euler-number": seq.Family.EULER_NUMBER,
    "stirling2": seq.Family.STIRLING2_NUMBER,
    "stirling2-poly": seq.Family.STIRLING2_POLY,
    "bell-euler": seq.Family.BELL_EULER_POLY,
    "bell-euler-number": seq.Family.BELL_EULER_NUMBER,
}

_JSON_COMPACT = {"separators": (",", ":")}


class UsageError(Exception):
    """Parameter problem reported on stderr with exit code 2."""


def _parse_alpha(text: str):
    try:
        return seq.validate_order(parse_fraction(text))
    except ValueError as exc:
        raise UsageError(f"bad alpha {text!r}: {exc}") from None


def _parse_alphas(text: str):
    values = tuple(_parse_alpha(part) for part in text.split(",") if part)
    if not values:
        raise UsageError("empty --alphas list")
    return values


def _serialize_value(value, fmt: str) -> str:
    if isinstance(value, Poly):
        if fmt == "json":
            return json.dumps(value.to_json_map(), **_JSON_COMPACT)
        return value.pretty()
    if fmt == "json":
        return json.dumps(format_fraction(value), **_JSON_COMPACT)
    return format_fraction(value)


def _csv_text(header, rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def _family_spec(args) -> seq.FamilySpec:
    family = FAMILIES[args.family]
    alpha = None
    if family in seq.ORDER_PARAMETERIZED:
        if args.alpha is None:
            raise UsageError(f"family {args.family} needs --alpha")
        alpha = _parse_alpha(args.alpha)
    elif args.alpha is not None:
        raise UsageError(f"family {args.family} does not take --alpha")
    k = None
    if family in seq.BLOCK_PARAMETERIZED:
        if args.k is None:
            raise UsageError(f"family {args.family} needs --k")
        k = args.k
    elif getattr(args, "k", None) is not None:
        raise UsageError(f"family {args.family} does not take --k")
    return seq.FamilySpec(family, args.n, alpha=alpha, k=k)


def cmd_compute(args) -> int:
    spec = _family_spec(args)
    value = spec.value()
    if args.format == "csv":
        cell = value.pretty() if isinstance(value, Poly) else format_fraction(value)
        print(_csv_text(["n", "value"], [[spec.n, cell]]))
    else:
        print(_serialize_value(value, args.format))
    return 0


def cmd_table(args) -> int:
    family = FAMILIES[args.family]
    n_max = args.n_max
    if n_max < 0:
        raise UsageError("--n-max must be non-negative")

    if family in seq.BLOCK_PARAMETERIZED:
        header = ["n"] + [f"k={k}" for k in range(n_max + 1)]
        rows = []
        for n in range(n_max + 1):
            cells = []
            for k in range(n_max + 1):
                spec = seq.FamilySpec(family, n, k=k)
                value = spec.value()
                cells.append(value.pretty() if isinstance(value, Poly)
                             else format_fraction(value))
            rows.append([n] + cells)
    else:
        alpha = None
        if family in seq.ORDER_PARAMETERIZED:
            if args.alpha is None:
                raise UsageError(f"family {args.family} needs --alpha")
            alpha = _parse_alpha(args.alpha)
        elif args.alpha is not None:
            raise UsageError(f"family {args.family} does not take --alpha")
        header = ["n", "value"]
        rows = []
        for n in range(n_max + 1):
            spec = seq.FamilySpec(family, n, alpha=alpha)
            value = spec.value()
            rows.append([n, value.pretty() if isinstance(value, Poly)
                         else format_fraction(value)])

    if args.format == "json":
        payload = [dict(zip(header, row)) for row in rows]
        print(json.dumps(payload, **_JSON_COMPACT))
    elif args.format == "pretty":
        width = max(len(str(cell)) for row in rows for cell in row)
        for row in rows:
            print("  ".join(str(cell).rjust(width) for cell in row))
    else:
        print(_csv_text(header, rows))
    return 0


def cmd_verify(args) -> int:
    overrides = {}
    if args.n_max is not None:
        overrides["n_max"] = args.n_max
    if args.alphas is not None:
        overrides["alphas"] = _parse_alphas(args.alphas)
    grid = Grid(**overrides)

    if args.id:
        unknown = [i for i in args.id if i not in REGISTRY]
        if unknown:
            raise UsageError(f"unknown identity id(s): {', '.join(unknown)}; "
                             f"known: {', '.join(REGISTRY)}")
        selected = list(args.id)
    elif args.all:
        selected = [i for i in REGISTRY if i not in NEGATIVE_CONTROLS]
    else:
        raise UsageError("verify needs --id or --all")

    def run_one(check_id):
        return REGISTRY[check_id](grid)

    if args.parallel and len(selected) > 1:
        with ThreadPoolExecutor(max_workers=min(8, len(selected))) as pool:
            reports = list(pool.map(run_one, selected))
    else:
        reports = [run_one(check_id) for check_id in selected]

    print(json.dumps([r.to_json_dict() for r in reports], **_JSON_COMPACT))
    for report in reports:
        status = "pass" if report.passed else "FAIL"
        print(f"{report.id}: {status} ({report.checked} cases)", file=sys.stderr)
    return 0 if all(r.passed for r in reports) else 1


_POLY_TOKEN = re.compile(
    r"^([+-]?)(?:(\d+(?:/\d+)?)\*?)?(x(?:\^(\d+))?)?$")


def parse_x_polynomial(text: str) -> Poly:
    """Parse a univariate polynomial literal like "x^3 - 2/3" or "1/2*x + 1"."""
    stripped = text.replace(" ", "")
    if not stripped:
        raise UsageError("empty polynomial literal")
    tokens = re.findall(r"[+-]?[^+-]+", stripped)
    if "".join(tokens) != stripped:
        raise UsageError(f"cannot parse polynomial literal {text!r}")
    total = Poly.zero()
    for token in tokens:
        match = _POLY_TOKEN.match(token)
        if not match or (match.group(2) is None and match.group(3) is None):
            raise UsageError(f"cannot parse polynomial term {token!r}")
        sign = -1 if match.group(1) == "-" else 1
        coeff = Fraction(match.group(2)) if match.group(2) else Fraction(1)
        exponent = 0
        if match.group(3):
            exponent = int(match.group(4)) if match.group(4) else 1
        total = total + sign * coeff * seq.X ** exponent
    return total


def cmd_expand(args) -> int:
    if args.mu < 1:
        raise UsageError("--mu must be a positive integer")
    q = parse_x_polynomial(args.polynomial)
    order = args.truncation if args.truncation is not None \
        else max(q.degree("x"), 0) + 1
    if order <= max(q.degree("x"), 0):
        raise UsageError("--truncation too small for the polynomial degree")
    ctx = AppellContext.create(args.mu, order)
    expansion = expand_in_appell(q, ctx)
    residual = q - reconstruct(expansion, ctx)
    payload = expansion.to_json_dict()
    payload["residual"] = residual.pretty()
    print(json.dumps(payload, **_JSON_COMPACT))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="belleuler",
        description="Exact Bell/Euler polynomial families and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="one family value")
    p_compute.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p_compute.add_argument("--n", required=True, type=int)
    p_compute.add_argument("--alpha", help="order, an integer or p/q")
    p_compute.add_argument("--k", type=int, help="block count for stirling2 families")
    p_compute.add_argument("--format", default="pretty",
                           choices=("json", "csv", "pretty"))
    p_compute.set_defaults(func=cmd_compute)

    p_table = sub.add_parser("table", help="values for n = 0..n_max")
    p_table.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p_table.add_argument("--n-max", required=True, type=int, dest="n_max")
    p_table.add_argument("--alpha", help="order, an integer or p/q")
    p_table.add_argument("--format", default="csv",
                         choices=("json", "csv", "pretty"))
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser(
        "verify", help="run identity checks; JSON reports on stdout")
    p_verify.add_argument("--id", action="append",
                          help="registry id (repeatable); the negative control "
                               "T4_4_literal only runs when named here")
    p_verify.add_argument("--all", action="store_true",
                          help="run every check except negative controls")
    p_verify.add_argument("--n-max", type=int, dest="n_max")
    p_verify.add_argument("--alphas", help="comma-separated integers or p/q")
    p_verify.add_argument("--parallel", action="store_true",
                          help="evaluate checks concurrently (same output)")
    p_verify.set_defaults(func=cmd_verify)

    p_expand = sub.add_parser(
        "expand", help="expand a polynomial in the order-mu Appell basis")
    p_expand.add_argument("--mu", required=True, type=int)
    p_expand.add_argument("--truncation", type=int,
                          help="series order override (default: degree + 1)")
    p_expand.add_argument("polynomial", help='literal such as "x^3 - 2/3"')
    p_expand.set_defaults(func=cmd_expand)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
