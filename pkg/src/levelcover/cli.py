"""Command-line entry point: construct / check / exact / bounds / turan / report.

All JSON outputs carry a top-level {"schema": "levelcover/1"} marker.
Exit codes: 0 success, 1 domain errors (invalid n, k, l and friends),
2 I/O errors.  Error text goes to stderr, never stdout.  Identical
arguments produce byte-identical output; the LEVELCOVER_THREADS
environment variable caps the worker count of the engines (which are
deterministic regardless of its value).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import bounds as bounds_mod
from . import constructions as cons
from . import exact as exact_mod
from .combinatorics import binomial, family_to_json
from .domination import check_domination, pair_from_json, pair_to_json

SCHEMA = "levelcover/1"


class DomainError(ValueError):
    pass


def _threads_from_env() -> int:
    raw = os.environ.get("LEVELCOVER_THREADS", "1")
    try:
        v = int(raw)
    except ValueError:
        raise DomainError(f"LEVELCOVER_THREADS must be an integer, got {raw!r}")
    if v < 1:
        raise DomainError(f"LEVELCOVER_THREADS must be >= 1, got {v}")
    return v


def _emit(payload: dict, out_path: str | None) -> None:
    text = json.dumps(payload) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _check_levels(n: int, k: int, l: int) -> None:
    if not n > k > l >= 1:
        raise DomainError(f"need n > k > l >= 1, got n={n} k={k} l={l}")


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _cmd_construct(args) -> int:
    n, k, l = args.n, args.k, args.l
    _check_levels(n, k, l)
    method = args.method
    expected = {"gk1": (None, 1), "gk2": (None, 2), "g53": (5, 3), "g43": (4, 3)}
    want_k, want_l = expected[method]
    if want_k is not None and k != want_k:
        raise DomainError(f"method {method} requires k={want_k}, got {k}")
    if l != want_l:
        raise DomainError(f"method {method} requires l={want_l}, got {l}")

    cover = None
    if method == "gk1":
        pair = cons.gk1_construct(n, k)
    elif method == "gk2":
        pair, cover = cons.gk2_with_cover(n, k)
    elif method == "g53":
        pair, cover = cons.g53_with_cover(n)
    else:
        pair, cover = cons.g43_with_cover(n)

    payload = {"schema": SCHEMA, **pair_to_json(pair)}
    if args.emit_cover_stats:
        if cover is None:
            payload["cover_stats"] = None
        else:
            payload["cover_stats"] = {
                "N": cover.n_points,
                "m": cover.m,
                "blocks_chosen": len(cover.chosen),
                "ratio": _frac_str(cover.ratio),
                "ratio_float": float(cover.ratio),
            }
    _emit(payload, args.out)
    return 0


def _cmd_check(args) -> int:
    with open(args.pair) as fh:
        pair = pair_from_json(json.load(fh))
    result = check_domination(pair, cap=args.cap)
    payload = {
        "schema": SCHEMA,
        "n": pair.n,
        "k": pair.k,
        "l": pair.l,
        "dominating": result.dominating,
        "truncated": result.truncated,
        "violations": [
            {"side": v.side, "witness": list(v.witness)} for v in result.violations
        ],
    }
    _emit(payload, args.out)
    return 0


def _cmd_exact(args) -> int:
    _check_levels(args.n, args.k, args.l)
    res = exact_mod.exact_gamma(args.n, args.k, args.l, budget=args.node_limit)
    payload = {
        "schema": SCHEMA,
        "n": args.n,
        "k": args.k,
        "l": args.l,
        "status": res.status,
        "lower": res.lower,
        "upper": res.upper,
        "nodes": res.nodes,
        "certificate": pair_to_json(res.certificate) if res.certificate else None,
    }
    if args.cert_out and res.certificate:
        with open(args.cert_out, "w") as fh:
            json.dump({"schema": SCHEMA, **pair_to_json(res.certificate)}, fh)
            fh.write("\n")
    _emit(payload, args.out)
    return 0


def _cmd_turan(args) -> int:
    if not args.k > args.l >= 1 or args.n < args.k:
        raise DomainError(f"need n >= k > l >= 1, got n={args.n} k={args.k} l={args.l}")
    res = exact_mod.exact_turan_ex(args.n, args.k, args.l, budget=args.node_limit)
    payload = {
        "schema": SCHEMA,
        "n": args.n,
        "k": args.k,
        "l": args.l,
        "status": res.status,
        "lower": res.lower,
        "upper": res.upper,
        "nodes": res.nodes,
        "witness": family_to_json(res.witness, args.n) if res.witness else None,
    }
    _emit(payload, args.out)
    return 0


def _cmd_bounds(args) -> int:
    with open(args.pair) as fh:
        pair = pair_from_json(json.load(fh))
    report = bounds_mod.bound_report(pair, s=args.s)
    if args.format == "json":
        _emit({"schema": SCHEMA, **bounds_mod.report_to_dict(report)}, args.out)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(bounds_mod.REPORT_CSV_COLUMNS)
        writer.writerow(bounds_mod.report_to_row(report))
        text = buf.getvalue()
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    return 0


REPORT_COLUMNS = [
    "method", "n", "k", "l", "lsets", "ksets", "size",
    "scale", "target_coeff", "target_coeff_float", "observed_float",
    "residual", "cover_blocks", "cover_N", "cover_m", "cover_ratio",
    "cover_ratio_float",
]


def _report_row(method: str, n: int) -> list[str]:
    cover = None
    if method == "gk1":
        raise DomainError("report supports gk2, g53 and g43 methods")
    if method == "gk2":
        raise AssertionError  # handled by caller with explicit k
    if method == "g53":
        pair, cover = cons.g53_with_cover(n)
        scale, coeff = binomial(n, 3), Fraction(1, 3)
    else:
        pair, cover = cons.g43_with_cover(n)
        scale, coeff = binomial(n, 3), Fraction(17, 27)
    return _format_report_row(method, pair, cover, scale, coeff)


def _format_report_row(method, pair, cover, scale, coeff) -> list[str]:
    size = pair.size()
    observed = Fraction(size, scale) if scale else Fraction(0)
    residual = Fraction(size) - coeff * scale
    return [
        method,
        str(pair.n),
        str(pair.k),
        str(pair.l),
        str(len(pair.lsets)),
        str(len(pair.ksets)),
        str(size),
        str(scale),
        _frac_str(coeff),
        repr(float(coeff)),
        repr(float(observed)),
        _frac_str(residual),
        str(len(cover.chosen)) if cover else "",
        str(cover.n_points) if cover else "",
        str(cover.m) if cover else "",
        _frac_str(cover.ratio) if cover else "",
        repr(float(cover.ratio)) if cover else "",
    ]


def _cmd_report(args) -> int:
    methods = [m for m in args.methods.split(",") if m]
    ns = [int(tok) for tok in args.n.split(",") if tok] if args.n else []
    for m in methods:
        if m not in ("gk2", "g53", "g43"):
            raise DomainError(f"unknown report method {m!r}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_COLUMNS)
    for n in ns:
        for method in methods:
            if method == "gk2":
                if args.k is None:
                    raise DomainError("gk2 report rows need --k")
                pair, cover = cons.gk2_with_cover(n, args.k)
                row = _format_report_row(
                    "gk2", pair, cover, n * n, bounds_mod.gk2_coeff(args.k)
                )
            else:
                row = _report_row(method, n)
            writer.writerow(row)
    text = buf.getvalue()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="levelcover",
        description="Two-sided covering toolkit for bipartite level graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="generate a dominating pair")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--method", choices=["gk1", "gk2", "g53", "g43"], required=True)
    p.add_argument("--out")
    p.add_argument("--emit-cover-stats", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("check", help="verify a dominating pair file")
    p.add_argument("--pair", required=True)
    p.add_argument("--cap", type=int, default=100)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("exact", help="exact minimum dominating set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--node-limit", type=int, default=exact_mod.DEFAULT_BUDGET)
    p.add_argument("--cert-out")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("turan", help="exact hypergraph Turan maximum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--node-limit", type=int, default=exact_mod.DEFAULT_BUDGET)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_turan)

    p = sub.add_parser("bounds", help="inequality report for a pair file")
    p.add_argument("--pair", required=True)
    p.add_argument("--s", type=int, default=10)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("report", help="construction size table over a range of n")
    p.add_argument("--methods", required=True, help="comma list: gk2,g53,g43")
    p.add_argument("--n", default="", help="comma list of n values")
    p.add_argument("--k", type=int, default=None, help="k for gk2 rows")
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _threads_from_env()
        return args.func(args)
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
