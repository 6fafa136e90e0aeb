"""Command-line surface.

Every subcommand prints one deterministic document to stdout (JSON
unless a delimited or b-file form is asked for) so runs can be diffed
byte for byte.  Exact values travel as strings: integers in decimal,
pi-linear values as "a*pi + b" next to a float approximation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .analysis import closed_form_zeros, evaluate, extrema, numeric_zeros
from .blockcount import sweep_oracle_vs_closed
from .documents import TriangleCache, build_document, serialize
from .errors import ConvergenceError, GroundSetTooLargeError, InvalidConfigError
from .orthocheck import Weight, gram_matrix
from .polyfamily import Family, P_FAMILY, build_definitional
from .verify import SUITES, run_suite

SCHEMA_VERSION = 1


def _family(args) -> Family:
    return Family(args.m, args.p)


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise InvalidConfigError(f"range {text!r} must look like 3..8")
    return int(lo), int(hi)


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _pi_fields(value) -> dict:
    return {"exact": str(value), "decimal": float(value)}


# ------------------------------------------------------------- subcommands

def cmd_triangle(args) -> int:
    family = _family(args)
    if args.cache_dir:
        doc = TriangleCache(args.cache_dir).document(family, args.max_n)
    else:
        doc = build_document(family, args.max_n)
    sys.stdout.write(serialize(doc, args.format))
    return 0


def cmd_export(args) -> int:
    code = cmd_triangle(args) if args.out is None else _export_to_file(args)
    return code


def _export_to_file(args) -> int:
    family = _family(args)
    if args.cache_dir:
        doc = TriangleCache(args.cache_dir).document(family, args.max_n)
    else:
        doc = build_document(family, args.max_n)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(serialize(doc, args.format))
    return 0


def cmd_poly(args) -> int:
    family = _family(args)
    poly = build_definitional(args.n, family)
    _emit({
        "schemaVersion": SCHEMA_VERSION,
        "kind": "polynomial",
        "m": family.m, "p": family.p, "n": args.n,
        "coeffs": [str(c) for c in poly.coeffs],
        "pretty": str(poly),
    })
    return 0


def cmd_eval(args) -> int:
    family = _family(args)
    poly = build_definitional(args.n, family)
    x = Fraction(args.x)
    value = evaluate(poly, x)
    _emit({
        "schemaVersion": SCHEMA_VERSION,
        "kind": "evaluation",
        "m": family.m, "p": family.p, "n": args.n,
        "x": str(x),
        "exact": str(value),
        "decimal": float(value),
    })
    return 0


def _closed_zero_exact(k: int, n: int) -> str:
    """Exact display form of cos(k pi/(n-1)) for the closed-form zeros."""
    ratio = Fraction(k, n - 1)
    named = {Fraction(0): "1", Fraction(1, 3): "1/2", Fraction(1, 2): "0",
             Fraction(2, 3): "-1/2", Fraction(1): "-1"}
    if ratio in named:
        return named[ratio]
    return f"cos({ratio}*pi)"


def cmd_zeros(args) -> int:
    family = _family(args)
    payload = {
        "schemaVersion": SCHEMA_VERSION,
        "kind": "zeros",
        "m": family.m, "p": family.p, "n": args.n,
    }
    if (family.m, family.p) == (2, 2) and args.method != "numeric" \
            and args.n >= 3:
        rs = closed_form_zeros(args.n)
        exact = ["-1"] + [_closed_zero_exact(k, args.n)
                          for k in range(args.n - 2, 0, -1)] + ["1"]
        payload["method"] = "closed-form"
        payload["roots"] = [
            {"exact": e, "decimal": r, "multiplicity": mult}
            for e, r, mult in zip(exact, rs.roots, rs.multiplicities)]
    else:
        rs = numeric_zeros(build_definitional(args.n, family), family)
        payload["method"] = "numeric"
        payload["roots"] = [{"decimal": r, "multiplicity": mult}
                            for r, mult in zip(rs.roots, rs.multiplicities)]
    _emit(payload)
    return 0


def cmd_extrema(args) -> int:
    poly = build_definitional(args.n, P_FAMILY)
    points = [{"theta": theta, "x": x, "value": evaluate(poly, float(x))}
              for theta, x in extrema(args.n)]
    _emit({
        "schemaVersion": SCHEMA_VERSION,
        "kind": "extrema",
        "m": 2, "p": 2, "n": args.n,
        "points": points,
    })
    return 0


def cmd_gram(args) -> int:
    family = _family(args)
    lo, hi = _parse_range(args.range)
    weight = Weight(args.weight)
    gm = gram_matrix((lo, hi), family, weight,
                     with_numeric=not args.no_numeric)
    entries = []
    for e in sorted(gm.entries(), key=lambda e: (e.n, e.m)):
        rec = {"n": e.n, "m": e.m, **_pi_fields(e.exact)}
        if e.numeric is not None:
            rec["numeric"] = e.numeric
        entries.append(rec)
    bands = {}
    summary = {}
    for offset, bp in sorted(gm.band_report().items()):
        bands[str(offset)] = {
            "uniform": bp.uniform,
            "value": _pi_fields(bp.value),
            "deviations": [{"n": n, "m": m, **_pi_fields(v)}
                           for n, m, v in bp.deviations],
        }
        if bp.uniform and not bp.value.is_zero():
            summary[str(offset)] = str(bp.value)
    _emit({
        "schemaVersion": SCHEMA_VERSION,
        "kind": "gram",
        "m": family.m, "p": family.p,
        "weight": weight.half_exponent,
        "range": [lo, hi],
        "entries": entries,
        "bands": bands,
        "bandSummary": summary,
    })
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite)
    sys.stdout.write(report.to_json())
    return report.exit_code


def cmd_oracle(args) -> int:
    try:
        checked, failures = sweep_oracle_vs_closed(args.max_ground, args.p_max)
    except GroundSetTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit({
        "schemaVersion": SCHEMA_VERSION,
        "kind": "oracle",
        "maxGround": args.max_ground,
        "pMax": args.p_max,
        "checked": checked,
        "mismatches": failures,
    })
    return 1 if failures else 0


# ------------------------------------------------------------------ wiring

def _add_family_flags(sub, default_m=2, default_p=2):
    sub.add_argument("--m", type=int, default=default_m,
                     help="extra-block size m (family parameter)")
    sub.add_argument("--p", type=int, default=default_p,
                     help="block size p (family parameter)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockcheb",
        description="Exact block-count Chebyshev-type polynomial toolkit")
    parser.add_argument("--version", action="version",
                        version=f"blockcheb {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    tri = subs.add_parser("triangle", help="print a coefficient triangle")
    _add_family_flags(tri)
    tri.add_argument("--max-n", type=int, required=True)
    tri.add_argument("--format", choices=("json", "csv", "bfile"),
                     default="json")
    tri.add_argument("--cache-dir", default=None)
    tri.set_defaults(fn=cmd_triangle)

    exp = subs.add_parser("export",
                          help="export a triangle (b-file by default)")
    _add_family_flags(exp)
    exp.add_argument("--max-n", type=int, required=True)
    exp.add_argument("--format", choices=("json", "csv", "bfile"),
                     default="bfile")
    exp.add_argument("--cache-dir", default=None)
    exp.add_argument("--out", default=None,
                     help="write to this file instead of stdout")
    exp.set_defaults(fn=cmd_export)

    pol = subs.add_parser("poly", help="print one polynomial row")
    _add_family_flags(pol)
    pol.add_argument("--n", type=int, required=True)
    pol.set_defaults(fn=cmd_poly)

    ev = subs.add_parser("eval", help="evaluate one row exactly")
    _add_family_flags(ev)
    ev.add_argument("--n", type=int, required=True)
    ev.add_argument("--x", required=True,
                    help="evaluation point, e.g. 1, -1/2, 0.25")
    ev.set_defaults(fn=cmd_eval)

    ze = subs.add_parser("zeros", help="real zeros of one row")
    _add_family_flags(ze)
    ze.add_argument("--n", type=int, required=True)
    ze.add_argument("--method", choices=("closed", "numeric"),
                    default="closed",
                    help="closed form is available for the (2,2) family")
    ze.set_defaults(fn=cmd_zeros)

    ex = subs.add_parser("extrema",
                         help="extreme points of a (2,2)-family row")
    ex.add_argument("--n", type=int, required=True)
    ex.set_defaults(fn=cmd_extrema)

    gr = subs.add_parser("gram", help="weighted Gram matrix and band report")
    _add_family_flags(gr)
    gr.add_argument("--weight", type=int, default=-1,
                    help="half-exponent q of the weight (1-x^2)^(q/2)")
    gr.add_argument("--range", default="3..8", help="row range, e.g. 3..8")
    gr.add_argument("--no-numeric", action="store_true",
                    help="skip the trapezoid cross-check column")
    gr.set_defaults(fn=cmd_gram)

    ve = subs.add_parser("verify", help="run verification suites")
    ve.add_argument("--suite", default="all",
                    choices=tuple(SUITES) + ("all",))
    ve.set_defaults(fn=cmd_verify)

    orc = subs.add_parser("oracle",
                          help="exhaustive enumeration vs closed form")
    orc.add_argument("--max-ground", type=int, default=10,
                     help="largest ground-set size n*p+m to enumerate")
    orc.add_argument("--p-max", type=int, default=4)
    orc.set_defaults(fn=cmd_oracle)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (InvalidConfigError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
