"""Command-line front end.

Inputs are either Weyl windows (--w/--v, signed comma lists) or shapes
(--lambda/--mu), one style per invocation.  Exit codes: 0 success, 1
cross-check mismatch, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import hecke, restriction
from .diagrams import (
    boxset_to_json,
    boxset_to_tikz,
    enumerate_eyd,
    geometry_of,
)
from .ring import format_poly, poly_to_json
from .shapes import (
    contains,
    parse_shape,
    perm_of,
    perm_of_strict,
    shape_of,
)
from .tableaux import enumerate_svt, svt_to_json
from .weyl import RootSystem, format_weight, parse_window

EMITS = ("class", "hilbert", "hilbert-poly", "mult", "diagrams", "tableaux", "character")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="schubertk",
        description="Restrictions of Schubert classes to fixed points in "
        "equivariant K-theory of (isotropic) Grassmannians.",
    )
    p.add_argument("--type", required=True, choices=["A", "B", "C", "D"], dest="kind")
    p.add_argument("--n", "--rank", type=int, required=True, dest="rank",
                   help="rank (n for type A)")
    p.add_argument("--d", type=int, default=None, help="parabolic index (type A only)")
    p.add_argument("--w", default=None, help="window for w, e.g. 1,3,5,2,4,6,7")
    p.add_argument("--v", default=None, help="window for v")
    p.add_argument("--lambda", dest="lam", default=None, help="shape for w, e.g. 2,1")
    p.add_argument("--mu", default=None, help="shape for v")
    p.add_argument("--backend", choices=list(restriction.BACKENDS), default="eyd")
    p.add_argument("--emit", choices=list(EMITS), default="class")
    p.add_argument("--format", choices=["text", "json", "latex"], default="text",
                   dest="fmt")
    p.add_argument("--trunc", type=int, default=3, help="character truncation degree")
    p.add_argument("--count-only", action="store_true", dest="count_only")
    p.add_argument("--check", action="store_true",
                   help="run all applicable backends and compare")
    p.add_argument("--reduced-only", action="store_true", dest="reduced_only")
    p.add_argument("--cap", type=int, default=hecke.DEFAULT_CAP,
                   help="hecke subsequence word-length cap")
    p.add_argument("--threads", type=int, default=1)
    return p


def _resolve_inputs(args):
    rstype = RootSystem(args.kind, args.rank)
    d = args.d
    if rstype.kind == "A":
        if d is None:
            raise ValueError("type A requires --d")
    elif d is not None:
        raise ValueError("--d applies to type A only")
    windows = args.w is not None or args.v is not None
    shapes = args.lam is not None or args.mu is not None
    if windows and shapes:
        raise ValueError("give either windows (--w/--v) or shapes (--lambda/--mu)")
    if not windows and not shapes:
        raise ValueError("missing inputs: --w/--v or --lambda/--mu")
    if windows:
        if args.w is None or args.v is None:
            raise ValueError("both --w and --v are required")
        w = parse_window(rstype, args.w)
        v = parse_window(rstype, args.v)
    else:
        if args.lam is None or args.mu is None:
            raise ValueError("both --lambda and --mu are required")
        lam, mu = parse_shape(args.lam), parse_shape(args.mu)
        if rstype.kind == "A":
            w, v = perm_of(lam, d, rstype.rank), perm_of(mu, d, rstype.rank)
        else:
            w, v = perm_of_strict(lam, rstype), perm_of_strict(mu, rstype)
    dd = d if rstype.kind == "A" else rstype.rank
    lam, mu = shape_of(w, dd), shape_of(v, dd)
    return rstype, dd, w, v, lam, mu


def _base_doc(rstype, d, w, v, lam, mu):
    return {
        "type": rstype.kind,
        "rank": rstype.rank,
        "d": d if rstype.kind == "A" else None,
        "w": list(w.window),
        "v": list(v.window),
        "lambda": list(lam),
        "mu": list(mu),
        "status": "on-variety" if contains(lam, mu) else "off-variety",
    }


def _latex_class(rstype, d, w, v, backend):
    from .weyl import length

    terms = restriction.pullback_terms(rstype, d, w, v, backend=backend)
    if not terms:
        return "0"
    sign = "-" if length(w) % 2 else ""
    rendered = []
    for exps in terms:
        factors = "".join(
            rf"\left(e^{{{format_weight(g, latex=True)}}}-1\right)" for g in exps
        )
        rendered.append(factors if factors else "1")
    joiner = " - " if sign else " + "
    return sign + joiner.join(rendered)


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        rstype, d, w, v, lam, mu = _resolve_inputs(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.check:
            return _run_check(args, rstype, d, w, v, lam, mu)
        return _run_emit(args, rstype, d, w, v, lam, mu)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _run_check(args, rstype, d, w, v, lam, mu) -> int:
    report = restriction.check_backends(rstype, d, w, v, cap=args.cap)
    names = [name for name, _ in report.classes]
    if report.agree:
        print(f"{len(names)} backends agree: {', '.join(names)}")
        return 0
    print(f"backend mismatch: {report.first_diff}")
    return 1


def _run_emit(args, rstype, d, w, v, lam, mu) -> int:
    doc = _base_doc(rstype, d, w, v, lam, mu)
    emit, fmt = args.emit, args.fmt
    geometry = geometry_of(rstype)

    if emit == "class":
        cls = restriction.pullback(
            rstype, d, w, v, backend=args.backend, cap=args.cap, threads=args.threads
        )
        if fmt == "json":
            doc["class"] = poly_to_json(cls.value)
            print(json.dumps(doc, sort_keys=True))
        elif fmt == "latex":
            print(_latex_class(rstype, d, w, v, args.backend))
        else:
            print(format_poly(cls.value))
        return 0

    if emit in ("hilbert", "hilbert-poly", "mult"):
        data = restriction.hilbert_data(rstype, d, w, v)
        if fmt == "json":
            doc["hilbert"] = {"d_w": data.d_w, "m": list(data.m)}
            doc["multiplicity"] = data.multiplicity
            if emit == "hilbert-poly":
                coeffs = restriction.hilbert_polynomial_coeffs(data)
                doc["hilbert_polynomial"] = [str(c) for c in coeffs]
            print(json.dumps(doc, sort_keys=True))
            return 0
        if emit == "mult":
            print(data.multiplicity)
            return 0
        if emit == "hilbert":
            print(f"status = {doc['status']}")
            if rstype.kind == "B":
                print(f"(computed through the D_{rstype.rank + 1} identification)")
            print(f"d_w = {data.d_w}")
            print(f"m = {list(data.m)}")
            print(f"mult = {data.multiplicity}")
            print(f"H(t) = {restriction.hilbert_series_str(data)}")
            return 0
        parts = []
        for k, mk in enumerate(data.m):
            if mk == 0:
                continue
            K = data.d_w - k
            body = f"{mk}*binom(n+{K - 1},{K - 1})" if K > 0 else f"{mk}*[n=0]"
            sign = "-" if k % 2 else ("+" if parts else "")
            parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
        print(f"h(n) = {' '.join(parts) if parts else '0'}")
        coeffs = restriction.hilbert_polynomial_coeffs(data)
        print(f"coefficients (ascending) = [{', '.join(str(c) for c in coeffs)}]")
        return 0

    if emit == "diagrams":
        items = enumerate_eyd(lam, mu, geometry, reduced_only=args.reduced_only)
        if args.count_only:
            print(len(items))
            return 0
        if fmt == "json":
            doc["diagrams"] = [boxset_to_json(C) for C in items]
            print(json.dumps(doc, sort_keys=True))
        elif fmt == "latex":
            for C in items:
                print(boxset_to_tikz(C))
        else:
            for C in items:
                print(" ".join(f"({i},{j})" for i, j in C.sorted_boxes()) or "(empty)")
        return 0

    if emit == "tableaux":
        entry_bound = d if rstype.kind == "A" else None
        items = enumerate_svt(
            lam, mu, geometry, d=entry_bound, single_valued_only=args.reduced_only
        )
        if args.count_only:
            print(len(items))
            return 0
        if fmt == "json":
            doc["tableaux"] = [svt_to_json(T) for T in items]
            print(json.dumps(doc, sort_keys=True))
        else:
            for T in items:
                cells = " ".join(
                    f"({i},{j}):{{{','.join(map(str, es))}}}" for (i, j), es in T.cells
                )
                print(cells or "(empty)")
        return 0

    # character
    if rstype.kind == "B":
        series = restriction.graded_character_b_via_d(w, v, args.trunc)
        note = f" (through D_{rstype.rank + 1})"
    else:
        series = restriction.graded_character(rstype, d, w, v, args.trunc)
        note = ""
    dims = series.dims()
    if fmt == "json":
        doc["character"] = {
            "trunc": series.trunc,
            "dims": dims,
            "slices": [poly_to_json(s) for s in series.slices],
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        print(f"graded character up to degree {series.trunc}{note}")
        for i, s in enumerate(series.slices):
            print(f"degree {i}: dim = {dims[i]}; {format_poly(s)}")
    return 0


def main():  # pragma: no cover
    sys.exit(run(sys.argv[1:]))
