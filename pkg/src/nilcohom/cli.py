"""Command-line front end.

Exit codes: 0 success (a NOT_OBSTRUCTED verdict is a success), 2 usage
error, 3 validation error, 4 missing filling data.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import lie
from .cohomology import betti_profile
from .errors import MissingDegree, NilcohomError, UsageError
from .io import dump_lie_text, read_lie_file
from .obstruction import (
    FillingDegrees,
    alpha,
    compare_groups,
    default_filling_degrees,
    fmt_rational,
    lp_threshold,
    nk_constant,
)
from .rank1 import (
    Rank1Params,
    nk_rank1,
    rank1_row,
    rank1_table,
    row_to_json,
)


def resolve_source(spec: str):
    """``family:n`` shorthand or a path to a structure-constant file."""
    name, sep, n = spec.partition(":")
    if sep and not Path(spec).exists():
        try:
            n = int(n)
        except ValueError:
            raise UsageError(f"bad family spec {spec!r}; expected name:n") from None
        return lie.catalog(name, n)
    return read_lie_file(spec)


def _source_from_args(args):
    if args.file:
        return read_lie_file(args.file)
    if args.family:
        if args.n is None:
            raise UsageError("--family needs --n")
        return lie.catalog(args.family, args.n)
    if args.source:
        return resolve_source(args.source)
    raise UsageError("give --family NAME --n N, --file PATH, or a SOURCE argument")


def _as_algebra(g):
    return g.algebra if isinstance(g, lie.GradedLieAlgebra) else g


def parse_fill(text: str | None) -> dict:
    """``j=deg,j=deg`` -> {j: Fraction}."""
    out = {}
    if not text:
        return out
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        j, sep, deg = item.partition("=")
        if not sep:
            raise UsageError(f"bad filling degree {item!r}; expected j=deg")
        try:
            out[int(j)] = Fraction(deg)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad filling degree {item!r}; expected j=deg") from None
    return out


def _approx(x) -> str:
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x} (≈{float(x):.4f})"
    return "-" if x is None else str(x)


def report(command: str, inputs: dict, result, warnings=()) -> dict:
    return {"command": command, "inputs": inputs, "result": result, "warnings": list(warnings)}


# commands return (report dict, text rendering)

def cmd_betti(args):
    g = _as_algebra(_source_from_args(args))
    prof = betti_profile(g)
    rec = prof.to_record()
    text = "\n".join([
        f"algebra: {g.label} (dim {g.dim})",
        "betti:  " + " ".join(map(str, prof.betti)),
        "dims:   " + " ".join(map(str, prof.dims)),
        "ranks:  " + " ".join(map(str, prof.ranks)),
    ])
    return report("betti", _inputs(args), rec), text


def cmd_gr(args):
    g = _source_from_args(args)
    gr = lie.carnotification(g)
    dump = dump_lie_text(gr)
    result = {
        "label": gr.label,
        "dim": gr.dim,
        "layer_dims": list(gr.layer_dims),
        "structure_constants": dump,
    }
    text = f"layer dims: {' '.join(map(str, gr.layer_dims))}\n" + dump.rstrip("\n")
    return report("gr", _inputs(args), result), text


def cmd_series(args):
    g = _as_algebra(_source_from_args(args))
    series = lie.lower_central_series(g)
    z = lie.center(g)
    result = {
        "label": g.label,
        "dim": g.dim,
        "series_dims": [s.dim for s in series],
        "class": len(series) - 1,
        "center_dim": z.dim,
    }
    text = "\n".join([
        f"algebra: {g.label} (dim {g.dim})",
        "lower central series dims: " + " ".join(str(s.dim) for s in series),
        f"nilpotency class: {len(series) - 1}",
        f"center dim: {z.dim}",
    ])
    return report("series", _inputs(args), result), text


def cmd_product(args):
    a = resolve_source(args.a)
    b = resolve_source(args.b)
    if args.central:
        g = lie.central_product(a, b, Fraction(args.scaling))
    else:
        g = lie.direct_product(a, b)
    dump = dump_lie_text(g)
    return report("product", _inputs(args), {"label": g.label, "dim": g.dim, "structure_constants": dump}), dump.rstrip("\n")


def _filling_for(g, explicit: dict, default_dehn: bool, exact: bool, flag: str, k: int) -> FillingDegrees:
    degrees = {}
    if default_dehn:
        degrees.update(default_filling_degrees(g).degrees)
    degrees.update(explicit)
    for j in range(2, k + 1):
        if j not in degrees:
            raise MissingDegree(j, hint=f"supply it with {flag} {j}=DEG" + ("" if j > 2 else " or --default-dehn"))
    return FillingDegrees(degrees, exact=exact)


def cmd_obstruct(args):
    a = resolve_source(args.a)
    b = resolve_source(args.b)
    fa = _filling_for(a, parse_fill(args.fill_a), args.default_dehn, args.exact_filling, "--fill-a", args.k)
    fb = _filling_for(b, parse_fill(args.fill_b), args.default_dehn, args.exact_filling, "--fill-b", args.k)
    rep = compare_groups(a, b, args.k, fa, fb, d_override=Fraction(args.growth) if args.growth else None)
    result = rep.to_dict()
    lines = [
        f"A: {rep.a.label} dim {rep.a.dim} class {rep.a.nilpotency_class} gr layers {list(rep.a.layer_dims)}",
        f"B: {rep.b.label} dim {rep.b.dim} class {rep.b.nilpotency_class} gr layers {list(rep.b.layer_dims)}",
        f"betti A: {' '.join(map(str, rep.a.betti.betti))}",
        f"betti B: {' '.join(map(str, rep.b.betti.betti))}",
        f"growth convention: {rep.growth_convention}",
        "trace:",
    ]
    for s in rep.trace:
        lines.append(f"  {s.name:<20} {_approx(s.value):<22} {s.formula}")
    lines.append(f"verdict at k={rep.k}: {rep.verdict}")
    lines.append(f"obstructed for every p > {_approx(rep.p_threshold)}")
    lines.extend(f"warning: {w}" for w in rep.warnings)
    return report("obstruct", _inputs(args), result, rep.warnings), "\n".join(lines)


def cmd_rank1(args):
    p = Rank1Params(args.field, args.n)
    if args.table:
        rows = rank1_table(p)
        result = {"field": p.field, "n": p.n, "d": p.d, "delta": fmt_rational(p.delta), "rows": [row_to_json(r) for r in rows]}
        header = f"{'k':>3}  {'N_k':<6} {'confdim':<8} {'pansu':<20} {'induction':<20} {'vanishing':<20} status"
        lines = [f"K={p.field} n={p.n} d={p.d} delta={p.delta}", header]
        for r in rows:
            lines.append(
                f"{r['k']:>3}  {_approx(r['N_k']):<6} {r['confdim']:<8} {_approx(r['pansu_bound']):<20} "
                f"{_approx(r['induction_range']):<20} {_approx(r['vanishing']):<20} {r['status']}"
            )
        return report("rank1", _inputs(args), result), "\n".join(lines)
    if args.k is None:
        raise UsageError("rank1 needs --k K or --table")
    nk_rank1(p, args.k)  # unknown filling degrees are an error here, not a blank
    row = rank1_row(p, args.k)
    result = {"field": p.field, "n": p.n, **row_to_json(row)}
    text = "\n".join(f"{key}: {_approx(v)}" for key, v in {"field": p.field, "n": p.n, **row}.items())
    return report("rank1", _inputs(args), result), text


def cmd_constants(args):
    f = FillingDegrees(parse_fill(args.degrees), exact=True)
    k = args.k
    nk = nk_constant(f, k)
    N = Fraction(args.N) if args.N else nk
    result = {"k": k, "N_k": fmt_rational(nk), "N": fmt_rational(N)}
    if k >= 2:
        M = alpha(N, k - 1, f)
        result["alpha_{k-1}(N)"] = fmt_rational(M)
        if args.d:
            result["p_threshold"] = fmt_rational(lp_threshold(Fraction(args.d), k, M))
    text = "\n".join(f"{key}: {v}" for key, v in result.items())
    return report("constants", _inputs(args), result), text


def _inputs(args) -> dict:
    skip = {"func", "json", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit a JSON report")

    parser = argparse.ArgumentParser(
        prog="nilcohom",
        description="Betti numbers of nilpotent Lie algebras and L^p measure-equivalence obstruction constants.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def source_args(sp):
        sp.add_argument("source", nargs="?", help="family:n or a structure-constant file")
        sp.add_argument("--family", help="filiform-l, model-filiform, heisenberg, abelian")
        sp.add_argument("--n", type=int)
        sp.add_argument("--file")

    sp = sub.add_parser("betti", parents=[common], help="Betti numbers of a nilpotent Lie algebra")
    source_args(sp)
    sp.set_defaults(func=cmd_betti)

    sp = sub.add_parser("gr", parents=[common], help="associated Carnot graded algebra")
    source_args(sp)
    sp.set_defaults(func=cmd_gr)

    sp = sub.add_parser("series", parents=[common], help="lower central series, class and center")
    source_args(sp)
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("product", parents=[common], help="direct or central product of two algebras")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--central", action="store_true", help="identify the one-dimensional centers")
    sp.add_argument("--scaling", default="1", help="center identification factor (rational)")
    sp.set_defaults(func=cmd_product)

    sp = sub.add_parser("obstruct", parents=[common], help="L^p measure-equivalence obstruction report")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--fill-a", help="filling degrees of A as j=deg,...")
    sp.add_argument("--fill-b", help="filling degrees of B as j=deg,...")
    sp.add_argument("--default-dehn", action="store_true", help="use class+1 for j=2 on both sides")
    sp.add_argument("--exact-filling", action="store_true", help="filling functions are polynomial, not just bounded")
    sp.add_argument("--growth", help="override the growth degree d")
    sp.set_defaults(func=cmd_obstruct)

    sp = sub.add_parser("rank1", parents=[common], help="rank-one lattice ranges")
    sp.add_argument("--field", required=True, help="R, C or H")
    sp.add_argument("--n", type=int, required=True)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--k", type=int)
    g.add_argument("--table", action="store_true")
    sp.set_defaults(func=cmd_rank1)

    sp = sub.add_parser("constants", parents=[common], help="N_k, alpha_{k-1}(N) and the threshold")
    sp.add_argument("--degrees", default="", help="filling degrees j=deg,...")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--N", help="N (defaults to N_k)")
    sp.add_argument("--d", help="growth degree; adds p_threshold")
    sp.set_defaults(func=cmd_constants)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rep, text = args.func(args)
    except NilcohomError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return exc.exit_status
    if getattr(args, "json", False):
        print(json.dumps(rep, sort_keys=True, indent=2))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
