"""Command-line front end.

Exit codes: 0 ok, 1 a catalog check failed, 2 parse error, 3 range or
precondition error, 4 capability error, 5 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from relhull import catalog
from relhull.cartesian import (
    CartesianGrid,
    ExponentSet,
    dual_twist,
    eval_code,
    footprint_bound,
    hyperbolic,
    hyperbolic_dual,
    is_decreasing,
)
from relhull.codes import min_distance
from relhull.errors import DegenerateDelta, ParseError, RelHullError
from relhull.field import gf
from relhull.hull import (
    DEFAULT_PERMUTATION_TRIALS,
    hull_dim,
    increase_to_full,
    reduce_to,
    set_hull_dim,
)
from relhull.io import CodePairFile, code_to_json, load, parse_element
from relhull.quantum import css, css_with_target_c, hermitian, impure_pair


def _emit(args, obj, text: str) -> None:
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def _trace_table(trace) -> str:
    lines = [f"initial hull dim {trace.initial_dim}"]
    for i, s in enumerate(trace.steps, 1):
        scalar = "" if s.scalar is None else f" by {s.scalar}"
        coords = ",".join(map(str, s.coordinates))
        lines.append(f"  step {i}: {s.kind} ({coords}){scalar} -> hull dim {s.hull_dim_after}")
    if not trace.steps:
        lines.append("  (no steps)")
    return "\n".join(lines)


def cmd_hull(args) -> int:
    f = load(args.file)
    f.require("c1", "c2")
    rep = hull_dim(f.c1, f.c2, args.galois)
    _emit(
        args,
        rep.to_json(),
        f"dim hull = {rep.dim_hull}, bounds [{rep.lower_bound},{rep.upper_bound}], rank = {rep.rank_product}",
    )
    return 0


def cmd_reduce(args) -> int:
    f = load(args.file)
    f.require("c1", "c2")
    cur = hull_dim(f.c1, f.c2, args.galois).dim_hull
    target = args.to if args.to is not None else cur - args.steps
    trace = reduce_to(f.c1, f.c2, target, args.galois)
    out = trace.to_json()
    out["final"] = code_to_json(trace.final)
    _emit(args, out, _trace_table(trace))
    return 0


def cmd_increase(args) -> int:
    f = load(args.file)
    f.require("c1", "c2")
    found = increase_to_full(f.c1, f.c2, seed=args.seed, max_trials=args.trials)
    if found is None:
        _emit(args, {"found": False}, "no witness found (not a proof that none exists)")
        return 0
    code, m = found
    _emit(
        args,
        {"found": True, "map": m.to_json(), "final": code_to_json(code)},
        f"witness lambda={list(m.lam)} sigma={list(m.sigma)}; hull dim now {f.c1.k}",
    )
    return 0


def cmd_set_hull(args) -> int:
    f = load(args.file)
    f.require("c1", "c2")
    trace = set_hull_dim(f.c1, f.c2, args.to, seed=args.seed, max_trials=args.trials)
    out = trace.to_json()
    out["final"] = code_to_json(trace.final)
    _emit(args, out, _trace_table(trace))
    return 0


def cmd_css(args) -> int:
    f = load(args.file)
    if args.hermitian:
        f.require("c1")
        p = hermitian(f.c1)
        _emit(args, p.to_json(), f"{p} pure={p.pure} slack={p.singleton_slack}")
        return 0
    f.require("c1", "c2")
    if args.sweep:
        rep = hull_dim(f.c1, f.c2)
        objs, lines = [], []
        for c in range(rep.rank_product, f.c1.k - rep.lower_bound + 1):
            try:
                _, p = css_with_target_c(f.c1, f.c2, c)
            except DegenerateDelta as exc:
                objs.append({"c": c, "k": exc.kappa, "d": None})
                lines.append(f"c={c}: kappa={exc.kappa}, delta undefined (both differences empty)")
                continue
            objs.append(p.to_json())
            lines.append(f"c={c}: {p} pure={p.pure}")
        _emit(args, objs, "\n".join(lines))
        return 0
    if args.target_c is not None:
        _, p = css_with_target_c(f.c1, f.c2, args.target_c)
    else:
        p = css(f.c1, f.c2)
    _emit(args, p.to_json(), f"{p} pure={p.pure} slack={p.singleton_slack}")
    return 0


def cmd_hermitian(args) -> int:
    args.hermitian = True
    return cmd_css(args)


def _grid_from_args(args, f: CodePairFile | None) -> CartesianGrid:
    if f is not None and f.grid is not None:
        return f.grid
    if args.q is None or args.m is None:
        raise ParseError("give an input file with a grid, or --q and --m")
    field = gf(args.q)
    if args.factors:
        try:
            factors = json.loads(args.factors)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad --factors: {exc}") from exc
        return CartesianGrid(field, tuple(tuple(parse_element(field, x) for x in a) for a in factors))
    return CartesianGrid.full(field, args.m)


def cmd_cartesian(args) -> int:
    f = load(args.file) if args.file else None
    grid = _grid_from_args(args, f)
    if args.impure:
        if f is None:
            raise ParseError("--impure needs an input file with M1 and M2")
        f.require("M1", "M2")
        p = impure_pair(f.M1, f.M2, grid)
        _emit(args, p.to_json(), f"{p} pure={p.pure}")
        return 0
    if args.hyperbolic is not None:
        M = hyperbolic(args.hyperbolic, grid)
        Md = hyperbolic_dual(args.hyperbolic, grid)
        _emit(
            args,
            {"H": M.to_json(), "H_dual": Md.to_json()},
            f"H_{args.hyperbolic} = {M} ({len(M)})\nH_{args.hyperbolic}^⊥ = {Md} ({len(Md)})",
        )
        return 0
    if args.monomials:
        M = ExponentSet.parse(args.monomials, grid.m)
    elif f is not None and f.M1 is not None:
        M = f.M1
    else:
        raise ParseError("give --monomials, --hyperbolic or a file with M1")
    code = eval_code(M, grid)
    out = {
        "n": code.n,
        "k": code.k,
        "footprint_bound": footprint_bound(M, grid),
        "decreasing": is_decreasing(M),
    }
    if args.distance:
        out["d"] = min_distance(code)
    text = f"[{code.n},{code.k}] code, footprint bound {out['footprint_bound']}, decreasing {out['decreasing']}"
    if args.distance:
        text += f", d = {out['d']}"
    _emit(args, out, text)
    return 0


def cmd_twist(args) -> int:
    f = load(args.file) if args.file else None
    grid = _grid_from_args(args, f)
    t = dual_twist(args.d, grid)
    _emit(args, t.to_json(), f"lambda = {list(t.lam)} verified={t.verified} ({t.method})")
    return 0


def cmd_examples(args) -> int:
    if args.list:
        _emit(args, list(catalog.EXAMPLES), "\n".join(f"{k}: {v[0]}" for k, v in catalog.EXAMPLES.items()))
        return 0
    ids = args.only or list(catalog.EXAMPLES)
    for i in ids:
        if i not in catalog.EXAMPLES:
            raise ParseError(f"unknown example id {i!r}")
    results = [catalog.run(i) for i in ids]
    _emit(
        args,
        [r.to_json() for r in results],
        "\n".join(f"{'PASS' if r.passed else 'FAIL'}  {r.id}: {r.detail}" for r in results),
    )
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="relhull", description="Relative hulls of linear codes.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, file=True, optional_file=False):
        sp = sub.add_parser(name, help=help_)
        if file:
            sp.add_argument("file", nargs="?" if optional_file else None, help="code-pair JSON file")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=fn)
        return sp

    sp = add("hull", cmd_hull, "relative hull dimension and bounds")
    sp.add_argument("--galois", type=int, default=0, metavar="E")

    sp = add("reduce", cmd_reduce, "lower the hull dimension step by step")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--to", type=int)
    g.add_argument("--steps", type=int)
    sp.add_argument("--galois", type=int, default=0, metavar="E")

    for name, fn, help_ in (
        ("increase", cmd_increase, "raise the hull to all of C1"),
        ("set-hull", cmd_set_hull, "move the hull dimension to a target"),
    ):
        sp = add(name, fn, help_)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--trials", type=int, default=DEFAULT_PERMUTATION_TRIALS)
        if name == "set-hull":
            sp.add_argument("--to", type=int, required=True)

    sp = add("css", cmd_css, "CSS (or Hermitian) quantum code parameters")
    sp.add_argument("--target-c", type=int)
    sp.add_argument("--sweep", action="store_true", help="every reachable c")
    sp.add_argument("--hermitian", action="store_true")

    add("hermitian", cmd_hermitian, "Hermitian construction parameters")

    for name, fn, help_ in (
        ("cartesian", cmd_cartesian, "monomial Cartesian codes"),
        ("twist", cmd_twist, "twist vector of the hyperbolic dual"),
    ):
        sp = add(name, fn, help_, optional_file=True)
        sp.add_argument("--q", type=int)
        sp.add_argument("--m", type=int)
        sp.add_argument("--factors", help="JSON list of factor element lists")
        if name == "cartesian":
            sp.add_argument("--monomials", nargs="+")
            sp.add_argument("--hyperbolic", type=int, metavar="D")
            sp.add_argument("--distance", action="store_true", help="also enumerate the minimum distance")
            sp.add_argument("--impure", action="store_true", help="impure pair from M1, M2 in the file")
        else:
            sp.add_argument("--d", type=int, required=True)

    sp = add("examples", cmd_examples, "re-run the worked examples", file=False)
    sp.add_argument("--list", action="store_true")
    sp.add_argument("--only", nargs="+", metavar="ID")

    # the seed is accepted everywhere so scripted runs can pass it uniformly
    for sp in sub.choices.values():
        if not any(a.dest == "seed" for a in sp._actions):
            sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RelHullError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
