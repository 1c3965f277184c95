"""Command-line front end.

Three commands:

verify   run registry checks over random samples (or one instance)
solve    print every named quantity for one triangle and angle
figure   emit an SVG drawing of the configuration

Exit codes: 0 all checks passed, 1 at least one check failed,
2 configuration error.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .kernel import DEFAULT_TOL, GeometryError, Tolerance
from .triangle import Triangle, bary_point
from .construction import (ajima_oracle, ajima_radius, arc_radius, build_arc,
                           build_gamma, lengths_formula, t_of_theta)
from .apollonius import (apollonius_result, bary_D, bary_Oa, bary_T,
                         build_triad, interior_condition, rho_inner,
                         rho_outer)
from .checks import REGISTRY
from .verify import (PASS_THRESHOLD, SamplePolicy, SampleContext,
                     SampleDescriptor, UnknownCheckId, evaluate, run_suite)
from .svgfig import ALL_LAYERS, DEFAULT_LAYERS, render_svg

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2


class ConfigError(Exception):
    pass


def _parse_triple(text: str, what: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ConfigError(f"{what} needs three comma-separated values")
    try:
        vals = tuple(float(p) for p in parts)
    except ValueError as exc:
        raise ConfigError(f"bad {what}: {exc}") from None
    return vals


def _tolerance(args) -> Tolerance:
    tol = args.tol
    if tol is None:
        env = os.environ.get("AJIMA_TOL")
        if env is not None:
            try:
                tol = float(env)
            except ValueError:
                raise ConfigError(f"bad AJIMA_TOL value {env!r}") from None
    if tol is None:
        return DEFAULT_TOL
    if tol <= 0:
        raise ConfigError("tolerance must be positive")
    return Tolerance(rel=tol, abs_floor=tol * 1e-3)


def _triangle(args) -> Triangle:
    if args.triangle is None:
        raise ConfigError("this command needs --triangle a,b,c")
    a, b, c = _parse_triple(args.triangle, "--triangle")
    try:
        return Triangle.from_sides(a, b, c)
    except GeometryError as exc:
        raise ConfigError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ajima",
        description="construct and verify the arc-and-inscribed-circle "
                    "configuration")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--triangle", help="side lengths a,b,c")
        p.add_argument("--theta", type=float,
                       help="arc angular measure in degrees")
        p.add_argument("--tol", type=float,
                       help="tolerance override (also env AJIMA_TOL)")

    v = sub.add_parser("verify", help="run registry checks")
    common(v)
    v.add_argument("--sample", action="store_true",
                   help="sample random triangles (default when no "
                        "--triangle is given)")
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--checks", help="comma-separated check ids")
    v.add_argument("--json", dest="json_path", help="write report here")

    s = sub.add_parser("solve", help="print every named quantity")
    common(s)

    f = sub.add_parser("figure", help="emit an SVG figure")
    common(f)
    f.add_argument("--thetas", help="per-side angular measures A,B,C")
    f.add_argument("--svg", dest="svg_path", help="write SVG here")
    f.add_argument("--show", default=",".join(DEFAULT_LAYERS),
                   help=f"layers to draw, from: {','.join(ALL_LAYERS)}")
    return ap


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    tol = _tolerance(args)
    ids = None
    if args.checks:
        ids = [c.strip() for c in args.checks.split(",") if c.strip()]
    if args.triangle is not None:
        if args.theta is None:
            raise ConfigError("--triangle also needs --theta")
        tri = _triangle(args)
        ctx = SampleContext(tri, args.theta, tol, args.seed)
        m = ctx.m
        desc = SampleDescriptor((m.a, m.b, m.c), args.theta, args.seed, 0)
        try:
            results = [evaluate(cid, ctx, desc, PASS_THRESHOLD)
                       for cid in sorted(ids or REGISTRY)]
        except UnknownCheckId as exc:
            raise ConfigError(f"unknown check id: {exc}") from None
        failed = 0
        for res in results:
            extra = (f"residual={res.residual:.3e}"
                     if res.verdict != "not_applicable"
                     else f"reason={res.reason}")
            print(f"{res.check_id:30s} {res.verdict:15s} {extra}")
            failed += res.verdict == "fail"
        return EXIT_CHECK_FAILED if failed else EXIT_OK

    policy = SamplePolicy(seed=args.seed, trials=args.trials)
    try:
        report = run_suite(policy, ids, tol)
    except UnknownCheckId as exc:
        raise ConfigError(f"unknown check id: {exc}") from None
    doc = report.as_dict()
    if args.json_path:
        with open(args.json_path, "w") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    for entry in doc["per_check"]:
        print(f"{entry['id']:30s} pass={entry['pass']:5d} "
              f"fail={entry['fail']:3d} na={entry['na']:4d} "
              f"max_residual={entry['max_residual']:.3e}")
    print(f"total: {len(doc['per_check'])} checks, "
          f"{report.total_failures} failures")
    return EXIT_CHECK_FAILED if report.total_failures else EXIT_OK


# ---------------------------------------------------------------------------
# solve


def _quantity(name: str, formula: float, measured: float | None,
              note: str = "") -> None:
    if measured is None:
        print(f"{name:22s} {formula: .10f}  {note}")
        return
    resid = abs(formula - measured)
    print(f"{name:22s} {formula: .10f}  measured={measured: .10f}  "
          f"residual={resid:.2e}  {note}")


def cmd_solve(args) -> int:
    if args.theta is None:
        raise ConfigError("solve needs --theta")
    tri = _triangle(args)
    theta = args.theta
    if not 0.0 < theta < 360.0:
        raise ConfigError("theta must lie strictly between 0 and 360")
    m = tri.metrics()
    t = t_of_theta(theta)
    print(f"triangle a={m.a} b={m.b} c={m.c}  theta={theta}")
    _quantity("r (inradius)", m.r, None)
    _quantity("R (circumradius)", m.R, None)
    _quantity("W = (4R+r)/p", m.W, None)
    _quantity("t = tan(theta/4)", t, None)

    for k, side in enumerate("abc"):
        sub = tri.relabeled(k)
        mm = sub.metrics()
        arc = build_arc(sub, theta, side=side)
        rho = ajima_radius(mm, t)
        oracle = None
        note = ""
        if abs(rho) <= 1e-9 * mm.r:
            note = "degenerate point circle"
        elif rho < 0:
            note = "negative: inscribed circle lies outside (extended case)"
        else:
            oracle = ajima_oracle(sub, arc).radius
        _quantity(f"rho_{side}", rho, oracle, note)
        _quantity(f"R_arc_{side}", arc_radius(mm, theta),
                  arc.O.dist(sub.B))

    if interior_condition(m, theta):
        triad = build_triad(tri, theta)
        apo = apollonius_result(triad)
        _quantity("rho_i (signed)", rho_inner(m, t), apo.rho_i)
        _quantity("rho_o", rho_outer(m, t), apo.rho_o)
        cfg = triad.cfg_a
        for name, w in (("D_a", bary_D(m, t)),
                        ("O_a", bary_Oa(m, theta)),
                        ("T_a", bary_T(m, theta))):
            pt = {"D_a": cfg.D, "O_a": cfg.arc.O, "T_a": cfg.T}[name]
            got = bary_point(tri, w)
            print(f"bary {name:17s} ({w[0]:.6g} : {w[1]:.6g} : {w[2]:.6g})"
                  f"  position residual={got.dist(pt):.2e}")
        lens = lengths_formula(m, t)
        for field in ("AK", "AL_len", "ALp", "AX_len", "HK", "IF_len"):
            _quantity(field, getattr(lens, field), None)
    else:
        print("interior condition fails: triad quantities not shown "
              f"(needs all angles < {180 - theta / 2:.2f} deg)")
    return EXIT_OK


# ---------------------------------------------------------------------------
# figure


def cmd_figure(args) -> int:
    tri = _triangle(args)
    thetas = None
    theta = args.theta
    if args.thetas is not None:
        if theta is not None:
            raise ConfigError("give either --theta or --thetas, not both")
        thetas = _parse_triple(args.thetas, "--thetas")
    elif theta is None:
        raise ConfigError("figure needs --theta or --thetas")
    layers = tuple(s.strip() for s in args.show.split(",") if s.strip())
    try:
        svg = render_svg(tri, theta, thetas, layers)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    if args.svg_path:
        with open(args.svg_path, "w") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code not in (0, None) else 0
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "solve":
            return cmd_solve(args)
        return cmd_figure(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
