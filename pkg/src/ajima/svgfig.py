"""Deterministic SVG rendering of the configuration.

Output is plain SVG 1.1 with a y-up mathematical frame (one unit maps
to 100 px by default) and is byte-identical for identical input: all
coordinates are formatted with a fixed precision and elements are
emitted in a fixed layer order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .kernel import Circle2, GeometryError, Point2
from .triangle import Triangle
from .construction import build_arc, build_gamma
from .apollonius import (apollonius_result, build_triad, interior_condition)

DEFAULT_LAYERS = ("triangle", "arcs", "gamma")
ALL_LAYERS = ("triangle", "arcs", "gamma", "incircle", "apollonius",
              "soddy", "points")

_STYLE = {
    "triangle": 'fill="none" stroke="#222222" stroke-width="1.5"',
    "arcs": 'fill="none" stroke="#cc2222" stroke-width="1.2"',
    "gamma": 'fill="none" stroke="#d4a017" stroke-width="1.2"',
    "incircle": 'fill="none" stroke="#22aa22" stroke-width="1.0" '
                'stroke-dasharray="4 3"',
    "apollonius": 'fill="none" stroke="#2244cc" stroke-width="1.2"',
    "soddy": 'stroke="#888888" stroke-width="1.0" stroke-dasharray="6 3"',
}


def _fmt(x: float) -> str:
    # fixed formatting keeps output byte-stable and avoids -0.0
    return f"{x + 0.0:.4f}"


@dataclass
class _Canvas:
    parts: list

    def circle(self, c: Circle2, style: str) -> None:
        self.parts.append(
            f'<circle cx="{_fmt(c.center.x)}" cy="{_fmt(c.center.y)}" '
            f'r="{_fmt(abs(c.radius))}" {style}/>')

    def polygon(self, pts: list[Point2], style: str) -> None:
        s = " ".join(f"{_fmt(p.x)},{_fmt(p.y)}" for p in pts)
        self.parts.append(f'<polygon points="{s}" {style}/>')

    def segment(self, p: Point2, q: Point2, style: str) -> None:
        self.parts.append(
            f'<line x1="{_fmt(p.x)}" y1="{_fmt(p.y)}" x2="{_fmt(q.x)}" '
            f'y2="{_fmt(q.y)}" {style}/>')

    def arc(self, center: Point2, radius: float, p: Point2, q: Point2,
            large: bool, sweep: bool, style: str) -> None:
        self.parts.append(
            f'<path d="M {_fmt(p.x)} {_fmt(p.y)} '
            f'A {_fmt(radius)} {_fmt(radius)} 0 '
            f'{1 if large else 0} {1 if sweep else 0} '
            f'{_fmt(q.x)} {_fmt(q.y)}" {style}/>')

    def label(self, p: Point2, text: str) -> None:
        # text is drawn in a y-down sub-frame so glyphs are upright
        self.parts.append(
            f'<g transform="translate({_fmt(p.x)},{_fmt(p.y)}) '
            f'scale(1,-1)"><circle r="0.018" fill="#000000"/>'
            f'<text x="0.03" y="-0.03" font-size="0.14" '
            f'font-family="serif">{text}</text></g>')


def render_svg(tri: Triangle, theta_deg: float | None = None,
               thetas: tuple[float, float, float] | None = None,
               layers: tuple[str, ...] = DEFAULT_LAYERS,
               unit_px: float = 100.0) -> str:
    """Render the configuration; unknown layers raise ValueError."""
    for layer in layers:
        if layer not in ALL_LAYERS:
            raise ValueError(f"unknown layer {layer!r}")
    if (theta_deg is None) == (thetas is None):
        raise ValueError("give exactly one of theta_deg / thetas")
    if thetas is None:
        thetas = (theta_deg, theta_deg, theta_deg)

    cv = _Canvas([])
    m = tri.metrics()
    verts = (tri.A, tri.B, tri.C)

    if "triangle" in layers:
        cv.polygon(list(verts), _STYLE["triangle"])

    arcs = []
    cfgs = []
    for k, th in enumerate(thetas):
        sub = tri.relabeled(k)
        arc = build_arc(sub, th, side="abc"[k])
        arcs.append(arc)
        if "arcs" in layers:
            theta_r = math.radians(th)
            cv.arc(arc.O, arc.R_arc, sub.B, sub.C,
                   large=th > 180.0,
                   sweep=(sub.C - sub.B).cross(arc.apex - sub.B) < 0,
                   style=_STYLE["arcs"])
        try:
            cfgs.append(build_gamma(sub, arc))
        except GeometryError:
            cfgs.append(None)

    if "gamma" in layers:
        for cfg in cfgs:
            if cfg is not None:
                cv.circle(cfg.gamma, _STYLE["gamma"])

    if "incircle" in layers:
        cv.circle(Circle2(tri.incenter(), m.r), _STYLE["incircle"])

    apo = None
    uniform = thetas[0] == thetas[1] == thetas[2]
    if ("apollonius" in layers or "soddy" in layers) and uniform \
            and interior_condition(m, thetas[0]):
        apo = apollonius_result(build_triad(tri, thetas[0]))
    if apo is not None and "apollonius" in layers:
        cv.circle(apo.inner, _STYLE["apollonius"])
        cv.circle(apo.outer, _STYLE["apollonius"])
    if apo is not None and "soddy" in layers:
        ge = tri.gergonne_point()
        pts = [ge, tri.incenter(), apo.inner.center, apo.outer.center]
        lo = min(pts, key=lambda p: (p.x, p.y))
        hi = max(pts, key=lambda p: (p.x, p.y))
        d = hi - lo
        if d.norm() > 0:
            cv.segment(lo - d * 0.15, hi + d * 0.15, _STYLE["soddy"])
        cv.label(ge, "Ge")
        cv.label(tri.incenter(), "I")
        cv.label(apo.inner.center, "U")
        cv.label(apo.outer.center, "V")

    if "points" in layers:
        for name, p in zip("ABC", verts):
            cv.label(p, name)
        for cfg in cfgs:
            if cfg is not None:
                cv.label(cfg.T, "T")

    # frame: bound everything drawn, with margin
    xs, ys = [], []
    for p in verts:
        xs.append(p.x)
        ys.append(p.y)
    for arc in arcs:
        xs += [arc.O.x - arc.R_arc, arc.O.x + arc.R_arc]
        ys += [arc.O.y - arc.R_arc, arc.O.y + arc.R_arc]
    if apo is not None:
        xs += [apo.outer.center.x - apo.outer.radius,
               apo.outer.center.x + apo.outer.radius]
        ys += [apo.outer.center.y - apo.outer.radius,
               apo.outer.center.y + apo.outer.radius]
    margin = 0.08 * max(max(xs) - min(xs), max(ys) - min(ys))
    x0, x1 = min(xs) - margin, max(xs) + margin
    y0, y1 = min(ys) - margin, max(ys) + margin
    w_px = (x1 - x0) * unit_px
    h_px = (y1 - y0) * unit_px

    head = (
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(w_px)}" height="{_fmt(h_px)}" '
        f'viewBox="{_fmt(x0)} {_fmt(-y1)} {_fmt(x1 - x0)} {_fmt(y1 - y0)}">\n'
        # y-up mathematical orientation
        '<g transform="scale(1,-1)" stroke-width="0.015" '
        'vector-effect="non-scaling-stroke">\n')
    body = "\n".join(
        part.replace('stroke-width="1.5"', 'stroke-width="0.020"')
            .replace('stroke-width="1.2"', 'stroke-width="0.015"')
            .replace('stroke-width="1.0"', 'stroke-width="0.012"')
        for part in cv.parts)
    return head + body + "\n</g>\n</svg>\n"
