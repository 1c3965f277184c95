"""Triangle scalars, classical centers, and barycentric coordinates.

Side lengths follow the usual convention a = |BC|, b = |CA|, c = |AB|
so that side ``a`` is opposite vertex ``A``.  Per-side constructions
elsewhere in the package always work with side ``a``; the
:meth:`Triangle.relabeled` cyclic shift brings each side into that
position without moving any vertex, so all coordinates stay in one
world frame.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .kernel import (
    DEFAULT_TOL,
    GeometryError,
    Point2,
    Tolerance,
    bisector,
    intersect_lines,
)


class DegenerateTriangle(GeometryError):
    pass


class ZeroBary(GeometryError):
    pass


@dataclass(frozen=True)
class TriangleMetrics:
    """Scalar invariants of a triangle."""

    a: float
    b: float
    c: float
    p: float          # semiperimeter
    area: float
    r: float          # inradius
    R: float          # circumradius
    W: float          # (4R + r) / p, also tan(A/2) + tan(B/2) + tan(C/2)
    angle_a: float    # radians
    angle_b: float
    angle_c: float

    @property
    def S(self) -> float:
        """Twice the area."""
        return 2.0 * self.area


@dataclass(frozen=True)
class Triangle:
    A: Point2
    B: Point2
    C: Point2

    def __post_init__(self) -> None:
        area2 = (self.B - self.A).cross(self.C - self.A)
        scale = max(self.A.dist(self.B), self.B.dist(self.C),
                    self.C.dist(self.A), 1e-30)
        if abs(area2) <= 1e-12 * scale * scale:
            raise DegenerateTriangle("vertices are (nearly) collinear")

    @staticmethod
    def from_sides(a: float, b: float, c: float) -> "Triangle":
        """Canonical placement: B at origin, C on the +x axis, A above."""
        for name, s in (("a", a), ("b", b), ("c", c)):
            if not (math.isfinite(s) and s > 0):
                raise DegenerateTriangle(f"side {name}={s} must be positive")
        if a + b <= c or b + c <= a or c + a <= b:
            raise DegenerateTriangle(
                f"sides ({a}, {b}, {c}) violate the triangle inequality")
        ax = (a * a + c * c - b * b) / (2.0 * a)
        ay2 = c * c - ax * ax
        if ay2 <= 0:
            raise DegenerateTriangle(f"sides ({a}, {b}, {c}) are degenerate")
        return Triangle(Point2(ax, math.sqrt(ay2)), Point2(0.0, 0.0),
                        Point2(a, 0.0))

    def relabeled(self, shift: int) -> "Triangle":
        """Cyclic vertex shift: shift=1 maps (A,B,C) -> (B,C,A).

        One shift moves side b into the role of side a; two shifts move
        side c there.  Vertices keep their world positions.
        """
        verts = (self.A, self.B, self.C)
        k = shift % 3
        return Triangle(verts[k], verts[(k + 1) % 3], verts[(k + 2) % 3])

    @property
    def orientation(self) -> float:
        """+1 for counterclockwise vertex order, -1 for clockwise."""
        return math.copysign(1.0, (self.B - self.A).cross(self.C - self.A))

    def metrics(self) -> TriangleMetrics:
        a = self.B.dist(self.C)
        b = self.C.dist(self.A)
        c = self.A.dist(self.B)
        p = 0.5 * (a + b + c)
        area = 0.5 * abs((self.B - self.A).cross(self.C - self.A))
        r = area / p
        R = a * b * c / (4.0 * area)
        return TriangleMetrics(
            a=a, b=b, c=c, p=p, area=area, r=r, R=R,
            W=(4.0 * R + r) / p,
            angle_a=_angle(b, c, a),
            angle_b=_angle(c, a, b),
            angle_c=_angle(a, b, c),
        )

    def incenter(self) -> Point2:
        m = self.metrics()
        return bary_point(self, (m.a, m.b, m.c))

    def excenter(self, opposite: str) -> Point2:
        """Excenter opposite the named vertex ('A', 'B' or 'C')."""
        m = self.metrics()
        weights = {
            "A": (-m.a, m.b, m.c),
            "B": (m.a, -m.b, m.c),
            "C": (m.a, m.b, -m.c),
        }
        if opposite not in weights:
            raise ValueError(f"unknown vertex {opposite!r}")
        return bary_point(self, weights[opposite])

    def circumcenter(self) -> Point2:
        m = self.metrics()
        a2, b2, c2 = m.a ** 2, m.b ** 2, m.c ** 2
        return bary_point(self, (a2 * (b2 + c2 - a2),
                                 b2 * (c2 + a2 - b2),
                                 c2 * (a2 + b2 - c2)))

    def gergonne_point(self) -> Point2:
        m = self.metrics()
        return bary_point(self, (1.0 / (m.p - m.a),
                                 1.0 / (m.p - m.b),
                                 1.0 / (m.p - m.c)))

    def contact_points(self) -> tuple[Point2, Point2, Point2]:
        """Incircle touch points on BC, CA, AB respectively."""
        m = self.metrics()
        la = self.B + (self.C - self.B) * ((m.p - m.b) / m.a)
        lb = self.C + (self.A - self.C) * ((m.p - m.c) / m.b)
        lc = self.A + (self.B - self.A) * ((m.p - m.a) / m.c)
        return la, lb, lc


def _angle(u: float, v: float, opp: float) -> float:
    """Angle opposite side ``opp`` in a triangle with sides u, v, opp."""
    cos = (u * u + v * v - opp * opp) / (2.0 * u * v)
    return math.acos(min(1.0, max(-1.0, cos)))


def bary_point(tri: Triangle, w: tuple[float, float, float]) -> Point2:
    """Point with (unnormalized) barycentric coordinates w = (x : y : z)."""
    total = w[0] + w[1] + w[2]
    if abs(total) <= 1e-300:
        raise ZeroBary(f"barycentric weights {w} sum to zero")
    return Point2(
        (w[0] * tri.A.x + w[1] * tri.B.x + w[2] * tri.C.x) / total,
        (w[0] * tri.A.y + w[1] * tri.B.y + w[2] * tri.C.y) / total,
    )


def point_bary(tri: Triangle, pt: Point2) -> tuple[float, float, float]:
    """Normalized barycentric coordinates of a point (sum to 1)."""
    d = (tri.B - tri.A).cross(tri.C - tri.A)
    wa = (tri.B - pt).cross(tri.C - pt) / d
    wb = (tri.C - pt).cross(tri.A - pt) / d
    return wa, wb, 1.0 - wa - wb


def bary_match(tri: Triangle, w: tuple[float, float, float], pt: Point2,
               tol: Tolerance = DEFAULT_TOL) -> tuple[bool, float]:
    """Do the weights describe the point?  Residual is max coordinate gap."""
    total = w[0] + w[1] + w[2]
    if abs(total) <= 1e-300:
        return False, math.inf
    wn = tuple(wi / total for wi in w)
    actual = point_bary(tri, pt)
    residual = max(abs(wn[i] - actual[i]) for i in range(3))
    return residual <= tol.releps(1.0), residual


def gergonne_cevian_ratio(tri: Triangle) -> float:
    """Signed ratio `LGe / GeA` along the contact cevian from A.

    Equals (p-b)(p-c) / (a(p-a)) for the cevian through the BC touch
    point; positive because the Gergonne point lies between A and L.
    """
    m = tri.metrics()
    return (m.p - m.b) * (m.p - m.c) / (m.a * (m.p - m.a))


def line_intersection_or_raise(l1, l2, what: str,
                               tol: Tolerance = DEFAULT_TOL) -> Point2:
    p = intersect_lines(l1, l2, tol)
    if p is None:
        raise GeometryError(f"{what}: lines are parallel")
    return p
