"""Tolerance-aware planar primitives: points, lines, circles, predicates.

Everything here is a pure function of its inputs.  Predicates return a
dimensionless residual alongside their verdict so callers can assert
quantitative bounds instead of bare booleans.  Comparisons use an
effective epsilon of ``max(rel * scale, abs_floor)`` where ``scale`` is
derived from the inputs, which keeps every verdict invariant under
uniform rescaling of the configuration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class GeometryError(ValueError):
    """Base class for geometric construction failures."""


class CollinearInput(GeometryError):
    pass


class DegenerateRay(GeometryError):
    pass


class ConcentricAmbiguous(GeometryError):
    pass


class ConcentricCircles(GeometryError):
    pass


class CollinearCenters(GeometryError):
    pass


class ZeroRatio(GeometryError):
    pass


@dataclass(frozen=True)
class Tolerance:
    """Relative tolerance with an absolute floor."""

    rel: float = 1e-9
    abs_floor: float = 1e-12

    def eps(self, scale: float) -> float:
        """Effective epsilon for length comparisons at the given scale."""
        return max(self.rel * abs(scale), self.abs_floor)

    def releps(self, scale: float) -> float:
        """Effective epsilon for already-normalized (dimensionless) residuals."""
        return max(self.rel, self.abs_floor / max(abs(scale), 1e-300))


DEFAULT_TOL = Tolerance()

_TINY = 1e-300


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError(f"non-finite point ({self.x}, {self.y})")

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> "Point2":
        return Point2(self.x * k, self.y * k)

    __rmul__ = __mul__

    def dot(self, other: "Point2") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point2") -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def dist(self, other: "Point2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def perp(self) -> "Point2":
        """Rotation by +90 degrees."""
        return Point2(-self.y, self.x)

    def unit(self) -> "Point2":
        n = self.norm()
        if n < _TINY:
            raise DegenerateRay("cannot normalize near-zero vector")
        return Point2(self.x / n, self.y / n)


def midpoint(p: Point2, q: Point2) -> Point2:
    return Point2(0.5 * (p.x + q.x), 0.5 * (p.y + q.y))


@dataclass(frozen=True)
class Line2:
    """Line through anchor ``p`` with unit direction ``d``."""

    p: Point2
    d: Point2

    @staticmethod
    def from_points(p: Point2, q: Point2) -> "Line2":
        return Line2(p, (q - p).unit())

    def at(self, t: float) -> Point2:
        return self.p + self.d * t

    def param_of(self, q: Point2) -> float:
        """Parameter of the orthogonal projection of ``q``."""
        return (q - self.p).dot(self.d)

    def foot(self, q: Point2) -> Point2:
        return self.at(self.param_of(q))

    def dist(self, q: Point2) -> float:
        return abs((q - self.p).cross(self.d))


@dataclass(frozen=True)
class Circle2:
    center: Point2
    radius: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.radius) or self.radius < 0:
            raise GeometryError(f"invalid radius {self.radius}")


def span(*points: Point2) -> float:
    """Characteristic scale of a point set (bounding-box diagonal)."""
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return math.hypot(max(xs) - min(xs), max(ys) - min(ys))


def circle_through(p1: Point2, p2: Point2, p3: Point2,
                   tol: Tolerance = DEFAULT_TOL) -> Circle2:
    """Circle through three non-collinear points."""
    scale = span(p1, p2, p3)
    u = p2 - p1
    v = p3 - p1
    d = 2.0 * u.cross(v)
    if abs(d) <= tol.eps(scale) * max(scale, 1e-30):
        raise CollinearInput("three input points are collinear at scale")
    uu = u.dot(u)
    vv = v.dot(v)
    cx = p1.x + (v.y * uu - u.y * vv) / d
    cy = p1.y + (u.x * vv - v.x * uu) / d
    center = Point2(cx, cy)
    return Circle2(center, center.dist(p1))


def intersect_line_circle(l: Line2, c: Circle2,
                          tol: Tolerance = DEFAULT_TOL) -> list[Point2]:
    """0, 1 (tangency) or 2 intersection points, ordered by line parameter."""
    t0 = l.param_of(c.center)
    foot = l.at(t0)
    h = foot.dist(c.center)
    scale = max(c.radius, abs(t0), 1.0e-30)
    eps = tol.eps(scale)
    if h > c.radius + eps:
        return []
    if abs(h - c.radius) <= eps:
        return [foot]
    dt = math.sqrt(max(c.radius * c.radius - h * h, 0.0))
    return [l.at(t0 - dt), l.at(t0 + dt)]


def intersect_lines(l1: Line2, l2: Line2,
                    tol: Tolerance = DEFAULT_TOL) -> Point2 | None:
    """Intersection point, or None for (near-)parallel lines."""
    denom = l1.d.cross(l2.d)
    if abs(denom) <= tol.releps(1.0):
        return None
    t = (l2.p - l1.p).cross(l2.d) / denom
    return l1.at(t)


def intersect_circles(c1: Circle2, c2: Circle2,
                      tol: Tolerance = DEFAULT_TOL) -> list[Point2]:
    """Intersection points of two circles (tangency collapsed to one)."""
    d = c1.center.dist(c2.center)
    scale = max(d, c1.radius, c2.radius)
    if d <= tol.eps(scale):
        return []
    axis = radical_axis(c1, c2, tol)
    return intersect_line_circle(axis, c1, tol)


def angle_at(p: Point2, vertex: Point2, q: Point2,
             tol: Tolerance = DEFAULT_TOL) -> float:
    """Unsigned angle of the rays vertex->p and vertex->q, in [0, pi]."""
    u = p - vertex
    v = q - vertex
    scale = max(u.norm(), v.norm())
    if min(u.norm(), v.norm()) <= tol.eps(scale):
        raise DegenerateRay("angle ray has near-zero length")
    return math.atan2(abs(u.cross(v)), u.dot(v))


def bisector(p: Point2, vertex: Point2, q: Point2, kind: str = "internal",
             tol: Tolerance = DEFAULT_TOL) -> Line2:
    """Internal or external bisector of the angle p-vertex-q."""
    u = (p - vertex).unit()
    v = (q - vertex).unit()
    s = u + v
    if s.norm() <= tol.releps(1.0):
        internal = u.perp()  # straight angle: any perpendicular bisects
    else:
        internal = s.unit()
    if kind == "internal":
        return Line2(vertex, internal)
    if kind == "external":
        return Line2(vertex, internal.perp())
    raise ValueError(f"unknown bisector kind {kind!r}")


def is_collinear(p1: Point2, p2: Point2, p3: Point2,
                 tol: Tolerance = DEFAULT_TOL) -> tuple[bool, float]:
    scale = max(span(p1, p2, p3), 1e-30)
    residual = abs((p2 - p1).cross(p3 - p1)) / (scale * scale)
    return residual <= tol.releps(scale), residual


def is_concyclic(p1: Point2, p2: Point2, p3: Point2, p4: Point2,
                 tol: Tolerance = DEFAULT_TOL) -> tuple[bool, float]:
    scale = max(span(p1, p2, p3, p4), 1e-30)
    try:
        c = circle_through(p1, p2, p3, tol)
    except CollinearInput:
        return False, math.inf
    residual = abs(p4.dist(c.center) - c.radius) / scale
    return residual <= tol.releps(scale), residual


def are_concurrent(l1: Line2, l2: Line2, l3: Line2,
                   tol: Tolerance = DEFAULT_TOL) -> tuple[bool, float]:
    p = intersect_lines(l1, l2, tol)
    if p is None:
        return False, math.inf
    scale = max(span(l1.p, l2.p, l3.p, p), 1e-30)
    residual = l3.dist(p) / scale
    return residual <= tol.releps(scale), residual


def is_parallel(l1: Line2, l2: Line2,
                tol: Tolerance = DEFAULT_TOL) -> tuple[bool, float]:
    residual = abs(l1.d.cross(l2.d))
    return residual <= tol.releps(1.0), residual


def is_perpendicular(l1: Line2, l2: Line2,
                     tol: Tolerance = DEFAULT_TOL) -> tuple[bool, float]:
    residual = abs(l1.d.dot(l2.d))
    return residual <= tol.releps(1.0), residual


@dataclass(frozen=True)
class TangencyResult:
    kind: str  # "external" | "internal" | "none"
    touch: Point2 | None
    residual: float  # dimensionless


def tangency(c1: Circle2, c2: Circle2,
             tol: Tolerance = DEFAULT_TOL) -> TangencyResult:
    """Classify the tangency relation of two circles."""
    d = c1.center.dist(c2.center)
    scale = max(d, c1.radius, c2.radius, 1e-30)
    eps = tol.eps(scale)
    if d <= eps and abs(c1.radius - c2.radius) <= eps:
        raise ConcentricAmbiguous("coincident circles: touch point undefined")
    res_ext = abs(d - (c1.radius + c2.radius))
    res_int = abs(d - abs(c1.radius - c2.radius))
    if res_ext <= min(res_int, eps):
        touch = c1.center + (c2.center - c1.center) * (c1.radius / d)
        return TangencyResult("external", touch, res_ext / scale)
    if res_int <= eps and d > eps:
        if c1.radius >= c2.radius:
            touch = c1.center + (c2.center - c1.center) * (c1.radius / d)
        else:
            touch = c1.center + (c1.center - c2.center) * (c1.radius / d)
        return TangencyResult("internal", touch, res_int / scale)
    return TangencyResult("none", None, min(res_ext, res_int) / scale)


def power_of_point(p: Point2, c: Circle2) -> float:
    dp = p - c.center
    return dp.dot(dp) - c.radius * c.radius


def radical_axis(c1: Circle2, c2: Circle2,
                 tol: Tolerance = DEFAULT_TOL) -> Line2:
    """Locus of equal power with respect to two circles."""
    d12 = c2.center - c1.center
    d = d12.norm()
    scale = max(d, c1.radius, c2.radius)
    if d <= tol.eps(scale):
        raise ConcentricCircles("radical axis undefined for concentric circles")
    k = (d * d + c1.radius ** 2 - c2.radius ** 2) / (2.0 * d * d)
    anchor = c1.center + d12 * k
    return Line2(anchor, d12.perp().unit())


def radical_center(c1: Circle2, c2: Circle2, c3: Circle2,
                   tol: Tolerance = DEFAULT_TOL) -> Point2:
    a12 = radical_axis(c1, c2, tol)
    a13 = radical_axis(c1, c3, tol)
    p = intersect_lines(a12, a13, tol)
    if p is None:
        raise CollinearCenters("circle centers are collinear")
    return p


def homothety(center: Point2, ratio: float, subject):
    """Scale a Point2 or Circle2 about a center point."""
    if not math.isfinite(ratio) or ratio == 0.0:
        raise ZeroRatio(f"invalid homothety ratio {ratio}")
    if isinstance(subject, Point2):
        return center + (subject - center) * ratio
    if isinstance(subject, Circle2):
        return Circle2(center + (subject.center - center) * ratio,
                       abs(ratio) * subject.radius)
    raise TypeError(f"unsupported homothety subject {type(subject)!r}")
