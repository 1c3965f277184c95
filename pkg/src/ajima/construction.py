"""Arc-and-inscribed-circle construction for one triangle side.

For a triangle with side ``a = BC``, an arc of angular measure theta is
erected internally on BC and a circle is inscribed in the angle at A,
externally tangent to the arc.  This module builds that configuration
three independent ways (closed form, straightedge-style point chase,
and a bisection oracle), exposes all the auxiliary points used by the
verification registry, and evaluates every closed-form length.

The per-side convention: every function here works on side ``a``.  To
treat side b or c, relabel the triangle cyclically first
(:meth:`Triangle.relabeled`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .kernel import (
    DEFAULT_TOL,
    Circle2,
    GeometryError,
    Line2,
    Point2,
    Tolerance,
    bisector,
    intersect_line_circle,
    intersect_lines,
    midpoint,
)
from .triangle import Triangle, TriangleMetrics


class ThetaOutOfRange(GeometryError):
    pass


class ExtendedCaseOnly(GeometryError):
    """The inscribed circle is not interior for this (triangle, theta)."""


class NoRoot(GeometryError):
    pass


class UndefinedPoint(GeometryError):
    pass


def t_of_theta(theta_deg: float) -> float:
    """Quarter-angle tangent parameter."""
    return math.tan(math.radians(theta_deg) / 4.0)


@dataclass(frozen=True)
class ArcGeometry:
    """Arc of angular measure theta erected internally on side BC."""

    side: str                 # which original side plays the role of "a"
    theta: float              # degrees, in (0, 360)
    t: float                  # tan(theta / 4)
    O: Point2                 # arc circle center
    R_arc: float
    midarc_N: Point2          # arc midpoint on the far side from the triangle
    apex: Point2              # arc midpoint on the near (triangle) side

    @property
    def circle(self) -> Circle2:
        return Circle2(self.O, self.R_arc)


def build_arc(tri: Triangle, theta_deg: float, side: str = "a",
              tol: Tolerance = DEFAULT_TOL) -> ArcGeometry:
    """Arc on side BC bulging toward the triangle interior.

    The center sits on the perpendicular bisector of BC at signed
    offset -(a/2)cot(theta/2) along the inward normal: on the far side
    of BC for theta < 180, on BC for the semicircle, on the near side
    for reflex arcs.
    """
    if not (0.0 < theta_deg < 360.0):
        raise ThetaOutOfRange(f"theta={theta_deg} not in (0, 360) degrees")
    theta = math.radians(theta_deg)
    a = tri.B.dist(tri.C)
    mid = midpoint(tri.B, tri.C)
    n_in = (tri.C - tri.B).unit().perp()
    if n_in.dot(tri.A - mid) < 0:
        n_in = n_in * -1.0
    half = 0.5 * theta
    r_arc = 0.5 * a / math.sin(half)
    center = mid - n_in * (0.5 * a / math.tan(half))
    return ArcGeometry(
        side=side,
        theta=theta_deg,
        t=math.tan(0.25 * theta),
        O=center,
        R_arc=r_arc,
        midarc_N=center - n_in * r_arc,
        apex=center + n_in * r_arc,
    )


def ajima_radius(m: TriangleMetrics, t_param: float) -> float:
    """Signed radius of the circle in angle A tangent to the arc on BC.

    Negative exactly when theta > 2(180 deg - A); the magnitude is then
    the radius of the external-variant circle.
    """
    if t_param < 0:
        raise ThetaOutOfRange(f"t parameter {t_param} must be >= 0")
    return m.r * (1.0 - m.r * t_param / (m.p - m.a))


def arc_radius(m: TriangleMetrics, theta_deg: float) -> float:
    """(a/2) csc(theta/2) for the arc on side a."""
    if not (0.0 < theta_deg < 360.0):
        raise ThetaOutOfRange(f"theta={theta_deg} not in (0, 360) degrees")
    return 0.5 * m.a / math.sin(0.5 * math.radians(theta_deg))


@dataclass
class AjimaConfiguration:
    """One side's full configuration: the inscribed circle and all
    auxiliary points used by the verification registry.

    Points that do not exist for a given (triangle, theta) are None,
    with a reason recorded in :attr:`missing`.
    """

    triangle: Triangle
    arc: ArcGeometry
    rho: float
    D: Point2
    I: Point2                       # incenter
    T: Point2
    E: Point2                       # touch on AC
    F_t: Point2                     # touch on AB
    H: Point2                       # incircle touch on AC
    L: Point2                       # incircle touch on BC
    Mid: Point2
    N: Point2
    J: Point2 | None = None         # arc circle meets AC again
    Lp: Point2 | None = None        # AL meets gamma, nearer L
    X: Point2 | None = None         # AL meets gamma, nearer A
    Y: Point2 | None = None         # AT meets gamma, nearer A
    Yp: Point2 | None = None        # AT meets incircle, nearer A
    T_in: Point2 | None = None      # AT meets incircle, farther from A
    Tp: Point2 | None = None        # IT meets gamma again
    Z: Point2 | None = None         # TI meets BC
    M_T: Point2 | None = None       # AT meets BC
    G: Point2 | None = None         # AI meets EF
    K_x: Point2 | None = None       # EF meets BC
    missing: dict[str, str] = field(default_factory=dict)

    @property
    def gamma(self) -> Circle2:
        return Circle2(self.D, self.rho)

    @property
    def incircle(self) -> Circle2:
        m = self.triangle.metrics()
        return Circle2(self.I, m.r)

    def require(self, *names: str) -> list[Point2]:
        pts = []
        for name in names:
            p = getattr(self, name)
            if p is None:
                raise UndefinedPoint(
                    f"point {name} unavailable: {self.missing.get(name, '?')}")
            pts.append(p)
        return pts


def _far_from(points: list[Point2], ref: Point2) -> Point2:
    return max(points, key=lambda q: q.dist(ref))


def _near_to(points: list[Point2], ref: Point2) -> Point2:
    return min(points, key=lambda q: q.dist(ref))


def build_gamma(tri: Triangle, arc: ArcGeometry,
                tol: Tolerance = DEFAULT_TOL) -> AjimaConfiguration:
    """Construct the inscribed circle from the closed-form radius, then
    chase every auxiliary point.
    """
    m = tri.metrics()
    rho = ajima_radius(m, arc.t)
    if rho < 0:
        raise ExtendedCaseOnly(
            f"rho={rho} < 0: theta={arc.theta} exceeds 2(180-A); "
            "use variant_circles")
    u_bis = _internal_bisector_dir(tri)
    sinA2 = math.sin(0.5 * m.angle_a)
    D = tri.A + u_bis * (rho / sinA2)
    gamma = Circle2(D, rho)

    line_ab = Line2.from_points(tri.A, tri.B)
    line_ac = Line2.from_points(tri.A, tri.C)
    line_bc = Line2.from_points(tri.B, tri.C)

    E = line_ac.foot(D)
    F_t = line_ab.foot(D)
    T = D + (arc.O - D) * (rho / (rho + arc.R_arc))

    incenter = tri.incenter()
    H = tri.A + (tri.C - tri.A) * ((m.p - m.a) / m.b)
    L = tri.B + (tri.C - tri.B) * ((m.p - m.b) / m.a)
    mid = midpoint(tri.B, tri.C)

    cfg = AjimaConfiguration(
        triangle=tri, arc=arc, rho=rho, D=D, I=incenter, T=T,
        E=E, F_t=F_t, H=H, L=L, Mid=mid, N=arc.midarc_N,
    )
    scale = max(m.a, m.b, m.c)
    point_circle = rho <= tol.eps(scale)

    # J: the arc circle meets line AC at C and (generically) once more.
    hits = intersect_line_circle(line_ac, arc.circle, tol)
    others = [q for q in hits if q.dist(tri.C) > tol.eps(scale)]
    if others:
        cfg.J = _far_from(others, tri.C)
    else:
        cfg.missing["J"] = "AC tangent to the arc circle at C"

    if point_circle:
        reason = "inscribed circle degenerates to a point"
        for name in ("Lp", "X", "Y", "Tp"):
            cfg.missing[name] = reason
    else:
        line_al = Line2.from_points(tri.A, L)
        chord = intersect_line_circle(line_al, gamma, tol)
        if len(chord) == 2:
            cfg.X = _near_to(chord, tri.A)
            cfg.Lp = _far_from(chord, tri.A)
        else:
            cfg.missing["X"] = cfg.missing["Lp"] = \
                "contact cevian misses the inscribed circle"

    if T.dist(tri.A) <= tol.eps(scale):
        cfg.missing["Y"] = cfg.missing["Yp"] = cfg.missing["T_in"] = \
            cfg.missing["M_T"] = "touch point coincides with A"
    else:
        line_at = Line2.from_points(tri.A, T)
        if not point_circle:
            ch = intersect_line_circle(line_at, gamma, tol)
            cfg.Y = _near_to(ch, tri.A) if ch else None
            if cfg.Y is None:
                cfg.missing["Y"] = "AT misses the inscribed circle"
        ch_in = intersect_line_circle(line_at, cfg.incircle, tol)
        if len(ch_in) == 2:
            cfg.Yp = _near_to(ch_in, tri.A)
            cfg.T_in = _far_from(ch_in, tri.A)
        else:
            cfg.missing["Yp"] = cfg.missing["T_in"] = \
                "AT misses the incircle"
        cfg.M_T = intersect_lines(line_at, line_bc, tol)
        if cfg.M_T is None:
            cfg.missing["M_T"] = "AT parallel to BC"

    if T.dist(incenter) <= tol.eps(scale):
        cfg.missing["Tp"] = cfg.missing["Z"] = "T coincides with incenter"
    else:
        line_ti = Line2.from_points(T, incenter)
        if not point_circle:
            ch = intersect_line_circle(line_ti, gamma, tol)
            rest = [q for q in ch if q.dist(T) > tol.eps(scale)]
            cfg.Tp = _far_from(rest, T) if rest else None
            if cfg.Tp is None:
                cfg.missing["Tp"] = "line TI tangent to the inscribed circle"
        cfg.Z = intersect_lines(line_ti, line_bc, tol)
        if cfg.Z is None:
            cfg.missing["Z"] = "TI parallel to BC"

    if E.dist(F_t) <= tol.eps(scale):
        cfg.missing["G"] = cfg.missing["K_x"] = "touch chord degenerates"
    else:
        line_ef = Line2.from_points(E, F_t)
        cfg.G = intersect_lines(Line2.from_points(tri.A, incenter),
                                line_ef, tol)
        if cfg.G is None:
            cfg.missing["G"] = "AI parallel to EF"
        cfg.K_x = intersect_lines(line_ef, line_bc, tol)
        if cfg.K_x is None:
            cfg.missing["K_x"] = "EF parallel to BC (isosceles AB=AC)"
    return cfg


def _internal_bisector_dir(tri: Triangle) -> Point2:
    u = bisector(tri.B, tri.A, tri.C, "internal").d
    if u.dot(midpoint(tri.B, tri.C) - tri.A) < 0:
        u = u * -1.0
    return u


def gamma_point_chase(tri: Triangle, arc: ArcGeometry,
                      tol: Tolerance = DEFAULT_TOL) -> Circle2:
    """Second construction route, using no radius formula.

    The line from the far arc midpoint N through the incenter meets the
    arc again at the touch point T; the line from the arc center
    through T meets the angle bisector from A at the circle's center.
    """
    incenter = tri.incenter()
    n = arc.midarc_N
    hits = intersect_line_circle(Line2.from_points(n, incenter),
                                 arc.circle, tol)
    scale = max(arc.R_arc, tri.B.dist(tri.C))
    cand = [q for q in hits if q.dist(n) > tol.eps(scale)]
    if not cand:
        raise GeometryError("line N-I meets the arc circle only at N")
    T = _far_from(cand, n)
    center = intersect_lines(
        Line2.from_points(arc.O, T),
        Line2(tri.A, _internal_bisector_dir(tri)), tol)
    if center is None:
        raise GeometryError("center line parallel to the bisector")
    return Circle2(center, Line2.from_points(tri.A, tri.B).dist(center))


def ajima_oracle(tri: Triangle, arc: ArcGeometry,
                 tol: Tolerance = DEFAULT_TOL) -> Circle2:
    """Independent oracle: find the inscribed tangent circle by bisection.

    The center is parametrized by its distance s from A along the
    internal bisector; the circle at s has radius s sin(A/2).  The
    external-tangency gap g(s) = |center - O| - (radius + R_arc) is
    strictly bracketed and bisected; no closed form is used.
    """
    m = tri.metrics()
    u_bis = _internal_bisector_dir(tri)
    k = math.sin(0.5 * m.angle_a)
    scale = max(m.a, m.b, m.c, arc.R_arc)

    def gap(s: float) -> float:
        return (tri.A + u_bis * s).dist(arc.O) - (s * k + arc.R_arc)

    lo, g_lo = 0.0, gap(0.0)
    if g_lo < 0:
        raise NoRoot("vertex A is not outside the arc circle")
    hi = m.r / k * 0.25
    for _ in range(200):
        if gap(hi) < 0:
            break
        hi *= 1.5
    else:
        raise NoRoot("no external tangency along the bisector")
    for _ in range(200):
        mid_s = 0.5 * (lo + hi)
        g = gap(mid_s)
        if abs(g) <= 1e-13 * scale:
            break
        if g > 0:
            lo = mid_s
        else:
            hi = mid_s
    s = 0.5 * (lo + hi)
    return Circle2(tri.A + u_bis * s, s * k)


@dataclass(frozen=True)
class VariantCircle:
    circle: Circle2
    s: float                 # signed bisector parameter of the center
    tangency: str            # "external" | "internal"
    touch: Point2


@dataclass(frozen=True)
class VariantCircles:
    """All circles tangent to both side lines at A and to the arc circle.

    Classified by tangency kind and by which side of line BC the touch
    point lies on (A's side or the far side):

    c1: externally tangent, touch on A's side (the inscribed circle of
        the main construction when it applies).
    c2: internally tangent, touch on A's side (the inscribed circle of
        the extended case, radius r|1 - tan(A/2) tan(theta/4)|).
    c3: internally tangent, touch on the far side.
    c4: externally tangent, touch on the far side.
    """
    c1: VariantCircle | None
    c2: VariantCircle | None
    c3: VariantCircle | None
    c4: VariantCircle | None

    def present(self) -> list[tuple[str, VariantCircle]]:
        return [(n, v) for n, v in
                (("c1", self.c1), ("c2", self.c2),
                 ("c3", self.c3), ("c4", self.c4)) if v is not None]


def variant_circles(tri: Triangle, arc: ArcGeometry,
                    tol: Tolerance = DEFAULT_TOL) -> VariantCircles:
    """Solve for all four tangent variants analytically.

    With center A + s*u on the bisector line (s of either sign) the
    radius is |s| sin(A/2); each (sign of s, tangency kind) pair gives
    one quadratic in s.
    """
    m = tri.metrics()
    u_bis = _internal_bisector_dir(tri)
    k = math.sin(0.5 * m.angle_a)
    P0 = tri.A - arc.O
    R = arc.R_arc
    scale = max(m.a, m.b, m.c, R)
    found: list[VariantCircle] = []

    for sigma in (1.0, -1.0):          # sign of s on this branch
        for ext in (True, False):      # external vs internal tangency
            # |P0 + s u|^2 = (R +/- sigma*k*s)^2
            sign = 1.0 if ext else -1.0
            qa = 1.0 - k * k
            qb = 2.0 * (P0.dot(u_bis) - sign * sigma * k * R)
            qc = P0.dot(P0) - R * R
            disc = qb * qb - 4.0 * qa * qc
            if disc < 0:
                continue
            sq = math.sqrt(disc)
            for s in ((-qb - sq) / (2 * qa), (-qb + sq) / (2 * qa)):
                if sigma * s < -tol.eps(scale):
                    continue
                center = tri.A + u_bis * s
                radius = abs(s) * k
                d = center.dist(arc.O)
                res_ext = abs(d - (radius + R))
                res_int = abs(d - abs(radius - R))
                if ext and res_ext > tol.eps(scale):
                    continue
                if not ext and res_int > tol.eps(scale):
                    continue
                if d <= tol.eps(scale):
                    continue
                if any(abs(v.s - s) <= tol.eps(scale) for v in found):
                    continue
                if ext:
                    touch = center + (arc.O - center) * (radius / d)
                elif radius <= R:
                    # variant inside the arc circle: touch beyond the
                    # variant center as seen from O
                    touch = arc.O + (center - arc.O) * (R / d)
                else:
                    # variant contains the arc circle
                    touch = center + (arc.O - center) * (radius / d)
                found.append(VariantCircle(
                    Circle2(center, radius), s,
                    "external" if ext else "internal", touch))

    slots: dict[str, VariantCircle | None] = {
        "c1": None, "c2": None, "c3": None, "c4": None}
    side_bc = tri.C - tri.B
    side_a = side_bc.cross(tri.A - tri.B)
    for v in found:
        near = side_bc.cross(v.touch - tri.B) * side_a > 0
        if v.tangency == "external":
            name = "c1" if near else "c4"
        else:
            name = "c2" if near else "c3"
        if slots[name] is None:
            slots[name] = v
    return VariantCircles(**slots)


@dataclass(frozen=True)
class Lengths:
    """Closed-form lengths, paired with their measured counterparts."""

    AK: float
    AL_len: float
    ALp: float
    AX_len: float
    HK: float
    IF_len: float


def lengths_formula(m: TriangleMetrics, t_param: float) -> Lengths:
    a, b, c, p, r = m.a, m.b, m.c, m.p, m.r
    al = math.sqrt((p - a) * (a * p - (b - c) ** 2) / a)
    rho = ajima_radius(m, t_param)
    theta = 4.0 * math.atan(t_param)
    return Lengths(
        AK=p - a - r * t_param,
        AL_len=al,
        ALp=(1.0 - r * t_param / (p - a)) * al,
        AX_len=(p - a - r * t_param) * math.sqrt(a * (p - a))
        / math.sqrt(a * p - (b - c) ** 2),
        HK=r * t_param,
        IF_len=r / math.sin(0.5 * theta) if t_param > 0 else math.inf,
    )


def lengths_measured(cfg: AjimaConfiguration,
                     tol: Tolerance = DEFAULT_TOL) -> Lengths:
    tri = cfg.triangle
    X, Lp = cfg.require("X", "Lp")
    # F as in the parallel-line construction: through I parallel to BJ,
    # meeting AC
    (J,) = cfg.require("J")
    line_f = Line2(cfg.I, (J - tri.B).unit())
    F = intersect_lines(line_f, Line2.from_points(tri.A, tri.C), tol)
    if F is None:
        raise UndefinedPoint("parallel through I never meets AC")
    return Lengths(
        AK=tri.A.dist(cfg.E),
        AL_len=tri.A.dist(cfg.L),
        ALp=tri.A.dist(Lp),
        AX_len=tri.A.dist(X),
        HK=cfg.H.dist(cfg.E),
        IF_len=cfg.I.dist(F),
    )


def parallel_point_F(cfg: AjimaConfiguration,
                     tol: Tolerance = DEFAULT_TOL) -> Point2:
    """Point on AC cut by the line through I parallel to BJ."""
    tri = cfg.triangle
    (J,) = cfg.require("J")
    p = intersect_lines(Line2(cfg.I, (J - tri.B).unit()),
                        Line2.from_points(tri.A, tri.C), tol)
    if p is None:
        raise UndefinedPoint("line through I parallel to BJ misses AC")
    return p
