"""Triads of inscribed circles and their inner/outer Apollonius circles.

Two independent routes are provided for each Apollonius circle: the
touch-point construction (circumcircle of the three contact-cevian
intersections) and a damped-Newton tangency solver that knows nothing
about the closed forms.

Sign convention: the inner radius rho_i is signed.  Positive means the
inner circle is externally tangent to the triad circles (tW > 1);
negative means the triad circles are internally tangent to it (tW < 1),
and the geometric radius is |rho_i|.  All identities below use the
signed value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .kernel import (
    DEFAULT_TOL,
    Circle2,
    GeometryError,
    Line2,
    Point2,
    Tolerance,
    circle_through,
    radical_center,
)
from .triangle import Triangle, TriangleMetrics, bary_point
from .construction import (
    AjimaConfiguration,
    ArcGeometry,
    ExtendedCaseOnly,
    build_arc,
    build_gamma,
    t_of_theta,
)


class ConcurrentTriad(GeometryError):
    pass


class EquilateralDegenerate(GeometryError):
    pass


class SolverNoConvergence(GeometryError):
    pass


def interior_condition(m: TriangleMetrics, theta_deg: float) -> bool:
    """All three triad circles lie inside the triangle."""
    lim = math.radians(180.0 - 0.5 * theta_deg)
    return max(m.angle_a, m.angle_b, m.angle_c) < lim


@dataclass(frozen=True)
class Triad:
    """The three per-side configurations, all in one world frame.

    cfg_a is built on the original labeling; cfg_b and cfg_c on the
    cyclic relabelings that bring sides b and c into the working
    position.
    """

    triangle: Triangle
    thetas: tuple[float, float, float]
    cfg_a: AjimaConfiguration
    cfg_b: AjimaConfiguration
    cfg_c: AjimaConfiguration

    @property
    def configs(self) -> tuple[AjimaConfiguration, ...]:
        return (self.cfg_a, self.cfg_b, self.cfg_c)

    @property
    def circles(self) -> tuple[Circle2, Circle2, Circle2]:
        return tuple(c.gamma for c in self.configs)

    @property
    def arcs(self) -> tuple[ArcGeometry, ...]:
        return tuple(c.arc for c in self.configs)


def build_triad(tri: Triangle, theta_deg: float | None = None,
                thetas: tuple[float, float, float] | None = None,
                tol: Tolerance = DEFAULT_TOL) -> Triad:
    if (theta_deg is None) == (thetas is None):
        raise ValueError("give exactly one of theta_deg / thetas")
    if thetas is None:
        thetas = (theta_deg, theta_deg, theta_deg)
        if not interior_condition(tri.metrics(), theta_deg):
            raise ExtendedCaseOnly(
                f"interior condition fails for theta={theta_deg}")
    cfgs = []
    for k, th in enumerate(thetas):
        sub = tri.relabeled(k)
        cfgs.append(build_gamma(sub, build_arc(sub, th, side="abc"[k]), tol))
    return Triad(tri, thetas, *cfgs)


def rho_inner(m: TriangleMetrics, t_param: float) -> float:
    """Signed inner Apollonius radius r(tW - 1)."""
    return m.r * t_param * m.W - m.r


def rho_outer(m: TriangleMetrics, t_param: float) -> float:
    """Outer Apollonius radius r(tW/3 + 1)."""
    return m.r * t_param * m.W / 3.0 + m.r


@dataclass(frozen=True)
class ApolloniusResult:
    inner: Circle2          # geometric radius |rho_i|
    rho_i: float            # signed
    outer: Circle2
    rho_o: float
    U_touch: tuple[Point2, Point2, Point2]
    V_touch: tuple[Point2, Point2, Point2]


def inner_apollonius(triad: Triad,
                     tol: Tolerance = DEFAULT_TOL) -> tuple[Circle2, float,
                                                            tuple[Point2, ...]]:
    """Inner circle via the touch-point construction.

    Each touch point is where the contact cevian from a vertex meets
    that vertex's circle nearer the opposite side.  Near the triple
    concurrence (signed radius ~ 0) the circumcircle of the touch
    points is ill-conditioned and a point-circle at the Gergonne point
    is returned instead.
    """
    m = triad.triangle.metrics()
    t = triad.cfg_a.arc.t
    if abs(rho_inner(m, t)) <= 1e-9 * m.r:
        ge = triad.triangle.gergonne_point()
        return Circle2(ge, 0.0), 0.0, (ge, ge, ge)
    touches = tuple(c.require("Lp")[0] for c in triad.configs)
    circ = circle_through(*touches, tol)
    rho = _signed_mean_radius(circ.center, triad)
    return Circle2(circ.center, abs(rho)), rho, touches


def outer_apollonius(triad: Triad,
                     tol: Tolerance = DEFAULT_TOL) -> tuple[Circle2, float,
                                                            tuple[Point2, ...]]:
    """Outer circle: circumcircle of the near-vertex cevian intersections."""
    touches = tuple(c.require("X")[0] for c in triad.configs)
    circ = circle_through(*touches, tol)
    rho = sum(circ.center.dist(c.D) + c.rho for c in triad.configs) / 3.0
    return Circle2(circ.center, circ.radius), rho, touches


def _signed_mean_radius(center: Point2, triad: Triad) -> float:
    """Signed radius from d = rho_signed + rho_k (holds for both kinds)."""
    return sum(center.dist(c.D) - c.rho for c in triad.configs) / 3.0


def apollonius_result(triad: Triad,
                      tol: Tolerance = DEFAULT_TOL) -> ApolloniusResult:
    inner, rho_i, ut = inner_apollonius(triad, tol)
    outer, rho_o, vt = outer_apollonius(triad, tol)
    return ApolloniusResult(inner, rho_i, outer, rho_o, ut, vt)


# ---------------------------------------------------------------------------
# closed-form barycentric coordinates

def bary_D(m: TriangleMetrics, t_param: float) -> tuple[float, float, float]:
    a, b, c, p, area = m.a, m.b, m.c, m.p, m.area
    return (a * p * (p - a) + (b + c) * t_param * area,
            b * p * (p - a) - b * t_param * area,
            c * p * (p - a) - c * t_param * area)


def bary_Oa(m: TriangleMetrics, theta_deg: float) -> tuple[float, float, float]:
    """Arc-center coordinates, scaled by tan(phi) so the semicircle
    limit (phi = 0) stays finite."""
    a, b, c = m.a, m.b, m.c
    S = m.S
    S_b = 0.5 * (c * c + a * a - b * b)
    S_c = 0.5 * (a * a + b * b - c * c)
    half = 0.5 * math.radians(theta_deg)
    tan_phi = math.cos(half) / math.sin(half)   # cot(theta/2)
    return (-a * a * tan_phi, S_c * tan_phi + S, S_b * tan_phi + S)


def bary_T(m: TriangleMetrics, theta_deg: float) -> tuple[float, float, float]:
    a, b, c = m.a, m.b, m.c
    S = m.S
    th = math.radians(theta_deg)
    s4, c4 = math.sin(th / 4), math.cos(th / 4)
    c2 = math.cos(th / 2)
    c34 = math.cos(3 * th / 4)
    u = a * a - (b - c) ** 2
    tx = 2 * a * s4 * (a * u * c2 + (b + c) * u + 2 * a * S * math.sin(th / 2))
    ty = (-u * (2 * (a * a - b * c - c * c) * c2
                + a * a + 2 * a * b - (b + c) ** 2) * s4
          + 2 * S * (a * a + b * c - c * c) * c34
          + 2 * b * S * (2 * a + b - c) * c4)
    tz = (-u * (2 * (a * a - b * c - b * b) * c2
                + a * a + 2 * a * c - (b + c) ** 2) * s4
          + 2 * S * (a * a + b * c - b * b) * c34
          + 2 * c * S * (2 * a - b + c) * c4)
    return (tx, ty, tz)


def bary_Ua(m: TriangleMetrics, t_param: float) -> tuple[float, float, float]:
    a, p, S, t = m.a, m.p, m.S, t_param
    b, c = m.b, m.c
    g = S - 2 * (p - b) * (p - c) * t
    return (2 * a * (p - b) * (p - c) * t, (p - c) * g, (p - b) * g)


def bary_Va(m: TriangleMetrics, t_param: float) -> tuple[float, float, float]:
    a, p, S, t = m.a, m.p, m.S, t_param
    b, c = m.b, m.c
    g = S - 2 * (p - b) * (p - c) * t
    return (2 * (p - b) * (p - c) * (2 * S + a * (p - a) * t),
            (p - a) * (p - c) * g, (p - a) * (p - b) * g)


def _center_polys(m: TriangleMetrics,
                  t_param: float) -> tuple[float, float, float]:
    a, b, c, t = m.a, m.b, m.c, t_param
    x = (-2 * a ** 3 + a * a * (b + c) + (b - c) ** 2 * (b + c)) * t
    y = (a ** 3 - a * a * c + a * (b * b - c * c)
         + c ** 3 + b * b * c - 2 * b ** 3) * t
    z = (a ** 3 - a * a * b + a * (c * c - b * b)
         + b ** 3 + b * c * c - 2 * c ** 3) * t
    return x, y, z


def bary_U(m: TriangleMetrics, t_param: float) -> tuple[float, float, float]:
    x, y, z = _center_polys(m, t_param)
    S = m.S
    return (x - 2 * m.a * S, y - 2 * m.b * S, z - 2 * m.c * S)


def bary_V(m: TriangleMetrics, t_param: float) -> tuple[float, float, float]:
    x, y, z = _center_polys(m, t_param)
    S = m.S
    return (x + 6 * m.a * S, y + 6 * m.b * S, z + 6 * m.c * S)


# ---------------------------------------------------------------------------
# Soddy line

@dataclass(frozen=True)
class SoddyLine:
    """Signed positions along the incenter-Gergonne line.

    Parameters are measured from the Gergonne point, oriented so the
    incenter sits at +|G_e I|.
    """

    s_U: float
    s_I: float
    s_V: float
    collinearity: float     # max dimensionless offset of U, V from the line

    @property
    def ratio_UI_IV(self) -> float:
        return (self.s_I - self.s_U) / (self.s_V - self.s_I)

    def ordering(self) -> tuple[str, ...]:
        named = sorted([("Ge", 0.0), ("U", self.s_U), ("I", self.s_I),
                        ("V", self.s_V)], key=lambda kv: kv[1])
        return tuple(k for k, _ in named)


def soddy_line(tri: Triangle, res: ApolloniusResult,
               tol: Tolerance = DEFAULT_TOL) -> SoddyLine:
    ge = tri.gergonne_point()
    inc = tri.incenter()
    m = tri.metrics()
    gap = ge.dist(inc)
    if gap <= tol.eps(m.r):
        raise EquilateralDegenerate(
            "incenter and Gergonne point coincide; the line is undefined")
    axis = Line2(ge, (inc - ge).unit())
    scale = max(m.a, m.b, m.c)
    coll = max(axis.dist(res.inner.center), axis.dist(res.outer.center)) / scale
    return SoddyLine(
        s_U=axis.param_of(res.inner.center),
        s_I=gap,
        s_V=axis.param_of(res.outer.center),
        collinearity=coll,
    )


# ---------------------------------------------------------------------------
# generic tangency solver

def generic_apollonius_oracle(c1: Circle2, c2: Circle2, c3: Circle2,
                              pattern: str = "external",
                              seed: Point2 | None = None,
                              tol: Tolerance = DEFAULT_TOL) -> tuple[Circle2,
                                                                     float]:
    """Circle tangent to three circles, by damped Newton iteration.

    pattern "external": solves d_k = rho + r_k with rho signed, which
    covers both a circle externally tangent to all three (rho > 0) and
    one internally tangent to all three (rho < 0).
    pattern "containing": solves d_k = rho - r_k, the circle enclosing
    all three.

    Returns (circle with geometric radius, signed rho).
    """
    circles = (c1, c2, c3)
    if pattern not in ("external", "containing"):
        raise ValueError(f"unknown pattern {pattern!r}")
    sgn = 1.0 if pattern == "external" else -1.0
    scale = max(max(c.radius for c in circles),
                max(ci.center.dist(cj.center)
                    for ci in circles for cj in circles))
    if seed is None:
        try:
            seed = circle_through(*(c.center for c in circles), tol).center
        except GeometryError:
            seed = Point2(
                sum(c.center.x for c in circles) / 3.0,
                sum(c.center.y for c in circles) / 3.0)
    x, y = seed.x, seed.y
    rho = sum(seed.dist(c.center) - sgn * c.radius for c in circles) / 3.0

    def residuals(px: float, py: float, pr: float) -> list[float]:
        return [math.hypot(px - c.center.x, py - c.center.y)
                - sgn * c.radius - pr for c in circles]

    f = residuals(x, y, rho)
    norm = max(abs(v) for v in f)
    for _ in range(120):
        if norm <= 1e-13 * scale:
            break
        jac = []
        for c in circles:
            d = math.hypot(x - c.center.x, y - c.center.y)
            if d <= 1e-15 * scale:
                raise SolverNoConvergence("iterate hit a circle center")
            jac.append(((x - c.center.x) / d, (y - c.center.y) / d, -1.0))
        try:
            dx, dy, dr = _solve3(jac, [-v for v in f])
        except ZeroDivisionError:
            raise SolverNoConvergence("singular Jacobian")
        step = 1.0
        for _ in range(40):
            f_new = residuals(x + step * dx, y + step * dy, rho + step * dr)
            n_new = max(abs(v) for v in f_new)
            if n_new < norm:
                x, y, rho = x + step * dx, y + step * dy, rho + step * dr
                f, norm = f_new, n_new
                break
            step *= 0.5
        else:
            raise SolverNoConvergence(
                f"line search stalled at residual {norm:.3e}")
    else:
        raise SolverNoConvergence(f"no convergence; residual {norm:.3e}")
    return Circle2(Point2(x, y), abs(rho)), rho


def _solve3(a: list[tuple[float, float, float]], b: list[float]) -> tuple:
    """Cramer's rule for a 3x3 system."""
    def det3(m):
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))

    d = det3(a)
    if d == 0:
        raise ZeroDivisionError
    cols = []
    for j in range(3):
        mj = [list(row) for row in a]
        for i in range(3):
            mj[i][j] = b[i]
        cols.append(det3(mj) / d)
    return tuple(cols)


# ---------------------------------------------------------------------------
# algebraic three-circle tangency

def algebraic_tangent_circles(c1: Circle2, c2: Circle2, c3: Circle2,
                              taus: tuple[int, int, int] = (1, 1, 1),
                              ) -> list[tuple[Circle2, float]]:
    """Both circles solving d_k = R_k + tau_k * rho in closed form.

    Subtracting pairs of the squared distance equations leaves two
    linear equations in the center, so the center is an affine function
    of rho and the remaining equation is a quadratic in rho.  Returns
    up to two (circle, signed rho) pairs; rho < 0 means the tangency
    orientation per circle is flipped relative to tau_k.
    """
    circles = (c1, c2, c3)
    ctr = [c.center for c in circles]
    rad = [c.radius for c in circles]
    scale = max(max(rad), max(p.dist(q) for p in ctr for q in ctr))
    rows, rhs0, rhs1 = [], [], []
    for j in (1, 2):
        rows.append((2.0 * (ctr[j].x - ctr[0].x), 2.0 * (ctr[j].y - ctr[0].y)))
        rhs0.append((ctr[j].dot(ctr[j]) - ctr[0].dot(ctr[0]))
                    - (rad[j] ** 2 - rad[0] ** 2))
        rhs1.append(-2.0 * (taus[j] * rad[j] - taus[0] * rad[0]))
    det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if abs(det) <= 1e-14 * scale * scale:
        raise SolverNoConvergence("circle centers are collinear or coincide")
    x0 = (rhs0[0] * rows[1][1] - rows[0][1] * rhs0[1]) / det
    y0 = (rows[0][0] * rhs0[1] - rhs0[0] * rows[1][0]) / det
    x1 = (rhs1[0] * rows[1][1] - rows[0][1] * rhs1[1]) / det
    y1 = (rows[0][0] * rhs1[1] - rhs1[0] * rows[1][0]) / det
    ex, ey = x0 - ctr[0].x, y0 - ctr[0].y
    qa = x1 * x1 + y1 * y1 - taus[0] * taus[0]
    qb = 2.0 * (ex * x1 + ey * y1) - 2.0 * rad[0] * taus[0]
    qc = ex * ex + ey * ey - rad[0] ** 2
    roots: list[float] = []
    if abs(qa) <= 1e-14:
        if abs(qb) > 1e-14 * scale:
            roots = [-qc / qb]
    else:
        disc = qb * qb - 4.0 * qa * qc
        if disc >= 0.0:
            sq = math.sqrt(disc)
            roots = [(-qb - sq) / (2.0 * qa), (-qb + sq) / (2.0 * qa)]
    return [(Circle2(Point2(x0 + x1 * rho, y0 + y1 * rho), abs(rho)), rho)
            for rho in roots]


def inner_tangent_circle(c1: Circle2, c2: Circle2,
                         c3: Circle2) -> tuple[Circle2, float]:
    """The inner Apollonius circle of three circles: the smaller-|rho|
    root of d_k = R_k + rho.  Positive rho is externally tangent to all
    three; negative rho sits inside each of them."""
    sols = algebraic_tangent_circles(c1, c2, c3)
    if not sols:
        raise SolverNoConvergence("no common tangent circle exists")
    return min(sols, key=lambda s: abs(s[1]))


# ---------------------------------------------------------------------------
# unequal-angular-measure tangency

@dataclass(frozen=True)
class MiyamotoResult:
    gamma_inner: Circle2
    omega_inner: Circle2
    touch_residual: float   # dimensionless internal-tangency residual
    internal: bool          # True when one circle contains the other


def miyamoto_tangency(tri: Triangle, theta_a: float, theta_b: float,
                      theta_c: float,
                      tol: Tolerance = DEFAULT_TOL) -> MiyamotoResult:
    """Inner Apollonius circle of the three inscribed circles is
    internally tangent to that of the three arc circles, even when the
    per-side angular measures differ.

    Neither inner circle has a closed form here; both come from the
    algebraic solver.  Internal tangency holds throughout the regime
    where each angular measure is at least 120 degrees (and in much of
    the wider range); outside it the two circles can instead be
    externally tangent, which the result reports via ``internal``.
    """
    triad = build_triad(tri, thetas=(theta_a, theta_b, theta_c), tol=tol)
    g_circ, _ = inner_tangent_circle(*triad.circles)
    o_circ, _ = inner_tangent_circle(*(a.circle for a in triad.arcs))
    m = tri.metrics()
    scale = max(m.a, m.b, m.c)
    d = g_circ.center.dist(o_circ.center)
    res_int = abs(d - abs(o_circ.radius - g_circ.radius)) / scale
    res_ext = abs(d - (o_circ.radius + g_circ.radius)) / scale
    return MiyamotoResult(g_circ, o_circ, min(res_int, res_ext),
                          internal=res_int <= res_ext)


def triad_radical_center(triad: Triad,
                         tol: Tolerance = DEFAULT_TOL) -> Point2:
    return radical_center(*triad.circles, tol)
