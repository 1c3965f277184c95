"""Scalar identity suites for the triad of inscribed-circle radii.

Two families: symmetric functions of the three radii rho_a, rho_b,
rho_c (with t = tan(theta/4) and W = (4R + r)/p), and scaling laws
relating a configuration at angular measure theta to the semicircle
baseline theta = 180 degrees, where every starred quantity is the same
measurement taken at t = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .kernel import DEFAULT_TOL, GeometryError, Tolerance
from .triangle import Triangle, TriangleMetrics
from .construction import UndefinedPoint, t_of_theta
from .apollonius import (
    Triad,
    build_triad,
    inner_apollonius,
    rho_inner,
    rho_outer,
)

__all__ = [
    "IdentityResult", "TriadScalars", "SemicircleBaseline",
    "triad_scalars", "semicircle_baseline", "identity_suite",
    "radius_relation_suite", "scaling_suite", "sin_double_angle_residual",
]


@dataclass(frozen=True)
class IdentityResult:
    identity: str
    residual: float              # |lhs - rhs| / largest term magnitude
    applicable: bool = True
    reason: str = ""

    def passes(self, threshold: float = 1e-9) -> bool:
        return self.applicable and self.residual <= threshold


@dataclass(frozen=True)
class TriadScalars:
    """Radii of the three inscribed circles and of the three arcs for
    one (triangle, theta) configuration."""

    tri: Triangle
    m: TriangleMetrics
    theta_deg: float
    t_param: float
    rho_a: float
    rho_b: float
    rho_c: float
    R_a: float
    R_b: float
    R_c: float

    @property
    def rhos(self) -> tuple[float, float, float]:
        return (self.rho_a, self.rho_b, self.rho_c)

    @property
    def arc_radii(self) -> tuple[float, float, float]:
        return (self.R_a, self.R_b, self.R_c)


def triad_scalars(tri: Triangle, theta_deg: float) -> TriadScalars:
    m = tri.metrics()
    t = t_of_theta(theta_deg)
    sin_half = math.sin(0.5 * math.radians(theta_deg))
    halves = (m.angle_a / 2.0, m.angle_b / 2.0, m.angle_c / 2.0)
    rho = [m.r * (1.0 - math.tan(h) * t) for h in halves]
    arc = [0.5 * side / sin_half for side in (m.a, m.b, m.c)]
    return TriadScalars(tri, m, theta_deg, t, *rho, *arc)


def _residual(lhs: float, rhs: float, terms: tuple[float, ...]) -> float:
    scale = max(abs(lhs), abs(rhs), *(abs(v) for v in terms))
    if scale == 0.0:
        return 0.0
    return abs(lhs - rhs) / scale


# ---------------------------------------------------------------------------
# symmetric functions of the three radii

def identity_suite(s: TriadScalars) -> list[IdentityResult]:
    """The elementary symmetric functions of r - rho and of rho."""
    r, t, W, p = s.m.r, s.t_param, s.m.W, s.m.p
    ra, rb, rc = s.rhos
    da, db, dc = r - ra, r - rb, r - rc
    out = []

    out.append(IdentityResult(
        "sum_r_minus_rho",
        _residual(da + db + dc, r * t * W, (da, db, dc))))
    out.append(IdentityResult(
        "sum_pairs_r_minus_rho",
        _residual(da * db + db * dc + dc * da, r * r * t * t,
                  (da * db, db * dc, dc * da))))
    out.append(IdentityResult(
        "product_r_minus_rho",
        _residual(da * db * dc, r ** 4 * t ** 3 / p, (da * db * dc,))))
    out.append(IdentityResult(
        "sum_rho",
        _residual(ra + rb + rc, 3.0 * r - r * t * W, (ra, rb, rc))))
    out.append(IdentityResult(
        "sum_pairs_rho",
        _residual(ra * rb + rb * rc + rc * ra,
                  r * r * (t * t - 2.0 * t * W + 3.0),
                  (ra * rb, rb * rc, rc * ra))))
    out.append(IdentityResult(
        "sum_squares_rho",
        _residual(ra * ra + rb * rb + rc * rc,
                  r * r * (3.0 - 2.0 * t * W + (W * W - 2.0) * t * t),
                  (ra * ra, rb * rb, rc * rc))))
    out.append(IdentityResult(
        "product_rho",
        _residual(ra * rb * rc,
                  r ** 3 * (1.0 - t * W + t * t - (r / p) * t ** 3),
                  (ra * rb * rc, r ** 3))))
    return out


# ---------------------------------------------------------------------------
# relations between rho, the arc radius, r and R

def radius_relation_suite(s: TriadScalars) -> list[IdentityResult]:
    """Per-vertex relations tying an inscribed-circle radius to the arc
    radius on the opposite side."""
    out = []
    m, t = s.m, s.t_param
    r, R = m.r, m.R
    sides = (m.a, m.b, m.c)
    angles = (m.angle_a, m.angle_b, m.angle_c)
    for name, side, rho, Ra, ang in zip("abc", sides, s.rhos,
                                        s.arc_radii, angles):
        # a^2 rho^2 (2r - rho)^2
        #   + 16 r (r - rho)(rR - rRa - rho R)(rR - rRa + rho Ra) = 0
        t1 = (side * rho * (2.0 * r - rho)) ** 2
        t2 = 16.0 * r * (r - rho) * (r * R - r * Ra - rho * R) \
            * (r * R - r * Ra + rho * Ra)
        out.append(IdentityResult(
            f"radius_polynomial_{name}",
            _residual(t1 + t2, 0.0, (t1, t2))))

        # Ra/(rR) = (r - rho)(1 + t^2) / ((r - rho)^2 + r^2 t^2)
        denom = (r - rho) ** 2 + (r * t) ** 2
        if denom <= 0.0:
            out.append(IdentityResult(
                f"arc_radius_relation_{name}", math.inf, False,
                "degenerate at t = 0 with rho = r"))
        else:
            out.append(IdentityResult(
                f"arc_radius_relation_{name}",
                _residual(Ra / (r * R),
                          (r - rho) * (1.0 + t * t) / denom,
                          (Ra / (r * R),))))

        # t^2 = (r - rho)(rho Ra + rR - rRa) / (r (R rho + rRa - rR))
        denom = r * (R * rho + r * Ra - r * R)
        if abs(denom) <= 1e-14 * (r * R) ** 2:
            out.append(IdentityResult(
                f"t_squared_relation_{name}", math.inf, False,
                "denominator vanishes"))
        else:
            out.append(IdentityResult(
                f"t_squared_relation_{name}",
                _residual(t * t,
                          (r - rho) * (rho * Ra + r * R - r * Ra) / denom,
                          (t * t, 1.0))))

        # at theta = 360 - 4*vertex angle: rho = 2 r Ra / (R + 2 Ra)
        th_special = 360.0 - 4.0 * math.degrees(ang)
        if not 1.0 <= th_special <= 359.0:
            out.append(IdentityResult(
                f"special_theta_{name}", math.inf, False,
                "360 - 4A is outside (0, 360)"))
        else:
            ts = t_of_theta(th_special)
            rho_s = r * (1.0 - math.tan(ang / 2.0) * ts)
            Ra_s = 0.5 * side / math.sin(0.5 * math.radians(th_special))
            out.append(IdentityResult(
                f"special_theta_{name}",
                _residual(rho_s, 2.0 * r * Ra_s / (R + 2.0 * Ra_s),
                          (rho_s, r))))
    return out


# ---------------------------------------------------------------------------
# scaling against the semicircle baseline

@dataclass(frozen=True)
class SemicircleBaseline:
    """Every starred quantity: the same measurement at t = 1."""

    scalars: TriadScalars
    rho_i_star: float
    rho_o_star: float
    centers_star: tuple        # (D_a*, D_b*, D_c*)
    d_star: tuple[float, float, float] | None   # |U* - D_k*|
    na_reason: str = ""


def semicircle_baseline(tri: Triangle,
                        tol: Tolerance = DEFAULT_TOL) -> SemicircleBaseline:
    """Baseline quantities at t = 1, from the signed closed forms.

    The signed radius and the center position D = A + u (rho / sin(A/2))
    along the internal bisector continue analytically to obtuse
    triangles, where the semicircle circle itself would be the external
    variant; the scaling relations hold for the signed values.
    """
    s = triad_scalars(tri, 180.0)
    m = tri.metrics()
    centers = []
    for k in range(3):
        sub = tri.relabeled(k)
        mm = sub.metrics()
        u_bis = ((sub.B - sub.A).unit() + (sub.C - sub.A).unit()).unit()
        rho = mm.r * (1.0 - mm.r / (mm.p - mm.a))
        centers.append(sub.A + u_bis * (rho / math.sin(0.5 * mm.angle_a)))
    rho_i_star = rho_inner(m, 1.0)
    d_star = tuple(rho_i_star + rho for rho in s.rhos)
    return SemicircleBaseline(s, rho_i_star, rho_outer(m, 1.0),
                              tuple(centers), d_star, "")


def scaling_suite(s: TriadScalars, base: SemicircleBaseline,
                  tol: Tolerance = DEFAULT_TOL) -> list[IdentityResult]:
    """Every relation of the form x = t * x_star, plus the closed forms
    for the center-to-center distances."""
    m, t, r = s.m, s.t_param, s.m.r
    sb = base.scalars
    out = []

    for name, rho, rho_star in zip("abc", s.rhos, sb.rhos):
        out.append(IdentityResult(
            f"rho_minus_r_scaling_{name}",
            _residual(rho - r, t * (rho_star - r), (rho, r))))
    pairs = (("ab", s.rho_a - s.rho_b, sb.rho_a - sb.rho_b),
             ("bc", s.rho_b - s.rho_c, sb.rho_b - sb.rho_c),
             ("ca", s.rho_c - s.rho_a, sb.rho_c - sb.rho_a))
    for name, diff, diff_star in pairs:
        out.append(IdentityResult(
            f"rho_difference_scaling_{name}",
            _residual(diff, t * diff_star, (r,))))

    out.append(IdentityResult(
        "inner_radius_scaling",
        _residual(rho_inner(m, t) + r, t * (base.rho_i_star + r), (r,))))
    out.append(IdentityResult(
        "outer_radius_scaling",
        _residual(rho_outer(m, t) - r, t * (base.rho_o_star - r), (r,))))

    # measured distances need the constructed triad
    try:
        triad = build_triad(s.tri, thetas=(s.theta_deg,) * 3, tol=tol)
    except (GeometryError, UndefinedPoint) as exc:
        out.append(IdentityResult("center_distance_scaling", math.inf,
                                  False, f"triad not constructible: {exc}"))
        return out
    centers = tuple(c.D for c in triad.configs)

    # common external tangent length between two circles
    def tangent_len(i: int, j: int, ctrs, rhos) -> float:
        d2 = ctrs[i].dist(ctrs[j]) ** 2 - (rhos[i] - rhos[j]) ** 2
        return math.sqrt(max(d2, 0.0))

    for name, (i, j) in (("ab", (0, 1)), ("bc", (1, 2)), ("ca", (2, 0))):
        d_ij = centers[i].dist(centers[j])
        d_star = base.centers_star[i].dist(base.centers_star[j])
        out.append(IdentityResult(
            f"center_distance_scaling_{name}",
            _residual(d_ij, t * d_star, (d_ij, r))))
        t_ij = tangent_len(i, j, centers, s.rhos)
        t_star = tangent_len(i, j, base.centers_star, sb.rhos)
        out.append(IdentityResult(
            f"tangent_length_scaling_{name}",
            _residual(t_ij, t * t_star, (t_ij, r))))
        out.append(IdentityResult(
            f"tangent_length_value_{name}",
            _residual(t_ij, 2.0 * r * t, (t_ij, r))))
        if d_star > 0.0:
            out.append(IdentityResult(
                f"similar_centers_ratio_{name}",
                _residual(d_ij / d_star, t, (t, 1.0))))
        else:
            out.append(IdentityResult(
                f"similar_centers_ratio_{name}", math.inf, False,
                "baseline centers coincide"))

    # closed forms for the center distances (u between the circles at B
    # and C, then cyclically)
    a, b, c, p = m.a, m.b, m.c, m.p
    u2 = a * (p - a) * (a * p - (b - c) ** 2) * t * t / p ** 2
    v2 = b * (p - b) * (b * p - (c - a) ** 2) * t * t / p ** 2
    w2 = c * (p - c) * (c * p - (a - b) ** 2) * t * t / p ** 2
    for name, (i, j), sq in (("u", (1, 2), u2), ("v", (0, 2), v2),
                             ("w", (0, 1), w2)):
        meas = centers[i].dist(centers[j]) ** 2
        out.append(IdentityResult(
            f"center_distance_form_{name}",
            _residual(meas, sq, (meas, (r * t) ** 2))))

    # d_a - d_b = t (d_a* - d_b*) with d the distance from the inner
    # Apollonius center to each circle center
    if base.d_star is None:
        out.append(IdentityResult("inner_center_distance_scaling", math.inf,
                                  False, base.na_reason))
    else:
        try:
            inner, _, _ = inner_apollonius(triad, tol)
            d_now = tuple(inner.center.dist(D) for D in centers)
            for name, (i, j) in (("ab", (0, 1)), ("bc", (1, 2)),
                                 ("ca", (2, 0))):
                out.append(IdentityResult(
                    f"inner_center_distance_scaling_{name}",
                    _residual(d_now[i] - d_now[j],
                              t * (base.d_star[i] - base.d_star[j]), (r,))))
        except (GeometryError, UndefinedPoint) as exc:
            out.append(IdentityResult(
                "inner_center_distance_scaling", math.inf, False,
                f"inner circle not constructible: {exc}"))
    return out


def sin_double_angle_residual(x: float) -> float:
    """sin 2x = 2 tan x / (tan^2 x + 1), for any x where tan x exists."""
    tx = math.tan(x)
    return abs(math.sin(2.0 * x) - 2.0 * tx / (tx * tx + 1.0))
