"""Named verification predicates over the arc-and-inscribed-circle
configuration.

Each check is a pure function of a :class:`~ajima.verify.SampleContext`
returning an :class:`Outcome` whose residual is dimensionless (angles in
radians, lengths normalized by the largest side, powers by its square).
Checks signal inapplicability by raising :class:`NotApplicable`; any
:class:`~ajima.kernel.GeometryError` escaping a check is treated the
same way by the harness.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .kernel import (Circle2, GeometryError, Line2, Point2, circle_through,
                     intersect_line_circle, intersect_lines, midpoint,
                     radical_center, angle_at)
from .triangle import Triangle, bary_point
from .construction import (ajima_oracle, ajima_radius, arc_radius, build_arc,
                           lengths_formula, lengths_measured,
                           parallel_point_F, t_of_theta)
from .apollonius import (bary_D, bary_Oa, bary_T, bary_U, bary_Ua, bary_V,
                         bary_Va, generic_apollonius_oracle,
                         inner_tangent_circle, interior_condition,
                         miyamoto_tangency, rho_inner, rho_outer)
from . import identities


class NotApplicable(Exception):
    """Raised by a check when the sample is outside its validity domain."""

    def __init__(self, reason: str) -> None:
        super().__init__(reason)
        self.reason = reason


@dataclass(frozen=True)
class Outcome:
    residual: float
    witness: dict[str, tuple[float, float]] = field(default_factory=dict)


REGISTRY: dict = {}


def check(check_id: str):
    def wrap(fn):
        REGISTRY[check_id] = fn
        return fn
    return wrap


# ---------------------------------------------------------------------------
# residual helpers

def _unit(v: Point2) -> Point2:
    return v.unit()


def _parallel(u: Point2, v: Point2) -> float:
    return abs(_unit(u).cross(_unit(v)))


def _perp(u: Point2, v: Point2) -> float:
    return abs(_unit(u).dot(_unit(v)))


def _collinear(p: Point2, q: Point2, r: Point2, scale: float) -> float:
    return abs((q - p).cross(r - p)) / ((q - p).norm() * scale)


def _angles_equal(a1: float, a2: float) -> float:
    return abs(a1 - a2)


def _concyclic(points: list[Point2], scale: float) -> float:
    circ = circle_through(points[0], points[1], points[2])
    return max(abs(pt.dist(circ.center) - circ.radius)
               for pt in points[3:]) / scale


def _concurrent(lines: list[Line2], scale: float) -> tuple[float, Point2]:
    # intersect the best-conditioned pair, measure the third line's miss
    pairs = [(0, 1, 2), (0, 2, 1), (1, 2, 0)]
    i, j, k = max(pairs, key=lambda ijk:
                  abs(lines[ijk[0]].d.unit().cross(lines[ijk[1]].d.unit())))
    p = intersect_lines(lines[i], lines[j])
    return lines[k].dist(p) / scale, p


def _bisects_line(u: Point2, d1: Point2, d2: Point2) -> float:
    """u lies along one of the two bisector lines of directions d1, d2."""
    best = math.inf
    for w in (d1.unit() + d2.unit(), d1.unit() - d2.unit()):
        n = w.norm()
        if n > 1e-14:
            best = min(best, abs(u.unit().cross(w * (1.0 / n))))
    return best


def _bisects_internal(u: Point2, d1: Point2, d2: Point2) -> float:
    w = d1.unit() + d2.unit()
    n = w.norm()
    if n < 1e-14:
        raise NotApplicable("opposite rays: bisector direction undefined")
    return abs(u.unit().cross(w * (1.0 / n)))


def _tangent_length(p: Point2, c: Circle2) -> float:
    d2 = p.dist(c.center) ** 2 - c.radius ** 2
    if d2 < 0:
        raise NotApplicable("point inside circle: no tangent")
    return math.sqrt(d2)


def _power(p: Point2, c: Circle2) -> float:
    return p.dist(c.center) ** 2 - c.radius ** 2


def _wit(**pts: Point2) -> dict[str, tuple[float, float]]:
    return {k: (v.x, v.y) for k, v in pts.items()}


# ---------------------------------------------------------------------------
# P: single-configuration synthetic results (all on the side-a frame)


@check("P01_protasov")
def p01(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    tri = cfg.triangle
    T, I = cfg.T, cfg.I
    res = _bisects_internal(I - T, tri.B - T, tri.C - T)
    return Outcome(res, _wit(T=T))


@check("P02_tangent_ratio")
def p02(ctx) -> Outcome:
    # tangents from B and C to *any* circle externally tangent to the
    # arc satisfy BU/CV = BT/CT; exercise a random such circle
    cfg = ctx.cfg(0)
    tri, arc = cfg.triangle, cfg.arc
    ub = math.atan2(tri.B.y - arc.O.y, tri.B.x - arc.O.x)
    uc = math.atan2(tri.C.y - arc.O.y, tri.C.x - arc.O.x)
    ua = math.atan2(arc.apex.y - arc.O.y, arc.apex.x - arc.O.x)
    # walk from B toward C through the apex
    def ccw_span(f, t):
        return (t - f) % (2 * math.pi)
    if ccw_span(ub, ua) <= ccw_span(ub, uc):
        phi = ub + ccw_span(ub, uc) * ctx.rng.uniform(0.15, 0.85)
    else:
        phi = ub - ccw_span(uc, ub) * ctx.rng.uniform(0.15, 0.85)
    T0 = arc.O + Point2(math.cos(phi), math.sin(phi)) * arc.R_arc
    s = ctx.rng.uniform(0.05, 0.4) * min(arc.R_arc, ctx.scale)
    circ = Circle2(arc.O + (T0 - arc.O) * (1.0 + s / arc.R_arc), s)
    bu = _tangent_length(tri.B, circ)
    cv = _tangent_length(tri.C, circ)
    bt, ct = tri.B.dist(T0), tri.C.dist(T0)
    if min(cv, ct) < 1e-9 * ctx.scale:
        raise NotApplicable("touch point too close to a vertex")
    return Outcome(abs(bu / cv - bt / ct), _wit(T=T0))


@check("P03_result12")
def p03(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    tri = cfg.triangle
    (Z,) = cfg.require("Z")
    bf, ce = tri.B.dist(cfg.F_t), tri.C.dist(cfg.E)
    bz, cz = tri.B.dist(Z), tri.C.dist(Z)
    if min(ce, cz) < 1e-9 * ctx.scale:
        raise NotApplicable("ratio denominator vanishes")
    return Outcome(abs(bf / ce - bz / cz), _wit(Z=Z))


@check("P04_catalytic")
def p04(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    return Outcome(_concyclic([cfg.E, cfg.T, cfg.triangle.C, cfg.I],
                              ctx.scale))


@check("P05_result3")
def p05(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    tri = cfg.triangle
    a1 = angle_at(tri.B, cfg.T, tri.C)
    a2 = angle_at(cfg.I, cfg.E, tri.C)
    return Outcome(_angles_equal(a1, 2.0 * a2))


@check("P06_thailand")
def p06(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    tri = cfg.triangle
    (J,) = cfg.require("J")
    # J must lie strictly between A and C for triangle BJC to make sense
    lam = Line2.from_points(tri.A, tri.C).param_of(J) / tri.A.dist(tri.C)
    if not 1e-9 < lam < 1 - 1e-9:
        raise NotApplicable("arc point J not interior to side AC")
    jc, bc, bj = J.dist(tri.C), tri.B.dist(tri.C), tri.B.dist(J)
    w = jc + bc - bj
    if abs(w) < 1e-12 * ctx.scale:
        raise NotApplicable("excenter weights vanish")
    x_ex = (tri.B * jc + J * bc - tri.C * bj) * (1.0 / w)
    return Outcome(_collinear(cfg.F_t, cfg.E, x_ex, ctx.scale), _wit(X=x_ex))


@check("P07_rg13069")
def p07(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    return Outcome(_collinear(cfg.T, cfg.I, cfg.N, ctx.scale))


@check("P08_midarc")
def p08(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    tri = cfg.triangle
    return Outcome(_angles_equal(angle_at(cfg.N, tri.B, tri.C),
                                 angle_at(tri.B, tri.C, cfg.N)))


@check("P09_rg13164")
def p09(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    (J,) = cfg.require("J")
    return Outcome(_parallel(cfg.E - cfg.I, J - cfg.N))


@check("P10_rg13066")
def p10(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    F = parallel_point_F(cfg)
    return Outcome(abs(cfg.I.dist(F) - F.dist(cfg.E)) / ctx.scale, _wit(F=F))


@check("P11_result8")
def p11(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    tri = cfg.triangle
    foot = Line2.from_points(tri.B, tri.C).foot(cfg.T)
    a1 = angle_at(tri.B, cfg.T, foot)
    a2 = angle_at(cfg.arc.O, cfg.T, tri.C)
    return Outcome(_angles_equal(a1, a2))


@check("P12_result6")
def p12(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    a1 = angle_at(cfg.Mid, cfg.arc.O, cfg.T)
    a2 = angle_at(cfg.I, cfg.T, cfg.arc.O)
    if cfg.arc.theta < 180.0:
        # the doubled angle may open past a straight angle
        return Outcome(min(abs(a1 - 2.0 * a2),
                           abs(a1 - (2.0 * math.pi - 2.0 * a2))))
    # reflex arc: the center crosses BC and the inscribed-angle
    # relation reflects at the semicircle
    return Outcome(abs(a1 - abs(math.pi - 2.0 * a2)))


@check("P13_result9")
def p13(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    (Tp,) = cfg.require("Tp")
    tri = cfg.triangle
    return Outcome(_perp(Tp - cfg.D, tri.C - tri.B))


@check("P14_result10")
def p14(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    (Tp,) = cfg.require("Tp")
    tri = cfg.triangle
    a1 = angle_at(cfg.E, cfg.D, Tp)
    a2 = angle_at(tri.A, tri.C, tri.B)
    return Outcome(_angles_equal(a1, a2))


@check("P15_result24")
def p15(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    (Lp,) = cfg.require("Lp")
    tri = cfg.triangle
    return Outcome(_perp(Lp - cfg.D, tri.C - tri.B))


@check("P16_result27")
def p16(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    (Lp,) = cfg.require("Lp")
    tri = cfg.triangle
    tangent_dir = (Lp - cfg.D).perp()
    return Outcome(_parallel(tangent_dir, tri.C - tri.B))


@check("P17_result25")
def p17(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    Y, Lp, Yp, T_in = cfg.require("Y", "Lp", "Yp", "T_in")
    res = max(_parallel(Lp - Y, cfg.L - Yp),
              _parallel(cfg.T - Lp, T_in - cfg.L),
              _parallel(cfg.D - Y, cfg.I - Yp))
    return Outcome(res)


@check("P18_result13")
def p18(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    X, Lp = cfg.require("X", "Lp")
    tri = cfg.triangle
    a1 = angle_at(X, cfg.T, Lp)
    a2 = angle_at(X, cfg.L, tri.B)
    return Outcome(_angles_equal(a1, a2))


@check("P19_result17")
def p19(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    X, Lp = cfg.require("X", "Lp")
    tri = cfg.triangle
    l1 = Line2.from_points(cfg.T, Lp)
    l2 = Line2.from_points(tri.C, tri.B)
    if _parallel(l1.d, l2.d) < 1e-12:
        raise NotApplicable("TL' parallel to CB: K undefined")
    K_g = intersect_lines(l1, l2)
    circ = circle_through(X, cfg.T, cfg.L)
    d = K_g.dist(circ.center)
    # K runs off to infinity as TL' approaches parallel to CB; scale the
    # residual by its own distance to keep the test well conditioned
    res = abs(d - circ.radius) / max(ctx.scale, d)
    return Outcome(res, _wit(K=K_g))


@check("P20_ext_bisector")
def p20(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    (Lp,) = cfg.require("Lp")
    tri = cfg.triangle
    ext = (tri.B - cfg.T).unit() - (tri.C - cfg.T).unit()
    if ext.norm() < 1e-14:
        raise NotApplicable("degenerate external bisector")
    return Outcome(_parallel(Lp - cfg.T, ext))


@check("P21_result18")
def p21(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    (Lp,) = cfg.require("Lp")
    tri = cfg.triangle
    lines = [Line2.from_points(cfg.E, cfg.F_t),
             Line2.from_points(cfg.T, Lp),
             Line2.from_points(tri.C, tri.B)]
    res, p = _concurrent(lines, ctx.scale)
    return Outcome(res, _wit(P=p))


@check("P22_result19")
def p22(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    Y, X, Lp = cfg.require("Y", "X", "Lp")
    tri = cfg.triangle
    lines = [Line2.from_points(Y, X),
             Line2.from_points(cfg.T, Lp),
             Line2.from_points(tri.C, tri.B)]
    res, p = _concurrent(lines, ctx.scale)
    return Outcome(res, _wit(P=p))


@check("P23_result14")
def p23(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    (Lp,) = cfg.require("Lp")
    tri = cfg.triangle
    return Outcome(_bisects_internal(Lp - cfg.T, tri.A - cfg.T,
                                     cfg.L - cfg.T))


@check("P24_result16")
def p24(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    (T_in,) = cfg.require("T_in")
    return Outcome(abs(cfg.T.dist(cfg.L) - cfg.T.dist(T_in)) / ctx.scale)


@check("P25_result5")
def p25(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    (M_T,) = cfg.require("M_T")
    return Outcome(_bisects_internal(cfg.I - cfg.T, cfg.L - cfg.T,
                                     M_T - cfg.T))


@check("P26_result1")
def p26(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    tri = cfg.triangle
    a1 = angle_at(tri.A, cfg.T, cfg.D)
    a2 = angle_at(cfg.I, cfg.L, cfg.T)
    return Outcome(_angles_equal(a1, a2))


@check("P27_tlm_tangent")
def p27(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    (M_T,) = cfg.require("M_T")
    circ = circle_through(cfg.T, cfg.L, M_T)
    # tangency at T: the two centers and T are collinear
    res = _parallel(circ.center - cfg.T, cfg.D - cfg.T)
    return Outcome(res)


@check("P28_result7")
def p28(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    a1 = angle_at(cfg.D, cfg.T, cfg.I)
    a2 = angle_at(cfg.T, cfg.I, cfg.L)
    return Outcome(_angles_equal(a1, a2))


@check("P29_result21")
def p29(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    X, Yp = cfg.require("X", "Yp")
    return Outcome(_concyclic([X, Yp, cfg.T, cfg.L], ctx.scale))


@check("P30_result20")
def p30(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    (Lp,) = cfg.require("Lp")
    return Outcome(_perp(cfg.I - cfg.T, Lp - cfg.T))


@check("P31_result22")
def p31(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    X, G = cfg.require("X", "G")
    return Outcome(_concyclic([X, G, cfg.I, cfg.L], ctx.scale))


@check("P32_result23")
def p32(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    X, G, Yp, K_x = cfg.require("X", "G", "Yp", "K_x")
    center = midpoint(K_x, cfg.I)
    radius = 0.5 * K_x.dist(cfg.I)
    pts = [X, G, Yp, cfg.T, cfg.I, cfg.L, K_x]
    res = max(abs(p.dist(center) - radius) for p in pts) / ctx.scale
    return Outcome(res, _wit(center=center))


@check("P33_result26")
def p33(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    (X,) = cfg.require("X")
    tri = cfg.triangle
    a1 = angle_at(tri.A, cfg.T, cfg.D)
    a2 = angle_at(cfg.I, X, cfg.T)
    return Outcome(_angles_equal(a1, a2))


@check("P34_ltn")
def p34(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    (Lp,) = cfg.require("Lp")
    return Outcome(_collinear(Lp, cfg.T, cfg.arc.apex, ctx.scale))


@check("P35_touching_chord")
def p35(ctx) -> Outcome:
    # two internally tangent circles at P, a chord of the outer cut by
    # the inner at its endpoints: the tangency point sees equal angles.
    # Instantiated with the arc circle, the circle through T, L, M_T
    # (tangent to it at T), and chord BC.
    cfg = ctx.cfg(0)
    (M_T,) = cfg.require("M_T")
    tri = cfg.triangle
    a1 = angle_at(tri.B, cfg.T, cfg.L)
    a2 = angle_at(M_T, cfg.T, tri.C)
    return Outcome(_angles_equal(a1, a2))


# ---------------------------------------------------------------------------
# F: closed-form scalar measurements against the construction


@check("F01_half_angle")
def f01(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    F = parallel_point_F(cfg)
    theta = math.radians(cfg.arc.theta)
    ang = angle_at(cfg.I, F, cfg.triangle.A)
    return Outcome(min(abs(ang - 0.5 * theta),
                       abs(ang - (math.pi - 0.5 * theta))))


@check("F02_if_length")
def f02(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    F = parallel_point_F(cfg)
    m = ctx.m
    want = m.r / math.sin(0.5 * math.radians(cfg.arc.theta))
    got = cfg.I.dist(F)
    res = max(abs(got - want), abs(got - F.dist(cfg.E))) / ctx.scale
    return Outcome(res)


@check("F03_theta_over_four")
def f03(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    ang = angle_at(cfg.H, cfg.I, cfg.E)
    return Outcome(abs(ang - 0.25 * math.radians(cfg.arc.theta)))


@check("F04_result11")
def f04(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    ang = angle_at(cfg.D, cfg.E, cfg.I)
    return Outcome(abs(ang - 0.25 * math.radians(cfg.arc.theta)))


@check("F05_kh")
def f05(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    want = ctx.m.r * cfg.arc.t
    return Outcome(abs(cfg.H.dist(cfg.E) - want) / ctx.scale)


@check("F06_rho_forms")
def f06(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    m = cfg.triangle.metrics()
    t = cfg.arc.t
    f1 = m.r * (1.0 - math.tan(0.5 * m.angle_a) * t)
    f2 = m.r * (1.0 - m.r * t / (m.p - m.a))
    f3 = (m.area - (m.p - m.b) * (m.p - m.c) * t) / m.p
    oracle = ajima_oracle(cfg.triangle, cfg.arc).radius
    res = max(abs(f1 - f2), abs(f2 - f3), abs(f1 - oracle),
              abs(f1 - cfg.rho)) / m.r
    return Outcome(res)


@check("F07_arc_radius_forms")
def f07(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    m = cfg.triangle.metrics()
    t = cfg.arc.t
    f1 = arc_radius(m, cfg.arc.theta)
    f2 = m.a * (t * t + 1.0) / (4.0 * t)
    f3 = m.R * (t * t + 1.0) * math.sin(m.angle_a) / (2.0 * t)
    measured = cfg.arc.O.dist(cfg.triangle.B)
    return Outcome(max(abs(f1 - f2), abs(f1 - f3),
                       abs(f1 - measured)) / ctx.scale)


@check("F08_lengths")
def f08(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    m = cfg.triangle.metrics()
    want = lengths_formula(m, cfg.arc.t)
    got = lengths_measured(cfg)
    res = 0.0
    for name in ("AK", "AL_len", "ALp", "AX_len", "HK", "IF_len"):
        w, g = getattr(want, name), getattr(got, name)
        if g is None:
            raise NotApplicable(f"length {name} not measurable")
        res = max(res, abs(w - g) / ctx.scale)
    # ratio corollaries
    res = max(res, abs(want.ALp / want.AL_len - cfg.rho / m.r))
    u = m.a * m.p - (m.b - m.c) ** 2
    res = max(res, abs(want.AX_len / want.ALp - m.a * (m.p - m.a) / u))
    return Outcome(res)


# ---------------------------------------------------------------------------
# T: triad-level synthetic results


@check("T01_tangents")
def t01(ctx) -> Outcome:
    triad = ctx.triad
    want = 2.0 * ctx.m.r * ctx.t_param
    res = 0.0
    cs = triad.circles
    for i in range(3):
        j = (i + 1) % 3
        d = cs[i].center.dist(cs[j].center)
        g2 = d * d - (cs[i].radius - cs[j].radius) ** 2
        if g2 < 0:
            raise NotApplicable("overlapping circles: no external tangent")
        res = max(res, abs(math.sqrt(g2) - want) / ctx.scale)
    return Outcome(res)


@check("T02_midpoints")
def t02(ctx) -> Outcome:
    triad = ctx.triad
    tri = triad.triangle
    contacts = tri.contact_points()
    sides = [(tri.B, tri.C), (tri.C, tri.A), (tri.A, tri.B)]
    res = 0.0
    for k, (p, q) in enumerate(sides):
        side = Line2.from_points(p, q)
        # the two triad circles tangent to this side are the ones at its ends
        ci = triad.circles[(k + 1) % 3]
        cj = triad.circles[(k + 2) % 3]
        mid = midpoint(side.foot(ci.center), side.foot(cj.center))
        res = max(res, mid.dist(contacts[k]) / ctx.scale)
    return Outcome(res)


@check("T03_radical_axis")
def t03(ctx) -> Outcome:
    triad = ctx.triad
    tri = triad.triangle
    cb, cc = triad.circles[1], triad.circles[2]
    L = tri.contact_points()[0]
    res = max(abs(_power(tri.A, cb) - _power(tri.A, cc)),
              abs(_power(L, cb) - _power(L, cc))) / ctx.scale ** 2
    return Outcome(res)


@check("T04_radical_center")
def t04(ctx) -> Outcome:
    triad = ctx.triad
    rc = radical_center(*triad.circles)
    ge = triad.triangle.gergonne_point()
    return Outcome(rc.dist(ge) / ctx.scale, _wit(S=rc))


@check("T05_sixpoint")
def t05(ctx) -> Outcome:
    triad = ctx.triad
    inc = triad.triangle.incenter()
    want = ctx.m.r / math.cos(0.25 * math.radians(ctx.theta))
    res = max(abs(inc.dist(pt) - want)
              for c in triad.configs for pt in (c.E, c.F_t)) / ctx.scale
    return Outcome(res)


@check("T06_jacobi")
def t06(ctx) -> Outcome:
    triad = ctx.triad
    lines = [Line2.from_points(c.triangle.A, c.arc.O)
             for c in triad.configs]
    res, p = _concurrent(lines, ctx.scale)
    return Outcome(res, _wit(P=p))


@check("T07_paasche")
def t07(ctx) -> Outcome:
    triad = ctx.triad
    lines = [Line2.from_points(c.triangle.A, c.T) for c in triad.configs]
    res, p = _concurrent(lines, ctx.scale)
    wit = _wit(P=p)
    # the concurrence also holds for each same-kind variant triad
    for name in ("c2", "c3", "c4"):
        vlines = []
        for k in range(3):
            cfg = triad.configs[k]
            v = getattr(ctx.variants(k), name)
            if v is None:
                vlines = None
                break
            vlines.append(Line2.from_points(cfg.triangle.A, v.touch))
        if vlines is not None:
            vres, _ = _concurrent(vlines, ctx.scale)
            res = max(res, vres)
    return Outcome(res, wit)


# ---------------------------------------------------------------------------
# A: Apollonius-circle results


def _bary_res(ctx, w: tuple[float, float, float], pt: Point2,
              tri: Triangle | None = None) -> float:
    return bary_point(tri or ctx.tri, w).dist(pt) / ctx.scale


@check("A01_bary_d")
def a01(ctx) -> Outcome:
    res = 0.0
    for k in range(3):
        cfg = ctx.triad.configs[k]
        m = cfg.triangle.metrics()
        res = max(res, _bary_res(ctx, bary_D(m, cfg.arc.t), cfg.D,
                                 cfg.triangle))
    return Outcome(res)


@check("A02_bary_oa")
def a02(ctx) -> Outcome:
    res = 0.0
    for k in range(3):
        cfg = ctx.triad.configs[k]
        m = cfg.triangle.metrics()
        res = max(res, _bary_res(ctx, bary_Oa(m, cfg.arc.theta), cfg.arc.O,
                                 cfg.triangle))
    return Outcome(res)


@check("A03_bary_t")
def a03(ctx) -> Outcome:
    res = 0.0
    for k in range(3):
        cfg = ctx.triad.configs[k]
        m = cfg.triangle.metrics()
        res = max(res, _bary_res(ctx, bary_T(m, cfg.arc.theta), cfg.T,
                                 cfg.triangle))
    return Outcome(res)


@check("A04_bary_ua")
def a04(ctx) -> Outcome:
    apo = ctx.apo
    res = 0.0
    for k in range(3):
        cfg = ctx.triad.configs[k]
        m = cfg.triangle.metrics()
        res = max(res, _bary_res(ctx, bary_Ua(m, cfg.arc.t), apo.U_touch[k],
                                 cfg.triangle))
    return Outcome(res)


@check("A05_bary_u")
def a05(ctx) -> Outcome:
    return Outcome(_bary_res(ctx, bary_U(ctx.m, ctx.t_param),
                             ctx.apo.inner.center))


@check("A06_bary_va")
def a06(ctx) -> Outcome:
    apo = ctx.apo
    res = 0.0
    for k in range(3):
        cfg = ctx.triad.configs[k]
        m = cfg.triangle.metrics()
        res = max(res, _bary_res(ctx, bary_Va(m, cfg.arc.t), apo.V_touch[k],
                                 cfg.triangle))
    return Outcome(res)


@check("A07_bary_v")
def a07(ctx) -> Outcome:
    return Outcome(_bary_res(ctx, bary_V(ctx.m, ctx.t_param),
                             ctx.apo.outer.center))


@check("A08_rho_inner")
def a08(ctx) -> Outcome:
    want = rho_inner(ctx.m, ctx.t_param)
    return Outcome(abs(ctx.apo.rho_i - want) / ctx.m.r)


@check("A09_rho_outer")
def a09(ctx) -> Outcome:
    want = rho_outer(ctx.m, ctx.t_param)
    return Outcome(abs(ctx.apo.rho_o - want) / ctx.m.r)


@check("A10_linear_radii")
def a10(ctx) -> Outcome:
    apo = ctx.apo
    return Outcome(abs(3.0 * apo.rho_o - (apo.rho_i + 4.0 * ctx.m.r))
                   / ctx.m.r)


@check("A11_radii_vs_triad")
def a11(ctx) -> Outcome:
    apo = ctx.apo
    s = sum(c.rho for c in ctx.triad.configs)
    return Outcome(abs(3.0 * apo.rho_o - (2.0 * s + 3.0 * apo.rho_i))
                   / ctx.m.r)


@check("A12_roir")
def a12(ctx) -> Outcome:
    apo = ctx.apo
    denom = apo.rho_o - ctx.m.r
    if abs(denom) < 1e-12 * ctx.m.r:
        raise NotApplicable("outer radius equals inradius")
    return Outcome(abs((apo.rho_i + ctx.m.r) / denom - 3.0))


@check("A13_rho_i_sum")
def a13(ctx) -> Outcome:
    s = sum(c.rho for c in ctx.triad.configs)
    return Outcome(abs(ctx.apo.rho_i - (2.0 * ctx.m.r - s)) / ctx.m.r)


@check("A14_soddy")
def a14(ctx) -> Outcome:
    sl = ctx.soddy
    res = max(sl.collinearity, abs(sl.ratio_UI_IV - 3.0) / 3.0)
    if abs(sl.s_U) > 1e-6 * ctx.scale:
        want = (("Ge", "U", "I", "V") if ctx.apo.rho_i < 0
                else ("U", "Ge", "I", "V"))
        if sl.ordering() != want:
            res = max(res, 1.0)
    return Outcome(res)


@check("A15_ge_ratios")
def a15(ctx) -> Outcome:
    apo = ctx.apo
    ge = ctx.tri.gergonne_point()
    inc = ctx.tri.incenter()
    gi = ge.dist(inc)
    if gi < 1e-12 * ctx.scale:
        raise NotApplicable("equilateral: Gergonne point equals incenter")
    res = max(abs(ge.dist(apo.inner.center) / gi - abs(apo.rho_i) / ctx.m.r),
              abs(ge.dist(apo.outer.center) / gi - apo.rho_o / ctx.m.r))
    if abs(apo.rho_i) > 1e-6 * ctx.m.r:
        res = max(res, abs(ge.dist(apo.outer.center)
                           / ge.dist(apo.inner.center)
                           - apo.rho_o / abs(apo.rho_i)))
    return Outcome(res)


@check("A16_ge_i_distance")
def a16(ctx) -> Outcome:
    m = ctx.m
    arg = 1.0 - 3.0 / (m.W * m.W)
    want = m.r * math.sqrt(max(arg, 0.0))
    got = ctx.tri.gergonne_point().dist(ctx.tri.incenter())
    return Outcome(abs(got - want) / ctx.scale)


@check("A17_gamma_concur")
def a17(ctx) -> Outcome:
    # at t = 1/W the three inscribed circles pass through one point:
    # the Gergonne point
    m = ctx.m
    theta = math.degrees(4.0 * math.atan(1.0 / m.W))
    if not interior_condition(m, theta):
        raise NotApplicable("concurrence angle violates interior condition")
    from .apollonius import build_triad
    triad = build_triad(ctx.tri, theta)
    res = abs(rho_inner(m, 1.0 / m.W)) / m.r
    ge = ctx.tri.gergonne_point()
    for c in triad.configs:
        res = max(res, abs(ge.dist(c.D) - c.rho) / ctx.scale)
    return Outcome(res, _wit(Ge=ge))


@check("A18_omega_concur")
def a18(ctx) -> Outcome:
    # the three arcs share a point exactly at 120 degrees
    arcs = [build_arc(ctx.tri.relabeled(k), 120.0, side="abc"[k])
            for k in range(3)]
    rc = radical_center(*(a.circle for a in arcs))
    res = max(abs(rc.dist(a.O) - a.R_arc) for a in arcs) / ctx.scale
    return Outcome(res, _wit(P=rc))


@check("A19_miyamoto")
def a19(ctx) -> Outcome:
    thetas = tuple(ctx.rng.uniform(120.0, 180.0) for _ in range(3))
    mt = miyamoto_tangency(ctx.tri, *thetas)
    if not mt.internal:
        return Outcome(1.0)    # tangency exists but of the wrong kind
    return Outcome(mt.touch_residual)


@check("A20_oracle_cross")
def a20(ctx) -> Outcome:
    triad = ctx.triad
    apo = ctx.apo
    alg, _ = inner_tangent_circle(*triad.circles)
    res = max(alg.center.dist(apo.inner.center),
              abs(alg.radius - apo.inner.radius)) / ctx.scale
    orc, _ = generic_apollonius_oracle(*triad.circles, pattern="containing",
                                       seed=apo.outer.center)
    res = max(res, orc.center.dist(apo.outer.center) / ctx.scale,
              abs(orc.radius - apo.outer.radius) / ctx.scale)
    return Outcome(res)


@check("A21_vertex_line")
def a21(ctx) -> Outcome:
    apo = ctx.apo
    ge = ctx.tri.gergonne_point()
    contacts = ctx.tri.contact_points()
    res = 0.0
    for k in range(3):
        vert = ctx.triad.configs[k].triangle.A
        line = Line2.from_points(vert, contacts[k])
        res = max(res, line.dist(apo.U_touch[k]) / ctx.scale,
                  line.dist(apo.V_touch[k]) / ctx.scale,
                  line.dist(ge) / ctx.scale)
    return Outcome(res)


@check("A22_tangent_triangle")
def a22(ctx) -> Outcome:
    triad = ctx.triad
    apo = ctx.apo
    tri = tri0 = triad.triangle
    ge = tri.gergonne_point()
    sides = [(tri0.B, tri0.C), (tri0.C, tri0.A), (tri0.A, tri0.B)]
    tangents = []
    res = 0.0
    for k in range(3):
        d = apo.U_touch[k] - triad.circles[k].center
        tangents.append(Line2(apo.U_touch[k], d.perp()))
        res = max(res, _parallel(d.perp(), sides[k][1] - sides[k][0]))
    verts = [intersect_lines(tangents[1], tangents[2]),
             intersect_lines(tangents[2], tangents[0]),
             intersect_lines(tangents[0], tangents[1])]
    for orig, new in zip((tri0.A, tri0.B, tri0.C), verts):
        if orig.dist(new) > 1e-9 * ctx.scale:
            res = max(res, _collinear(orig, new, ge, ctx.scale))
    return Outcome(res)


@check("A23_equal_tangents")
def a23(ctx) -> Outcome:
    triad = ctx.triad
    apo = ctx.apo
    res = 0.0
    for k in range(3):
        u = apo.U_touch[k]
        p1 = _power(u, triad.circles[(k + 1) % 3])
        p2 = _power(u, triad.circles[(k + 2) % 3])
        res = max(res, abs(p1 - p2) / ctx.scale ** 2)
    return Outcome(res)


@check("A24_oi_ratio")
def a24(ctx) -> Outcome:
    apo = ctx.apo
    if abs(apo.rho_i) < 1e-6 * ctx.m.r:
        raise NotApplicable("inner circle nearly a point")
    s_pt = radical_center(*ctx.triad.circles)
    axis = Line2(apo.inner.center,
                 (apo.outer.center - apo.inner.center).unit())
    res = axis.dist(s_pt) / ctx.scale
    s_u = axis.param_of(apo.inner.center)
    s_v = axis.param_of(apo.outer.center)
    s_s = axis.param_of(s_pt)
    res = max(res, abs((s_u - s_s) / (s_v - s_s) + apo.rho_i / apo.rho_o))
    return Outcome(res, _wit(S=s_pt))


@check("A25_rho_i_squared")
def a25(ctx) -> Outcome:
    m = ctx.m
    sq = sum(c.rho ** 2 for c in ctx.triad.configs)
    want = sq + 2.0 * m.r * m.r * (ctx.t_param ** 2 - 1.0)
    return Outcome(abs(ctx.apo.rho_i ** 2 - want) / (m.r * m.r))


# ---------------------------------------------------------------------------
# S and I: metric identity suites, grouped by family


def _suite_residual(results: list[identities.IdentityResult],
                    prefix: tuple[str, ...]) -> float:
    picked = [r for r in results if r.identity.startswith(prefix)]
    live = [r for r in picked if r.applicable]
    if not picked:
        raise NotApplicable("no identities in family")
    if not live:
        raise NotApplicable(picked[0].reason or "family inapplicable")
    return max(r.residual for r in live)


def _ident_check(check_id: str, suite_attr: str, prefixes: tuple[str, ...]):
    @check(check_id)
    def fn(ctx, _attr=suite_attr, _pre=prefixes) -> Outcome:
        return Outcome(_suite_residual(getattr(ctx, _attr), _pre))
    fn.__name__ = check_id
    return fn


_ident_check("I01_sym_r_minus_rho", "identity_results",
             ("sum_r_minus_rho", "sum_pairs_r_minus_rho"))
_ident_check("I02_product_r_minus_rho", "identity_results",
             ("product_r_minus_rho",))
_ident_check("I03_sym_rho", "identity_results",
             ("sum_rho", "sum_pairs_rho", "sum_squares_rho", "product_rho"))
_ident_check("I04_radius_polynomial", "radius_results",
             ("radius_polynomial",))
_ident_check("I05_arc_radius_relations", "radius_results",
             ("arc_radius_relation", "t_squared_relation"))
_ident_check("I06_special_theta", "radius_results", ("special_theta",))

_ident_check("S01_rho_shift", "scaling_results", ("rho_minus_r_scaling",))
_ident_check("S02_rho_differences", "scaling_results",
             ("rho_difference_scaling",))
_ident_check("S03_apollonius_radii", "scaling_results",
             ("inner_radius_scaling", "outer_radius_scaling"))
_ident_check("S04_center_distances", "scaling_results",
             ("center_distance_scaling",))
_ident_check("S05_tangent_lengths", "scaling_results",
             ("tangent_length_scaling", "tangent_length_value"))
_ident_check("S06_center_distance_forms", "scaling_results",
             ("center_distance_form",))
_ident_check("S07_similarity_ratio", "scaling_results",
             ("similar_centers_ratio",))
_ident_check("S08_inner_center_distances", "scaling_results",
             ("inner_center_distance_scaling",))


@check("S09_sin_double_angle")
def s09(ctx) -> Outcome:
    x = ctx.rng.uniform(0.0, 0.5 * math.pi)
    return Outcome(identities.sin_double_angle_residual(x))


# ---------------------------------------------------------------------------
# V: variant circles


@check("V01_variants")
def v01(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    tri, arc = cfg.triangle, cfg.arc
    m = tri.metrics()
    vcs = ctx.variants(0)
    res = 0.0
    side = Line2.from_points(tri.B, tri.C)
    names = dict(vcs.present())
    for name in ("c1", "c2", "c3", "c4"):
        v = names.get(name)
        if v is None:
            raise NotApplicable(f"variant {name} not found")
        if side.dist(v.touch) < 1e-7 * ctx.scale:
            raise NotApplicable("touch point on line BC: side ambiguous")
        d = v.circle.center.dist(arc.O)
        if v.tangency == "external":
            res = max(res, abs(d - (v.circle.radius + arc.R_arc)) / ctx.scale)
        else:
            res = max(res, abs(d - abs(v.circle.radius - arc.R_arc))
                      / ctx.scale)
    rho = ajima_radius(m, arc.t)
    if abs(rho) < 1e-7 * m.r:
        raise NotApplicable("formula circle degenerates to a point")
    formula = names["c1"] if rho > 0 else names["c2"]
    res = max(res, abs(formula.circle.radius - abs(rho)) / m.r)
    return Outcome(res)


_VARIANT_CANDIDATES = (("I", None), ("Ia", "A"), ("Ib", "B"), ("Ic", "C"))


def _variant_center_residuals(ctx, cfg, v) -> tuple[str, float]:
    tri, arc = cfg.triangle, cfg.arc
    T = v.touch
    cands = []
    for name, opp in _VARIANT_CANDIDATES:
        p = tri.incenter() if opp is None else tri.excenter(opp)
        cands.append((name, p, _bisects_line(p - T, tri.B - T, tri.C - T)))
    name, p, bis = min(cands, key=lambda it: it[2])
    res = bis
    # catalytic: B, the touch on AB, T, and that center are concyclic
    k_ab = Line2.from_points(tri.A, tri.B).foot(v.circle.center)
    circ = circle_through(tri.B, k_ab, T)
    res = max(res, abs(circ.center.dist(p) - circ.radius) / ctx.scale)
    # parallel chord: F on AC with PF parallel to B-(arc on AC);
    # PF = F-to-side-touch distance
    lac = Line2.from_points(tri.A, tri.C)
    pts = intersect_line_circle(lac, arc.circle)
    if len(pts) < 2:
        raise NotApplicable("arc circle meets AC at one point")
    e_arc = max(pts, key=lambda q: q.dist(tri.C))
    f_pt = intersect_lines(Line2(p, (e_arc - tri.B).unit()), lac)
    k_ac = lac.foot(v.circle.center)
    res = max(res, abs(p.dist(f_pt) - f_pt.dist(k_ac)) / ctx.scale)
    # midarc line: T-center line meets the arc circle opposite T on the
    # perpendicular bisector of BC
    if T.dist(p) < 1e-9 * ctx.scale:
        raise NotApplicable("center coincides with touch point")
    pts = intersect_line_circle(Line2.from_points(T, p), arc.circle)
    if len(pts) < 2:
        raise NotApplicable("center line tangent to arc circle")
    n2 = max(pts, key=lambda q: q.dist(T))
    perp = Line2(midpoint(tri.B, tri.C), (tri.C - tri.B).perp())
    res = max(res, perp.dist(n2) / ctx.scale)
    return name, res


@check("V02_variant_centers")
def v02(ctx) -> Outcome:
    cfg = ctx.cfg(0)
    vcs = ctx.variants(0)
    res = 0.0
    chosen = {}
    for name, v in vcs.present():
        center_name, vres = _variant_center_residuals(ctx, cfg, v)
        chosen[name] = center_name
        res = max(res, vres)
    if not chosen:
        raise NotApplicable("no variant circles found")
    wit = {f"{k}:{v}": (0.0, 0.0) for k, v in chosen.items()}
    return Outcome(res, wit)
