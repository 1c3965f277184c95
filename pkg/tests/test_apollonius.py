import math

import pytest

from ajima.apollonius import (
    ExtendedCaseOnly, apollonius_result, bary_D, bary_Oa, bary_T, bary_U,
    bary_Ua, bary_V, bary_Va, build_triad, generic_apollonius_oracle,
    inner_tangent_circle, interior_condition, miyamoto_tangency, rho_inner,
    rho_outer, soddy_line, triad_radical_center,
)
from ajima.construction import t_of_theta
from ajima.kernel import Circle2, Point2, power_of_point, tangency
from ajima.triangle import Triangle, bary_point

from conftest import interior_samples


def test_interior_condition():
    m = Triangle.from_sides(3.0, 4.0, 5.0).metrics()
    # right angle: needs theta < 2(180 - 90) = 180
    assert interior_condition(m, 179.0)
    assert not interior_condition(m, 180.0)
    assert not interior_condition(m, 181.0)


def test_build_triad_argument_validation():
    tri = Triangle.from_sides(4.0, 5.0, 6.0)
    with pytest.raises(ValueError):
        build_triad(tri)
    with pytest.raises(ValueError):
        build_triad(tri, 100.0, thetas=(100.0,) * 3)
    with pytest.raises(ExtendedCaseOnly):
        build_triad(Triangle.from_sides(3.0, 4.0, 5.0), 200.0)


def test_apollonius_tangent_to_all_three():
    for tri, theta in interior_samples(20, seed=11):
        triad = build_triad(tri, theta)
        res = apollonius_result(triad)
        for circ in triad.circles:
            if circ.radius <= 1e-9:
                continue
            inner_t = tangency(res.inner, circ)
            outer_t = tangency(res.outer, circ)
            assert inner_t.residual < 1e-8
            assert outer_t.kind == "internal"
            assert outer_t.residual < 1e-8


def test_signed_radii_closed_forms(samples200):
    for tri, theta in samples200[:60]:
        m = tri.metrics()
        t = t_of_theta(theta)
        triad = build_triad(tri, theta)
        res = apollonius_result(triad)
        assert res.rho_i == pytest.approx(rho_inner(m, t), abs=1e-9 * m.r)
        assert res.rho_o == pytest.approx(rho_outer(m, t), abs=1e-9 * m.r)
        # signed linear relations
        assert 3.0 * res.rho_o == pytest.approx(res.rho_i + 4.0 * m.r,
                                                abs=1e-9 * m.r)


def test_soddy_line_ratio_and_ordering(samples200):
    for tri, theta in samples200[:60]:
        m = tri.metrics()
        triad = build_triad(tri, theta)
        res = apollonius_result(triad)
        sl = soddy_line(tri, res)
        assert sl.collinearity < 1e-9
        assert sl.ratio_UI_IV == pytest.approx(3.0, abs=1e-9)
        expect = (("Ge", "U", "I", "V") if res.rho_i < 0
                  else ("U", "Ge", "I", "V"))
        assert sl.ordering() == expect
        # |Ge I| closed form r sqrt(1 - 3/W^2)
        assert sl.s_I == pytest.approx(
            m.r * math.sqrt(1.0 - 3.0 / m.W ** 2), rel=1e-9)


def test_bary_closed_forms(samples200):
    for tri, theta in samples200[:40]:
        m = tri.metrics()
        t = t_of_theta(theta)
        triad = build_triad(tri, theta)
        cfg = triad.cfg_a
        res = apollonius_result(triad)
        scale = max(m.a, m.b, m.c)
        pairs = [
            (bary_D(m, t), cfg.D),
            (bary_Oa(m, theta), cfg.arc.O),
            (bary_T(m, theta), cfg.T),
            (bary_Ua(m, t), res.U_touch[0]),
            (bary_Va(m, t), res.V_touch[0]),
            (bary_U(m, t), res.inner.center),
            (bary_V(m, t), res.outer.center),
        ]
        for w, pt in pairs:
            assert bary_point(tri, w).dist(pt) / scale < 1e-9


def test_concurrence_at_t_equals_one_over_w():
    for tri, _ in interior_samples(20, seed=12):
        m = tri.metrics()
        theta = 4.0 * math.degrees(math.atan(1.0 / m.W))
        if not interior_condition(m, theta):
            continue
        assert abs(rho_inner(m, 1.0 / m.W)) < 1e-12 * m.r
        triad = build_triad(tri, theta)
        res = apollonius_result(triad)
        assert res.inner.radius < 1e-8 * m.r


def test_arc_concurrence_at_120():
    from ajima.construction import build_arc
    from ajima.kernel import radical_center
    for tri, _ in interior_samples(20, seed=13):
        arcs = [build_arc(tri.relabeled(k), 120.0).circle for k in range(3)]
        m = tri.metrics()
        scale = max(m.a, m.b, m.c)
        p = radical_center(*arcs)
        for circ in arcs:
            assert abs(p.dist(circ.center) - circ.radius) / scale < 1e-9


def test_triad_radical_center_is_gergonne():
    for tri, theta in interior_samples(10, seed=14):
        triad = build_triad(tri, theta)
        rc = triad_radical_center(triad)
        m = tri.metrics()
        assert rc.dist(tri.gergonne_point()) / max(m.a, m.b, m.c) < 1e-8


def test_generic_oracle_descartes_configuration():
    # three mutually tangent unit circles: inner/outer radii are known
    # from the curvature relation k = 3 +/- 2*sqrt(3)
    h = math.sqrt(3.0)
    c1 = Circle2(Point2(-1.0, 0.0), 1.0)
    c2 = Circle2(Point2(1.0, 0.0), 1.0)
    c3 = Circle2(Point2(0.0, h), 1.0)
    inner, _ = inner_tangent_circle(c1, c2, c3)
    assert inner.radius == pytest.approx(1.0 / (3.0 + 2.0 * h), rel=1e-9)
    outer, _ = generic_apollonius_oracle(c1, c2, c3, pattern="containing")
    assert outer.radius == pytest.approx(1.0 / abs(3.0 - 2.0 * h), rel=1e-9)


def test_miyamoto_internal_tangency():
    import random
    rng = random.Random(15)
    done = 0
    while done < 15:
        tri, _ = interior_samples(1, seed=rng.randrange(10 ** 6))[0]
        m = tri.metrics()
        if max(m.angle_a, m.angle_b, m.angle_c) >= math.pi / 2:
            continue    # per-side theta up to 180 needs an acute triangle
        thetas = [rng.uniform(120.0, 180.0) for _ in range(3)]
        res = miyamoto_tangency(tri, *thetas)
        assert res.internal
        assert res.touch_residual < 1e-7
        done += 1
