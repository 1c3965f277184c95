import math

import pytest

from ajima.kernel import Line2, Point2
from ajima.triangle import (
    DegenerateTriangle, Triangle, bary_match, bary_point,
    gergonne_cevian_ratio, point_bary,
)


def test_345_metrics():
    m = Triangle.from_sides(3.0, 4.0, 5.0).metrics()
    assert m.area == pytest.approx(6.0)
    assert m.p == pytest.approx(6.0)
    assert m.r == pytest.approx(1.0)
    assert m.R == pytest.approx(2.5)
    assert m.angle_a == pytest.approx(math.radians(36.8698976), abs=1e-6)
    assert m.W == pytest.approx((4 * 2.5 + 1.0) / 6.0)
    assert m.S == pytest.approx(12.0)


def test_456_spot_metrics():
    m = Triangle.from_sides(4.0, 5.0, 6.0).metrics()
    assert m.r == pytest.approx(1.32287566, abs=5e-8)
    assert m.R == pytest.approx(3.02371578, abs=5e-8)
    assert m.W == pytest.approx(1.78903185, abs=5e-8)


def test_w_equals_sum_of_half_angle_tangents():
    m = Triangle.from_sides(4.0, 6.5, 7.2).metrics()
    s = sum(math.tan(ang / 2.0)
            for ang in (m.angle_a, m.angle_b, m.angle_c))
    assert m.W == pytest.approx(s, rel=1e-14)


def test_degenerate_sides():
    with pytest.raises(DegenerateTriangle):
        Triangle.from_sides(1.0, 2.0, 3.0)
    with pytest.raises(DegenerateTriangle):
        Triangle.from_sides(-1.0, 2.0, 2.0)


def test_relabeled_cycles_sides():
    tri = Triangle.from_sides(4.0, 5.0, 6.0)
    m0 = tri.metrics()
    m1 = tri.relabeled(1).metrics()
    assert (m1.a, m1.b, m1.c) == pytest.approx((m0.b, m0.c, m0.a))
    # same physical triangle: vertices are permuted, not moved
    assert tri.relabeled(1).A.dist(tri.B) == 0.0
    assert tri.relabeled(3).A.dist(tri.A) == 0.0


def test_incenter_equidistant_from_sides():
    tri = Triangle.from_sides(4.0, 5.0, 6.0)
    inc = tri.incenter()
    m = tri.metrics()
    for p, q in ((tri.A, tri.B), (tri.B, tri.C), (tri.C, tri.A)):
        assert Line2.from_points(p, q).dist(inc) == pytest.approx(m.r)


def test_excenter_bary():
    tri = Triangle.from_sides(4.0, 5.0, 6.0)
    m = tri.metrics()
    ia = tri.excenter("A")
    expect = bary_point(tri, (-m.a, m.b, m.c))
    assert ia.dist(expect) < 1e-12
    with pytest.raises(ValueError):
        tri.excenter("a-side")


def test_circumcenter_equidistant():
    tri = Triangle.from_sides(4.0, 5.0, 6.0)
    o = tri.circumcenter()
    m = tri.metrics()
    for v in (tri.A, tri.B, tri.C):
        assert o.dist(v) == pytest.approx(m.R)


def test_gergonne_point_on_contact_cevians():
    tri = Triangle.from_sides(4.0, 5.0, 6.0)
    ge = tri.gergonne_point()
    ta, tb, tc = tri.contact_points()
    for v, t in ((tri.A, ta), (tri.B, tb), (tri.C, tc)):
        assert Line2.from_points(v, t).dist(ge) < 1e-12


def test_contact_points_on_incircle():
    tri = Triangle.from_sides(4.0, 5.0, 6.0)
    inc = tri.incenter()
    m = tri.metrics()
    for t in tri.contact_points():
        assert inc.dist(t) == pytest.approx(m.r)


def test_bary_round_trip():
    tri = Triangle.from_sides(4.0, 5.0, 6.0)
    w = (0.2, 0.5, 0.3)
    pt = bary_point(tri, w)
    back = point_bary(tri, pt)
    total = sum(back)
    assert tuple(v / total for v in back) == pytest.approx(w, abs=1e-13)
    ok, residual = bary_match(tri, w, pt)
    assert ok and residual < 1e-13


def test_bary_point_is_projective():
    tri = Triangle.from_sides(4.0, 5.0, 6.0)
    p1 = bary_point(tri, (1.0, 2.0, 3.0))
    p2 = bary_point(tri, (10.0, 20.0, 30.0))
    assert p1.dist(p2) < 1e-13


def test_gergonne_cevian_ratio_positive():
    tri = Triangle.from_sides(4.0, 5.0, 6.0)
    assert gergonne_cevian_ratio(tri) > 0.0
