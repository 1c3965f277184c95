import math

import pytest

from ajima.kernel import (
    Circle2, CollinearCenters, CollinearInput, ConcentricAmbiguous,
    GeometryError, Line2, Point2, Tolerance, ZeroRatio, angle_at, bisector,
    circle_through, homothety, intersect_circles, intersect_line_circle,
    intersect_lines, is_collinear, is_concyclic, is_parallel,
    is_perpendicular, midpoint, power_of_point, radical_axis,
    radical_center, span, tangency,
)

O = Point2(0.0, 0.0)
EX = Point2(1.0, 0.0)
EY = Point2(0.0, 1.0)


def test_point_arithmetic():
    p = Point2(3.0, 4.0)
    assert p.norm() == 5.0
    assert (p + p).x == 6.0
    assert (p - p).norm() == 0.0
    assert (p * 2.0).y == 8.0
    assert p.dot(EX) == 3.0
    assert p.cross(EX) == -4.0
    assert p.perp().dot(p) == 0.0
    assert abs(p.unit().norm() - 1.0) < 1e-15
    assert midpoint(O, p).dist(Point2(1.5, 2.0)) == 0.0


def test_point_rejects_nonfinite():
    with pytest.raises(GeometryError):
        Point2(math.nan, 0.0)
    with pytest.raises(GeometryError):
        Point2(0.0, math.inf)


def test_line_param_and_foot():
    line = Line2.from_points(O, Point2(2.0, 0.0))
    assert line.at(3.0).dist(Point2(3.0, 0.0)) < 1e-15
    q = Point2(1.0, 5.0)
    assert line.foot(q).dist(EX) < 1e-15
    assert line.dist(q) == 5.0
    assert abs(line.param_of(Point2(4.0, 1.0)) - 4.0) < 1e-15


def test_intersect_lines():
    l1 = Line2(O, EX)
    l2 = Line2(Point2(2.0, -1.0), EY)
    p = intersect_lines(l1, l2)
    assert p.dist(Point2(2.0, 0.0)) < 1e-14
    assert intersect_lines(l1, Line2(EY, EX)) is None


def test_circle_through_known():
    c = circle_through(EX, EY, Point2(-1.0, 0.0))
    assert c.center.dist(O) < 1e-14
    assert abs(c.radius - 1.0) < 1e-14
    with pytest.raises(CollinearInput):
        circle_through(O, EX, Point2(2.0, 0.0))


def test_intersect_line_circle():
    c = Circle2(O, 1.0)
    hits = intersect_line_circle(Line2(O, EX), c)
    assert len(hits) == 2
    assert min(h.dist(EX) for h in hits) < 1e-14
    assert intersect_line_circle(Line2(Point2(0.0, 2.0), EX), c) == []
    grazing = intersect_line_circle(Line2(EY, EX), c)
    assert len(grazing) == 1


def test_intersect_circles():
    c1 = Circle2(O, 1.0)
    c2 = Circle2(Point2(1.0, 0.0), 1.0)
    hits = intersect_circles(c1, c2)
    assert len(hits) == 2
    for h in hits:
        assert abs(h.dist(O) - 1.0) < 1e-14


def test_angle_and_bisector():
    assert abs(angle_at(EX, O, EY) - math.pi / 2) < 1e-15
    ray = bisector(EX, O, EY)
    assert abs(ray.d.x - ray.d.y) < 1e-15
    ext = bisector(EX, O, EY, kind="external")
    assert abs(ext.d.dot(ray.d)) < 1e-15


def test_predicates():
    assert is_collinear(O, EX, Point2(5.0, 0.0))[0]
    assert not is_collinear(O, EX, EY)[0]
    assert is_concyclic(EX, EY, Point2(-1.0, 0.0), Point2(0.0, -1.0))[0]
    assert not is_concyclic(EX, EY, Point2(-1.0, 0.0), Point2(0.0, -2.0))[0]
    assert is_parallel(Line2(O, EX), Line2(EY, (EX * -3.0).unit()))[0]
    assert is_perpendicular(Line2(O, EX), Line2(EX, EY))[0]
    assert span(O, EX, Point2(0.0, -2.0)) == pytest.approx(math.sqrt(5.0))


def test_tangency_classification():
    a = Circle2(O, 1.0)
    ext = tangency(a, Circle2(Point2(3.0, 0.0), 2.0))
    assert ext.kind == "external"
    assert ext.touch.dist(EX) < 1e-14
    inn = tangency(a, Circle2(Point2(0.5, 0.0), 0.5))
    assert inn.kind == "internal"
    assert inn.touch.dist(EX) < 1e-14
    assert tangency(a, Circle2(Point2(5.0, 0.0), 1.0)).kind == "none"
    with pytest.raises(ConcentricAmbiguous):
        tangency(a, Circle2(O, 1.0))


def test_power_and_radical():
    c1 = Circle2(O, 2.0)
    c2 = Circle2(Point2(5.0, 0.0), 1.0)
    assert power_of_point(O, c1) == -4.0
    axis = radical_axis(c1, c2)
    q = axis.at(0.7)
    assert abs(power_of_point(q, c1) - power_of_point(q, c2)) < 1e-12
    c3 = Circle2(Point2(2.0, 4.0), 1.5)
    rc = radical_center(c1, c2, c3)
    p1 = power_of_point(rc, c1)
    assert abs(p1 - power_of_point(rc, c2)) < 1e-10
    assert abs(p1 - power_of_point(rc, c3)) < 1e-10
    with pytest.raises(CollinearCenters):
        radical_center(c1, c2, Circle2(Point2(8.0, 0.0), 1.0))


def test_homothety():
    assert homothety(O, 2.0, EX).dist(Point2(2.0, 0.0)) < 1e-15
    c = homothety(EX, -0.5, Circle2(O, 2.0))
    assert abs(c.radius - 1.0) < 1e-15
    assert c.center.dist(Point2(1.5, 0.0)) < 1e-15
    with pytest.raises(ZeroRatio):
        homothety(O, 0.0, EX)


def test_tolerance_scaling():
    tol = Tolerance()
    assert tol.eps(1e6) > tol.eps(1.0) > 0.0
