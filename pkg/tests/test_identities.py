import math

import pytest

from ajima.identities import (
    identity_suite, radius_relation_suite, scaling_suite,
    semicircle_baseline, sin_double_angle_residual, triad_scalars,
)
from ajima.triangle import Triangle

from conftest import interior_samples


def _assert_suite(results, bound, skip_inapplicable=True):
    for res in results:
        if skip_inapplicable and not res.applicable:
            continue
        assert res.residual <= bound, (res.identity, res.residual)


def test_triad_scalars_consistency():
    tri = Triangle.from_sides(4.0, 5.0, 6.0)
    s = triad_scalars(tri, 180.0)
    m = tri.metrics()
    assert s.t_param == pytest.approx(1.0)
    assert s.rho_a == pytest.approx(m.r * (1.0 - math.tan(m.angle_a / 2.0)))
    assert s.arc_radii[0] == pytest.approx(m.a / 2.0)  # semicircle


def test_identity_suite_small_residuals(samples200):
    for tri, theta in samples200[:80]:
        _assert_suite(identity_suite(triad_scalars(tri, theta)), 1e-11)


def test_radius_relation_suite_small_residuals(samples200):
    for tri, theta in samples200[:80]:
        _assert_suite(radius_relation_suite(triad_scalars(tri, theta)),
                      1e-10)


def test_scaling_suite_small_residuals(samples200):
    for tri, theta in samples200[:40]:
        base = semicircle_baseline(tri)
        _assert_suite(scaling_suite(triad_scalars(tri, theta), base), 1e-9)


def test_baseline_matches_theta_180_scalars():
    tri = Triangle.from_sides(4.0, 5.0, 6.0)
    base = semicircle_baseline(tri)
    s = triad_scalars(tri, 180.0)
    assert base.scalars.rhos == pytest.approx(s.rhos)
    # centers sit at distance rho / sin(A/2) from the vertex
    m0 = tri.metrics()
    d = base.centers_star[0].dist(tri.A)
    assert d == pytest.approx(s.rho_a / math.sin(m0.angle_a / 2.0))


def test_baseline_defined_for_obtuse_triangles():
    tri = Triangle.from_sides(9.0, 5.0, 4.7)   # obtuse at A
    base = semicircle_baseline(tri)
    assert base.scalars.rho_a < 0.0      # signed continuation
    s = triad_scalars(tri, 100.0)
    _assert_suite(scaling_suite(s, base), 1e-9)


def test_center_distance_closed_forms(samples200):
    for tri, theta in samples200[:40]:
        base = semicircle_baseline(tri)
        results = scaling_suite(triad_scalars(tri, theta), base)
        forms = [r for r in results
                 if r.identity.startswith("center_distance_form_")]
        assert len(forms) == 3
        _assert_suite(forms, 1e-9, skip_inapplicable=False)


def test_sin_double_angle():
    for x in (0.1, 0.7, 1.3, 2.0, -0.4):
        assert sin_double_angle_residual(x) < 1e-15
