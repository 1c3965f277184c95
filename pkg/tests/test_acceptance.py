"""Acceptance gate: the ten package-level criteria, one test (and one
printed pass/fail line) per criterion.  Run with -s to see the lines for
passing criteria too.
"""
import json
import math
import random
import time

import pytest

from ajima.apollonius import (
    apollonius_result, build_triad, interior_condition, miyamoto_tangency,
    rho_inner, rho_outer, soddy_line,
)
from ajima.construction import (
    ajima_oracle, ajima_radius, build_arc, build_gamma, gamma_point_chase,
    t_of_theta,
)
from ajima.kernel import radical_center
from ajima.svgfig import render_svg
from ajima.triangle import Triangle, bary_point
from ajima.verify import SamplePolicy, run_suite

from conftest import interior_samples


def report(num: int, ok: bool, detail: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}")
    assert ok, detail


@pytest.fixture(scope="module")
def samples1000():
    return interior_samples(1000, seed=20260826)


def test_criterion_01_formula_vs_bisection_oracle(samples1000):
    t0 = time.perf_counter()
    worst = 0.0
    for tri, theta in samples1000:
        m = tri.metrics()
        rho = ajima_radius(m, t_of_theta(theta))
        oracle = ajima_oracle(tri, build_arc(tri, theta))
        worst = max(worst, abs(rho - oracle.radius) / m.r)
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-9 and elapsed <= 10.0
    report(1, ok, f"closed form vs bisection oracle on 1000 samples: "
                  f"worst |drho|/r = {worst:.2e} (<= 1e-9), "
                  f"{elapsed:.1f}s (<= 10s)")


def test_criterion_02_three_routes_coincide(samples1000):
    worst = 0.0
    for tri, theta in samples1000:
        arc = build_arc(tri, theta)
        cfg = build_gamma(tri, arc)
        scale = max(cfg.rho, tri.metrics().r)
        for other in (gamma_point_chase(tri, arc), ajima_oracle(tri, arc)):
            worst = max(worst,
                        cfg.D.dist(other.center) / scale,
                        abs(cfg.rho - other.radius) / scale)
    report(2, worst <= 1e-9,
           f"three construction routes on 1000 samples: "
           f"worst relative gap = {worst:.2e} (<= 1e-9)")


def test_criterion_03_full_registry():
    t0 = time.perf_counter()
    rep = run_suite(SamplePolicy(seed=42, trials=1000), threshold=1e-7)
    elapsed = time.perf_counter() - t0
    doc = rep.as_dict()
    n_checks = len(doc["per_check"])
    fails = rep.total_failures
    worst_na = max((e["na"], e["id"]) for e in doc["per_check"])
    na_ok = all(e["na"] < 0.5 * (e["pass"] + e["fail"] + e["na"])
                for e in doc["per_check"])
    ok = (n_checks >= 50 and fails == 0 and na_ok and elapsed <= 300.0)
    report(3, ok, f"registry: {n_checks} checks x 1000 samples (seed 42), "
                  f"{fails} failures, worst NA {worst_na[1]} = "
                  f"{worst_na[0]}/1000 (< 50%), {elapsed:.1f}s (<= 5min)")


def test_criterion_04_barycentric_forms(samples200):
    from ajima.apollonius import (bary_D, bary_Oa, bary_T, bary_U, bary_Ua,
                                  bary_V, bary_Va)
    worst = 0.0
    for tri, theta in samples200:
        m = tri.metrics()
        t = t_of_theta(theta)
        triad = build_triad(tri, theta)
        cfg = triad.cfg_a
        res = apollonius_result(triad)
        scale = max(m.a, m.b, m.c)
        for w, pt in ((bary_D(m, t), cfg.D),
                      (bary_Oa(m, theta), cfg.arc.O),
                      (bary_T(m, theta), cfg.T),
                      (bary_Ua(m, t), res.U_touch[0]),
                      (bary_Va(m, t), res.V_touch[0]),
                      (bary_U(m, t), res.inner.center),
                      (bary_V(m, t), res.outer.center)):
            worst = max(worst, bary_point(tri, w).dist(pt) / scale)
    report(4, worst <= 1e-9,
           f"seven barycentric closed forms on 200 samples: "
           f"worst position gap = {worst:.2e} (<= 1e-9 relative)")


def test_criterion_05_numeric_spot_values():
    m = Triangle.from_sides(4.0, 5.0, 6.0).metrics()
    rho_i = rho_inner(m, 1.0)
    rho_o = rho_outer(m, 1.0)
    spots = (
        (m.r, 1.32287566), (m.R, 3.02371578), (m.W, 1.78903185),
        (rho_i, m.r * (m.W - 1.0)), (rho_o, m.r * (m.W / 3.0 + 1.0)),
    )
    spot_gap = max(abs(got - want) for got, want in spots)
    identity_gap = abs((rho_i + m.r) / (rho_o - m.r) - 3.0)
    ok = spot_gap <= 5e-8 and identity_gap <= 1e-12
    report(5, ok, f"4-5-6 at theta=180: worst spot gap = {spot_gap:.2e} "
                  f"(<= 5e-8, quoted to 8 decimals), "
                  f"(rho_i+r)/(rho_o-r)-3 = {identity_gap:.2e} (<= 1e-12)")


def test_criterion_06_soddy_ratio(samples200):
    worst = 0.0
    n_neg = 0
    ordering_ok = True
    for tri, theta in samples200:
        m = tri.metrics()
        triad = build_triad(tri, theta)
        res = apollonius_result(triad)
        sl = soddy_line(tri, res)
        worst = max(worst, abs(sl.ratio_UI_IV - 3.0), sl.collinearity)
        if t_of_theta(theta) * m.W < 1.0:    # inner circle on Ge's far side
            n_neg += 1
            ordering_ok &= sl.ordering() == ("Ge", "U", "I", "V")
        else:
            ordering_ok &= sl.ordering() == ("U", "Ge", "I", "V")
    ok = worst <= 1e-9 and ordering_ok and n_neg > 0
    report(6, ok, f"Soddy-line ratio UI:IV = 3 on 200 samples: worst gap "
                  f"= {worst:.2e} (<= 1e-9); ordering verified, "
                  f"{n_neg} samples with tW < 1")


def test_criterion_07_concurrence_thresholds(samples200):
    worst_rho = 0.0
    worst_arc = 0.0
    for tri, _ in samples200[:100]:
        m = tri.metrics()
        scale = max(m.a, m.b, m.c)
        # tW = 1: the three inscribed circles shrink onto one point
        theta_c = 4.0 * math.degrees(math.atan(1.0 / m.W))
        res = apollonius_result(build_triad(tri, theta_c))
        worst_rho = max(worst_rho, abs(res.rho_i) / m.r)
        # theta = 120: the three arc circles share a common point
        arcs = [build_arc(tri.relabeled(k), 120.0).circle for k in range(3)]
        p = radical_center(*arcs)
        worst_arc = max(worst_arc,
                        max(abs(p.dist(c.center) - c.radius)
                            for c in arcs) / scale)
    ok = worst_rho <= 1e-9 and worst_arc <= 1e-9
    report(7, ok, f"tW=1 gives |rho_i|/r = {worst_rho:.2e} (<= 1e-9); "
                  f"theta=120 common arc point offset = {worst_arc:.2e} "
                  f"(<= 1e-9 of scale)")


def test_criterion_08_miyamoto_generalization():
    rng = random.Random(88)
    worst = 0.0
    done = 0
    all_internal = True
    while done < 100:
        tri, _ = interior_samples(1, seed=rng.randrange(10 ** 6))[0]
        m = tri.metrics()
        if max(m.angle_a, m.angle_b, m.angle_c) >= math.pi / 2:
            continue    # per-side theta up to 180 needs an acute triangle
        thetas = [rng.uniform(120.0, 180.0) for _ in range(3)]
        res = miyamoto_tangency(tri, *thetas)
        all_internal &= res.internal
        worst = max(worst, res.touch_residual)
        done += 1
    ok = all_internal and worst <= 1e-7
    report(8, ok, f"independent per-side theta on 100 samples: internal "
                  f"tangency residual = {worst:.2e} (<= 1e-7 of scale)")


def test_criterion_09_scaling_laws():
    from ajima.identities import (scaling_suite, semicircle_baseline,
                                  triad_scalars)
    worst_star = 0.0
    worst_form = 0.0
    for tri, theta in interior_samples(500, seed=99):
        results = scaling_suite(triad_scalars(tri, theta),
                                semicircle_baseline(tri))
        for res in results:
            if not res.applicable:
                continue
            if res.identity.startswith("center_distance_form_"):
                worst_form = max(worst_form, res.residual)
            else:
                worst_star = max(worst_star, res.residual)
    ok = worst_star <= 1e-10 and worst_form <= 1e-9
    report(9, ok, f"scaling laws on 500 samples: worst starred residual "
                  f"= {worst_star:.2e} (<= 1e-10); worst center-distance "
                  f"closed form = {worst_form:.2e} (<= 1e-9)")


def test_criterion_10_determinism():
    policy = SamplePolicy(seed=4, trials=20)
    ids = ["F06_rho_forms", "A14_soddy", "P19_result17",
           "V02_variant_centers"]
    blobs = [json.dumps(run_suite(policy, ids=ids).as_dict(),
                        sort_keys=True).encode() for _ in range(2)]
    tri = Triangle.from_sides(4.0, 5.0, 6.0)
    layers = ("triangle", "arcs", "gamma", "incircle", "apollonius",
              "soddy", "points")
    svgs = [render_svg(tri, 140.0, None, layers).encode() for _ in range(2)]
    ok = blobs[0] == blobs[1] and svgs[0] == svgs[1]
    report(10, ok, "two identical runs: report bytes "
                   f"{'match' if blobs[0] == blobs[1] else 'differ'}, "
                   f"SVG bytes {'match' if svgs[0] == svgs[1] else 'differ'}")
