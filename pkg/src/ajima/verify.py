"""Randomized verification harness.

Samples (triangle, theta) pairs deterministically from a seed, evaluates
registry checks against each sample, and aggregates the results into a
replayable report: every failing sample is reconstructible from its
descriptor alone.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .kernel import DEFAULT_TOL, GeometryError, Tolerance
from .triangle import Triangle
from .construction import build_arc, build_gamma, variant_circles
from .apollonius import (apollonius_result, build_triad, interior_condition,
                         soddy_line)
from . import identities
from .checks import REGISTRY, NotApplicable, Outcome

PASS_THRESHOLD = 1e-7


class UnknownCheckId(ValueError):
    pass


@dataclass(frozen=True)
class SamplePolicy:
    seed: int = 0
    trials: int = 100
    theta_range: tuple[float, float] = (20.0, 340.0)
    constraint: str = "interior"        # "interior" | "any"
    side_ratio_cap: float = 10.0

    def __post_init__(self) -> None:
        if self.constraint not in ("interior", "any"):
            raise ValueError(f"unknown constraint {self.constraint!r}")
        lo, hi = self.theta_range
        if not (0.0 < lo <= hi < 360.0):
            raise ValueError(f"bad theta range {self.theta_range}")


@dataclass(frozen=True)
class SampleDescriptor:
    sides: tuple[float, float, float]
    theta: float
    seed: int
    index: int

    def as_dict(self) -> dict:
        return {"sides": list(self.sides), "theta": self.theta,
                "seed": self.seed, "index": self.index}


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    verdict: str                        # "pass" | "fail" | "not_applicable"
    residual: float
    sample: SampleDescriptor
    witness: dict[str, tuple[float, float]] = field(default_factory=dict)
    reason: str = ""


class SampleContext:
    """Per-sample lazy cache shared by all checks.

    Construction failures surface as :class:`NotApplicable` so that a
    single bad configuration does not poison unrelated checks.
    """

    def __init__(self, tri: Triangle, theta_deg: float,
                 tol: Tolerance = DEFAULT_TOL, aux_seed: int = 0) -> None:
        self.tri = tri
        self.theta = theta_deg
        self.tol = tol
        self.m = tri.metrics()
        self.scale = max(self.m.a, self.m.b, self.m.c)
        self.t_param = math.tan(0.25 * math.radians(theta_deg))
        self.rng = random.Random(aux_seed)
        self._cache: dict = {}

    def _get(self, key: str, build):
        if key not in self._cache:
            try:
                self._cache[key] = ("ok", build())
            except NotApplicable as exc:
                self._cache[key] = ("na", exc.reason)
            except GeometryError as exc:
                self._cache[key] = ("na", f"{type(exc).__name__}: {exc}")
        kind, val = self._cache[key]
        if kind == "na":
            raise NotApplicable(val)
        return val

    def cfg(self, k: int):
        sub = self.tri.relabeled(k)
        return self._get(f"cfg{k}", lambda: build_gamma(
            sub, build_arc(sub, self.theta, side="abc"[k]), self.tol))

    def variants(self, k: int):
        sub = self.tri.relabeled(k)
        return self._get(f"var{k}", lambda: variant_circles(
            sub, build_arc(sub, self.theta, side="abc"[k]), self.tol))

    @property
    def triad(self):
        def build():
            if not interior_condition(self.m, self.theta):
                raise NotApplicable("interior condition violated")
            return build_triad(self.tri, self.theta, tol=self.tol)
        return self._get("triad", build)

    @property
    def apo(self):
        return self._get("apo", lambda: apollonius_result(self.triad,
                                                          self.tol))

    @property
    def soddy(self):
        return self._get("soddy", lambda: soddy_line(self.tri, self.apo,
                                                     self.tol))

    @property
    def scalars(self):
        return self._get("scalars",
                         lambda: identities.triad_scalars(self.tri,
                                                          self.theta))

    @property
    def baseline(self):
        return self._get("baseline",
                         lambda: identities.semicircle_baseline(self.tri))

    @property
    def identity_results(self):
        return self._get("ident", lambda: identities.identity_suite(
            self.scalars))

    @property
    def radius_results(self):
        return self._get("radius", lambda: identities.radius_relation_suite(
            self.scalars))

    @property
    def scaling_results(self):
        return self._get("scaling", lambda: identities.scaling_suite(
            self.scalars, self.baseline))


def evaluate(check_id: str, ctx: SampleContext,
             sample: SampleDescriptor,
             threshold: float = PASS_THRESHOLD) -> CheckResult:
    if check_id not in REGISTRY:
        raise UnknownCheckId(check_id)
    try:
        out: Outcome = REGISTRY[check_id](ctx)
    except NotApplicable as exc:
        return CheckResult(check_id, "not_applicable", math.nan, sample,
                           reason=exc.reason)
    except GeometryError as exc:
        return CheckResult(check_id, "not_applicable", math.nan, sample,
                           reason=f"{type(exc).__name__}: {exc}")
    verdict = "pass" if out.residual <= threshold else "fail"
    return CheckResult(check_id, verdict, out.residual, sample, out.witness)


def run_check(check_id: str, tri: Triangle, theta_deg: float,
              tol: Tolerance = DEFAULT_TOL, aux_seed: int = 0,
              threshold: float = PASS_THRESHOLD) -> CheckResult:
    ctx = SampleContext(tri, theta_deg, tol, aux_seed)
    desc = SampleDescriptor(tuple(sorted((ctx.m.a, ctx.m.b, ctx.m.c),
                                         reverse=True)),
                            theta_deg, aux_seed, 0)
    return evaluate(check_id, ctx, desc, threshold)


def sample_triangle(rng: random.Random, cap: float) -> Triangle:
    while True:
        sides = sorted(rng.uniform(1.0, 10.0) for _ in range(3))
        a, b, c = sides
        if a + b <= c * 1.001:
            continue
        if c / a > cap:
            continue
        return Triangle.from_sides(c, b, a)


def sample_theta(rng: random.Random, policy: SamplePolicy,
                 tri: Triangle) -> float | None:
    lo, hi = policy.theta_range
    if policy.constraint == "interior":
        m = tri.metrics()
        max_angle = math.degrees(max(m.angle_a, m.angle_b, m.angle_c))
        hi = min(hi, 2.0 * (180.0 - max_angle) - 1e-9)
        if hi <= lo:
            return None
    return rng.uniform(lo, hi)


@dataclass
class CheckSummary:
    check_id: str
    n_pass: int = 0
    n_fail: int = 0
    n_na: int = 0
    max_residual: float = 0.0
    worst_sample: SampleDescriptor | None = None
    failures: list[SampleDescriptor] = field(default_factory=list)
    na_reasons: dict[str, int] = field(default_factory=dict)

    def record(self, res: CheckResult) -> None:
        if res.verdict == "not_applicable":
            self.n_na += 1
            self.na_reasons[res.reason] = self.na_reasons.get(res.reason,
                                                              0) + 1
            return
        if res.verdict == "pass":
            self.n_pass += 1
        else:
            self.n_fail += 1
            self.failures.append(res.sample)
        if res.residual >= self.max_residual:
            self.max_residual = res.residual
            self.worst_sample = res.sample

    def as_dict(self) -> dict:
        return {
            "id": self.check_id,
            "pass": self.n_pass,
            "fail": self.n_fail,
            "na": self.n_na,
            "max_residual": self.max_residual,
            "worst_sample": (self.worst_sample.as_dict()
                             if self.worst_sample else None),
        }


@dataclass
class SuiteReport:
    policy: SamplePolicy
    summaries: dict[str, CheckSummary]

    @property
    def total_failures(self) -> int:
        return sum(s.n_fail for s in self.summaries.values())

    def as_dict(self) -> dict:
        return {
            "version": 1,
            "policy": {
                "seed": self.policy.seed,
                "trials": self.policy.trials,
                "theta_range": list(self.policy.theta_range),
                "constraint": self.policy.constraint,
                "side_ratio_cap": self.policy.side_ratio_cap,
            },
            "per_check": [self.summaries[cid].as_dict()
                          for cid in sorted(self.summaries)],
        }


def run_suite(policy: SamplePolicy, ids: list[str] | None = None,
              tol: Tolerance = DEFAULT_TOL,
              threshold: float = PASS_THRESHOLD) -> SuiteReport:
    if ids is None:
        ids = sorted(REGISTRY)
    else:
        unknown = [i for i in ids if i not in REGISTRY]
        if unknown:
            raise UnknownCheckId(", ".join(unknown))
        ids = sorted(ids)
    rng = random.Random(policy.seed)
    summaries = {cid: CheckSummary(cid) for cid in ids}
    for index in range(policy.trials):
        tri = sample_triangle(rng, policy.side_ratio_cap)
        theta = sample_theta(rng, policy, tri)
        if theta is None:
            continue
        aux_seed = policy.seed * 1_000_003 + index
        ctx = SampleContext(tri, theta, tol, aux_seed)
        m = ctx.m
        desc = SampleDescriptor((m.a, m.b, m.c), theta, policy.seed, index)
        for cid in ids:
            summaries[cid].record(evaluate(cid, ctx, desc, threshold))
    return SuiteReport(policy, summaries)
