"""Shared deterministic sampling helpers for the test suite."""
import random

import pytest

from ajima.triangle import Triangle
from ajima.verify import SamplePolicy, sample_theta, sample_triangle


def interior_samples(n: int, seed: int = 0,
                     theta_range=(20.0, 340.0)) -> list[tuple[Triangle, float]]:
    """n random (triangle, theta) pairs satisfying the interior
    condition, reproducible from the seed."""
    rng = random.Random(seed)
    policy = SamplePolicy(seed=seed, trials=n, theta_range=theta_range,
                          constraint="interior")
    out = []
    while len(out) < n:
        tri = sample_triangle(rng, policy.side_ratio_cap)
        theta = sample_theta(rng, policy, tri)
        if theta is not None:
            out.append((tri, theta))
    return out


@pytest.fixture(scope="session")
def samples200():
    return interior_samples(200, seed=7)


@pytest.fixture(scope="session")
def tri456():
    return Triangle.from_sides(4.0, 5.0, 6.0)


@pytest.fixture(scope="session")
def tri345():
    return Triangle.from_sides(3.0, 4.0, 5.0)
