"""Random curve specs built from eigen-data, for property tests and sweeps.

Every sampler takes a ``numpy.random.Generator`` and returns a CurveSpec whose
generator satisfies the named hypotheses by construction.
"""

import math

import numpy as np

from .certifier import complex_bounds
from .closed_form import build_model
from .curve import CurveSpec, derivatives, generate_polygon
from .linalg import from_eigen_data, from_jordan_data, from_real_eigen_data, rotation


def unit(rng, angle=None):
    a = rng.uniform(0, 2 * math.pi) if angle is None else angle
    return np.array([math.cos(a), math.sin(a)])


def seed(rng, scale=(0.2, 5.0)):
    return unit(rng) * rng.uniform(*scale)


def degree(rng, lo=2, hi=10):
    return int(rng.integers(lo, hi + 1))


def random_eigenbasis(rng, min_sin=0.15):
    a = rng.uniform(0, 2 * math.pi)
    gap = rng.uniform(math.asin(min_sin), math.pi - math.asin(min_sin))
    return unit(rng, a), unit(rng, a + gap)


def _nondegenerate(make):
    def wrapped(rng, *args, **kw):
        for _ in range(100):
            spec = make(rng, *args, **kw)
            if not build_model(spec).degenerate:
                return spec
        raise RuntimeError("could not sample a non-degenerate spec")

    wrapped.__name__ = make.__name__
    return wrapped


MIN_SPEED_RATIO = 1e-2


def well_conditioned(spec, grid=1001):
    """Speed never drops below 1% of its maximum, so no near-cusps."""
    d1, _ = derivatives(generate_polygon(spec), np.linspace(0, 1, grid))
    speed = np.linalg.norm(d1, axis=1)
    return speed.min() >= MIN_SPEED_RATIO * speed.max()


def _conditioned(make):
    def wrapped(rng, *args, **kw):
        for _ in range(1000):
            spec = make(rng, *args, **kw)
            if not build_model(spec).degenerate and well_conditioned(spec):
                return spec
        raise RuntimeError("could not sample a well-conditioned spec")

    wrapped.__name__ = make.__name__
    return wrapped


@_conditioned
def random_real(rng, n=None):
    s1, s2 = rng.uniform(-3, 3, size=2)
    while abs(s1 - s2) < 0.05:
        s2 = rng.uniform(-3, 3)
    v1, v2 = random_eigenbasis(rng)
    return CurveSpec(n or degree(rng), from_real_eigen_data(s1, s2, v1, v2), seed(rng))


@_conditioned
def random_defective(rng, n=None):
    sigma = rng.choice([-1, 1]) * rng.uniform(0.2, 3)
    v1 = unit(rng)
    v2 = np.array([-v1[1], v1[0]]) * rng.uniform(0.2, 3)
    return CurveSpec(n or degree(rng), from_jordan_data(sigma, v1, v2), seed(rng))


@_conditioned
def random_complex(rng, n=None):
    h = rng.uniform(0.2, 3)
    phi = rng.uniform(0.05, math.pi - 0.05)
    gamma = rng.uniform(0.2, math.pi - 0.2)
    m = from_eigen_data(h, phi, gamma)
    frame = rotation(rng.uniform(0, 2 * math.pi))
    return CurveSpec(n or degree(rng), frame @ m @ frame.T, seed(rng))


RANDOM_BY_VARIANT = {"real": random_real, "defective": random_defective, "complex": random_complex}


@_nondegenerate
def cao_wang_instance(rng):
    s1 = rng.uniform(1, 4)
    s2 = rng.uniform((s1 + 1) / 2, s1)
    r = rotation(rng.uniform(0, math.pi))
    return CurveSpec(degree(rng), r @ np.diag([s1, s2]) @ r.T, seed(rng))


@_nondegenerate
def positive_real_instance(rng):
    s2 = rng.uniform(0.05, 3)
    s1 = rng.uniform(max(s2, 2 - s2), max(s2, 2 - s2) + 3)
    v1, v2 = random_eigenbasis(rng)
    mu2 = rng.choice([-1, 1]) * rng.uniform(0.05, 3)
    mu1 = rng.choice([-1, 1]) * abs(mu2) * rng.uniform(1, 4)
    return CurveSpec(degree(rng), from_real_eigen_data(s1, s2, v1, v2), mu1 * v1 + mu2 * v2)


@_nondegenerate
def jordan_instance(rng):
    sigma = rng.uniform(1, 3)
    v1 = unit(rng)
    v2 = np.array([-v1[1], v1[0]]) * rng.uniform(0.2, 3)
    sign = rng.choice([-1, 1])
    mu1 = sign * rng.uniform(0, 3)
    mu2 = sign * rng.uniform(0.05, 3)
    return CurveSpec(degree(rng), from_jordan_data(sigma, v1, v2), mu1 * v1 + mu2 * v2)


def _typical_h(rng, phi):
    c = math.cos(phi)
    if rng.random() < 0.5:
        return (1 / c) * rng.uniform(1.01, 2.5)
    # floor keeps h**(n-1) |w| above the speed cutoff at degree 10
    return c * rng.uniform(0.3, 0.99)


@_nondegenerate
def typical_instance(rng):
    phi = rng.choice([-1, 1]) * rng.uniform(0.05, 1.3)
    h = _typical_h(rng, abs(phi))
    return CurveSpec(degree(rng), h * rotation(phi), seed(rng))


def _complex_generator(rng, n):
    """Generator meeting the complex bound for degree n (None: every degree)."""
    for _ in range(1000):
        phi = rng.uniform(0.05, 1.3)
        h = _typical_h(rng, phi)
        bound = max(complex_bounds(h, phi, n))
        if bound > 1e-3:
            break
    gamma = math.acos(rng.uniform(-1, 1) * 0.999 * bound)
    frame = rotation(rng.uniform(0, 2 * math.pi))
    return frame @ from_eigen_data(h, rng.choice([-1, 1]) * phi, gamma) @ frame.T


@_nondegenerate
def complex_general_instance(rng):
    return CurveSpec(degree(rng), _complex_generator(rng, None), seed(rng))


@_nondegenerate
def complex_degree_instance(rng):
    n = degree(rng)
    return CurveSpec(n, _complex_generator(rng, n), seed(rng))


INSTANCES = {
    "CaoWang": cao_wang_instance,
    "PositiveRealSeed": positive_real_instance,
    "Jordan": jordan_instance,
    "TypicalMineur": typical_instance,
    "ComplexGeneral": complex_general_instance,
    "ComplexDegree": complex_degree_instance,
}
