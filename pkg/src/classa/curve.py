"""Bezier curves whose control-polygon edges are ``M^j w``.

All evaluation routines accept a scalar ``t`` or a 1-d array of parameters
and return matching shapes (``(2,)``/``(k, 2)`` for points, float/``(k,)``
for curvature).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    LinalgError,
    ZeroSeed,
    as_mat,
    as_vec,
    det2,
    right_quotient_matrix,
    subdivision_matrix,
)

SPEED_RTOL = 1e-14


class VanishingSpeed(LinalgError):
    pass


@dataclass(frozen=True, eq=False)
class CurveSpec:
    degree: int
    M: np.ndarray
    w: np.ndarray
    b0: np.ndarray = (0.0, 0.0)

    def __post_init__(self):
        for name, conv in (("M", as_mat), ("w", as_vec), ("b0", as_vec)):
            arr = np.array(conv(getattr(self, name)), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        if int(self.degree) != self.degree or self.degree < 2:
            raise ValueError(f"degree must be an integer >= 2, got {self.degree}")
        object.__setattr__(self, "degree", int(self.degree))
        if self.M.shape != (2, 2) or self.w.shape != (2,) or self.b0.shape != (2,):
            raise ValueError("planar curves need a 2x2 generator and 2-vectors")
        if not np.any(self.w):
            raise ZeroSeed("seed vector is zero")

    def edges(self) -> np.ndarray:
        out = np.empty((self.degree, 2))
        e = self.w.copy()
        for j in range(self.degree):
            out[j] = e
            e = self.M @ e
        return out


@dataclass(frozen=True, eq=False)
class ControlPolygon:
    points: np.ndarray

    @property
    def degree(self) -> int:
        return len(self.points) - 1

    @property
    def scale(self) -> float:
        """Largest edge length; relative tolerances are taken against it."""
        return float(np.max(np.linalg.norm(np.diff(self.points, axis=0), axis=1)))


@dataclass(frozen=True)
class CurveSample:
    t: float
    point: np.ndarray
    d1: np.ndarray
    d2: np.ndarray
    kappa: float


def generate_polygon(spec: CurveSpec) -> ControlPolygon:
    pts = np.empty((spec.degree + 1, 2))
    pts[0] = spec.b0
    pts[1:] = spec.b0 + np.cumsum(spec.edges(), axis=0)
    return ControlPolygon(pts)


def _casteljau(coeffs: np.ndarray, t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    tt = t.reshape(-1, 1, 1)
    b = np.broadcast_to(coeffs, (tt.shape[0],) + coeffs.shape).copy()
    for r in range(1, len(coeffs)):
        b = (1.0 - tt) * b[:, :-1] + tt * b[:, 1:]
    out = b[:, 0]
    return out[0] if t.ndim == 0 else out


def de_casteljau_split(polygon: ControlPolygon, t: float) -> tuple[np.ndarray, np.ndarray]:
    """Left and right control points of the sub-arcs on ``[0, t]`` and ``[t, 1]``."""
    b = np.array(polygon.points, dtype=float)
    left, right = [b[0]], [b[-1]]
    for _ in range(polygon.degree):
        b = (1.0 - t) * b[:-1] + t * b[1:]
        left.append(b[0])
        right.append(b[-1])
    return np.array(left), np.array(right[::-1])


def evaluate(polygon: ControlPolygon, t):
    return _casteljau(polygon.points, t)


def derivatives(polygon: ControlPolygon, t):
    """First and second derivative from the hodograph polygons."""
    n = polygon.degree
    d1 = n * np.diff(polygon.points, axis=0)
    d2 = (n - 1) * np.diff(d1, axis=0)
    return _casteljau(d1, t), _casteljau(d2, t)


def curvature_numeric(polygon: ControlPolygon, t):
    """Signed curvature ``det(c', c'') / |c'|^3``."""
    d1, d2 = derivatives(polygon, t)
    speed = np.linalg.norm(d1, axis=-1)
    if np.any(speed <= SPEED_RTOL * polygon.scale):
        raise VanishingSpeed("curve speed vanishes")
    return (d1[..., 0] * d2[..., 1] - d1[..., 1] * d2[..., 0]) / speed**3


def sample(polygon: ControlPolygon, t: float) -> CurveSample:
    d1, d2 = derivatives(polygon, t)
    return CurveSample(float(t), evaluate(polygon, t), d1, d2, float(curvature_numeric(polygon, t)))


def endpoint_curvatures(spec: CurveSpec) -> tuple[float, float]:
    n = spec.degree
    e = spec.edges()
    scale = float(np.max(np.linalg.norm(e, axis=1)))
    first, last = np.linalg.norm(e[0]), np.linalg.norm(e[-1])
    if min(first, last) <= SPEED_RTOL * scale:
        raise VanishingSpeed("end tangent vanishes")
    k0 = (n - 1) / n * det2(e[0], spec.M @ e[0]) / first**3
    k1 = (n - 1) / n * det2(e[-2], e[-1]) / last**3
    return k0, k1


def subdivide_left(spec: CurveSpec, t: float) -> CurveSpec:
    if not 0.0 < t <= 1.0:
        raise ValueError(f"left subdivision needs t in (0, 1], got {t}")
    return CurveSpec(spec.degree, subdivision_matrix(spec.M, t), t * spec.w, spec.b0)


def subdivide_right(spec: CurveSpec, t: float) -> CurveSpec:
    if not 0.0 <= t < 1.0:
        raise ValueError(f"right subdivision needs t in [0, 1), got {t}")
    gen = right_quotient_matrix(spec.M, t)
    # first edge of the right half is (1 - t) T^{n-1} w
    tm = subdivision_matrix(spec.M, t)
    seed = spec.w.copy()
    for _ in range(spec.degree - 1):
        seed = tm @ seed
    seed = (1.0 - t) * seed
    base = evaluate(generate_polygon(spec), t)
    return CurveSpec(spec.degree, gen, seed, base)
