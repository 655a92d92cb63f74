"""Audit of singular-value Class A conditions for 2x2 and 3x3 generators.

The subdivision profile

    f(t) = (1 - t + s_min t)**3 - (1 - t + s_max t)

measures whether ``s_min**3 >= s_max`` survives replacing M by the
subdivision matrix ``(1 - t) I + t M`` (whose extreme singular values, for a
symmetric positive M, are ``1 - t + t s``).  Planar chains are embedded in 3D
with ``z = 0`` so triangle areas always come from a cross product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import LinalgError, ZeroVector, angle_between, as_mat, as_vec, jacobi_eigenvalues, singular_values

EXPANSION_TOL = 1e-12
COLLINEAR_SIN = 1e-12
CMP_RTOL = 1e-12
SANDWICH_RTOL = 1e-10


class CollinearPair(LinalgError):
    pass


@dataclass(frozen=True)
class SVConditions:
    sv: tuple
    sv_condition_holds: bool
    misprint_condition_holds: bool

    @property
    def sigma_min(self) -> float:
        return self.sv[-1]

    @property
    def sigma_max(self) -> float:
        return self.sv[0]


@dataclass(frozen=True)
class SubdivisionProfile:
    points: tuple
    f_prime_at_zero: float

    @property
    def minimum(self) -> tuple[float, float]:
        """``(t, f(t))`` at the smallest tabulated value."""
        return min(self.points, key=lambda p: p[1])


@dataclass(frozen=True)
class TriangleChain:
    areas: tuple
    angles: tuple


@dataclass(frozen=True)
class AreaBounds:
    lower: float
    actual: float
    upper: float

    @property
    def holds(self) -> bool:
        tol = SANDWICH_RTOL * max(abs(self.lower), abs(self.upper), abs(self.actual), 1e-300)
        return self.lower - tol <= self.actual <= self.upper + tol


@dataclass(frozen=True)
class Proposition1Result:
    n: int
    lhs: float
    rhs: float
    hypothesis_holds: bool
    conclusion_holds: bool
    angles: tuple
    areas: tuple
    expansion_holds: bool = True


@dataclass(frozen=True)
class ClassAReport:
    expansion_holds: bool
    min_symmetric_eigenvalue: float
    sv: tuple
    sv_condition_holds: bool
    misprint_condition_holds: bool
    subdivision_profile: tuple
    f_prime_at_zero: float
    proposition1: Proposition1Result | None = None
    zhao_ratio: float | None = None

    @property
    def profile_minimum(self) -> tuple[float, float]:
        return min(self.subdivision_profile, key=lambda p: p[1])


def _ge(a: float, b: float, rtol: float = CMP_RTOL) -> bool:
    return a >= b - rtol * max(1.0, abs(a), abs(b))


def expansion_condition(m) -> tuple[bool, float]:
    """Whether ``|(1-t) v + t M v| >= |v|`` for all v and t in [0, 1].

    Equivalent to ``v.Mv >= v.v``, i.e. the symmetric part of M has smallest
    eigenvalue at least 1.
    """
    m = as_mat(m)
    lam = float(jacobi_eigenvalues(0.5 * (m + m.T))[-1])
    return lam >= 1.0 - EXPANSION_TOL, lam


def zhao_ratio(m, v) -> float:
    m, v = as_mat(m), as_vec(v)
    vv = float(v @ v)
    if vv == 0:
        raise ZeroVector("ratio needs a nonzero vector")
    return float(v @ m @ v) / vv


def sigma_conditions(sigma_min: float, sigma_max: float) -> tuple[bool, bool]:
    """``(sigma_min**3 >= sigma_max, sigma_min**2 >= sigma_max)``."""
    return _ge(sigma_min**3, sigma_max), _ge(sigma_min**2, sigma_max)


def sv_condition(m) -> SVConditions:
    sv = tuple(float(s) for s in singular_values(m))
    return SVConditions(sv, *sigma_conditions(sv[-1], sv[0]))


def profile_value(sigma_min: float, sigma_max: float, t):
    """f(t), expanded around t = 0 to avoid cancelling the leading 1."""
    t = np.asarray(t, dtype=float)
    d, e = sigma_min - 1.0, sigma_max - 1.0
    return (t * ((3 * d - e) + 3 * d * d * t + d**3 * t * t))[()]


def subdivision_sv_profile(sigma_min: float, sigma_max: float, grid: int = 1001) -> SubdivisionProfile:
    if not 0 < sigma_min <= sigma_max:
        raise ValueError("need 0 < sigma_min <= sigma_max")
    if grid < 2:
        raise ValueError("grid must have at least 2 points")
    ts = np.linspace(0.0, 1.0, grid)
    fs = profile_value(sigma_min, sigma_max, ts)
    pts = tuple((float(t), float(f)) for t, f in zip(ts, fs))
    return SubdivisionProfile(pts, 3 * sigma_min - sigma_max - 2)


def negative_witness(sigma_min: float, sigma_max: float, t_max: float = 0.1, grid: int = 1001) -> float | None:
    """Some t in (0, t_max] with f(t) < 0, or None.

    Works on g(t) = f(t)/t, which starts at f'(0), so a negative region
    hugging t = 0 is not lost between grid points.
    """
    d, e = sigma_min - 1.0, sigma_max - 1.0

    def g(t):
        return (3 * d - e) + 3 * d * d * t + d**3 * t * t

    ts = np.linspace(0.0, t_max, grid)
    gs = g(ts)
    neg = np.flatnonzero(gs < 0)
    if len(neg) == 0:
        return None
    i = int(neg[0])
    if i > 0:
        return float(ts[i])
    if gs[1] < 0:
        return float(ts[1])
    # root of g lies in (0, ts[1]); keep g(lo) < 0 while bisecting
    lo, hi = 0.0, float(ts[1])
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if g(mid) < 0:
            lo = mid
        else:
            hi = mid
    return lo if lo > 0 and profile_value(sigma_min, sigma_max, lo) < 0 else None


def _embed3(x: np.ndarray) -> np.ndarray:
    return np.append(x, 0.0) if x.shape == (2,) else x


def triangle_chain(m, v, n: int) -> TriangleChain:
    """Areas and angles of the triangles spanned by consecutive ``M^j v``."""
    m, v = as_mat(m), as_vec(v)
    if n < 3:
        raise ValueError("triangle chains need n >= 3")
    if not np.any(v):
        raise ZeroVector("chain needs a nonzero vector")
    powers = [v]
    for _ in range(n - 1):
        powers.append(m @ powers[-1])
    areas, angles = [], []
    for j in range(1, n):
        a, b = powers[j - 1], powers[j]
        areas.append(0.5 * float(np.linalg.norm(np.cross(_embed3(a), _embed3(b)))))
        angles.append(angle_between(a, b))
    if math.sin(angles[0]) < COLLINEAR_SIN:
        raise CollinearPair("v and Mv are parallel")
    return TriangleChain(tuple(areas), tuple(angles))


def corrected_area_bounds(m, v) -> AreaBounds:
    """Sandwich ``s_min^2 |D| r <= |MD| <= s_max^2 |D| r``, ``r = sin a2 / sin a1``."""
    chain = triangle_chain(m, v, 3)
    sv = singular_values(m)
    r = math.sin(chain.angles[1]) / math.sin(chain.angles[0])
    d = chain.areas[0]
    return AreaBounds(float(sv[-1] ** 2 * d * r), chain.areas[1], float(sv[0] ** 2 * d * r))


def proposition1(m, v, n: int) -> Proposition1Result:
    m, v = as_mat(m), as_vec(v)
    chain = triangle_chain(m, v, n)
    sv = singular_values(m)
    lo, hi = float(sv[-1]), float(sv[0])
    lhs = lo ** (3 * (n - 1))
    rhs = hi ** (2 * (n - 2)) * math.sin(chain.angles[-1]) / math.sin(chain.angles[0])
    last = np.linalg.matrix_power(m, n - 1) @ v
    left = chain.areas[0] / float(np.linalg.norm(v)) ** 3
    right = chain.areas[-1] / float(np.linalg.norm(last)) ** 3
    expands, _ = expansion_condition(m)
    return Proposition1Result(
        n=n,
        lhs=lhs,
        rhs=rhs,
        hypothesis_holds=_ge(lhs, rhs),
        conclusion_holds=_ge(left, right, SANDWICH_RTOL),
        angles=chain.angles,
        areas=chain.areas,
        expansion_holds=expands,
    )


def audit(m, v=None, n: int = 3, grid: int = 1001) -> ClassAReport:
    """Everything above for one generator; the area proposition needs a vector."""
    m = as_mat(m)
    expands, lam = expansion_condition(m)
    svc = sv_condition(m)
    lo, hi = svc.sigma_min, svc.sigma_max
    prof = subdivision_sv_profile(lo, hi, grid) if lo > 0 else SubdivisionProfile((), 3 * lo - hi - 2)
    prop = ratio = None
    if v is not None:
        ratio = zhao_ratio(m, v)
        try:
            prop = proposition1(m, v, n)
        except (CollinearPair, ZeroVector):
            prop = None
    return ClassAReport(
        expansion_holds=expands,
        min_symmetric_eigenvalue=lam,
        sv=svc.sv,
        sv_condition_holds=svc.sv_condition_holds,
        misprint_condition_holds=svc.misprint_condition_holds,
        subdivision_profile=prof.points,
        f_prime_at_zero=prof.f_prime_at_zero,
        proposition1=prop,
        zhao_ratio=ratio,
    )
