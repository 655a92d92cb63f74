"""Sufficient conditions for monotone curvature, and a numerical oracle.

Each ``check_*`` function returns a :class:`Certificate`.  A certificate that
holds guarantees that the curvature does not change monotonicity on
``[0, 1]``; ``direction`` says which way it goes relative to the sign of the
curvature at ``t = 0``.  :func:`numeric_monotonicity` is the independent
ground truth the certificates are tested against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .closed_form import build_model, dkappa, kappa_closed
from .curve import CurveSpec
from .linalg import (
    ComplexPair,
    Defective,
    LinalgError,
    RealDiagonalizable,
    as_mat,
    as_vec,
    decompose,
    seed_coordinates,
)

DECREASING = "decreasing-if-kappa0-positive"
INCREASING = "increasing-if-kappa0-positive"
NA = "n/a"

CERTIFICATE_NAMES = (
    "CaoWang",
    "PositiveRealSeed",
    "Jordan",
    "TypicalMineur",
    "ComplexGeneral",
    "ComplexDegree",
)

CMP_RTOL = 1e-12
DEFAULT_GRID = 2001
BISECT_TOL = 1e-10
DEADBAND_RTOL = 1e-12


class DegenerateLine(LinalgError):
    pass


@dataclass(frozen=True)
class Certificate:
    name: str
    holds: bool
    direction: str = NA
    details: tuple = field(default_factory=tuple)

    def detail(self, key):
        return dict(self.details)[key]


@dataclass(frozen=True)
class MonotonicityVerdict:
    kind: str
    extrema_locations: tuple = ()
    grid_size: int = DEFAULT_GRID

    @property
    def monotone(self) -> bool:
        return self.kind in ("monotone-decreasing", "monotone-increasing")


def _tol(*xs) -> float:
    return CMP_RTOL * max(1.0, *(abs(x) for x in xs))


def _ge(a: float, b: float) -> bool:
    return a >= b - _tol(a, b)


def _gt(a: float, b: float) -> bool:
    return a > b + _tol(a, b)


def _fail(name: str, reason: str, **quantities) -> Certificate:
    return Certificate(name, False, NA, (("reason", reason),) + tuple(quantities.items()))


def check_cao_wang(m) -> Certificate:
    """Symmetric M with sigma1 >= 1 and 2*sigma2 >= sigma1 + 1."""
    name = "CaoWang"
    m = as_mat(m)
    scale = max(1.0, float(np.max(np.abs(m))))
    if abs(m[0, 1] - m[1, 0]) > 1e-12 * scale:
        return _fail(name, "matrix is not symmetric")
    sp = decompose(m)
    if isinstance(sp, ComplexPair):
        return _fail(name, "complex eigenvalues")
    s1, s2 = sp.eigenvalues
    q = {"sigma1": s1, "sigma2": s2}
    if not s2 > 0:
        return _fail(name, "eigenvalues not positive", **q)
    holds = _ge(s1, 1.0) and _ge(2 * s2, s1 + 1)
    return Certificate(name, holds, DECREASING if holds else NA, tuple(q.items()))


def _mu_nonzero(mu: float, w, v) -> bool:
    return abs(mu) > 1e-12 * np.hypot(*as_vec(w)) / np.hypot(*as_vec(v))


def check_positive_real(m, w) -> Certificate:
    """sigma1 >= sigma2 > 0, sigma1 + sigma2 >= 2 and |mu1| >= |mu2| > 0."""
    name = "PositiveRealSeed"
    sp = decompose(m)
    if not isinstance(sp, RealDiagonalizable):
        return _fail(name, f"eigenstructure is {sp.kind}")
    if sp.degenerate:
        return _fail(name, "generator is a multiple of the identity")
    c = seed_coordinates(sp, w)
    q = {"sigma1": sp.sigma1, "sigma2": sp.sigma2, "mu1": c.mu1, "mu2": c.mu2,
         "eigenvalue_sum_minus_2": sp.sigma1 + sp.sigma2 - 2}
    if not sp.sigma2 > 0:
        return _fail(name, "eigenvalues not positive", **q)
    holds = (
        _ge(sp.sigma1 + sp.sigma2, 2.0)
        and _ge(abs(c.mu1), abs(c.mu2))
        and _mu_nonzero(c.mu2, w, sp.v2)
    )
    return Certificate(name, holds, DECREASING if holds else NA, tuple(q.items()))


def check_jordan(m, w) -> Certificate:
    """Defective M with sigma >= 1, mu1*mu2 >= 0 and mu2 != 0."""
    name = "Jordan"
    sp = decompose(m)
    if not isinstance(sp, Defective):
        return _fail(name, f"eigenstructure is {sp.kind}")
    c = seed_coordinates(sp, w)
    q = {"sigma": sp.sigma, "mu1": c.mu1, "mu2": c.mu2}
    prod = c.mu1 * c.mu2
    holds = (
        _ge(sp.sigma, 1.0)
        and prod >= -CMP_RTOL * (c.mu1**2 + c.mu2**2)
        and _mu_nonzero(c.mu2, w, sp.v2)
    )
    return Certificate(name, holds, DECREASING if holds else NA, tuple(q.items()))


def typical_parameters(m) -> tuple[float, float] | None:
    """``(h, phi)`` when M is a scaled rotation, otherwise None."""
    m = as_mat(m)
    scale = max(1e-300, float(np.max(np.abs(m))))
    if abs(m[0, 0] - m[1, 1]) > 1e-10 * scale or abs(m[0, 1] + m[1, 0]) > 1e-10 * scale:
        return None
    return float(np.hypot(m[0, 0], m[1, 0])), math.atan2(m[1, 0], m[0, 0])


def check_typical(m) -> Certificate:
    """Scaled rotation with h > 1/cos(phi) or 0 < h < cos(phi)."""
    name = "TypicalMineur"
    hp = typical_parameters(m)
    if hp is None:
        return _fail(name, "matrix is not a scaled rotation")
    h, phi = hp
    q = {"h": h, "phi": phi, "cos_phi": math.cos(phi)}
    if not (0 < abs(phi) < math.pi / 2) or h <= 0:
        return _fail(name, "rotation angle outside (0, pi/2)", **q)
    cphi = math.cos(phi)
    if _gt(h, 1.0 / cphi):
        return Certificate(name, True, DECREASING, tuple(q.items()))
    if _gt(cphi, h):
        return Certificate(name, True, INCREASING, tuple(q.items()))
    return Certificate(name, False, NA, tuple(q.items()))


def complex_bounds(h: float, phi: float, n: int | None = None) -> tuple[float, float]:
    """Right-hand sides of the two |cos(gamma)| conditions.

    With ``n`` given, the degree-dependent bounds; otherwise the bounds valid
    for every degree.
    """
    a = h * math.cos(phi) - 1.0
    b = math.cos(phi) - h
    hs2, s2 = 9 * (h * math.sin(phi)) ** 2, 9 * math.sin(phi) ** 2
    if n is None:
        p, q = 1.0, 1.0
    else:
        p, q = float(n + 1), float(n - 1)

    def ratio(num, rest):
        den = math.sqrt((p * num) ** 2 + q * q * rest)
        return p * num / den if den > 0 else 0.0

    return ratio(a, hs2), ratio(b, s2)


def _complex_check(name: str, m, n: int | None, strict: bool) -> Certificate:
    sp = decompose(m)
    if not isinstance(sp, ComplexPair):
        return _fail(name, f"eigenstructure is {sp.kind}")
    cg = abs(math.cos(sp.gamma))
    b1, b2 = complex_bounds(sp.h, sp.phi, n)
    q = {"h": sp.h, "phi": sp.phi, "gamma": sp.gamma, "abs_cos_gamma": cg,
         "bound_decreasing": b1, "bound_increasing": b2}
    if n is not None:
        q["degree"] = n
    cmp = (lambda bound: _gt(bound, cg)) if strict else (lambda bound: _ge(bound, cg))
    if cmp(b1):
        return Certificate(name, True, DECREASING, tuple(q.items()))
    if cmp(b2):
        return Certificate(name, True, INCREASING, tuple(q.items()))
    return Certificate(name, False, NA, tuple(q.items()))


def check_complex_general(m) -> Certificate:
    """|cos(gamma)| strictly below the degree-independent bound."""
    return _complex_check("ComplexGeneral", m, None, strict=True)


def check_complex_degree(m, n: int) -> Certificate:
    """|cos(gamma)| at most the bound for curves of degree ``n``."""
    if n < 2:
        raise ValueError("degree must be >= 2")
    return _complex_check("ComplexDegree", m, int(n), strict=False)


def certify(spec: CurveSpec) -> list[Certificate]:
    model = build_model(spec)
    if model.degenerate:
        return [_fail(name, "degenerate line: curvature vanishes identically") for name in CERTIFICATE_NAMES]
    m, w = spec.M, spec.w
    return [
        check_cao_wang(m),
        check_positive_real(m, w),
        check_jordan(m, w),
        check_typical(m),
        check_complex_general(m),
        check_complex_degree(m, spec.degree),
    ]


def expected_kind(cert: Certificate, kappa0: float) -> str | None:
    if not cert.holds:
        return None
    decreasing = (cert.direction == DECREASING) == (kappa0 > 0)
    return "monotone-decreasing" if decreasing else "monotone-increasing"


def contradictions(certs, verdict: MonotonicityVerdict, kappa0: float) -> list[Certificate]:
    """Held certificates whose claim disagrees with the numerical verdict."""
    return [c for c in certs if c.holds and expected_kind(c, kappa0) != verdict.kind]


def _bisect(f, lo: float, hi: float, flo: float) -> float:
    while hi - lo > BISECT_TOL:
        mid = 0.5 * (lo + hi)
        fm = float(f(mid))
        if fm == 0.0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def numeric_monotonicity(spec: CurveSpec, grid: int = DEFAULT_GRID) -> MonotonicityVerdict:
    """Classify the curvature from the sign pattern of its derivative."""
    if grid < 101:
        raise ValueError("grid must have at least 101 points")
    model = build_model(spec)
    if model.degenerate:
        raise DegenerateLine("curvature vanishes identically")
    ts = np.linspace(0.0, 1.0, grid)
    dk = dkappa(model, ts)
    band = DEADBAND_RTOL * float(np.max(np.abs(kappa_closed(model, ts))))
    signs = np.where(np.abs(dk) <= band, 0, np.sign(dk)).astype(int)
    idx = np.flatnonzero(signs)
    extrema = []
    for i, j in zip(idx[:-1], idx[1:]):
        if signs[i] != signs[j]:
            extrema.append(_bisect(lambda x: dkappa(model, x), ts[i], ts[j], dk[i]))
    if extrema:
        return MonotonicityVerdict("non-monotone", tuple(extrema), grid)
    # identically flat curvature would fall through to "decreasing"
    kind = "monotone-increasing" if np.any(signs > 0) else "monotone-decreasing"
    return MonotonicityVerdict(kind, (), grid)


def classify(spec: CurveSpec, grid: int = DEFAULT_GRID) -> MonotonicityVerdict:
    """Like :func:`numeric_monotonicity` but reports straight lines as a kind."""
    try:
        return numeric_monotonicity(spec, grid)
    except DegenerateLine:
        return MonotonicityVerdict("degenerate-line", (), grid)
