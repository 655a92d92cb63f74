"""Closed-form curvature of matrix-generated Bezier curves.

The curvature at ``t`` follows from the curvature at 0 by subdividing at
``t``: the arc on ``[0, t]`` is generated by ``T = (1-t) I + t M`` acting on
``t w``, which gives

    kappa(t) = kappa(0) * (s1(t) s2(t))**(n-2) * |w|**3 / |T**(n-1) w|**3

with ``s_k(t) = 1 - t + t*sigma_k`` the eigenvalues of ``T``.  The
derivative is evaluated with a separate expansion for each spectral case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curve import SPEED_RTOL, CurveSpec, VanishingSpeed
from .linalg import (
    ComplexPair,
    Defective,
    LinalgError,
    RealDiagonalizable,
    SeedCoordinates,
    SpectralData,
    decompose,
    det2,
    seed_coordinates,
)

EIGEN_SEED_RTOL = 1e-13


class WrongVariant(LinalgError):
    pass


@dataclass(frozen=True, eq=False)
class CurvatureModel:
    spec: CurveSpec
    spectral: SpectralData
    coords: SeedCoordinates
    kappa0: float
    # the curve is a straight segment and its curvature vanishes identically
    degenerate: bool = False

    @property
    def n(self) -> int:
        return self.spec.degree

    @property
    def wnorm(self) -> float:
        return float(np.hypot(*self.spec.w))


@dataclass(frozen=True)
class ComplexDerivativeTerms:
    drift: float
    phase: complex
    theta: float
    phi_t: float
    mod_sigma_t: float


def _seed_is_eigenvector(spec: CurveSpec) -> bool:
    mw = spec.M @ spec.w
    return abs(det2(spec.w, mw)) <= EIGEN_SEED_RTOL * np.hypot(*spec.w) * np.hypot(*mw)


def build_model(spec: CurveSpec) -> CurvatureModel:
    spectral = decompose(spec.M)
    coords = seed_coordinates(spectral, spec.w)
    n = spec.degree
    w3 = float(np.hypot(*spec.w)) ** 3
    c = (n - 1) / n
    if isinstance(spectral, RealDiagonalizable):
        k0 = (
            c * coords.mu1 * coords.mu2 * (spectral.sigma2 - spectral.sigma1)
            * det2(spectral.v1, spectral.v2) / w3
        )
    elif isinstance(spectral, Defective):
        k0 = -c * coords.mu2**2 * det2(spectral.v1, spectral.v2) / w3
    else:
        # mu mubar (sigmabar - sigma) det(v, vbar) = -4 |mu|^2 Im(sigma) det(Re v, Im v)
        k0 = -4.0 * c * abs(coords.mu) ** 2 * spectral.sigma.imag * det2(spectral.vRe, spectral.vIm) / w3
    degenerate = spectral.degenerate or _seed_is_eigenvector(spec)
    if degenerate:
        k0 = 0.0
    return CurvatureModel(spec, spectral, coords, float(k0), degenerate)


def _subdivided_edges(spec: CurveSpec, t: np.ndarray, power: int) -> np.ndarray:
    # T(t)^power w for every t, by repeated matrix-vector products
    x = np.broadcast_to(spec.w, t.shape + (2,)).copy()
    mt = spec.M
    tt = t[..., None]
    for _ in range(power):
        x = (1.0 - tt) * x + tt * (x @ mt.T)
    return x


def _last_edge_sq(model: CurvatureModel, t: np.ndarray) -> np.ndarray:
    x = _subdivided_edges(model.spec, t, model.n - 1)
    nsq = np.einsum("...i,...i->...", x, x)
    scale = float(np.max(np.linalg.norm(model.spec.edges(), axis=1)))
    if np.any(np.sqrt(nsq) <= SPEED_RTOL * scale):
        raise VanishingSpeed("|T^(n-1) w| vanishes")
    return nsq


def _eigen_product(model: CurvatureModel, t: np.ndarray) -> np.ndarray:
    sp = model.spectral
    if isinstance(sp, ComplexPair):
        return np.abs(1.0 - t + t * sp.sigma) ** 2
    s1, s2 = sp.eigenvalues
    return (1.0 - t + t * s1) * (1.0 - t + t * s2)


def kappa_closed(model: CurvatureModel, t):
    t = np.asarray(t, dtype=float)
    if model.degenerate:
        return np.zeros_like(t)[()]
    n = model.n
    nsq = _last_edge_sq(model, t)
    if isinstance(model.spectral, ComplexPair):
        mod = np.abs(1.0 - t + t * model.spectral.sigma)
        ratio = mod ** (2 * (n - 2))
    else:
        ratio = _eigen_product(model, t) ** (n - 2)
    return (model.kappa0 * ratio * model.wnorm**3 / nsq**1.5)[()]


def _dkappa_real(model: CurvatureModel, t: np.ndarray, nsq: np.ndarray) -> np.ndarray:
    sp: RealDiagonalizable = model.spectral
    n, k0, w3 = model.n, model.kappa0, model.wnorm**3
    s1, s2 = sp.sigma1, sp.sigma2
    mu1, mu2 = model.coords.mu1, model.coords.mu2
    a, b = 1.0 - t + t * s1, 1.0 - t + t * s2
    drift = (s1 + s2 - 2.0) * (1.0 - t) + (2.0 * s1 * s2 - s1 - s2) * t
    if n == 2:
        dot = float(sp.v1 @ sp.v2)
        dn = 2 * mu1**2 * a * (s1 - 1) + 2 * mu2**2 * b * (s2 - 1) + 2 * mu1 * mu2 * dot * drift
        return -1.5 * k0 * w3 * dn / nsq**2.5
    bracket = (
        -(n + 1) * drift * nsq
        - 3 * (n - 1) * (s1 - s2) * (mu1**2 * a ** (2 * n - 2) - mu2**2 * b ** (2 * n - 2))
    )
    return k0 * w3 / (2.0 * nsq**2.5) * (a * b) ** (n - 3) * bracket


def _dkappa_defective(model: CurvatureModel, t: np.ndarray) -> np.ndarray:
    sp: Defective = model.spectral
    n, k0, w3 = model.n, model.kappa0, model.wnorm**3
    sigma, mu1, mu2 = sp.sigma, model.coords.mu1, model.coords.mu2
    n1sq, n2sq = float(sp.v1 @ sp.v1), float(sp.v2 @ sp.v2)
    s = 1.0 - t + t * sigma
    lead = mu1 * s + mu2 * (n - 1) * t
    q = lead**2 * n1sq + (mu2 * s) ** 2 * n2sq
    if n == 2:
        dq = 2 * lead * (mu1 * (sigma - 1) + mu2) * n1sq + 2 * mu2**2 * s * (sigma - 1) * n2sq
        return -1.5 * k0 * w3 * dq / q**2.5
    bracket = (n + 1) * (sigma - 1) * q + 3 * mu2 * (n - 1) * lead * n1sq
    return -k0 * w3 / (s * np.abs(s) ** (n - 2)) * bracket / q**2.5


def _complex_terms_array(model: CurvatureModel, t: np.ndarray):
    sp: ComplexPair = model.spectral
    h, phi, n = sp.h, sp.phi, model.n
    sig_t = 1.0 - t + t * sp.sigma
    theta = model.coords.theta
    phi_t = np.angle(sig_t)
    drift = (h * math.cos(phi) - 1.0) * (1.0 - t) + t * (h * h - h * math.cos(phi))
    phase = np.exp(1j * (theta + 2 * (n - 1) * phi_t))
    return drift, phase, theta, phi_t, np.abs(sig_t)


def complex_terms(model: CurvatureModel, t) -> ComplexDerivativeTerms:
    if not isinstance(model.spectral, ComplexPair):
        raise WrongVariant("complex derivative terms need complex eigenvalues")
    drift, phase, theta, phi_t, mod = _complex_terms_array(model, np.asarray(float(t)))
    return ComplexDerivativeTerms(float(drift), complex(phase), theta, float(phi_t), float(mod))


def complex_bracket(model: CurvatureModel, drift, phase):
    """Sign-determining bracket of the complex-case derivative."""
    sp: ComplexPair = model.spectral
    n, cg = model.n, math.cos(sp.gamma)
    return (n + 1) * (-1.0 + cg * np.imag(phase)) * drift + 3 * (n - 1) * sp.h * cg * math.sin(sp.phi) * np.real(phase)


def complex_prefactor(model: CurvatureModel, mod_sigma_t, nsq):
    """Positive-times-kappa(0) factor in front of the bracket."""
    sp: ComplexPair = model.spectral
    vsq = float(sp.vRe @ sp.vRe + sp.vIm @ sp.vIm)
    mod4 = mod_sigma_t ** (2 * (2 * model.n - 4))
    return 2.0 * model.kappa0 * vsq * model.wnorm**3 * abs(model.coords.mu) ** 2 * mod4 / nsq**2.5


def _dkappa_complex(model: CurvatureModel, t: np.ndarray, nsq: np.ndarray) -> np.ndarray:
    drift, phase, _, _, mod = _complex_terms_array(model, t)
    return complex_prefactor(model, mod, nsq) * complex_bracket(model, drift, phase)


def dkappa(model: CurvatureModel, t):
    """Derivative of the curvature with respect to the curve parameter."""
    t = np.asarray(t, dtype=float)
    if model.degenerate:
        return np.zeros_like(t)[()]
    nsq = _last_edge_sq(model, t)
    sp = model.spectral
    if isinstance(sp, RealDiagonalizable):
        out = _dkappa_real(model, t, nsq)
    elif isinstance(sp, Defective):
        out = _dkappa_defective(model, t)
    else:
        out = _dkappa_complex(model, t, nsq)
    return np.asarray(out)[()]
