"""Fixed-size linear algebra for 2x2 generators and 3x3 Class A matrices.

Vectors and matrices are plain numpy arrays of shape (2,), (3,), (2, 2) or
(3, 3).  The eigen-classification of a 2x2 generator is returned as one of
three frozen dataclasses, see :func:`decompose`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

DISCRIMINANT_RTOL = 1e-10
JACOBI_MAX_SWEEPS = 30
JACOBI_TOL = 1e-13


class LinalgError(ValueError):
    pass


class ZeroSeed(LinalgError):
    pass


class ZeroVector(LinalgError):
    pass


class SingularSubdivision(LinalgError):
    pass


def as_vec(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if not np.all(np.isfinite(v)):
        raise ValueError(f"non-finite vector {v!r}")
    return v


def as_mat(m) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("non-finite matrix entries")
    return m


def det2(u, v) -> float:
    return float(u[0] * v[1] - u[1] * v[0])


def _canonical_sign(v: np.ndarray, tol: float = 1e-14) -> np.ndarray:
    # first component that is not (numerically) zero is made positive
    scale = max(float(np.max(np.abs(v))), 1e-300)
    for c in v:
        if abs(c) > tol * scale:
            return (v if c > 0 else -v) + 0.0
    return v + 0.0


def _kernel_direction(a: np.ndarray) -> np.ndarray:
    """Unit vector spanning the (numerical) kernel of a rank-1 2x2 matrix."""
    r0, r1 = a[0], a[1]
    row = r0 if np.hypot(*r0) >= np.hypot(*r1) else r1
    v = np.array([-row[1], row[0]])
    return v / np.hypot(*v)


@dataclass(frozen=True)
class RealDiagonalizable:
    sigma1: float
    sigma2: float
    v1: np.ndarray
    v2: np.ndarray
    # M is a multiple of the identity: every vector is an eigenvector
    degenerate: bool = False

    kind = "real"

    @property
    def eigenvalues(self) -> tuple[float, float]:
        return self.sigma1, self.sigma2


@dataclass(frozen=True)
class Defective:
    sigma: float
    v1: np.ndarray
    v2: np.ndarray

    kind = "defective"
    degenerate = False

    @property
    def eigenvalues(self) -> tuple[float, float]:
        return self.sigma, self.sigma


@dataclass(frozen=True)
class ComplexPair:
    """Conjugate eigenvalues ``h*exp(+-i*phi)``.

    ``phi`` is the argument of the eigenvalue belonging to the eigenvector
    ``v = vRe + i*vIm``.  The eigenvector is normalised so that
    ``|vRe| = |vIm| = 1`` and ``det(vRe, vIm) > 0``; ``gamma`` is the
    unsigned angle between ``vRe`` and ``vIm``.
    """

    h: float
    phi: float
    vRe: np.ndarray
    vIm: np.ndarray
    gamma: float

    kind = "complex"
    degenerate = False

    @property
    def sigma(self) -> complex:
        return complex(self.h * math.cos(self.phi), self.h * math.sin(self.phi))

    @property
    def v(self) -> np.ndarray:
        return self.vRe + 1j * self.vIm

    @property
    def eigenvalues(self) -> tuple[complex, complex]:
        s = self.sigma
        return s, s.conjugate()


SpectralData = RealDiagonalizable | Defective | ComplexPair


@dataclass(frozen=True)
class SeedCoordinates:
    mu1: float = 0.0
    mu2: float = 0.0
    # complex variant only: w = mu*v + conj(mu*v)
    mu: complex | None = None

    @property
    def theta(self) -> float:
        """Argument of mu**2 (complex variant)."""
        if self.mu is None:
            raise LinalgError("theta is only defined for complex seed coordinates")
        return float(np.angle(self.mu**2))


def _complex_eigenvector(m: np.ndarray, sigma: complex) -> np.ndarray:
    a = m.astype(complex) - sigma * np.eye(2)
    row = a[0] if abs(a[0, 0]) + abs(a[0, 1]) >= abs(a[1, 0]) + abs(a[1, 1]) else a[1]
    return np.array([-row[1], row[0]])


def _normalise_complex_eigenvector(u: np.ndarray) -> np.ndarray:
    scale = float(np.vdot(u, u).real)
    uu = complex(u[0] * u[0] + u[1] * u[1])
    if abs(uu) <= 1e-12 * scale:
        # Re and Im already orthogonal with equal norms for every phase;
        # fix the phase by making the leading nonzero component real
        lead = u[0] if abs(u[0]) > 1e-12 * math.sqrt(scale) else u[1]
        u = u * (abs(lead) / lead)
    else:
        # Multiply by exp(i*psi) with 2*psi = pi/2 - arg(u.u) (bilinear
        # product), which makes Re(e^{2i psi} u.u) = |Re|^2 - |Im|^2 vanish.
        u = u * np.exp(0.5j * (math.pi / 2 - np.angle(uu)))
        # remaining freedom is multiplication by i**k; prefer the Re part
        # with the larger leading component
        alt = 1j * u
        if abs(alt.real[0]) > abs(u.real[0]) * (1 + 1e-12):
            u = alt
    if u.real[0] < 0 or (u.real[0] == 0 and u.real[1] < 0):
        u = -u
    return u / np.hypot(*u.real) + 0.0


def decompose(m) -> SpectralData:
    """Classify a 2x2 matrix by the sign of its discriminant."""
    m = as_mat(m)
    if m.shape != (2, 2):
        raise ValueError("decompose expects a 2x2 matrix")
    tr = float(m[0, 0] + m[1, 1])
    dt = float(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])
    # (a - d)^2 + 4bc equals tr^2 - 4 det but is exact for triangular M
    disc = (m[0, 0] - m[1, 1]) ** 2 + 4.0 * m[0, 1] * m[1, 0]
    tol = DISCRIMINANT_RTOL * max(1.0, tr * tr)
    norm = float(np.linalg.norm(m))

    if disc > tol:
        root = math.sqrt(disc)
        # avoid cancellation in the smaller-magnitude root
        big = 0.5 * (tr + math.copysign(root, tr)) if tr != 0 else 0.5 * root
        other = dt / big
        s1, s2 = max(big, other), min(big, other)
        v1 = _canonical_sign(_kernel_direction(m - s1 * np.eye(2)))
        v2 = _canonical_sign(_kernel_direction(m - s2 * np.eye(2)))
        return RealDiagonalizable(s1, s2, v1, v2)

    if disc >= -tol:
        sigma = 0.5 * tr
        nil = m - sigma * np.eye(2)
        if np.linalg.norm(nil) <= 1e-10 * (1.0 + norm):
            return RealDiagonalizable(
                sigma, sigma, np.array([1.0, 0.0]), np.array([0.0, 1.0]), degenerate=True
            )
        v1 = _canonical_sign(_kernel_direction(nil))
        # least-norm solution of nil @ v2 = v1 for a rank-1 nil, then drop the
        # v1 component so the Jordan basis is orthogonal
        y = nil.T @ v1
        v2 = y / float(y @ y)
        v2 = v2 - float(v2 @ v1) * v1
        return Defective(sigma, v1, v2)

    h = math.sqrt(dt)
    half_im = 0.5 * math.sqrt(-disc)
    candidates = []
    for sign in (1.0, -1.0):
        sigma = complex(0.5 * tr, sign * half_im)
        u = _normalise_complex_eigenvector(_complex_eigenvector(m, sigma))
        candidates.append((sigma, u))
    sigma, u = next((s, u) for s, u in candidates if det2(u.real, u.imag) > 0)
    vre, vim = u.real.copy(), u.imag.copy()
    cosg = float(vre @ vim) / (np.hypot(*vre) * np.hypot(*vim))
    gamma = math.acos(min(1.0, max(-1.0, cosg)))
    return ComplexPair(h, math.atan2(sigma.imag, sigma.real), vre, vim, gamma)


def seed_coordinates(spectral: SpectralData, w) -> SeedCoordinates:
    """Coordinates of ``w`` in the eigen/Jordan basis of ``spectral``."""
    w = as_vec(w)
    if np.hypot(*w) == 0:
        raise ZeroSeed("seed vector is zero")
    if isinstance(spectral, ComplexPair):
        # w = 2 Re(mu v) = 2 (x vRe - y vIm) with mu = x + i y
        basis = np.column_stack([spectral.vRe, -spectral.vIm])
        x, y = np.linalg.solve(basis, 0.5 * w)
        return SeedCoordinates(mu=complex(x, y))
    basis = np.column_stack([spectral.v1, spectral.v2])
    mu1, mu2 = np.linalg.solve(basis, w)
    return SeedCoordinates(float(mu1), float(mu2))


def subdivision_matrix(m, t: float) -> np.ndarray:
    """``(1 - t) I + t M``, the generator of the sub-arc on ``[0, t]``."""
    m = as_mat(m)
    return (1.0 - t) * np.eye(m.shape[0]) + t * m


def right_quotient_matrix(m, t: float) -> np.ndarray:
    """``M T^-1``, the generator of the sub-arc on ``[t, 1]``."""
    m = as_mat(m)
    tm = subdivision_matrix(m, t)
    scale = max(1.0, float(np.max(np.abs(tm)))) ** m.shape[0]
    if abs(np.linalg.det(tm)) <= 1e-14 * scale:
        raise SingularSubdivision(f"(1-t)I + tM is singular at t={t}")
    # M and T commute, so M T^-1 = T^-1 M; solve instead of inverting
    return np.linalg.solve(tm, m)


def jacobi_eigenvalues(s) -> np.ndarray:
    """Eigenvalues of a small symmetric matrix by cyclic Jacobi rotations.

    Returned in descending order.
    """
    a = np.array(as_mat(s), dtype=float)
    n = a.shape[0]
    ref = float(np.linalg.norm(a))
    for _ in range(JACOBI_MAX_SWEEPS):
        off = math.sqrt(sum(a[p, q] ** 2 for p in range(n) for q in range(n) if p != q))
        if off <= JACOBI_TOL * ref:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * a[p, q])
                if abs(tau) > 1e150:
                    tn = 0.5 / tau
                else:
                    tn = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + tn * tn)
                sn = tn * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = sn
                rot[q, p] = -sn
                a = rot.T @ a @ rot
    return np.sort(np.diag(a))[::-1]


def singular_values(m) -> np.ndarray:
    """Singular values of a 2x2 or 3x3 matrix, descending."""
    m = as_mat(m)
    ev = jacobi_eigenvalues(m.T @ m)
    return np.sqrt(np.clip(ev, 0.0, None))


def angle_between(u, v) -> float:
    u, v = as_vec(u), as_vec(v)
    nu, nv = float(np.linalg.norm(u)), float(np.linalg.norm(v))
    if nu == 0 or nv == 0:
        raise ZeroVector("angle with a zero vector is undefined")
    # half-angle form stays accurate near 0 and pi, unlike acos of the cosine
    a, b = u / nu, v / nv
    return 2.0 * math.atan2(float(np.linalg.norm(a - b)), float(np.linalg.norm(a + b)))


def rotation(phi: float) -> np.ndarray:
    c, s = math.cos(phi), math.sin(phi)
    return np.array([[c, -s], [s, c]])


def from_eigen_data(h: float, phi: float, gamma: float) -> np.ndarray:
    """Real matrix with eigenvalues ``h*exp(+-i*phi)`` and eigenvector
    ``(1 + i cos(gamma), i sin(gamma))``.

    The eigenvector is paired with ``h*exp(-i*phi)``, which is the
    convention that reproduces the published example matrices.
    """
    p = np.array([[1.0, math.cos(gamma)], [0.0, math.sin(gamma)]])
    a, b = h * math.cos(phi), h * math.sin(phi)
    return p @ np.array([[a, -b], [b, a]]) @ np.linalg.inv(p)


def from_real_eigen_data(s1: float, s2: float, v1, v2) -> np.ndarray:
    p = np.column_stack([as_vec(v1), as_vec(v2)])
    return p @ np.diag([s1, s2]) @ np.linalg.inv(p)


def from_jordan_data(sigma: float, v1, v2) -> np.ndarray:
    """Matrix with ``M v1 = sigma v1`` and ``(M - sigma I) v2 = v1``."""
    p = np.column_stack([as_vec(v1), as_vec(v2)])
    return p @ np.array([[sigma, 1.0], [0.0, sigma]]) @ np.linalg.inv(p)
