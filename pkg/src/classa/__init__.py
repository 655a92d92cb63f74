"""Bezier curves generated by iterating a 2x2 matrix, with curvature certificates."""

from .certifier import Certificate, MonotonicityVerdict, certify, classify, numeric_monotonicity
from .closed_form import build_model, dkappa, kappa_closed
from .curve import CurveSpec, curvature_numeric, generate_polygon
from .linalg import decompose, seed_coordinates

__all__ = [
    "Certificate",
    "CurveSpec",
    "MonotonicityVerdict",
    "build_model",
    "certify",
    "classify",
    "curvature_numeric",
    "decompose",
    "dkappa",
    "generate_polygon",
    "kappa_closed",
    "numeric_monotonicity",
    "seed_coordinates",
]
