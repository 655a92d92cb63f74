import math

import numpy as np
import pytest

from classa.linalg import ComplexPair, Defective, decompose
from classa.registry import MONO, MONO_DEC, NON_MONO, REGISTRY, UnknownExample, select

S3 = math.sqrt(3)


def rec(key):
    (r,) = [r for r in REGISTRY if r.key == key]
    return r


def test_table_shape():
    assert [r.key for r in REGISTRY] == [str(k) for k in range(1, 15)] + ["15@3", "15@8"]
    assert {r.key for r in REGISTRY if r.expected_verdict == NON_MONO} == {"1", "2", "6", "7", "12", "14", "15@8"}
    assert {r.expected_verdict for r in REGISTRY} == {MONO, MONO_DEC, NON_MONO}
    assert all(r.figure_ref for r in REGISTRY)


def test_select():
    assert len(select()) == 16
    assert [r.key for r in select(15)] == ["15@3", "15@8"]
    assert [r.key for r in select("15@8")] == ["15@8"]
    with pytest.raises(UnknownExample):
        select("99")


@pytest.mark.parametrize(
    "key,sigma,vectors,coords",
    [
        ("3", (1.5, 0.75), ([1, 0], [-S3 / 2, -0.5]), (2, 2)),
        ("4", (1.5, 0.3), ([1, 0], [0.5, -S3 / 2]), (1, 0.5)),
        ("5", (1.5, 0.7), ([1, 0], [0, 1]), (1, -1.1)),
    ],
)
def test_real_examples_match_stated_eigendata(key, sigma, vectors, coords):
    spec = rec(key).spec
    for s, v in zip(sigma, vectors):
        np.testing.assert_allclose(spec.M @ v, s * np.array(v), atol=1e-15)
    np.testing.assert_allclose(spec.w, coords[0] * np.array(vectors[0]) + coords[1] * np.array(vectors[1]),
                               atol=1e-15)


@pytest.mark.parametrize(
    "key,sigma,coords",
    [("9", 0.5, (1.5, 2)), ("10", 1.5, (3.5, -1.5))],
)
def test_jordan_examples_match_stated_basis(key, sigma, coords):
    spec = rec(key).spec
    v1, v2 = np.array([1.0, 0.0]), np.array([0.0, -0.5])
    assert isinstance(decompose(spec.M), Defective)
    np.testing.assert_allclose((spec.M - sigma * np.eye(2)) @ v2, v1)
    np.testing.assert_allclose(spec.w, coords[0] * v1 + coords[1] * v2)


@pytest.mark.parametrize("key,h,phi,cos_gamma", [
    ("13", 3, math.pi / 12, math.cos(5 * math.pi / 12)),
    ("14", 2, math.pi / 4, math.cos(math.pi / 3)),
    ("15@3", 4, math.pi / 6, math.cos(2 * math.pi / 3)),
])
def test_complex_examples_eigendata(key, h, phi, cos_gamma):
    sp = decompose(rec(key).spec.M)
    assert isinstance(sp, ComplexPair)
    assert sp.h == pytest.approx(h, rel=1e-14)
    assert abs(sp.phi) == pytest.approx(phi, rel=1e-13)
    assert abs(math.cos(sp.gamma)) == pytest.approx(abs(cos_gamma), abs=1e-13)


def test_typical_examples():
    for key, h in (("11", 1.8), ("12", 1.2)):
        m = rec(key).spec.M
        np.testing.assert_allclose(m, h * np.array([[math.cos(0.925), -math.sin(0.925)],
                                                    [math.sin(0.925), math.cos(0.925)]]), atol=1e-15)
        assert rec(key).spec.degree == 7


def test_matches():
    assert rec("3").matches("monotone-increasing") and rec("3").matches("monotone-decreasing")
    assert not rec("13").matches("monotone-increasing")
    assert rec("1").matches("non-monotone") and not rec("1").expects_monotone


@pytest.mark.parametrize("key,approx,tol", [
    ("11", [[1.083, -1.438], [1.438, 1.083]], 5e-4),
    ("12", [[0.722, -0.958], [0.958, 0.722]], 5e-4),
    ("13", [[3.1, -0.86], [0.75, 2.7]], 5e-2),
    ("14", [[2.12, -2.04], [1.22, 0.71]], 5e-3),
    ("15@3", [[2.46, -2.89], [1.73, 4.46]], 5e-3),
])
def test_printed_approximations(key, approx, tol):
    np.testing.assert_allclose(rec(key).spec.M, approx, atol=tol)
