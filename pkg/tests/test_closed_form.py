import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from classa.closed_form import WrongVariant, build_model, complex_bracket, complex_terms, dkappa, kappa_closed
from classa.curve import CurveSpec, curvature_numeric, endpoint_curvatures, generate_polygon
from classa.linalg import from_eigen_data, rotation

from classa.sampling import RANDOM_BY_VARIANT

variants = st.sampled_from(sorted(RANDOM_BY_VARIANT))
seeds = st.integers(0, 2**32 - 1)


def random_spec(kind, seed, n=None):
    return RANDOM_BY_VARIANT[kind](np.random.default_rng(seed), n)


def test_example_kappa0():
    spec = CurveSpec(3, np.diag([1.25, 0.1]), [1.0, -1.0])
    m = build_model(spec)
    # (n-1)/n det(w, Mw) / |w|^3 with w = (1, -1), Mw = (5/4, -1/10)
    assert m.kappa0 == pytest.approx(2 / 3 * (-0.1 + 1.25) / 2**1.5)
    assert m.kappa0 == pytest.approx(endpoint_curvatures(spec)[0])


@given(variants, seeds)
def test_closed_form_matches_direct(kind, seed):
    spec = random_spec(kind, seed)
    ts = np.linspace(0, 1, 201)
    closed = kappa_closed(build_model(spec), ts)
    direct = curvature_numeric(generate_polygon(spec), ts)
    np.testing.assert_allclose(closed, direct, atol=1e-9 * max(1.0, np.abs(direct).max()), rtol=1e-9)


@given(variants, seeds, st.integers(2, 3))
def test_low_degrees(kind, seed, n):
    spec = random_spec(kind, seed, n)
    ts = np.linspace(0, 1, 51)
    closed = kappa_closed(build_model(spec), ts)
    direct = curvature_numeric(generate_polygon(spec), ts)
    np.testing.assert_allclose(closed, direct, atol=1e-9 * max(1.0, np.abs(direct).max()), rtol=1e-9)


def _central_difference(model, t, h=1e-6):
    # fourth-order stencil
    k = lambda x: float(kappa_closed(model, x))
    return (-k(t + 2 * h) + 8 * k(t + h) - 8 * k(t - h) + k(t - 2 * h)) / (12 * h)


@given(variants, seeds, st.floats(0.05, 0.95))
def test_derivative_matches_finite_difference(kind, seed, t):
    model = build_model(random_spec(kind, seed))
    scale = float(np.abs(kappa_closed(model, np.linspace(0, 1, 101))).max())
    fd = _central_difference(model, t, h=1e-4)
    assert float(dkappa(model, t)) == pytest.approx(fd, rel=1e-5, abs=1e-6 * max(1.0, scale))


@pytest.mark.parametrize("n", [2, 3, 7])
def test_derivative_all_variants_fixed(n):
    for m in ([[1.5, 0.2], [0.1, 0.6]], [[1.0, 0.0], [1.0, 1.0]], 1.8 * rotation(0.925),
              from_eigen_data(4, math.pi / 6, 2 * math.pi / 3)):
        model = build_model(CurveSpec(n, m, [0.4, 0.1]))
        for t in (0.2, 0.5, 0.8):
            assert float(dkappa(model, t)) == pytest.approx(_central_difference(model, t), rel=1e-6, abs=1e-9)


def test_vectorised_and_scalar_agree():
    model = build_model(CurveSpec(5, from_eigen_data(3, math.pi / 12, 5 * math.pi / 12), [1.0, 2.0]))
    ts = np.linspace(0, 1, 11)
    np.testing.assert_allclose(kappa_closed(model, ts), [float(kappa_closed(model, t)) for t in ts])
    np.testing.assert_allclose(dkappa(model, ts), [float(dkappa(model, t)) for t in ts])
    assert np.ndim(kappa_closed(model, 0.5)) == 0


def test_degenerate_identity_and_eigen_seed():
    for spec in (CurveSpec(3, np.eye(2), [1.0, 2.0]), CurveSpec(3, np.diag([2.0, 0.5]), [1.0, 0.0])):
        model = build_model(spec)
        assert model.degenerate and model.kappa0 == 0
        np.testing.assert_array_equal(kappa_closed(model, np.linspace(0, 1, 5)), 0)
        np.testing.assert_array_equal(dkappa(model, np.linspace(0, 1, 5)), 0)


def test_complex_terms():
    model = build_model(CurveSpec(7, 1.8 * rotation(0.925), [0.4, 0.1]))
    terms = complex_terms(model, 0.0)
    # at t = 0 the drift is h cos(phi) - 1 and phi(0) = 0
    assert terms.drift == pytest.approx(1.8 * math.cos(0.925) - 1)
    assert terms.phi_t == 0
    assert terms.mod_sigma_t == pytest.approx(1.0)
    # gamma = pi/2 kills the cos(gamma) terms: bracket = -(n+1) * drift
    assert complex_bracket(model, terms.drift, terms.phase) == pytest.approx(-8 * terms.drift)
    with pytest.raises(WrongVariant):
        complex_terms(build_model(CurveSpec(3, np.diag([2.0, 1.0]), [1.0, 1.0])), 0.5)
