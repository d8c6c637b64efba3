import math

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import erfc, gamma

from fracsub.ml import ml_conv_weight, ml_conv_weight_array, ml_eval, ml_eval_array


@pytest.mark.parametrize("x", [-80.0, -50.0, -1.3, -0.5, 0.0, 0.5, 1.0])
def test_exponential_special_case(x):
    assert ml_eval(1.0, 1.0, x) == pytest.approx(math.exp(x), rel=1e-13)


@pytest.mark.parametrize("x", [-40.0, -1.3, -0.7, 0.4, 1.0])
def test_expm1_special_case(x):
    assert ml_eval(1.0, 2.0, x) == pytest.approx(math.expm1(x) / x, rel=1e-13)


def test_positive_argument_beyond_cutoff_rejected():
    with pytest.raises(ValueError):
        ml_eval(0.5, 1.0, 3.0)


@pytest.mark.parametrize("beta", [0.5, 1.0, 2.0, 3.5])
def test_zero_argument(beta):
    assert ml_eval(0.5, beta, 0.0) == pytest.approx(1.0 / gamma(beta),
                                                    rel=1e-15)


def test_erfc_identity():
    # E_{1/2,1}(x) = e^{x^2} erfc(-x) for x < 0
    assert ml_eval(0.5, 1.0, -2.0) == pytest.approx(
        math.exp(4.0) * erfc(2.0), rel=1e-13)


def test_series_asymptotic_consistency():
    # values across the dispatch cutoff must agree with a dense reference
    xs = -np.geomspace(1e-3, 1e4, 60)
    for alpha, beta in ((0.3, 1.0), (0.5, 0.8), (0.9, 1.9), (1.0, 1.0)):
        vals = ml_eval_array(alpha, beta, xs)
        ref = np.array([ml_eval(alpha, beta, float(x)) for x in xs])
        np.testing.assert_allclose(vals, ref, rtol=1e-12, atol=1e-300)


def test_complete_monotonicity_on_negative_axis():
    ts = np.geomspace(1e-3, 1e3, 80)
    vals = ml_eval_array(0.6, 1.0, -ts)
    assert np.all(vals > 0.0)
    assert np.all(np.diff(vals) < 0.0)


def test_array_matches_scalar_mixed_signs():
    xs = np.array([-200.0, -1.0001, -1.0, -0.999, 0.0, 0.5, 1.0])
    vals = ml_eval_array(0.7, 1.2, xs)
    ref = [ml_eval(0.7, 1.2, float(x)) for x in xs]
    np.testing.assert_allclose(vals, ref, rtol=1e-13)


@pytest.mark.parametrize("alpha,beta", [(0.0, 1.0), (1.5, 1.0), (0.5, 0.0),
                                        (0.5, 5.0), (-0.3, 1.0)])
def test_invalid_parameters_rejected(alpha, beta):
    with pytest.raises(ValueError):
        ml_eval(alpha, beta, -1.0)


def test_conv_weight_against_quadrature():
    alpha, lam, t, mu = 0.5, 4.0, 1.0, -0.5
    ref, _ = quad(lambda s: ml_eval(alpha, alpha, -lam * (t - s) ** alpha),
                  0.0, t, weight="alg", wvar=(mu, alpha - 1.0),
                  epsabs=1e-12, epsrel=1e-12, limit=400)
    assert ml_conv_weight(alpha, lam, t, mu) == pytest.approx(ref, abs=1e-10)


def test_conv_weight_zero_eigenvalue():
    # lam = 0: integral of (t-s)^{alpha-1}/Gamma(alpha) * s^mu
    alpha, mu, t = 0.7, -0.3, 2.0
    ref = (gamma(mu + 1.0) / gamma(alpha + mu + 1.0)) * t ** (alpha + mu)
    assert ml_conv_weight(alpha, 0.0, t, mu) == pytest.approx(ref, rel=1e-12)


def test_conv_weight_array_matches_scalar():
    lams = np.array([0.0, 1.0, 50.0, 4000.0])
    vals = ml_conv_weight_array(0.4, lams, 1.0, -0.6)
    ref = [ml_conv_weight(0.4, float(lam), 1.0, -0.6) for lam in lams]
    np.testing.assert_allclose(vals, ref, rtol=1e-13)
