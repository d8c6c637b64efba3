import numpy as np
import pytest
from scipy.special import binom

from fracsub.weights import (
    CqKernel,
    apply_cq,
    check_sector_lemmas,
    fbdf2_weights,
    gl_weights,
)


def _symbol_coeffs(kernel, n, m=4096):
    """Taylor coefficients of the generating symbol by damped FFT sampling."""
    r = 1e-20 ** (1.0 / m)
    z = r * np.exp(-2j * np.pi * np.arange(m) / m)
    return np.fft.ifft(kernel.symbol(z))[: n + 1].real * r ** -np.arange(n + 1)


def test_gl_weights_match_binomial_formula():
    alpha = 0.6
    w = gl_weights(alpha, 12).weights
    ref = [(-1.0) ** j * binom(alpha, j) for j in range(13)]
    np.testing.assert_allclose(w, ref, rtol=1e-14)


@pytest.mark.parametrize("alpha", [0.1, 0.5, 0.9])
def test_gl_weights_match_symbol_expansion(alpha):
    kernel = gl_weights(alpha, 64)
    np.testing.assert_allclose(kernel.weights, _symbol_coeffs(kernel, 64),
                               rtol=0.0, atol=1e-13)


@pytest.mark.parametrize("alpha", [0.1, 0.5, 0.9])
def test_fbdf2_weights_match_symbol_expansion(alpha):
    kernel = fbdf2_weights(alpha, 64)
    np.testing.assert_allclose(kernel.weights, _symbol_coeffs(kernel, 64),
                               rtol=0.0, atol=1e-13)


def test_fbdf2_leading_weight():
    assert fbdf2_weights(0.4, 0).weights[0] == pytest.approx(1.5 ** 0.4,
                                                             rel=1e-15)


def test_gl_weight_signs_and_partial_sums():
    w = gl_weights(0.3, 200).weights
    assert w[0] == 1.0
    assert np.all(w[1:] < 0.0)
    # partial sums are the coefficients of (1-z)^(alpha-1): positive, decaying
    sums = np.cumsum(w)
    assert np.all(sums > 0.0)
    assert np.all(np.diff(sums) < 0.0)


def test_weight_cache_reuse_and_extension():
    short = gl_weights(0.45, 8).weights
    long = gl_weights(0.45, 50).weights
    np.testing.assert_array_equal(short, long[:9])


def test_weights_are_immutable():
    kernel = gl_weights(0.5, 4)
    with pytest.raises(ValueError):
        kernel.weights[0] = 2.0


@pytest.mark.parametrize("maker", [gl_weights, fbdf2_weights])
@pytest.mark.parametrize("alpha", [0.0, 1.0, -0.2, 1.3])
def test_invalid_alpha_rejected(maker, alpha):
    with pytest.raises(ValueError):
        maker(alpha, 4)


def test_negative_n_rejected():
    with pytest.raises(ValueError):
        gl_weights(0.5, -1)


def test_apply_cq_matches_direct_sum():
    kernel = gl_weights(0.7, 6)
    tau = 0.125
    hist = np.array([[1.0, 0.0], [0.5, 2.0], [0.25, -1.0], [0.125, 3.0]])
    got = apply_cq(kernel, tau, hist)
    n = hist.shape[0] - 1
    ref = tau ** -0.7 * sum(kernel.weights[j] * hist[n - j]
                            for j in range(n + 1))
    np.testing.assert_allclose(got, ref, rtol=1e-14)


def test_apply_cq_scalar_history():
    kernel = gl_weights(0.5, 3)
    out = apply_cq(kernel, 0.5, [0.0, 1.0, 2.0])
    assert isinstance(out, float)
    ref = 0.5 ** -0.5 * (kernel.weights[0] * 2.0 + kernel.weights[1] * 1.0)
    assert out == pytest.approx(ref, rel=1e-14)


def test_apply_cq_validates_inputs():
    kernel = gl_weights(0.5, 2)
    with pytest.raises(ValueError):
        apply_cq(kernel, 0.0, [1.0])
    with pytest.raises(ValueError):
        apply_cq(kernel, 0.1, [1.0, 2.0, 3.0, 4.0])  # kernel too short


@pytest.mark.parametrize("alpha", [0.3, 0.6, 0.9])
def test_sector_and_order_properties(alpha):
    props = check_sector_lemmas(alpha)
    assert props["gl_arg_excess"] <= 1e-10
    assert props["bdf2_arg_excess"] <= 1e-10
    assert props["gl_order_slope"] == pytest.approx(alpha + 1.0, abs=0.05)
    assert props["bdf2_order_slope"] == pytest.approx(alpha + 2.0, abs=0.05)


def test_symbol_values():
    gl = CqKernel("GL", 0.5, np.ones(1))
    assert gl.symbol(0.0) == pytest.approx(1.0)
    bdf2 = fbdf2_weights(0.5, 0)
    assert bdf2.symbol(1.0) == pytest.approx(0.0, abs=1e-15)
