import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import gamma

from fracsub.sources import (
    PowerOde,
    SourceSpec,
    correction_factor,
    profile_mean,
    resolve_profile,
)
from fracsub.spatial import MeshSpec


MESH1 = MeshSpec(1, 16)
MESH2 = MeshSpec(2, 8)


def test_resolve_profile_values():
    x = MESH1.interior_nodes()
    np.testing.assert_allclose(resolve_profile("one", MESH1), 1.0)
    np.testing.assert_allclose(resolve_profile("pow:-0.25", MESH1),
                               x ** -0.25)
    ind = resolve_profile("indicator:0.25,0.75", MESH1)
    np.testing.assert_array_equal(ind, ((x >= 0.25) & (x <= 0.75)) * 1.0)
    xx, yy = MESH2.interior_nodes()
    box = resolve_profile("indicator2d:0.25,0.75,0.25,0.75", MESH2)
    assert box.shape == MESH2.interior_shape
    assert box[3, 3] == 1.0 and box[0, 0] == 0.0


def test_resolve_profile_validation():
    with pytest.raises(ValueError):
        resolve_profile("pow:2", MESH2)
    with pytest.raises(ValueError):
        resolve_profile("mystery", MESH1)


def _hat_quad(g, xi, h):
    left, _ = quad(lambda x: g(x) * (x - xi + h) / h, xi - h, xi, limit=200)
    right, _ = quad(lambda x: g(x) * (xi + h - x) / h, xi, xi + h, limit=200)
    return (left + right) / h


@pytest.mark.parametrize("profile,g", [
    ("pow:-0.25", lambda x: x ** -0.25),
    ("pow:2", lambda x: x ** 2),
    ("indicator:0.3,0.6", lambda x: 1.0 * ((x >= 0.3) & (x <= 0.6))),
])
def test_profile_mean_matches_quadrature(profile, g):
    got = profile_mean(profile, MESH1)
    h = MESH1.h
    ref = [_hat_quad(g, xi, h) for xi in MESH1.interior_nodes()]
    np.testing.assert_allclose(got, ref, atol=1e-9)


def test_profile_mean_2d_is_tensor_product():
    got = profile_mean("indicator2d:0.25,0.75,0.3,0.9", MESH2)
    gx = profile_mean("indicator:0.25,0.75", MeshSpec(1, 8))
    gy = profile_mean("indicator:0.3,0.9", MeshSpec(1, 8))
    np.testing.assert_allclose(got, np.outer(gx, gy), rtol=1e-14)


def test_source_antiderivatives_are_consistent():
    src = SourceSpec.of((2.0, -0.5, "one"), (1.0, 0.0, "one"))
    t, dt = 0.7, 1e-6
    # centered differences of F and Ftilde recover f and F
    dF = (src.eval_F(t + dt) - src.eval_F(t - dt)) / (2 * dt)
    np.testing.assert_allclose(dF, src.time_factors(t), rtol=1e-8)
    dFt = (src.eval_Ftilde(t + dt) - src.eval_Ftilde(t - dt)) / (2 * dt)
    np.testing.assert_allclose(dFt, src.eval_F(t), rtol=1e-8)


def test_source_zero_extension():
    src = SourceSpec.of((1.0, -0.5, "one"))
    assert src.eval_F(0.0)[0] == 0.0
    assert src.eval_F(-1.0)[0] == 0.0
    assert src.eval_Ftilde(0.0)[0] == 0.0


def test_source_exponent_validation():
    with pytest.raises(ValueError):
        SourceSpec.of((1.0, -1.0, "one"))


def test_correction_factor_values():
    alpha = 0.4
    assert correction_factor(alpha, 0.0, 1) == 0.0
    assert correction_factor(alpha, -0.5, 2) == 0.0
    assert correction_factor(alpha, 2.0, 1) == pytest.approx(
        2.0 ** 0.6 / gamma(1.6), rel=1e-14)
    assert correction_factor(alpha, 2.0, 2) == pytest.approx(
        2.0 ** 1.6 / gamma(2.6), rel=1e-14)
    with pytest.raises(ValueError):
        correction_factor(alpha, 1.0, 3)


def test_power_ode_antiderivatives():
    ode = PowerOde(0.3, -0.2, lam=-2.0)
    t, dt = 0.9, 1e-6
    dF = (ode.F(t + dt) - ode.F(t - dt)) / (2 * dt)
    assert dF == pytest.approx(ode.f(t), rel=1e-8)
    dFt = (ode.Ftilde(t + dt) - ode.Ftilde(t - dt)) / (2 * dt)
    assert dFt == pytest.approx(ode.F(t), rel=1e-8)


def test_power_ode_gamma_pole_case():
    # nu = alpha - 1 puts the forcing coefficient on a Gamma pole: the
    # singular part of f vanishes identically but its unit integral
    # survives in F, so F is not the naive antiderivative of f alone.
    ode = PowerOde(0.5, -0.5)
    assert ode.f(2.0) == pytest.approx(-ode.lam * 2.0 ** -0.5, rel=1e-14)
    # the vanished term leaves the constant Gamma(1/2)/Gamma(1) in F
    t = 2.0
    mass = ode.F(t) + ode.lam * t ** 0.5 / 0.5
    assert mass == pytest.approx(gamma(0.5), rel=1e-13)
    assert ode.F(0.0) == 0.0


def test_power_ode_validation():
    with pytest.raises(ValueError):
        PowerOde(1.2, 0.5)
    with pytest.raises(ValueError):
        PowerOde(0.5, -0.6)


def test_modal_profiles_shapes_and_projection():
    from fracsub.spatial import build_operator

    op = build_operator(MESH1)
    src = SourceSpec.of((1.0, -0.5, "pow:-0.25"))
    nodal = src.modal_profiles(op, projection="nodal")
    mean = src.modal_profiles(op, projection="mean")
    assert nodal.shape == (1,) + op.mesh.interior_shape
    assert mean.shape == nodal.shape
    # projections agree on smooth profiles to O(h^2) but are distinct
    assert not np.allclose(nodal, mean, rtol=1e-12)
    with pytest.raises(KeyError):
        src.modal_profiles(op, projection="bogus")
