import numpy as np
import pytest

from fracsub.spatial import MeshSpec, build_operator, mass_matrix, stiffness_matrix


@pytest.mark.parametrize("dimension", [1, 2])
def test_modal_roundtrip(dimension):
    op = build_operator(MeshSpec(dimension, 17))
    rng = np.random.default_rng(7)
    v = rng.standard_normal(op.mesh.interior_shape)
    np.testing.assert_allclose(op.to_nodal(op.to_modal(v)), v, atol=1e-13)


@pytest.mark.parametrize("dimension,mass", [(1, "lumped"), (1, "galerkin"),
                                            (2, "lumped")])
def test_eigenpairs_satisfy_generalized_problem(dimension, mass):
    mesh = MeshSpec(dimension, 10)
    op = build_operator(mesh, mass)
    a = stiffness_matrix(mesh)
    mm = mass_matrix(mesh, mass)
    lam = op.eigenvalues.ravel()
    size = lam.size
    for idx in range(size):
        coeff = np.zeros(size)
        coeff[idx] = 1.0
        v = op.to_nodal(coeff.reshape(op.eigenvalues.shape)).ravel()
        residual = a @ v - lam[idx] * (mm @ v)
        assert np.max(np.abs(residual)) < 1e-11


def test_1d_lumped_eigenvalues_closed_form():
    m = 16
    op = build_operator(MeshSpec(1, m))
    k = np.arange(1, m)
    ref = 4.0 * m * m * np.sin(np.pi * k / (2 * m)) ** 2
    np.testing.assert_allclose(op.eigenvalues, ref, rtol=1e-14)


def test_2d_eigenvalues_are_1d_sums():
    m = 9
    op1 = build_operator(MeshSpec(1, m))
    op2 = build_operator(MeshSpec(2, m))
    ref = op1.eigenvalues[:, None] + op1.eigenvalues[None, :]
    np.testing.assert_allclose(op2.eigenvalues, ref, rtol=1e-14)


@pytest.mark.parametrize("dimension", [1, 2])
def test_norm_matches_mass_quadratic_form(dimension):
    mesh = MeshSpec(dimension, 8)
    op = build_operator(mesh)
    mm = mass_matrix(mesh, "lumped")
    rng = np.random.default_rng(3)
    v = rng.standard_normal(mesh.interior_shape)
    ref = np.sqrt(v.ravel() @ (mm @ v.ravel()))
    assert op.norm(v) == pytest.approx(ref, rel=1e-13)


def test_norm_is_parseval_in_modal_space():
    op = build_operator(MeshSpec(1, 32))
    rng = np.random.default_rng(11)
    v = rng.standard_normal(op.mesh.interior_shape)
    coeff = op.to_modal(v)
    assert op.norm(v) == pytest.approx(np.linalg.norm(coeff), rel=1e-12)


@pytest.mark.parametrize("dimension", [1, 2])
def test_shifted_solve_inverts_operator(dimension):
    op = build_operator(MeshSpec(dimension, 12))
    rng = np.random.default_rng(5)
    rhs = rng.standard_normal(op.mesh.interior_shape)
    shift = 3.7
    v = op.shifted_solve(shift, rhs)
    # apply (shift*I - Laplacian) back through the eigen-decomposition
    back = op.to_nodal((shift + op.eigenvalues) * op.to_modal(v))
    np.testing.assert_allclose(back, rhs, atol=1e-10)


def test_shifted_solve_validates_inputs():
    op = build_operator(MeshSpec(1, 8))
    with pytest.raises(ValueError):
        op.shifted_solve(0.0, np.zeros(7))
    with pytest.raises(ValueError):
        op.shifted_solve(1.0, np.zeros(6))


def test_project_source_callable_and_array_agree():
    op = build_operator(MeshSpec(1, 16))
    x = op.mesh.interior_nodes()
    np.testing.assert_allclose(op.project_source(lambda t: t ** 2),
                               op.project_source(x ** 2), atol=1e-14)


def test_project_source_rejects_nonfinite():
    op = build_operator(MeshSpec(1, 8))
    bad = np.zeros(7)
    bad[3] = np.inf
    with pytest.raises(ValueError):
        op.project_source(bad)


def test_mesh_validation():
    with pytest.raises(ValueError):
        MeshSpec(3, 8)
    with pytest.raises(ValueError):
        MeshSpec(1, 1)
