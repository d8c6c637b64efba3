"""Uniform linear finite element discretizations of the Laplacian.

Supports the unit interval and the unit square (uniform right-triangle
mesh), with either the consistent (Galerkin) or the lumped mass matrix.
On these tensor meshes the lumped operator diagonalizes in the discrete
sine basis with closed-form eigenvalues, which makes solves and modal
transforms cheap and exact.  The Galerkin operator shares the sine
eigenvectors in 1D; in 2D its generalized eigenpairs are computed
densely (validation-scale meshes only).
"""

import numpy as np
from dataclasses import dataclass, field
from scipy.fft import dst
from scipy.linalg import eigh


@dataclass(frozen=True)
class MeshSpec:
    """A uniform mesh of the unit interval or unit square.

    dimension    -- 1 or 2
    subdivisions -- number of subintervals M per axis (h = 1/M)
    """
    dimension: int
    subdivisions: int

    def __post_init__(self):
        if self.dimension not in (1, 2):
            raise ValueError("dimension must be 1 or 2")
        if self.subdivisions < 2:
            raise ValueError("subdivisions must be at least 2")

    @property
    def h(self):
        return 1.0 / self.subdivisions

    @property
    def interior_shape(self):
        m = self.subdivisions - 1
        return (m,) if self.dimension == 1 else (m, m)

    def interior_nodes(self):
        """Coordinates of interior mesh nodes.

        Returns a vector x in 1D, or a pair of meshgrid arrays (x, y)
        matching the interior shape in 2D.
        """
        pts = np.arange(1, self.subdivisions) * self.h
        if self.dimension == 1:
            return pts
        return np.meshgrid(pts, pts, indexing="ij")


def _sine_transform(values):
    """Sum_i v_i sin(k pi x_i) along every axis (DST-I up to a factor 2)."""
    out = np.asarray(values, dtype=float)
    for axis in range(out.ndim):
        out = dst(out, type=1, axis=axis) / 2.0
    return out


class SpatialOperator:
    """Discrete Laplacian with mass treatment and eigen-decomposition.

    Not constructed directly; use build_operator.  Nodal fields are
    arrays over interior nodes (shape (M-1,) in 1D, (M-1, M-1) in 2D);
    modal fields use the same shape indexed by sine frequency.
    """

    def __init__(self, mesh, mass, eigenvalues, modal_forward, modal_inverse,
                 mass_matvec, norm_weight):
        self.mesh = mesh
        self.mass = mass
        self.eigenvalues = eigenvalues
        self._forward = modal_forward
        self._inverse = modal_inverse
        self._mass_matvec = mass_matvec
        self._norm_weight = norm_weight

    def to_modal(self, nodal):
        """Expansion coefficients of a nodal field in the eigenbasis."""
        return self._forward(np.asarray(nodal, dtype=float))

    def to_nodal(self, modal):
        """Reassemble a nodal field from eigenbasis coefficients."""
        return self._inverse(np.asarray(modal, dtype=float))

    def norm(self, nodal):
        """Discrete L2 norm in the operator's mass inner product."""
        v = np.asarray(nodal, dtype=float)
        return float(np.sqrt(np.sum(v * self._mass_matvec(v))))

    def project_source(self, g):
        """Modal coefficients of the spatial profile g.

        g may be a nodal array or a callable evaluated at interior
        nodes (lumped mass) / integrated against basis functions by
        Gauss quadrature (Galerkin).
        """
        if callable(g):
            nodal = self._evaluate_profile(g)
        else:
            nodal = np.asarray(g, dtype=float)
        if nodal.shape != self.mesh.interior_shape:
            raise ValueError("profile shape does not match mesh")
        if not np.all(np.isfinite(nodal)):
            raise ValueError("profile is not finite at an interior node")
        return self.to_modal(nodal)

    def _evaluate_profile(self, g):
        if self.mesh.dimension == 1:
            return np.asarray(g(self.mesh.interior_nodes()), dtype=float)
        x, y = self.mesh.interior_nodes()
        return np.asarray(g(x, y), dtype=float)

    def shifted_solve(self, shift, rhs):
        """Solve (shift*I - Laplacian) v = rhs for a nodal right side."""
        if shift <= 0:
            raise ValueError("shift must be positive")
        rhs = np.asarray(rhs, dtype=float)
        if rhs.shape != self.mesh.interior_shape:
            raise ValueError("rhs shape does not match mesh")
        coeff = self.to_modal(rhs) / (shift + self.eigenvalues)
        return self.to_nodal(coeff)


def _build_lumped(mesh):
    m = mesh.subdivisions
    h = mesh.h
    k = np.arange(1, m)
    lam1 = (4.0 / h**2) * np.sin(np.pi * k / (2 * m)) ** 2
    if mesh.dimension == 1:
        eigs = lam1
        weight = h
        # eigenvectors sqrt(2) sin(k pi x_i), orthonormal in h*sum(v w)
        scale_fwd = np.sqrt(2.0) * h
        scale_inv = np.sqrt(2.0)
    else:
        eigs = lam1[:, None] + lam1[None, :]
        weight = h**2
        scale_fwd = 2.0 * h**2
        scale_inv = 2.0

    def forward(v):
        return scale_fwd * _sine_transform(v)

    def inverse(c):
        return scale_inv * _sine_transform(c)

    def mass_matvec(v):
        return weight * v

    return SpatialOperator(mesh, "lumped", eigs, forward, inverse,
                           mass_matvec, weight)


def stiffness_matrix(mesh):
    """Assembled stiffness matrix over interior nodes (dense)."""
    m = mesh.subdivisions - 1
    h = mesh.h
    a1 = (np.diag(np.full(m, 2.0)) - np.diag(np.ones(m - 1), 1)
          - np.diag(np.ones(m - 1), -1)) / h
    if mesh.dimension == 1:
        return a1
    eye = np.eye(m)
    # five-point stencil of the right-triangle P1 stiffness
    return np.kron(a1 * h, eye) + np.kron(eye, a1 * h)


def mass_matrix(mesh, mass):
    """Assembled mass matrix over interior nodes (dense)."""
    m = mesh.subdivisions - 1
    h = mesh.h
    if mass == "lumped":
        w = h if mesh.dimension == 1 else h**2
        return w * np.eye(m if mesh.dimension == 1 else m * m)
    if mesh.dimension == 1:
        return (h / 6.0) * (4.0 * np.eye(m) + np.diag(np.ones(m - 1), 1)
                            + np.diag(np.ones(m - 1), -1))
    # consistent P1 mass on the uniform right-triangle mesh: each node
    # couples to 6 neighbours; diagonal h^2/2, edge neighbours h^2/12
    n = m * m
    mat = np.zeros((n, n))
    idx = lambda i, j: i * m + j
    for i in range(m):
        for j in range(m):
            p = idx(i, j)
            mat[p, p] = h**2 / 2.0
            for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)):
                ii, jj = i + di, j + dj
                if 0 <= ii < m and 0 <= jj < m:
                    mat[p, idx(ii, jj)] = h**2 / 12.0
    return mat


_GALERKIN_2D_CAP = 64


def _build_galerkin(mesh):
    m = mesh.subdivisions
    h = mesh.h
    if mesh.dimension == 1:
        k = np.arange(1, m)
        c = np.cos(np.pi * k * h)
        eigs = (6.0 / h**2) * (1.0 - c) / (2.0 + c)
        # eigenvectors phi_k(x_i) = scale_k sin(k pi x_i), normalized in
        # the consistent mass inner product; s_k' M s_k = (h m/12)(2+c_k)*2
        norm2 = (h * m / 6.0) * (2.0 + c)
        scale = 1.0 / np.sqrt(norm2)

        def mass_matvec(v):
            out = 4.0 * v.copy()
            out[:-1] += v[1:]
            out[1:] += v[:-1]
            return (h / 6.0) * out

        def forward(v):
            return scale * _sine_transform(mass_matvec(v))

        def inverse(c_):
            return _sine_transform(scale * c_)

        return SpatialOperator(mesh, "galerkin", eigs, forward, inverse,
                               mass_matvec, None)

    if m > _GALERKIN_2D_CAP:
        raise ValueError(
            "2D Galerkin operators use a dense eigensolver and are capped "
            f"at M={_GALERKIN_2D_CAP}; use the lumped mass treatment")
    a = stiffness_matrix(mesh)
    mm = mass_matrix(mesh, "galerkin")
    vals, vecs = eigh(a, mm)  # vecs are M-orthonormal
    shape = mesh.interior_shape

    def mass_matvec(v):
        return (mm @ v.ravel()).reshape(shape)

    def forward(v):
        return (vecs.T @ (mm @ v.ravel())).reshape(shape)

    def inverse(c_):
        return (vecs @ c_.ravel()).reshape(shape)

    return SpatialOperator(mesh, "galerkin", vals.reshape(shape),
                           forward, inverse, mass_matvec, None)


def build_operator(mesh, mass="lumped"):
    """Build the discrete Laplacian for a mesh and mass treatment."""
    if mass == "lumped":
        return _build_lumped(mesh)
    if mass == "galerkin":
        return _build_galerkin(mesh)
    raise ValueError("mass must be 'lumped' or 'galerkin'")
