"""Exact reference solutions for error measurement.

The semidiscrete (spatially discretized, continuous-in-time) problem
diagonalizes in the operator's eigenbasis, where each mode solves a
scalar fractional relaxation equation with power-type forcing.  Both
pieces have closed forms in the Mittag-Leffler function:

    homogeneous:  u_k(t) = E_{alpha,1}(-lam_k t^alpha) u_k(0)
    forced:       int_0^t (t-s)^{alpha-1} E_{alpha,alpha}(-lam_k (t-s)^alpha)
                  s^mu ds = Gamma(mu+1) t^{alpha+mu}
                  E_{alpha,alpha+mu+1}(-lam_k t^alpha)

so the semidiscrete solution is exact up to Mittag-Leffler evaluation
accuracy (~1e-13), far below any time-discretization error measured
against it.
"""

import numpy as np

from .ml import ml_eval_array, ml_conv_weight_array


def fode_exact(nu, t):
    """Exact solution t^nu of the scalar power benchmark."""
    if t <= 0.0 and nu < 0.0:
        raise ValueError("t must be positive for negative exponents")
    return t ** nu


def semidiscrete_exact(op, src, u0_nodal, alpha, t, projection="nodal"):
    """Nodal solution of the semidiscrete problem at time t > 0.

    op is a SpatialOperator with closed-form eigenpairs, src a
    SourceSpec (or None), u0_nodal the initial nodal field (or None).
    projection selects how source profiles are realized on the mesh
    (see SourceSpec.modal_profiles).
    """
    if t <= 0.0:
        raise ValueError("t must be positive")
    lam = op.eigenvalues
    total = np.zeros(lam.shape)
    if u0_nodal is not None:
        u0m = op.to_modal(u0_nodal)
        total += ml_eval_array(alpha, 1.0, -lam.ravel() * t ** alpha
                               ).reshape(lam.shape) * u0m
    if src is not None:
        gm = src.modal_profiles(op, projection=projection)
        for term, g in zip(src.terms, gm):
            conv = ml_conv_weight_array(alpha, lam.ravel(), t, term.mu)
            total += term.c * conv.reshape(lam.shape) * g
    return op.to_nodal(total)


def regularity_slope(alpha, mu, op, profile="pow:-0.25",
                     t_lo=1e-6, t_hi=1e-2, points=13):
    """Fitted growth exponent of ||u_h(t)|| as t -> 0.

    For a single-term source t^mu g(x) with zero initial data the
    solution norm behaves like t^{alpha+mu}; the fitted log-log slope
    over a small-t grid recovers that exponent when alpha+mu < 0.
    """
    from .sources import SourceSpec

    src = SourceSpec.of((1.0, mu, profile))
    ts = np.geomspace(t_lo, t_hi, points)
    norms = np.array([op.norm(semidiscrete_exact(op, src, None, alpha, t))
                      for t in ts])
    return float(np.polyfit(np.log(ts), np.log(norms), 1)[0])
