"""Separable power-in-time source terms and initial data.

A source is a finite sum f(x,t) = sum_r c_r * t^{mu_r} * g_r(x) with
exponents mu_r > -1.  This class admits exact time antiderivatives
F = int f and Ftilde = int F, which the integrated time-stepping
schemes consume, so no time quadrature error enters the solvers.

Spatial profiles are named by registry strings:
    "pow:P"                   x^P on the interval
    "one"                     constant 1
    "indicator:A,B"           indicator of [A,B] on the interval
    "indicator2d:A,B,C,D"     indicator of [A,B]x[C,D] on the square
Indicator values at nodes on the box boundary are 1 (closed box).
"""

import numpy as np
from dataclasses import dataclass
from scipy.special import gamma, rgamma


def resolve_profile(profile, mesh):
    """Nodal values of a registry profile string on a mesh's interior nodes."""
    name, _, arg = profile.partition(":")
    if name == "one":
        return np.ones(mesh.interior_shape)
    if name == "pow":
        if mesh.dimension != 1:
            raise ValueError("pow profile is one-dimensional")
        p = float(arg)
        return mesh.interior_nodes() ** p
    if name == "indicator":
        if mesh.dimension != 1:
            raise ValueError("indicator profile is one-dimensional")
        a, b = (float(s) for s in arg.split(","))
        x = mesh.interior_nodes()
        return np.where((x >= a) & (x <= b), 1.0, 0.0)
    if name == "indicator2d":
        if mesh.dimension != 2:
            raise ValueError("indicator2d profile is two-dimensional")
        a, b, c, d = (float(s) for s in arg.split(","))
        x, y = mesh.interior_nodes()
        return np.where((x >= a) & (x <= b) & (y >= c) & (y <= d), 1.0, 0.0)
    raise ValueError(f"unknown spatial profile: {profile!r}")


def _hat_average_pow(x, h, p):
    """Exact values of (g, hat_i)/h for g = x^p, p > -1, on (0, 1)."""
    def I0(a, b):
        return (b ** (p + 1) - a ** (p + 1)) / (p + 1)

    def I1(a, b):
        return (b ** (p + 2) - a ** (p + 2)) / (p + 2)

    out = np.empty_like(x)
    for j, xi in enumerate(x):
        xl, xr = xi - h, xi + h
        rising = (I1(xl, xi) - xl * I0(xl, xi)) / h
        falling = (xr * I0(xi, xr) - I1(xi, xr)) / h
        out[j] = (rising + falling) / h
    return out


def _hat_average_indicator(x, h, a, b):
    """Exact values of (g, hat_i)/h for g the indicator of [a, b]."""
    def ramp(lo, hi, anchor, sign):
        # integral of sign*(x-anchor)/h over [lo, hi] clipped to [a, b]
        lo, hi = max(lo, a), min(hi, b)
        if hi <= lo:
            return 0.0
        return sign * ((hi - anchor) ** 2 - (lo - anchor) ** 2) / (2.0 * h)

    out = np.empty_like(x)
    for j, xi in enumerate(x):
        out[j] = (ramp(xi - h, xi, xi - h, 1.0)
                  + ramp(xi, xi + h, xi + h, -1.0)) / h
    return out


def profile_mean(profile, mesh):
    """Exact mass-averaged loads (g, hat_i)/h^d of a profile.

    This is the nodal representation of the projection defined by
    (P g, psi)_h = (g, psi): each node carries the exact integral of g
    against its hat function divided by the lumped mass h^d.  For the
    2D indicators the hat integrals are evaluated as tensor products,
    which matches the triangulated element exactly except at the four
    box corners (a O(h^2)-area discrepancy).
    """
    name, _, arg = profile.partition(":")
    if name == "one":
        return np.ones(mesh.interior_shape)
    if name == "pow":
        if mesh.dimension != 1:
            raise ValueError("pow profile is one-dimensional")
        return _hat_average_pow(mesh.interior_nodes(), mesh.h, float(arg))
    if name == "indicator":
        if mesh.dimension != 1:
            raise ValueError("indicator profile is one-dimensional")
        a, b = (float(s) for s in arg.split(","))
        return _hat_average_indicator(mesh.interior_nodes(), mesh.h, a, b)
    if name == "indicator2d":
        if mesh.dimension != 2:
            raise ValueError("indicator2d profile is two-dimensional")
        a, b, c, d = (float(s) for s in arg.split(","))
        x = np.arange(1, mesh.subdivisions) * mesh.h
        gx = _hat_average_indicator(x, mesh.h, a, b)
        gy = _hat_average_indicator(x, mesh.h, c, d)
        return np.outer(gx, gy)
    raise ValueError(f"unknown spatial profile: {profile!r}")


@dataclass(frozen=True)
class SourceTerm:
    """One separable term c * t^mu * g(x)."""
    c: float
    mu: float
    profile: str

    def __post_init__(self):
        if self.mu <= -1.0:
            raise ValueError("time exponent must exceed -1")


@dataclass(frozen=True)
class SourceSpec:
    """A finite sum of separable power-in-time terms."""
    terms: tuple

    @staticmethod
    def of(*terms):
        return SourceSpec(tuple(SourceTerm(c, mu, profile)
                                for c, mu, profile in terms))

    def time_factors(self, t):
        """Per-term scalars c * t^mu (the source itself); t > 0."""
        return np.array([term.c * t ** term.mu for term in self.terms])

    def eval_F(self, t):
        """Per-term scalars of F(t) = int_0^t f; zero at t <= 0."""
        if t <= 0.0:
            return np.zeros(len(self.terms))
        return np.array([term.c * t ** (term.mu + 1) / (term.mu + 1)
                         for term in self.terms])

    def eval_Ftilde(self, t):
        """Per-term scalars of Ftilde(t) = int_0^t F; zero at t <= 0."""
        if t <= 0.0:
            return np.zeros(len(self.terms))
        return np.array([
            term.c * t ** (term.mu + 2) / ((term.mu + 1) * (term.mu + 2))
            for term in self.terms])

    def modal_profiles(self, op, projection="nodal"):
        """Stack of modal coefficient arrays, one per term.

        projection "nodal" interpolates each profile at the mesh nodes;
        "mean" uses the exact hat-function averages (profile_mean).
        """
        realize = {"nodal": resolve_profile, "mean": profile_mean}[projection]
        return np.array([
            op.to_modal(realize(term.profile, op.mesh))
            for term in self.terms])


def correction_factor(alpha, t, order):
    """Initial-data correction scalar of the integrated schemes.

    order 1: t^{1-alpha} / Gamma(2-alpha)   (backward Euler variant)
    order 2: t^{2-alpha} / Gamma(3-alpha)   (fed through the BDF2
             difference operator by the caller)
    Zero for t <= 0.
    """
    if t <= 0.0:
        return 0.0
    if order == 1:
        return t ** (1.0 - alpha) * rgamma(2.0 - alpha)
    if order == 2:
        return t ** (2.0 - alpha) * rgamma(3.0 - alpha)
    raise ValueError("order must be 1 or 2")


class PowerOde:
    """The scalar benchmark problem with exact solution u(t) = t^nu.

    Caputo_alpha u = lam*u + f with
    f(t) = [Gamma(nu+1)/Gamma(nu+1-alpha)] t^{nu-alpha} - lam t^nu.
    Requires nu > alpha - 1 so that f is integrable at the origin.
    The Gamma-ratio coefficients are formed with the reciprocal gamma
    function, which vanishes at poles of the denominator argument, so
    exponent combinations that annihilate a term are handled exactly.
    """

    def __init__(self, alpha, nu, lam=-1.0):
        if not 0.0 < alpha < 1.0:
            raise ValueError("alpha must lie in (0, 1)")
        if nu < alpha - 1.0:
            raise ValueError("nu must be at least alpha - 1")
        self.alpha = alpha
        self.nu = nu
        self.lam = lam
        # Coefficient of the singular term of f: exactly zero when
        # nu+1-alpha sits on a Gamma pole (t^nu is then annihilated by
        # the fractional derivative).  The antiderivatives keep the
        # pole limit Gamma(nu+1)/Gamma(nu+2-alpha): integrating the
        # vanishing term eps*t^{eps-1} leaves unit mass as eps -> 0,
        # which the integrated problem formulations must retain.
        self._a = gamma(nu + 1.0) * rgamma(nu + 1.0 - alpha)
        self._aF = gamma(nu + 1.0) * rgamma(nu + 2.0 - alpha)

    def exact(self, t):
        return t ** self.nu

    def f(self, t):
        a, nu = self.alpha, self.nu
        sing = self._a * t ** (nu - a) if self._a != 0.0 else 0.0
        return sing - self.lam * t ** nu

    def F(self, t):
        if t <= 0.0:
            return 0.0
        a, nu = self.alpha, self.nu
        return (self._aF * t ** (nu - a + 1.0)
                - self.lam * t ** (nu + 1.0) / (nu + 1.0))

    def Ftilde(self, t):
        if t <= 0.0:
            return 0.0
        a, nu = self.alpha, self.nu
        return (self._aF / (nu - a + 2.0) * t ** (nu - a + 2.0)
                - self.lam * t ** (nu + 2.0) / ((nu + 1.0) * (nu + 2.0)))
