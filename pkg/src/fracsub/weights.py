"""Convolution-quadrature weight sequences.

Two generating symbols are supported:

* ``GL``     -- fractional backward Euler, delta(z) = (1 - z)^alpha,
  whose coefficients are the Grunwald-Letnikov weights
  sigma_j = (-1)^j * binom(alpha, j);
* ``FBDF2``  -- fractional second-order BDF,
  delta(z) = (3/2 - 2z + z^2/2)^alpha.

Weight sequences are immutable once built; a small per-(scheme, alpha)
cache lets convergence sweeps reuse and extend them across step counts.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

import numpy as np

_HALF_PLANE_SAMPLES = 200


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    return alpha


@dataclass(frozen=True)
class CqKernel:
    """One CQ scheme's weight sequence plus its generating symbol."""

    scheme: str                 # "GL" or "FBDF2"
    alpha: float
    weights: np.ndarray         # length n+1, weights[0] > 0

    def __post_init__(self):
        object.__setattr__(self, "weights", np.asarray(self.weights))
        self.weights.setflags(write=False)

    @property
    def n(self) -> int:
        return len(self.weights) - 1

    def symbol(self, z):
        """Generating symbol delta(z) evaluated at complex z."""
        if self.scheme == "GL":
            return (1.0 - z) ** self.alpha
        return (1.5 - 2.0 * z + 0.5 * z * z) ** self.alpha


def _gl_sequence(alpha: float, n: int) -> np.ndarray:
    # sigma_0 = 1, sigma_j = sigma_{j-1} * (j - 1 - alpha) / j.
    # Master sequences are kept in extended precision so that float64
    # views are correctly rounded; the integrated schemes amplify
    # weight roundoff by 1/tau when recovering u.
    a = np.longdouble(alpha)
    w = np.empty(n + 1, dtype=np.longdouble)
    w[0] = 1.0
    for j in range(1, n + 1):
        w[j] = w[j - 1] * (j - 1 - a) / j
    return w


def gl_weights(alpha: float, n: int, dtype=np.float64) -> CqKernel:
    """Grunwald-Letnikov weights sigma_0..sigma_n of (1 - z)^alpha."""
    alpha = _check_alpha(alpha)
    if n < 0:
        raise ValueError("n must be >= 0")
    return CqKernel("GL", alpha, _cached_weights("GL", alpha, n).astype(dtype))


def fbdf2_weights(alpha: float, n: int, dtype=np.float64) -> CqKernel:
    """Coefficients w_0..w_n of (3/2 - 2z + z^2/2)^alpha.

    Uses the factorization (3/2)^alpha (1 - z)^alpha (1 - z/3)^alpha:
    two GL-type recurrences combined by a linear convolution. O(n^2)
    worst case but exact-recurrence stable; n stays in the thousands.
    """
    alpha = _check_alpha(alpha)
    if n < 0:
        raise ValueError("n must be >= 0")
    return CqKernel("FBDF2", alpha,
                    _cached_weights("FBDF2", alpha, n).astype(dtype))


def _fbdf2_sequence(alpha: float, n: int) -> np.ndarray:
    a = _gl_sequence(alpha, n)                      # coeffs of (1 - z)^alpha
    third = np.longdouble(1.0) / 3.0
    b = a * third ** np.arange(n + 1)               # coeffs of (1 - z/3)^alpha
    w = np.convolve(a, b)[: n + 1]
    w *= np.longdouble(1.5) ** np.longdouble(alpha)
    return w


_BUILDERS = {"GL": _gl_sequence, "FBDF2": _fbdf2_sequence}
_cache: dict[tuple[str, float], np.ndarray] = {}
_cache_lock = threading.Lock()


def _cached_weights(scheme: str, alpha: float, n: int) -> np.ndarray:
    """Append-only cache of weight sequences keyed by (scheme, alpha)."""
    key = (scheme, alpha)
    with _cache_lock:
        w = _cache.get(key)
        if w is None or len(w) < n + 1:
            w = _BUILDERS[scheme](alpha, max(n, 2 * len(w) if w is not None else n))
            w.setflags(write=False)
            _cache[key] = w
        return w[: n + 1]


def apply_cq(kernel: CqKernel, tau: float, history) -> np.ndarray:
    """tau^{-alpha} * sum_{j=0}^{n} weight_j * V^{n-j}.

    ``history`` holds V^0..V^n; values before t=0 are the zero extension.
    """
    if tau <= 0:
        raise ValueError("tau must be positive")
    hist = np.asarray(history, dtype=kernel.weights.dtype)
    scalar = hist.ndim == 1
    if scalar:
        hist = hist[:, None]
    if hist.ndim != 2:
        raise ValueError("history must be a sequence of equal-length vectors")
    n = hist.shape[0] - 1
    if kernel.n < n:
        raise ValueError(f"kernel holds {kernel.n + 1} weights, need {n + 1}")
    w = kernel.weights[: n + 1]
    out = w @ hist[::-1]
    out *= tau ** (-kernel.alpha)
    if scalar:
        return float(out[0])
    return out


def _fitted_slope(x: np.ndarray, y: np.ndarray) -> float:
    return float(np.polyfit(np.log(x), np.log(y), 1)[0])


def check_sector_lemmas(alpha: float, sample_count: int = _HALF_PLANE_SAMPLES) -> dict:
    """Numeric spot checks of the generating-symbol sector/order properties.

    Sampling-based regression checks for the symbol evaluation code, not
    proofs. Returns a dict with:

    * ``gl_arg_excess``    -- max |arg((1-e^{-z})^alpha)| - alpha*pi/2 over
      a grid with Re z > 0 (should be <= 0 up to roundoff);
    * ``bdf2_arg_excess``  -- same for the BDF2 symbol;
    * ``gl_order_slope``   -- fitted exponent of |z^a - (1-e^{-z})^a| vs |z|
      near 0 (expected alpha + 1);
    * ``bdf2_order_slope`` -- same for the BDF2 symbol (expected alpha + 2).
    """
    alpha = _check_alpha(alpha)
    if sample_count < 1:
        raise ValueError("sample_count must be >= 1")

    m = max(8, int(np.sqrt(sample_count)))
    re = np.linspace(3.0 / m, 3.0, m)
    im = np.linspace(-np.pi, np.pi, m)
    z = (re[:, None] + 1j * im[None, :]).ravel()

    gl = (1.0 - np.exp(-z)) ** alpha
    bdf2 = (1.5 - 2.0 * np.exp(-z) + 0.5 * np.exp(-2.0 * z)) ** alpha
    half = alpha * np.pi / 2.0
    gl_excess = float(np.max(np.abs(np.angle(gl))) - half)
    bdf2_excess = float(np.max(np.abs(np.angle(bdf2))) - half)

    # slope fits on |z| in [1e-4, 1e-2] along a few rays in the right half-plane
    rho = np.geomspace(1e-4, 1e-2, 40)
    slopes_gl, slopes_bdf2 = [], []
    for theta in (-1.2, -0.6, 0.0, 0.6, 1.2):
        zz = rho * np.exp(1j * theta)
        d1 = np.abs(zz ** alpha - (1.0 - np.exp(-zz)) ** alpha)
        d2 = np.abs(zz ** alpha
                    - (1.5 - 2.0 * np.exp(-zz) + 0.5 * np.exp(-2.0 * zz)) ** alpha)
        slopes_gl.append(_fitted_slope(rho, d1))
        slopes_bdf2.append(_fitted_slope(rho, d2))

    return {
        "gl_arg_excess": gl_excess,
        "bdf2_arg_excess": bdf2_excess,
        "gl_order_slope": float(np.mean(slopes_gl)),
        "bdf2_order_slope": float(np.mean(slopes_bdf2)),
    }
