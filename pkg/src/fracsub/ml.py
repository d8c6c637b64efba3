"""Two-parameter Mittag-Leffler function E_{alpha,beta}(x) on the real line.

Primary regime is x <= 0 (modal decay of sub-diffusion), plus small |x|
of either sign. Three evaluation regimes, each self-certifying:

* truncated power series  sum_k x^k / Gamma(alpha*k + beta)  for |x| <= 1;
* asymptotic expansion    -sum_{k>=1} x^{-k} / Gamma(beta - alpha*k)
  for large negative x, truncated at the smallest term, accepted only if
  the first omitted term is below 1e-13;
* arbitrary-precision series summation (mpmath) in the cancellation-prone
  band in between, with working precision sized from the peak series term.

Absolute accuracy target: 1e-12 on x in [-1e6, 1].
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import gammaln, rgamma

_SERIES_CUTOFF = 1.0
_ASYM_TOL = 1e-13
_MAX_ASYM_TERMS = 400


class MlAccuracyError(ArithmeticError):
    """No evaluation regime could certify the accuracy target."""


def _check_params(alpha: float, beta: float) -> tuple[float, float]:
    alpha, beta = float(alpha), float(beta)
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    if not 0.0 < beta <= 4.0:
        raise ValueError(f"beta must lie in (0, 4], got {beta}")
    return alpha, beta


def _series_float(alpha: float, beta: float, x: float) -> float:
    terms = []
    k = 0
    while k <= 400:
        t = x ** k * rgamma(alpha * k + beta) if k else rgamma(beta)
        terms.append(t)
        if k > 2 and abs(t) <= 1e-17:
            break
        k += 1
    return math.fsum(terms)


def _coef_envelope(y: float) -> float:
    """Smooth upper bound for |1/Gamma(y)|.

    1/Gamma oscillates through zeros for y < 0; the reflection envelope
    Gamma(1-y)/pi is monotone there and safe for truncation decisions.
    """
    if y >= 0.5:
        return rgamma(y)
    return math.exp(gammaln(1.0 - y)) / math.pi


def _exp_floor(alpha: float, x: float) -> float:
    """Contribution missing from the algebraic expansion at alpha = 1.

    For 0 < alpha < 1 and x < 0 the expansion in inverse powers is
    complete; at alpha = 1 it omits an e^x term that only becomes
    negligible for very negative arguments.
    """
    if alpha == 1.0 and x > -700.0:
        return math.exp(x)
    return 0.0


def _asymptotic(alpha: float, beta: float, x: float) -> tuple[float, float]:
    """Optimally truncated asymptotic sum and its error estimate."""
    floor = _exp_floor(alpha, x)
    s = 0.0
    prev_env = math.inf
    k = 1
    while k <= _MAX_ASYM_TERMS:
        coef = rgamma(beta - alpha * k)
        if coef == 0.0 and alpha == 1.0:
            # integer beta: all remaining algebraic terms vanish
            return s, floor
        env = abs(x) ** (-k) * _coef_envelope(beta - alpha * k)
        if env >= prev_env:
            return s, max(env, floor)
        s -= x ** (-k) * coef
        prev_env = env
        if env < _ASYM_TOL * 1e-3:
            return s, max(env, floor)
        k += 1
    return s, max(prev_env, floor)


def _peak_digits(alpha: float, beta: float, x: float) -> float:
    """log10 of the largest series term |x|^k / Gamma(alpha*k + beta)."""
    ax = abs(x)
    if ax <= 1.0:
        return 0.0
    # peak at alpha*k + beta ~= psi^{-1}(log|x| / alpha); exp() is a good
    # inverse of digamma for the arguments that matter here
    y = math.exp(math.log(ax) / alpha) + 1.0
    kstar = max(1.0, (y - beta) / alpha)
    logpeak = kstar * math.log(ax) - gammaln(alpha * kstar + beta)
    return max(0.0, logpeak / math.log(10.0))


def _series_mp(alpha: float, beta: float, x: float) -> float:
    from mpmath import mp, mpf

    digits = _peak_digits(alpha, beta, x)
    dps = int(digits) + 30
    if dps > 2000:
        raise MlAccuracyError(
            f"E_{{{alpha},{beta}}}({x}): required working precision "
            f"{dps} digits exceeds the supported range"
        )
    with mp.workdps(dps):
        from mpmath import gamma as mpgamma

        xm = mpf(x)
        am = mpf(alpha)          # gamma argument must be formed at working
        bm = mpf(beta)           # precision: peak terms amplify any rounding
        s = mpf(0)
        k = 0
        cutoff = mpf(10) ** (-(digits + 22))
        power = mpf(1)
        peak_arg = abs(x) ** (1.0 / alpha)
        while k <= 100 * dps:
            term = power / mpgamma(am * k + bm)
            s += term
            power *= xm
            k += 1
            if abs(term) < cutoff and alpha * k + beta > peak_arg:
                break
        return float(s)


def ml_eval(alpha: float, beta: float, x: float) -> float:
    """E_{alpha,beta}(x) for real x <= 1, absolute error <= 1e-12."""
    alpha, beta = _check_params(alpha, beta)
    x = float(x)
    if x > _SERIES_CUTOFF:
        raise ValueError(f"x must be <= {_SERIES_CUTOFF}, got {x}")
    if x == 0.0:
        return rgamma(beta)
    if abs(x) <= _SERIES_CUTOFF:
        return _series_float(alpha, beta, x)
    s, err = _asymptotic(alpha, beta, x)
    if err <= _ASYM_TOL:
        return s
    return _series_mp(alpha, beta, x)


def ml_eval_array(alpha: float, beta: float, x) -> np.ndarray:
    """Vectorized E_{alpha,beta} over an array of arguments x <= 1.

    Same regime split as :func:`ml_eval`; the series and asymptotic
    branches run vectorized, the extended-precision band falls back to
    scalar evaluation (it only ever holds a handful of modes).
    """
    alpha, beta = _check_params(alpha, beta)
    x = np.asarray(x, dtype=float)
    if np.any(x > _SERIES_CUTOFF):
        raise ValueError("all arguments must be <= 1")
    out = np.empty_like(x)

    small = np.abs(x) <= _SERIES_CUTOFF
    if np.any(small):
        xs = x[small]
        acc = np.full(xs.shape, rgamma(beta))
        power = np.ones_like(xs)
        for k in range(1, 420):
            power = power * xs
            term = power * rgamma(alpha * k + beta)
            acc += term
            if k > 2 and np.max(np.abs(term)) <= 1e-17:
                break
        out[small] = acc

    big = ~small
    if np.any(big):
        xb = x[big]
        acc = np.zeros_like(xb)
        err = np.full(xb.shape, np.inf)
        prev_env = np.full(xb.shape, np.inf)
        active = np.ones(xb.shape, dtype=bool)
        for k in range(1, _MAX_ASYM_TERMS + 1):
            coef = rgamma(beta - alpha * k)
            if coef == 0.0 and alpha == 1.0:
                # integer beta: all remaining algebraic terms vanish
                err[active] = np.array([_exp_floor(alpha, v) for v in xb[active]])
                active[:] = False
                break
            env = np.abs(xb) ** (-k) * _coef_envelope(beta - alpha * k)
            grew = env >= prev_env
            stop = active & grew
            err[stop] = env[stop]
            active &= ~grew
            if not np.any(active):
                break
            acc[active] -= xb[active] ** (-k) * coef
            prev_env[active] = env[active]
            done = active & (env < _ASYM_TOL * 1e-3)
            err[done] = env[done]
            active &= ~done
            if not np.any(active):
                break
        err[active] = prev_env[active]
        if alpha == 1.0:
            err = np.maximum(err, np.exp(np.maximum(xb, -700.0)))
        bad = err > _ASYM_TOL
        if np.any(bad):
            vals = np.array([_series_mp(alpha, beta, v) for v in xb[bad]])
            acc[bad] = vals
        out[big] = acc
    return out


def ml_conv_weight(alpha: float, lam: float, t: float, mu: float) -> float:
    """Closed form of int_0^t (t-s)^{alpha-1} E_{alpha,alpha}(-lam (t-s)^alpha) s^mu ds.

    Term-by-term integration of the ML series gives
    Gamma(mu+1) * t^{alpha+mu} * E_{alpha, alpha+mu+1}(-lam * t^alpha).
    """
    if t <= 0:
        raise ValueError("t must be positive")
    if mu <= -1:
        raise ValueError("mu must exceed -1")
    if lam < 0:
        raise ValueError("lam must be nonnegative")
    beta = alpha + mu + 1.0
    return math.gamma(mu + 1.0) * t ** (alpha + mu) * ml_eval(alpha, beta, -lam * t ** alpha)


def ml_conv_weight_array(alpha: float, lams, t: float, mu: float) -> np.ndarray:
    """Vectorized :func:`ml_conv_weight` over an array of decay rates."""
    if t <= 0:
        raise ValueError("t must be positive")
    if mu <= -1:
        raise ValueError("mu must exceed -1")
    lams = np.asarray(lams, dtype=float)
    if np.any(lams < 0):
        raise ValueError("lam must be nonnegative")
    beta = alpha + mu + 1.0
    vals = ml_eval_array(alpha, beta, -lams * t ** alpha)
    return math.gamma(mu + 1.0) * t ** (alpha + mu) * vals
