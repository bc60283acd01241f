"""Skew-normal distribution functions and skewness parameterizations.

The density with location xi, scale omega and shape alpha is

    g(x) = (2/omega) * phi(z) * Phi(alpha*z),   z = (x - xi)/omega,

with CDF  G(x) = Phi(z) - 2*T(z, alpha)  where T is Owen's T function.
Three skewness scales are supported: the shape alpha, the cubed shape
gamma = alpha**3, and the standardized third-moment skewness gamma1,
which is bounded by +-GAMMA1_SUP (about 0.99527).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq
from scipy.special import log_ndtr, ndtr, ndtri
from scipy.special import owens_t as _owens_t

__all__ = [
    "GAMMA1_SUP",
    "SkewNormalParams",
    "SkewnessScales",
    "alpha_to_delta",
    "alpha_to_gamma1",
    "gamma1_grad_alpha",
    "gamma1_to_alpha",
    "owen_t",
    "sn_cdf",
    "sn_logpdf",
    "sn_moments",
    "sn_pdf",
    "sn_quantile",
]

_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
_SQRT_2_PI = math.sqrt(2.0 / math.pi)           # E|Z| for a standard normal
_K3 = (4.0 - math.pi) / 2.0                     # skewness prefactor

# Supremum of |gamma1|, attained in the half-normal limit delta -> 1.
# Kept at full precision; 0.99527 is the five-digit display value.
GAMMA1_SUP = _K3 * _SQRT_2_PI**3 / (1.0 - 2.0 / math.pi) ** 1.5


def _as_finite_array(x, name):
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite")
    return arr


@dataclass(frozen=True)
class SkewNormalParams:
    """Location/scale/shape triple (xi, omega, alpha) with omega > 0."""

    xi: float = 0.0
    omega: float = 1.0
    alpha: float = 0.0

    def __post_init__(self):
        if not (np.isfinite(self.xi) and np.isfinite(self.omega) and np.isfinite(self.alpha)):
            raise ValueError("skew-normal parameters must be finite")
        if self.omega <= 0.0:
            raise ValueError(f"omega must be positive, got {self.omega}")


@dataclass(frozen=True)
class SkewnessScales:
    """The same amount of skewness expressed on all four scales."""

    alpha: float
    gamma: float
    gamma1: float
    delta: float

    @classmethod
    def from_alpha(cls, alpha: float) -> "SkewnessScales":
        alpha = float(alpha)
        return cls(
            alpha=alpha,
            gamma=alpha**3,
            gamma1=float(alpha_to_gamma1(alpha)),
            delta=float(alpha_to_delta(alpha)),
        )

    @classmethod
    def from_gamma1(cls, gamma1: float) -> "SkewnessScales":
        return cls.from_alpha(float(gamma1_to_alpha(gamma1)))


def owen_t(h, a):
    """Owen's T function T(h, a)."""
    h = _as_finite_array(h, "h")
    a = _as_finite_array(a, "a")
    out = _owens_t(h, a)
    return float(out) if np.isscalar(h) or (out.ndim == 0) else out


def sn_pdf(x, p: SkewNormalParams):
    """Skew-normal density at x (scalar or array)."""
    x = _as_finite_array(x, "x")
    z = (x - p.xi) / p.omega
    out = 2.0 / p.omega * np.exp(-0.5 * z * z - _LOG_SQRT_2PI) * ndtr(p.alpha * z)
    return float(out) if out.ndim == 0 else out


def sn_logpdf(x, p: SkewNormalParams):
    """Log of the skew-normal density at x."""
    x = _as_finite_array(x, "x")
    z = (x - p.xi) / p.omega
    out = math.log(2.0 / p.omega) - 0.5 * z * z - _LOG_SQRT_2PI + log_ndtr(p.alpha * z)
    return float(out) if out.ndim == 0 else out


def sn_cdf(x, p: SkewNormalParams):
    """Skew-normal CDF, evaluated as Phi(z) - 2*T(z, alpha)."""
    x = _as_finite_array(x, "x")
    z = (x - p.xi) / p.omega
    out = np.clip(ndtr(z) - 2.0 * _owens_t(z, p.alpha), 0.0, 1.0)
    return float(out) if out.ndim == 0 else out


def sn_quantile(prob: float, p: SkewNormalParams) -> float:
    """Inverse CDF by bracket expansion from the Gaussian quantile plus Brent.

    The bracket is grown geometrically around xi + omega*Phi^{-1}(prob) until
    it encloses the root, then a safeguarded bisection/secant iteration
    (Brent's method) polishes it to ~1e-13 in x.
    """
    prob = float(prob)
    if not (0.0 < prob < 1.0):
        raise ValueError(f"prob must be in (0, 1), got {prob}")

    def f(x):
        return sn_cdf(x, p) - prob

    x0 = p.xi + p.omega * ndtri(prob)
    step = p.omega
    lo, hi = x0 - step, x0 + step
    for _ in range(80):
        if f(lo) <= 0.0:
            break
        step *= 2.0
        lo -= step
    else:
        raise RuntimeError("quantile bracket expansion failed on the left")
    step = p.omega
    for _ in range(80):
        if f(hi) >= 0.0:
            break
        step *= 2.0
        hi += step
    else:
        raise RuntimeError("quantile bracket expansion failed on the right")
    return float(brentq(f, lo, hi, xtol=1e-13, rtol=8.882e-16, maxiter=200))


def sn_moments(p: SkewNormalParams) -> tuple[float, float]:
    """Closed-form (mean, variance)."""
    d = alpha_to_delta(p.alpha)
    mean = p.xi + p.omega * d * _SQRT_2_PI
    var = p.omega**2 * (1.0 - 2.0 * d * d / math.pi)
    return float(mean), float(var)


def alpha_to_delta(alpha):
    """delta = alpha / sqrt(1 + alpha^2); maps +-inf to +-1."""
    alpha = np.asarray(alpha, dtype=float)
    with np.errstate(invalid="ignore", over="ignore"):
        out = np.where(np.isinf(alpha), np.sign(alpha), alpha / np.sqrt(1.0 + alpha * alpha))
    return float(out) if out.ndim == 0 else out


def alpha_to_gamma1(alpha):
    """Standardized skewness gamma1 as a function of the shape alpha.

    Odd, strictly increasing, with range (-GAMMA1_SUP, GAMMA1_SUP).
    """
    d = alpha_to_delta(alpha)
    m = d * _SQRT_2_PI
    out = _K3 * m**3 / (1.0 - m * m) ** 1.5
    return float(out) if np.ndim(out) == 0 else out


def gamma1_to_alpha(gamma1):
    """Closed-form inverse of alpha_to_gamma1 on (-GAMMA1_SUP, GAMMA1_SUP)."""
    g = np.asarray(gamma1, dtype=float)
    if np.any(np.abs(g) >= GAMMA1_SUP):
        raise ValueError(f"|gamma1| must be below {GAMMA1_SUP:.6f}")
    # m^2 = t/(1+t) with t = (2|g|/(4-pi))^(2/3); then delta^2 = (pi/2) m^2
    # and alpha^2 = delta^2/(1-delta^2), simplified for stability near the
    # boundary where delta -> 1.
    t = (2.0 * np.abs(g) / (4.0 - math.pi)) ** (2.0 / 3.0)
    alpha_sq = (math.pi / 2.0) * t / (1.0 + (1.0 - math.pi / 2.0) * t)
    out = np.sign(g) * np.sqrt(alpha_sq)
    return float(out) if out.ndim == 0 else out


def gamma1_grad_alpha(alpha):
    """d(gamma1)/d(alpha); derivative of the monotone skewness map.

    Equals 3*K*b^3 * alpha^2 * (1 + (1-b^2)*alpha^2)^(-5/2) with b=sqrt(2/pi),
    which follows from differentiating through delta.
    """
    alpha = np.asarray(alpha, dtype=float)
    b2 = _SQRT_2_PI**2
    out = 3.0 * _K3 * _SQRT_2_PI**3 * alpha**2 * (1.0 + (1.0 - b2) * alpha**2) ** -2.5
    return float(out) if out.ndim == 0 else out
