"""Periodic trapezoidal quadrature and closed-form trigonometric integrals.

The engine computes circle means (1/2pi) * integral over [0, 2pi) by the
composite trapezoidal rule on equispaced nodes, doubling the node count
until two successive levels agree.  For the analytic periodic integrands
used throughout this package the rule is spectrally accurate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DomainError, IntegrandError
from . import specfun

__all__ = [
    "QuadratureConfig",
    "QuadratureResult",
    "integrate_periodic",
    "cos_power_integral",
    "ratio_integral_series",
    "modulus_power_integral",
]


def _is_pow2(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class QuadratureConfig:
    n_initial: int = 256
    n_max: int = 2**20
    rel_tol: float = 1e-11
    abs_tol: float = 1e-14

    def __post_init__(self):
        if not (_is_pow2(self.n_initial) and _is_pow2(self.n_max)):
            raise DomainError("n_initial and n_max must be powers of two")
        if self.n_initial > self.n_max:
            raise DomainError("n_initial must not exceed n_max")
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise DomainError("tolerances must be positive")


DEFAULT_CONFIG = QuadratureConfig()


@dataclass(frozen=True)
class QuadratureResult:
    value: complex | float
    error_estimate: float
    nodes_used: int
    converged: bool


def _eval_checked(f: Callable, theta: np.ndarray) -> np.ndarray:
    vals = np.asarray(f(theta))
    if vals.shape != theta.shape:
        vals = np.broadcast_to(vals, theta.shape)
    finite = np.isfinite(vals) if not np.iscomplexobj(vals) else (
        np.isfinite(vals.real) & np.isfinite(vals.imag)
    )
    if not finite.all():
        bad = theta[np.argmin(finite)]
        raise IntegrandError(f"integrand is non-finite at theta={bad!r}", theta=float(bad))
    return vals


def integrate_periodic(f: Callable, config: QuadratureConfig | None = None) -> QuadratureResult:
    """Circle mean of f over [0, 2pi) by node-doubling trapezoidal sums.

    ``f`` must accept a float ndarray of angles and return values of the
    same shape.  Node sums reuse previous levels (new nodes are the
    midpoints), and summation order is fixed, so results are reproducible.
    """
    cfg = config or DEFAULT_CONFIG
    n = cfg.n_initial
    theta = 2.0 * math.pi * np.arange(n) / n
    total = _eval_checked(f, theta).sum()
    prev_mean = total / n
    err = float("inf")
    while n < cfg.n_max:
        mid = 2.0 * math.pi * (np.arange(n) + 0.5) / n
        total = total + _eval_checked(f, mid).sum()
        n *= 2
        mean = total / n
        err = float(abs(mean - prev_mean))
        if err <= max(cfg.rel_tol * abs(mean), cfg.abs_tol):
            return QuadratureResult(_as_scalar(mean), err, n, True)
        prev_mean = mean
    return QuadratureResult(_as_scalar(prev_mean), err, n, False)


def _as_scalar(v):
    v = complex(v)
    return v if v.imag != 0.0 else v.real


def cos_power_integral(n: int) -> float:
    """Integral of cos^n over [0, pi/2] via the double-factorial formula."""
    if n < 0:
        raise DomainError(f"power must be non-negative, got {n!r}")
    k, odd = divmod(n, 2)
    out = 1.0
    if odd:
        for j in range(1, k + 1):
            out *= (2.0 * j) / (2.0 * j + 1.0)
        return out
    for j in range(1, k + 1):
        out *= (2.0 * j - 1.0) / (2.0 * j)
    return out * math.pi / 2.0


def _binom_times_power(alpha: float, t: float, m_max: int) -> np.ndarray:
    """Array of (alpha choose m) * t^m for m = 0..m_max, by cumulative product."""
    if m_max == 0:
        return np.ones(1)
    m = np.arange(m_max, dtype=float)
    factors = t * (alpha - m) / (m + 1.0)
    return np.concatenate(([1.0], np.cumprod(factors)))


def _ratio_series_truncated(a: float, b: float, alpha: float, beta: float, n_outer: int) -> float:
    """Partial sum of the double series with outer index 0..n_outer."""
    m_max = 2 * n_outer
    u = _binom_times_power(alpha, a, m_max)
    v = _binom_times_power(-beta, b, m_max)
    conv = np.convolve(u, v)[: m_max + 1]
    even = conv[0::2]
    n = np.arange(1, n_outer + 1, dtype=float)
    weights = np.concatenate(([1.0], np.cumprod((2.0 * n - 1.0) / (2.0 * n))))
    return float(np.sum(even * weights))


def ratio_integral_series(a: float, b: float, alpha: float, beta: float,
                          n_terms: int | None = None) -> float:
    """Double-series value of the circle mean of (1-a cos)^alpha / (1-b cos)^beta.

    The inner sum over m is the degree-2n power-series coefficient of
    (1-a x)^alpha (1-b x)^(-beta), computed by convolving the two binomial
    series; the outer weight (2n)!/(4^n (n!)^2) is the central binomial
    coefficient over 4^n.  With ``n_terms`` given, exactly that outer
    truncation is summed; otherwise the truncation grows until the last
    outer terms fall below 1e-14 of the running sum (outer cap 50000).
    """
    if not (abs(a) < 1.0 and abs(b) < 1.0):
        raise DomainError(f"require |a| < 1 and |b| < 1, got a={a!r}, b={b!r}")
    if alpha < 0 or beta < 0:
        raise DomainError(f"require alpha, beta >= 0, got {alpha!r}, {beta!r}")
    if n_terms is not None:
        if n_terms < 1:
            raise DomainError("n_terms must be a positive integer")
        return _ratio_series_truncated(a, b, alpha, beta, n_terms)

    cap = 50_000
    n_outer = 64
    while True:
        m_max = 2 * n_outer
        u = _binom_times_power(alpha, a, m_max)
        v = _binom_times_power(-beta, b, m_max)
        conv = np.convolve(u, v)[: m_max + 1]
        even = conv[0::2]
        n = np.arange(1, n_outer + 1, dtype=float)
        weights = np.concatenate(([1.0], np.cumprod((2.0 * n - 1.0) / (2.0 * n))))
        outer_terms = even * weights
        total = float(np.sum(outer_terms))
        last = float(np.max(np.abs(outer_terms[-3:])))
        if last <= 1e-14 * max(abs(total), 1e-12):
            return total
        if n_outer >= cap:
            rho = max(abs(a), abs(b))
            raise ConvergenceError(
                f"double series did not settle within outer cap {cap}",
                partial=total,
                error_estimate=last * rho * rho / max(1.0 - rho * rho, 1e-300),
                iterations=n_outer,
            )
        n_outer = min(2 * n_outer, cap)


def modulus_power_integral(z: complex, beta: float,
                           settings: specfun.SeriesSettings | None = None) -> float:
    """Closed form of the circle mean of |1 - z e^{i theta}|^(-2 beta).

    Equals (1-|z|^2)^(1-2 beta) * F(1-beta, 1-beta; 1; |z|^2).
    """
    zc = complex(z)
    r2 = zc.real * zc.real + zc.imag * zc.imag
    if not r2 < 1.0:
        raise DomainError(f"point must lie inside the unit disk, got |z|^2={r2!r}")
    if beta < 0:
        raise DomainError(f"require beta >= 0, got {beta!r}")
    f = specfun.hyp2f1((1.0 - beta, 1.0 - beta, 1.0), r2, settings)
    return (1.0 - r2) ** (1.0 - 2.0 * beta) * f
