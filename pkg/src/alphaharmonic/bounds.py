"""Closed-form Schwarz-type and Schwarz-Pick-type bounds.

Each function evaluates one published upper bound at radius r and weight
alpha.  All values are reported per unit boundary sup-norm; callers
multiply by their own norm.  The bounds M, M2 and M_PRIME additionally
assume the solution maps the disk into itself (boundary sup-norm <= 1),
which the report ``note`` field records.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError
from .quadrature import QuadratureConfig, integrate_periodic
from .specfun import SeriesSettings, alpha_value, c_alpha, hyp2f1

__all__ = [
    "BOUND_IDS",
    "BoundReport",
    "m1_bound",
    "m2_bound",
    "colonna_bound",
    "lc_schwarz_pick_bound",
    "m_bound",
    "m_prime_bound",
    "schwarz_bound",
    "schwarz_pick_bound",
    "schwarz_pick_limit_bound",
    "l1_mean_kernel",
    "evaluate_bound",
]

BOUND_IDS = (
    "M1",
    "M2",
    "COLONNA",
    "LC_SP",
    "M",
    "M_PRIME",
    "SCHWARZ_2F1",
    "SP_2F1",
    "SP_LIMIT",
    "L1_MEAN",
)

_NOTE_UNIT_DISK = "requires boundary sup-norm <= 1 (maps disk into disk)"
_NOTE_LINEAR = "scales linearly with the boundary sup-norm"

_NOTES = {
    "M": _NOTE_UNIT_DISK,
    "M2": _NOTE_UNIT_DISK,
    "M_PRIME": _NOTE_UNIT_DISK,
}


@dataclass(frozen=True)
class BoundReport:
    bound_id: str
    r: float
    alpha: float
    aux: float | None
    value: float
    note: str = _NOTE_LINEAR

    def __post_init__(self):
        if self.bound_id not in BOUND_IDS:
            raise DomainError(f"unknown bound id {self.bound_id!r}")
        if not (0.0 <= self.r < 1.0):
            raise DomainError(f"radius must lie in [0, 1), got {self.r!r}")
        if not self.alpha > -1.0:
            raise DomainError(f"alpha must be > -1, got {self.alpha!r}")
        if self.bound_id == "M1":
            if self.aux is None or not (0.0 < self.aux <= 1.0):
                raise DomainError("M1 requires aux (the mean-to-sup ratio c) in (0, 1]")
        if not self.value >= 0.0:
            raise DomainError(f"bound value must be non-negative, got {self.value!r}")


def _validate_r(r: float) -> float:
    r = float(r)
    if not (0.0 <= r < 1.0):
        raise DomainError(f"radius must lie in [0, 1), got {r!r}")
    return r


def m1_bound(r: float, alpha, c: float) -> float:
    """Center-mean Schwarz bound; c is the ratio of the boundary modulus
    mean to the sup-norm and must lie in (0, 1]."""
    r = _validate_r(r)
    a = alpha_value(alpha)
    if not (0.0 < c <= 1.0):
        raise DomainError(f"c must lie in (0, 1], got {c!r}")
    if c == 1.0:
        arc = math.pi / 2.0  # tan(pi/2) limit
    else:
        arc = math.atan((1.0 + r) / (1.0 - r) * math.tan(c * math.pi / 2.0))
    if a >= 0.0:
        return 2.0 ** (1.0 + a) / math.pi * arc
    return 2.0 ** (1.0 - a) / math.pi * (1.0 - r * r) ** a * arc


def m2_bound(r: float, alpha) -> float:
    """Center-value Schwarz bound with arctan leading term."""
    r = _validate_r(r)
    a = alpha_value(alpha)
    if a >= 0.0:
        return (2.0 ** (a + 2.0) / math.pi * math.atan(r)
                + 2.0 ** (a + 1.0) * (1.0 - r) * (1.0 - (1.0 - r) ** a))
    return 4.0 / math.pi * (1.0 - r) ** a * math.atan(r) + (1.0 - r) ** a - 1.0


def colonna_bound(r: float) -> float:
    """Derivative bound (4/pi) / (1-r^2) for harmonic self-maps of the disk."""
    r = _validate_r(r)
    return 4.0 / math.pi / (1.0 - r * r)


def lc_schwarz_pick_bound(r: float, alpha) -> float:
    """Power-of-two derivative bound, per unit boundary sup-norm."""
    r = _validate_r(r)
    a = alpha_value(alpha)
    if a >= 0.0:
        return (1.0 + a) * 2.0 ** (1.0 + a) / (1.0 - r * r)
    return 2.0 ** (1.0 - a) / (1.0 - r * r) ** (1.0 - a)


def m_bound(r: float, alpha, settings: SeriesSettings | None = None) -> float:
    """Hypergeometric center-value Schwarz bound (stays bounded as r -> 1)."""
    r = _validate_r(r)
    a = alpha_value(alpha)
    one_plus_r2 = 1.0 + r * r
    first = ((1.0 - r * r) ** (a + 1.0)
             * abs((1.0 - r) ** (-a) - 1.0) / one_plus_r2)
    x = 4.0 * r * r / (one_plus_r2 * one_plus_r2)
    f = hyp2f1((0.5, 0.5 - a / 2.0, 1.5), x, settings)
    if a >= 0.0:
        second = 2.0 ** (2.0 + a / 2.0) * r * one_plus_r2 ** (a / 2.0 - 1.0) / math.pi * f
    else:
        second = 4.0 * r / math.pi * one_plus_r2 ** (a / 2.0 - 1.0) * f
    return first + second


def m_prime_bound(r: float, alpha) -> float:
    """Piecewise-elementary majorant of the hypergeometric Schwarz bound."""
    r = _validate_r(r)
    a = alpha_value(alpha)
    if a < 0.0:
        raise DomainError(f"this bound is stated for alpha >= 0, got {a!r}")
    if a >= 2.0:
        return 2.0 ** (1.0 + a) * r * (1.0 / math.pi + a)
    if a >= 1.0:
        return r * (2.0 ** (2.0 + a / 2.0) / math.pi + 2.0 ** (1.0 + a) * a)
    return 2.0 ** (1.0 + a / 2.0) * r + 2.0 ** (1.0 + a) * (1.0 - r) * r ** a


def schwarz_bound(r: float, alpha, settings: SeriesSettings | None = None) -> float:
    """Sup bound F(-alpha/2, -alpha/2; 1; r^2), per unit boundary sup-norm."""
    r = _validate_r(r)
    a = alpha_value(alpha)
    return hyp2f1((-a / 2.0, -a / 2.0, 1.0), r * r, settings)


def schwarz_pick_bound(r: float, alpha, settings: SeriesSettings | None = None) -> float:
    """Hypergeometric derivative bound, per unit boundary sup-norm."""
    r = _validate_r(r)
    a = alpha_value(alpha)
    f = hyp2f1((-a / 2.0, -a / 2.0, 1.0), r * r, settings)
    lead = 2.0 * (1.0 + a) if a >= 0.0 else 2.0
    return lead / (1.0 - r * r) * f


def schwarz_pick_limit_bound(r: float, alpha) -> float:
    """Limit form of the derivative bound with the hypergeometric factor
    replaced by its boundary value 1/c_alpha."""
    r = _validate_r(r)
    a = alpha_value(alpha)
    lead = 2.0 * (1.0 + a) if a >= 0.0 else 2.0
    return lead / c_alpha(a) / (1.0 - r * r)


def l1_mean_kernel(alpha, r: float, config: QuadratureConfig | None = None) -> float:
    """Circle mean of the kernel modulus at radius r, by quadrature.

    Bounded by 1/c_alpha and increasing toward it as r -> 1.
    """
    r = _validate_r(r)
    a = alpha_value(alpha)
    pref = (1.0 - r * r) ** (a + 1.0)

    def integrand(theta):
        mod2 = 1.0 - 2.0 * r * np.cos(theta) + r * r
        return pref * mod2 ** (-(a + 2.0) / 2.0)

    res = integrate_periodic(integrand, config)
    if not res.converged:
        raise ConvergenceError(
            f"kernel mean quadrature did not converge at r={r!r} "
            f"(nodes={res.nodes_used}, err={res.error_estimate:.3e})",
            partial=res.value,
            error_estimate=res.error_estimate,
            iterations=res.nodes_used,
        )
    return float(res.value)


def evaluate_bound(bound_id: str, r: float, alpha, c: float | None = None,
                   config: QuadratureConfig | None = None) -> BoundReport:
    """Evaluate one named bound into a BoundReport."""
    a = alpha_value(alpha)
    if bound_id == "M1":
        if c is None:
            raise DomainError("M1 requires the auxiliary parameter c")
        value = m1_bound(r, a, c)
        return BoundReport("M1", float(r), a, float(c), value, _NOTE_LINEAR)
    dispatch = {
        "M2": lambda: m2_bound(r, a),
        "COLONNA": lambda: colonna_bound(r),
        "LC_SP": lambda: lc_schwarz_pick_bound(r, a),
        "M": lambda: m_bound(r, a),
        "M_PRIME": lambda: m_prime_bound(r, a),
        "SCHWARZ_2F1": lambda: schwarz_bound(r, a),
        "SP_2F1": lambda: schwarz_pick_bound(r, a),
        "SP_LIMIT": lambda: schwarz_pick_limit_bound(r, a),
        "L1_MEAN": lambda: l1_mean_kernel(a, r, config),
    }
    if bound_id not in dispatch:
        raise DomainError(f"unknown bound id {bound_id!r}")
    value = dispatch[bound_id]()
    return BoundReport(bound_id, float(r), a, None, value,
                       _NOTES.get(bound_id, _NOTE_LINEAR))
