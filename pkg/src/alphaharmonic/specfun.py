"""Gamma-family functions and the Gauss hypergeometric series.

Everything here is a pure function of its arguments.  The hypergeometric
evaluator sums the defining power series

    F(a, b; c; x) = sum_n (a)_n (b)_n / ((c)_n n!) x^n,    0 <= x < 1,

in float64 with a rigorous geometric tail bound for stopping, and applies
the Euler transform automatically when the transformed series decays
faster.  No analytic continuation beyond [0, 1) is attempted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError

__all__ = [
    "Alpha",
    "HypergeomParams",
    "SeriesSettings",
    "Hyp2F1Result",
    "gamma",
    "beta",
    "pochhammer",
    "binom_general",
    "hyp2f1",
    "hyp2f1_detailed",
    "hyp2f1_at_one",
    "euler_transform_eval",
    "quadratic_transform_eval",
    "c_alpha",
]

# c values this close to {0, -1, -2, ...} are rejected: the series
# denominators (c)_n are not usable in float arithmetic near a pole.
_BAD_C_TOL = 1e-12

_CHUNK = 4096


def _validate_c(c: float) -> None:
    if c <= 0.5:
        k = round(c)
        if k <= 0 and abs(c - k) <= _BAD_C_TOL:
            raise DomainError(
                f"c={c!r} is (within {_BAD_C_TOL}) a non-positive integer"
            )


@dataclass(frozen=True)
class HypergeomParams:
    """Parameter triple (a, b, c) of the Gauss hypergeometric function."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        _validate_c(self.c)


@dataclass(frozen=True)
class Alpha:
    """Weight parameter of the weighted Laplacian; must exceed -1."""

    value: float

    def __post_init__(self):
        if not self.value > -1.0:
            raise DomainError(f"alpha must be > -1, got {self.value!r}")


def alpha_value(alpha) -> float:
    """Coerce an Alpha or plain number to a validated float."""
    v = alpha.value if isinstance(alpha, Alpha) else float(alpha)
    if not v > -1.0:
        raise DomainError(f"alpha must be > -1, got {v!r}")
    return v


@dataclass(frozen=True)
class SeriesSettings:
    """Evaluation knobs for the hypergeometric power series.

    The cap covers the slowest supported case (exponent c - a - b down to
    about 0.2 evaluated at x = 1 - 1e-5 under the tail-bound stopping
    rule) with headroom; chunked summation keeps even capped runs cheap.
    """

    term_cap: int = 4_000_000
    rel_tol: float = 1e-13

    def __post_init__(self):
        if self.term_cap < 1 or not self.rel_tol > 0:
            raise DomainError("term_cap must be >= 1 and rel_tol > 0")


DEFAULT_SERIES_SETTINGS = SeriesSettings()


@dataclass(frozen=True)
class Hyp2F1Result:
    value: float
    terms_used: int
    transform: str  # "none" or "euler"


def gamma(x: float) -> float:
    """Gamma function for positive real arguments."""
    if not x > 0:
        raise DomainError(f"gamma requires x > 0, got {x!r}")
    return math.gamma(x)


def beta(x: float, y: float) -> float:
    """Beta function B(x, y) for positive real arguments."""
    if not (x > 0 and y > 0):
        raise DomainError(f"beta requires positive arguments, got {x!r}, {y!r}")
    return math.exp(math.lgamma(x) + math.lgamma(y) - math.lgamma(x + y))


def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise DomainError(f"pochhammer requires n >= 0, got {n!r}")
    out = 1.0
    for k in range(n):
        out *= a + k
    return out


def binom_general(alpha: float, n: int) -> float:
    """Generalized binomial coefficient (alpha choose n) for real alpha.

    Evaluated as the product (alpha - n + 1)_n / n! with factors interleaved,
    so integer alpha with n > alpha >= 0 yields an exact 0.
    """
    if n < 0:
        raise DomainError(f"binom_general requires n >= 0, got {n!r}")
    out = 1.0
    for k in range(n):
        out *= (alpha - k) / (k + 1)
    return out


def _unpack_params(params) -> tuple[float, float, float]:
    if isinstance(params, HypergeomParams):
        return params.a, params.b, params.c
    a, b, c = params
    _validate_c(float(c))
    return float(a), float(b), float(c)


def _validate_x(x: float) -> float:
    x = float(x)
    if not (0.0 <= x < 1.0):
        raise DomainError(f"series argument must lie in [0, 1), got {x!r}")
    return x


def _series_sum(a: float, b: float, c: float, x: float, settings: SeriesSettings):
    """Sum the raw series; returns (value, terms_used).

    Stops once the remaining tail is provably below rel_tol * |sum|.  The
    term ratio is |t_{m+1}/t_m| = x (m+a)(m+b) / ((m+c)(m+1)); for
    m >= n past the burn-in (all four factors positive) it is bounded by
    q(n) = x * max(1, (n+u)/(n+v))^2 with u = max(a, b) and v = min(c, 1),
    since (m+a)(m+b) <= (m+u)^2 and (m+c)(m+1) >= (m+v)^2.  The bound
    decreases to x, so the geometric tail test always terminates for
    x < 1.
    """
    if x == 0.0:
        return 1.0, 1
    total = 1.0
    term = 1.0
    n = 0
    chunk = 64
    u = max(a, b)
    v = min(c, 1.0)
    n_burn = int(max(abs(a), abs(b), abs(c), 1.0)) + 2

    while n < settings.term_cap:
        k = min(chunk, settings.term_cap - n)
        chunk = min(2 * chunk, _CHUNK)
        idx = n + np.arange(k, dtype=float)
        # grouped (.. + a) * (.. + b) first so that swapping a and b
        # reproduces the result bit for bit
        ratios = (idx + a) * (idx + b) / ((idx + c) * (idx + 1.0)) * x
        terms = term * np.cumprod(ratios)
        total += float(terms.sum())
        term = float(terms[-1])
        n += k
        if term == 0.0:
            # a Pochhammer factor hit zero: the series terminates here
            return total, n
        if n < n_burn:
            continue
        growth = (n + u) / (n + v)
        q = x * growth * growth if growth > 1.0 else x
        if q < 1.0:
            tail = abs(term) * q / (1.0 - q)
            if tail <= settings.rel_tol * max(abs(total), 1e-12):
                return total, n

    tail = abs(term) * x / max(1.0 - x, 1e-300)
    raise ConvergenceError(
        f"hypergeometric series did not converge within {settings.term_cap} terms "
        f"(a={a}, b={b}, c={c}, x={x})",
        partial=total,
        error_estimate=tail,
        iterations=n,
    )


def _terminates(a: float, b: float) -> bool:
    return any(v <= 0.0 and v == int(v) for v in (a, b))


def hyp2f1_detailed(params, x: float, settings: SeriesSettings | None = None) -> Hyp2F1Result:
    """Evaluate F(a, b; c; x) on [0, 1), reporting terms used and transform.

    The Euler transform F(a,b;c;x) = (1-x)^(c-a-b) F(c-a, c-b; c; x) is
    applied whenever (c-a) + (c-b) < a + b, i.e. whenever the transformed
    series has the faster-decaying coefficients.  A series that terminates
    (a or b a non-positive integer) is always summed raw: it is a finite
    polynomial, and rewriting it through the transform trades an exact sum
    for a cancellation-prone one.
    """
    a, b, c = _unpack_params(params)
    x = _validate_x(x)
    st = settings or DEFAULT_SERIES_SETTINGS
    if not _terminates(a, b) and (c - a) + (c - b) < a + b:
        value, terms = _series_sum(c - a, c - b, c, x, st)
        return Hyp2F1Result((1.0 - x) ** (c - a - b) * value, terms, "euler")
    value, terms = _series_sum(a, b, c, x, st)
    return Hyp2F1Result(value, terms, "none")


def hyp2f1(params, x: float, settings: SeriesSettings | None = None) -> float:
    """Gauss hypergeometric function F(a, b; c; x) for 0 <= x < 1."""
    return hyp2f1_detailed(params, x, settings).value


def euler_transform_eval(params, x: float, settings: SeriesSettings | None = None) -> float:
    """Right-hand side of the Euler transform, summed as a raw series.

    Returns (1-x)^(c-a-b) * F(c-a, c-b; c; x) without re-applying any
    transform, so the identity with hyp2f1 can be tested as two genuinely
    different evaluation routes.
    """
    a, b, c = _unpack_params(params)
    x = _validate_x(x)
    st = settings or DEFAULT_SERIES_SETTINGS
    value, _ = _series_sum(c - a, c - b, c, x, st)
    return (1.0 - x) ** (c - a - b) * value


def quadratic_transform_eval(a: float, c: float, x: float,
                             settings: SeriesSettings | None = None) -> float:
    """Argument-halving evaluation of F(a, a + 1/2; c; x).

    Computes ((1 + sqrt(1-x))/2)^(-2a) * F(2a, 2a-c+1; c; y) with
    y = (1 - sqrt(1-x)) / (1 + sqrt(1-x)), again as a raw series.
    """
    _validate_c(float(c))
    x = _validate_x(x)
    st = settings or DEFAULT_SERIES_SETTINGS
    s = math.sqrt(1.0 - x)
    y = (1.0 - s) / (1.0 + s)
    value, _ = _series_sum(2.0 * a, 2.0 * a - c + 1.0, c, y, st)
    return ((1.0 + s) / 2.0) ** (-2.0 * a) * value


def hyp2f1_at_one(params) -> float:
    """Limit of F(a, b; c; x) as x -> 1-, requiring c - a - b > 0.

    Evaluated as Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).  Only
    parameter triples with c - a and c - b positive are supported; every
    bound in this package satisfies that.
    """
    a, b, c = _unpack_params(params)
    s = c - a - b
    if not s > 0:
        raise DomainError(f"limit diverges: c - a - b = {s!r} <= 0")
    if not (c > 0 and c - a > 0 and c - b > 0):
        raise DomainError(
            "parameter triple outside the supported range (needs c, c-a, c-b > 0)"
        )
    return math.exp(
        math.lgamma(c) + math.lgamma(s) - math.lgamma(c - a) - math.lgamma(c - b)
    )


def c_alpha(alpha) -> float:
    """Normalization constant Gamma(alpha/2 + 1)^2 / Gamma(alpha + 1).

    Its reciprocal equals 2^alpha Gamma(1/2 + alpha/2) / (sqrt(pi)
    Gamma(1 + alpha/2)) by the duplication formula.
    """
    a = alpha_value(alpha)
    if a <= 170.0:
        return math.gamma(a / 2.0 + 1.0) ** 2 / math.gamma(a + 1.0)
    return math.exp(2.0 * math.lgamma(a / 2.0 + 1.0) - math.lgamma(a + 1.0))
