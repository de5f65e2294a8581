"""Regularized incomplete gamma functions.

Power series below x = a + 1, modified Lentz continued fraction above it.
"""
from __future__ import annotations

import math
from warnings import warn

from shrinkm.base import DomainError

_EPS = 1e-15
_MAX_TERMS = 500
_TINY = 1e-300


def _check_domain(a: float, x: float) -> None:
    if not a > 0:
        raise DomainError(f"Incomplete gamma requires a > 0: a={a}")
    if not x >= 0:
        raise DomainError(f"Incomplete gamma requires x >= 0: x={x}")


def _log_prefactor(a: float, x: float) -> float:
    return a * math.log(x) - x - math.lgamma(a)


def _lower_series(a: float, x: float) -> float:
    ap = a
    term = total = 1.0 / a
    for _ in range(_MAX_TERMS):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * _EPS:
            break
    else:
        warn(f"Incomplete gamma series did not converge: a={a}, x={x}")
    return min(1.0, total * math.exp(_log_prefactor(a, x)))


def _upper_fraction(a: float, x: float) -> float:
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_TERMS + 1):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    else:
        warn(f"Incomplete gamma fraction did not converge: a={a}, x={x}")
    return min(1.0, h * math.exp(_log_prefactor(a, x)))


def reg_lower_gamma(a: float, x: float) -> float:
    """P(a, x) = γ(a, x) / Γ(a).

    Raises:
        DomainError: If a <= 0 or x < 0.
    """
    _check_domain(a, x)
    if x == 0:
        return 0.0
    if math.isinf(x):
        return 1.0
    if x < a + 1.0:
        return _lower_series(a, x)
    return 1.0 - _upper_fraction(a, x)


def reg_upper_gamma(a: float, x: float) -> float:
    """Q(a, x) = 1 − P(a, x), accurate in the far right tail."""
    _check_domain(a, x)
    if x == 0:
        return 1.0
    if math.isinf(x):
        return 0.0
    if x < a + 1.0:
        return 1.0 - _lower_series(a, x)
    return _upper_fraction(a, x)
