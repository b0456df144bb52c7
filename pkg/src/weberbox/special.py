"""Real-argument Gamma-family functions.

Thin layer over :mod:`math` with explicit pole handling, a pole-free
reciprocal Gamma and a signed log-Gamma for log-space coefficient work.
"""

from __future__ import annotations

import math

__all__ = [
    "GammaPoleError",
    "gamma",
    "reciprocal_gamma",
    "log_abs_gamma",
    "log_stirling_gamma",
    "stirling_gamma",
    "gamma_ratio_large_n",
    "sinpi",
    "is_pole",
]

_LOG_PI = math.log(math.pi)


class GammaPoleError(ValueError):
    """Raised when Gamma is evaluated at a non-positive integer."""


def _check_finite(x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"argument must be finite, got {x!r}")
    return x


def is_pole(x: float) -> bool:
    return x <= 0 and x == math.floor(x)


def sinpi(x: float) -> float:
    """sin(pi*x) with exact zeros at the integers."""
    x = math.fmod(x, 2.0)  # exact
    if x < 0:
        x += 2.0
    # reduce to [0, 0.5] using symmetries; every step below is exact
    sign = 1.0
    if x >= 1.0:
        x -= 1.0
        sign = -1.0
    if x > 0.5:
        x = 1.0 - x
    if x == 0.0:
        return 0.0
    return sign * math.sin(math.pi * x)


def gamma(x: float) -> float:
    """Gamma function on the real line.

    Raises :class:`GammaPoleError` at 0, -1, -2, ... and ``ValueError``
    for NaN or infinite input.
    """
    x = _check_finite(x)
    if is_pole(x):
        raise GammaPoleError(f"Gamma has a pole at {x!r}")
    return math.gamma(x)


def reciprocal_gamma(x: float) -> float:
    """1/Gamma(x), an entire function: exactly 0 at the poles of Gamma."""
    x = _check_finite(x)
    if x >= 0.5:
        if x > 171.0:
            return math.exp(-math.lgamma(x))
        return 1.0 / math.gamma(x)
    # reflection: 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
    s = sinpi(x)
    if s == 0.0:
        return 0.0
    if 1.0 - x > 171.0:
        mag = math.exp(math.log(abs(s)) + math.lgamma(1.0 - x) - _LOG_PI)
        return math.copysign(mag, s)
    return s * math.gamma(1.0 - x) / math.pi


def log_abs_gamma(x: float) -> tuple[float, float]:
    """Return ``(log|Gamma(x)|, sign(Gamma(x)))``."""
    x = _check_finite(x)
    if is_pole(x):
        raise GammaPoleError(f"Gamma has a pole at {x!r}")
    if x > 0:
        return math.lgamma(x), 1.0
    sign = 1.0 if int(math.floor(x)) % 2 == 0 else -1.0
    return math.lgamma(x), sign


def log_stirling_gamma(x: float) -> float:
    """log of x**x * exp(-x) * sqrt(2 pi x), the Stirling estimate of Gamma(x+1)."""
    x = _check_finite(x)
    if x <= 0:
        raise ValueError(f"Stirling approximation needs x > 0, got {x!r}")
    return x * math.log(x) - x + 0.5 * math.log(2.0 * math.pi * x)


def stirling_gamma(x: float, log: bool = False) -> float:
    """Stirling's approximation to Gamma(x+1).

    The estimate is formed in log space; pass ``log=True`` to get the
    logarithm directly when the value itself would overflow a double
    (x beyond roughly 143).
    """
    lv = log_stirling_gamma(x)
    if log:
        return lv
    return math.exp(lv)


def gamma_ratio_large_n(n: float, b: float, c: float) -> float:
    """Large-n estimate Gamma(n+b)/Gamma(n+c) ~ n**(b-c). Approximate only."""
    n, b, c = _check_finite(n), _check_finite(b), _check_finite(c)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n!r}")
    return n ** (b - c)
