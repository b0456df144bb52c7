"""Power series of the hydrogen radial function psi = rho**(L+1) exp(-rho) F(rho).

F(rho) = sum c_n rho**n with
c_{n+1} = c_n (-xi + 2L + 2 + 2n) / ((n+1)(2L + 2 + n)),
which terminates exactly when xi = 2(N + L + 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .special import is_pole, log_abs_gamma


@dataclass
class RadialSeries:
    L: int
    xi: float
    c0: float = 1.0
    c: list[float] = field(default_factory=list)


def _check(L: int, xi: float):
    if L < 0 or int(L) != L:
        raise ValueError("L must be a non-negative integer")
    if not math.isfinite(xi):
        raise ValueError("xi must be finite")


def is_terminating(L: int, xi: float) -> bool:
    """True when xi = 2(N + L + 1) for some integer N >= 0."""
    return is_pole(-xi / 2.0 + L + 1)


def radial_recurrence(c_n: float, n: int, L: int, xi: float) -> float:
    if n < 0:
        raise ValueError("n must be >= 0")
    _check(L, xi)
    return c_n * (-xi + 2 * L + 2 + 2 * n) / ((n + 1) * (2 * L + 2 + n))


def radial_series(L: int, xi: float, count: int, c0: float = 1.0) -> RadialSeries:
    out = RadialSeries(L, xi, c0)
    c = c0
    for n in range(count):
        out.c.append(c)
        c = radial_recurrence(c, n, L, xi)
    return out


def radial_log_coeff(n: int, L: int, xi: float, c0: float = 1.0) -> tuple[float, float]:
    """(log|c_n|, sign c_n) from the closed form; usable where c_n underflows.

    A vanishing coefficient comes back as (-inf, 0.0).
    """
    _check(L, xi)
    if n < 0:
        raise ValueError("n must be >= 0")
    if c0 == 0.0:
        return -math.inf, 0.0
    if n == 0:
        return math.log(abs(c0)), math.copysign(1.0, c0)
    b = -xi / 2.0 + L + 1
    if is_pole(b):
        # Gamma(b+n)/Gamma(b) is 0/0 here; the recurrence gives the finite value
        c = c0
        for k in range(n):
            c = radial_recurrence(c, k, L, xi)
        return (math.log(abs(c)), math.copysign(1.0, c)) if c != 0.0 else (-math.inf, 0.0)
    if is_pole(b + n):
        return -math.inf, 0.0
    lg_bn, s_bn = log_abs_gamma(b + n)
    lg_b, s_b = log_abs_gamma(b)
    logmag = (
        math.log(abs(c0))
        + n * math.log(2.0)
        - math.lgamma(n + 1.0)
        + math.lgamma(2 * L + 2.0)
        - lg_b
        + lg_bn
        - math.lgamma(2 * L + n + 2.0)
    )
    return logmag, math.copysign(1.0, c0) * s_b * s_bn


def radial_coeff_closed(n: int, L: int, xi: float, c0: float = 1.0) -> float:
    """c_n = c0 2**n/n! Gamma(2L+2)/Gamma(b) Gamma(b+n)/Gamma(2L+n+2), b = L+1-xi/2."""
    if n == 0:
        _check(L, xi)
        return c0
    logmag, sign = radial_log_coeff(n, L, xi, c0)
    return sign * math.exp(logmag) if sign else 0.0


def asymptotic_prefactor(L: int, xi: float) -> float:
    """Gamma(2L+2)/Gamma(L+1-xi/2): the constant carried by c_n at large n."""
    lg, s = log_abs_gamma(-xi / 2.0 + L + 1)
    return s * math.exp(math.lgamma(2 * L + 2.0) - lg)


@dataclass(frozen=True)
class RadialAsymptotic:
    rho: float
    series_value: float
    predicted: float
    ratio: float
    log_series: float
    log_predicted: float


def _log_series(rho: float, L: int, xi: float, c0: float) -> tuple[float, float]:
    """(log|F(rho)|, sign F(rho)) summed in log space."""
    n_max = int(2 * rho + 40 * math.sqrt(2 * rho) + 100)
    lr = math.log(rho)
    logs, signs = [], []
    lc, sc = math.log(abs(c0)), math.copysign(1.0, c0)
    for n in range(n_max + 1):
        logs.append(lc + n * lr)
        signs.append(sc)
        f = (-xi + 2 * L + 2 + 2 * n) / ((n + 1) * (2 * L + 2 + n))
        if f == 0.0:
            break
        lc += math.log(abs(f))
        sc *= math.copysign(1.0, f)
    top = max(logs)
    s = math.fsum(sg * math.exp(lg - top) for lg, sg in zip(logs, signs))
    if s == 0.0:
        return -math.inf, 0.0
    return top + math.log(abs(s)), math.copysign(1.0, s)


def radial_asymptotic(rho: float, L: int, xi: float, c0: float = 1.0, with_prefactor: bool = False) -> RadialAsymptotic:
    """Compare F(rho) with the large-rho law c0 exp(2 rho) (2 rho)**(-xi/2-L-1).

    ``with_prefactor`` multiplies the law by Gamma(2L+2)/Gamma(L+1-xi/2),
    the constant the coefficients actually carry at large n; without it the
    ratio settles at that constant rather than at 1.
    """
    _check(L, xi)
    if not rho >= 1:
        raise ValueError("rho must be >= 1")
    if is_terminating(L, xi):
        raise ValueError(f"xi={xi} terminates the series; no exponential growth to compare")
    log_f, sign = _log_series(rho, L, xi, c0)
    log_pred = math.log(abs(c0)) + 2 * rho + (-xi / 2.0 - L - 1) * math.log(2 * rho)
    pred_sign = math.copysign(1.0, c0)
    if with_prefactor:
        pre = asymptotic_prefactor(L, xi)
        log_pred += math.log(abs(pre))
        pred_sign *= math.copysign(1.0, pre)
    ratio = sign * pred_sign * math.exp(log_f - log_pred)
    series_value = sign * (math.exp(log_f) if log_f < 709 else math.inf)
    predicted = pred_sign * (math.exp(log_pred) if log_pred < 709 else math.inf)
    return RadialAsymptotic(rho, series_value, predicted, ratio, log_f, log_pred)


def log_radial_wavefunction(rho: float, L: int, xi: float, c0: float = 1.0) -> float:
    """log|psi(rho)| for psi = rho**(L+1) exp(-rho) F(rho)."""
    log_f, _ = _log_series(rho, L, xi, c0)
    return (L + 1) * math.log(rho) - rho + log_f


def quantization_check(L: int, N: int) -> float:
    """xi = 2(N + L + 1); verifies that the recurrence gives c_{N+1} = 0."""
    if L < 0 or N < 0:
        raise ValueError("L and N must be >= 0")
    xi = 2.0 * (N + L + 1)
    c = 1.0
    for n in range(N + 1):
        if c == 0.0:
            raise AssertionError(f"c_{n} vanished before c_{N + 1}")
        c = radial_recurrence(c, n, L, xi)
    if c != 0.0:
        raise AssertionError(f"c_{N + 1} = {c!r} at xi = {xi}")
    return xi
