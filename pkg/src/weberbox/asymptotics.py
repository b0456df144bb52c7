"""Large-omega behaviour of S(omega) = sum_{n>=1} n**(-r) omega**n / n!.

S(omega) ~ omega**(-r) exp(omega).  Everything here is summed in log space
(terms span exp(+-omega)) and accumulated exactly with :func:`math.fsum`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

MAX_TERMS = 1_000_000


@dataclass(frozen=True)
class AsymptoticReport:
    omega: float
    r: float
    normalized_ratio: float  # omega**r exp(-omega) S(omega)
    terms_used: int


@dataclass(frozen=True)
class PartialSumSpec:
    """Summation range n1..n2 of T(omega, n1, n2); n2 = None means infinity."""

    n1: int = 1
    n2: int | None = None

    def __post_init__(self):
        if self.n1 < 1:
            raise ValueError("n1 must be >= 1")
        if self.n2 is not None and self.n2 < self.n1:
            raise ValueError("n2 must be >= n1")


@dataclass(frozen=True)
class SandwichRecord:
    omega: float
    r: float
    lam: float
    sigma: float
    total: float  # T(omega, 1, inf)
    lower: float
    upper: float
    head_vanishes: float
    tail_vanishes: float


class CoefficientPeak(NamedTuple):
    exact: float
    gaussian: float
    log_exact: float
    log_gaussian: float


def _safe_exp(x: float) -> float:
    return math.exp(x) if x < 709.0 else math.inf


def infinity_cutoff(omega: float) -> int:
    """Upper index standing in for infinity: peak plus 40 widths."""
    return int(math.ceil(omega + 40.0 * math.sqrt(omega))) + 1


def coefficient_peak(omega: float, n: int) -> CoefficientPeak:
    """omega**n/n! and its Gaussian approximation about n = omega.

    Values that would overflow come back as ``inf``; the log fields are
    always finite.
    """
    if not omega > 0 or n < 0:
        raise ValueError("need omega > 0 and n >= 0")
    log_exact = n * math.log(omega) - math.lgamma(n + 1.0)
    log_gauss = omega - 0.5 * math.log(2.0 * math.pi * omega) - (n - omega) ** 2 / (2.0 * omega)
    return CoefficientPeak(_safe_exp(log_exact), _safe_exp(log_gauss), log_exact, log_gauss)


def _log_term(n: int, omega: float, r: float, log_omega: float) -> float:
    # log of exp(-omega) (omega/n)**r omega**n / n!
    return -omega + r * (log_omega - math.log(n)) + n * log_omega - math.lgamma(n + 1.0)


def _weighted_sum(omega: float, r: float, n1: int, n2: int) -> float:
    if n2 - n1 + 1 > MAX_TERMS:
        raise ArithmeticError(f"summation range exceeds {MAX_TERMS} terms")
    lw = math.log(omega)
    return math.fsum(math.exp(_log_term(n, omega, r, lw)) for n in range(n1, n2 + 1))


def partial_sum_t(omega: float, r: float, spec: PartialSumSpec = PartialSumSpec()) -> float:
    """T(omega, n1, n2) = exp(-omega) sum_{n1}^{n2} (omega/n)**r omega**n / n!."""
    if not omega > 0:
        raise ValueError("omega must be positive")
    n2 = spec.n2 if spec.n2 is not None else max(spec.n1, infinity_cutoff(omega))
    return _weighted_sum(omega, r, spec.n1, n2)


def series_s(omega: float, r: float) -> AsymptoticReport:
    """Normalised S(omega): omega**r exp(-omega) S(omega), which tends to 1."""
    if not omega > 0:
        raise ValueError("omega must be positive")
    lw = math.log(omega)
    terms = []
    n = 1
    cut = infinity_cutoff(omega)
    while True:
        t = math.exp(_log_term(n, omega, r, lw))
        terms.append(t)
        if n >= cut and n > omega:
            # remaining tail is bounded by a geometric series of ratio omega/(n+1)
            q = omega / (n + 1)
            if t * q / (1.0 - q) < 1e-18 * math.fsum(terms):
                break
        n += 1
        if n > MAX_TERMS:
            raise ArithmeticError(f"S({omega}) needs more than {MAX_TERMS} terms")
    return AsymptoticReport(omega, r, math.fsum(terms), len(terms))


def poisson_tail(omega: float, start: int) -> float:
    """exp(-omega) sum_{n >= start} omega**n / n!."""
    return partial_sum_t(omega, 0.0, PartialSumSpec(start, max(start, infinity_cutoff(omega))))


def sandwich_check(omega: float, r: float, lam: float, sigma: float) -> SandwichRecord:
    """Bounds of the form  lower <= T(omega, 1, inf) <= upper  at finite omega.

    head  = T(omega, 1, [lam omega])
    upper = head + (1/lam)**r
    lower = (omega/[sigma omega])**r exp(-omega) sum_1^{[sigma omega]} omega**n/n!
    tail  = exp(-omega) sum_{[sigma omega]+1}^inf omega**n/n!

    Only r > 0 is covered by these bounds.
    """
    if not r > 0:
        raise ValueError("sandwich bounds assume r > 0")
    if not 0 < lam < 1 < sigma:
        raise ValueError("need 0 < lambda < 1 < sigma")
    total = partial_sum_t(omega, r)
    n_lam = int(math.floor(lam * omega))
    n_sig = int(math.floor(sigma * omega))
    head = partial_sum_t(omega, r, PartialSumSpec(1, n_lam)) if n_lam >= 1 else 0.0
    upper = head + (1.0 / lam) ** r
    lower = (omega / n_sig) ** r * partial_sum_t(omega, 0.0, PartialSumSpec(1, n_sig))
    tail = poisson_tail(omega, n_sig + 1)
    if not lower <= total <= upper:
        raise AssertionError(f"sandwich violated at omega={omega}: {lower} <= {total} <= {upper}")
    return SandwichRecord(omega, r, lam, sigma, total, lower, upper, head, tail)
