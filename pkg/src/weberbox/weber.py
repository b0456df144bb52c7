"""Even/odd power series of the harmonic equation and the decaying solution.

On y >= 0 the equation psi'' + (E - y**2/4) psi = 0 is solved by

    psi(y) = exp(-y**2/4) * (a0 * S_even(y) + a1 * S_odd(y))

with a_{n+2} = a_n (n - E + 1/2) / ((n+1)(n+2)).  Both series grow like
exp(y**2/2); only one ratio a1/a0 (``a_star``) makes psi decay.  The pair
is normalised here as a0 = 1/Gamma(3/4 - E/2), a1 = -sqrt(2)/Gamma(1/4 - E/2),
which stays finite at every energy.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .special import is_pole, log_abs_gamma, reciprocal_gamma

log = logging.getLogger(__name__)

SQRT2 = math.sqrt(2.0)
SQRT_PI = math.sqrt(math.pi)

INFINITE = math.inf  # projective marker returned by a_star when a0 == 0


class PrecisionLossError(ArithmeticError):
    """The series cancellation would eat more digits than allowed."""


class WeberPair(NamedTuple):
    a0: float
    a1: float

    @property
    def ratio(self) -> float:
        """a1/a0, or ``INFINITE`` when a0 vanishes."""
        if self.a0 == 0.0:
            return INFINITE
        return self.a1 / self.a0


@dataclass(frozen=True)
class SeriesPolicy:
    """Truncation and switching rules for :func:`eval_decaying`."""

    rel_tol: float = 1e-16
    consecutive: int = 3
    max_terms: int = 20_000
    y_switch: float = 6.0
    # digits of cancellation tolerated inside y_switch
    precision_budget: float = 12.0
    # beyond y_switch, multiply the leading form by its asymptotic correction series
    asymptotic_corrections: bool = True


DEFAULT_POLICY = SeriesPolicy()


@dataclass
class SeriesCoefficients:
    energy: float
    even: list[float] = field(default_factory=list)
    odd: list[float] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.even)


def _check_energy(energy: float) -> float:
    energy = float(energy)
    if not math.isfinite(energy):
        raise ValueError(f"energy must be finite, got {energy!r}")
    return energy


def recurrence_step(a_n: float, n: int, energy: float) -> float:
    """a_{n+2} from a_n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return a_n * (n - energy + 0.5) / ((n + 1) * (n + 2))


def series_coefficients(energy: float, count: int, a0: float = 1.0, a1: float = 1.0) -> SeriesCoefficients:
    """First ``count`` even and odd coefficients by iterating the recurrence."""
    energy = _check_energy(energy)
    out = SeriesCoefficients(energy)
    ae, ao = a0, a1
    for n in range(count):
        out.even.append(ae)
        out.odd.append(ao)
        ae = recurrence_step(ae, 2 * n, energy)
        ao = recurrence_step(ao, 2 * n + 1, energy)
    return out


def _closed(n: int, energy: float, seed: float, shift: float, half: float) -> float:
    # seed / (2^n n!) * Gamma(half)/Gamma(q) * Gamma(q+n)/Gamma(half+n),  q = shift - E/2
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0 or seed == 0.0:
        return seed
    q = shift - energy / 2.0
    if is_pole(q):
        log.debug("Gamma(%g) pole: closed form is 0/0, using the recurrence", q)
        a = seed
        start = 0 if half == 0.5 else 1
        for k in range(n):
            a = recurrence_step(a, 2 * k + start, energy)
        return a
    if is_pole(q + n):
        return 0.0
    lg_qn, s_qn = log_abs_gamma(q + n)
    lg_q, s_q = log_abs_gamma(q)
    logmag = (
        math.log(abs(seed))
        - n * math.log(2.0)
        - math.lgamma(n + 1.0)
        + math.lgamma(half)
        - lg_q
        + lg_qn
        - math.lgamma(half + n)
    )
    return math.copysign(1.0, seed) * s_q * s_qn * math.exp(logmag)


def coeff_even_closed(n: int, energy: float, a0: float) -> float:
    """a_{2n} from the Gamma-function closed form."""
    return _closed(n, _check_energy(energy), a0, 0.25, 0.5)


def coeff_odd_closed(n: int, energy: float, a1: float) -> float:
    """a_{2n+1} from the Gamma-function closed form."""
    return _closed(n, _check_energy(energy), a1, 0.75, 1.5)


def weber_pair(energy: float) -> WeberPair:
    energy = _check_energy(energy)
    return WeberPair(
        reciprocal_gamma(0.75 - energy / 2.0),
        0.0 - SQRT2 * reciprocal_gamma(0.25 - energy / 2.0),
    )


def a_star(energy: float) -> float:
    """Ratio a1/a0 that cancels the growing parts of both series.

    Returns 0.0 at E = 2n + 1/2 and ``INFINITE`` at E = 2n + 3/2.
    """
    return weber_pair(energy).ratio


def asymptotic_exponents(energy: float, branch: str = "decaying") -> tuple[float, float]:
    """(beta, gamma) of psi ~ y**gamma * exp(beta y**2) for large y."""
    if branch == "decaying":
        return -0.25, energy - 0.5
    if branch == "growing":
        return 0.25, -energy - 0.5
    raise ValueError(f"unknown branch {branch!r}")


def series_asymptotic_prefactors(energy: float) -> tuple[float, float]:
    """Constants multiplying (y**2/2)**(-E/2-1/4) exp(y**2/2) in S_even and S_odd.

    A terminating series has no growing part, so its prefactor is 0.
    """
    energy = _check_energy(energy)
    even = SQRT_PI * reciprocal_gamma(0.25 - energy / 2.0)
    odd = SQRT2 * (SQRT_PI / 2.0) * reciprocal_gamma(0.75 - energy / 2.0)
    return even, odd


def raw_series(energy: float, y: float, policy: SeriesPolicy = DEFAULT_POLICY) -> tuple[float, float]:
    """S_even(y) and S_odd(y) with a0 = a1 = 1 (no exponential factor)."""
    energy = _check_energy(energy)
    y2 = y * y
    te, to = 1.0, y
    even, odd = [te], [to]
    run = te + to
    quiet = 0
    for n in range(policy.max_terms):
        te *= y2 * (2 * n - energy + 0.5) / ((2 * n + 1) * (2 * n + 2))
        to *= y2 * (2 * n + 1 - energy + 0.5) / ((2 * n + 2) * (2 * n + 3))
        even.append(te)
        odd.append(to)
        run += abs(te) + abs(to)
        if 2 * n > y2 + abs(energy) + 2:
            if max(abs(te), abs(to)) < policy.rel_tol * (1.0 + run):
                quiet += 1
                if quiet >= policy.consecutive:
                    break
            else:
                quiet = 0
    else:
        raise ArithmeticError(f"series did not converge in {policy.max_terms} terms")
    return math.fsum(even), math.fsum(odd)


def _series_psi(energy: float, y: float, pair: WeberPair, policy: SeriesPolicy) -> tuple[float, float]:
    a0, a1 = pair
    if y == 0.0:
        return a0, a1
    y2 = y * y
    te, to = a0, a1 * y  # a_{2n} y^{2n}, a_{2n+1} y^{2n+1}
    terms = [te, to]
    dterms = [a1]  # d/dy of the polynomial part, term by term
    abs_sum = abs(te) + abs(to)
    run = te + to
    quiet = 0
    for n in range(policy.max_terms):
        te *= y2 * (2 * n - energy + 0.5) / ((2 * n + 1) * (2 * n + 2))
        to *= y2 * (2 * n + 1 - energy + 0.5) / ((2 * n + 2) * (2 * n + 3))
        terms.append(te)
        terms.append(to)
        dterms.append((2 * n + 2) * te / y)
        dterms.append((2 * n + 3) * to / y)
        abs_sum += abs(te) + abs(to)
        run += te + to
        if 2 * n > y2 + abs(energy) + 2:
            if max(abs(te), abs(to)) < policy.rel_tol * (1.0 + abs(run)):
                quiet += 1
                if quiet >= policy.consecutive:
                    break
            else:
                quiet = 0
    else:
        raise ArithmeticError(f"series did not converge in {policy.max_terms} terms")

    envelope = (abs(a0) + abs(a1)) * max(1.0, y) ** (energy - 0.5)
    if envelope > 0.0 and abs_sum > 0.0:
        lost = math.log10(abs_sum / envelope)
        if lost > policy.precision_budget:
            raise PrecisionLossError(
                f"cancellation at y={y:g} costs ~{lost:.1f} digits "
                f"(budget {policy.precision_budget:g}); lower y_switch"
            )
    poly = math.fsum(terms)
    dpoly = math.fsum(dterms)
    g = math.exp(-y2 / 4.0)
    return g * poly, g * (dpoly - 0.5 * y * poly)


def eval_decaying(energy: float, y: float, policy: SeriesPolicy = DEFAULT_POLICY) -> tuple[float, float]:
    """Decaying solution psi(y) and psi'(y) for y >= 0.

    Inside ``policy.y_switch`` the two series are summed exactly (fsum);
    beyond it the leading form C y**(E-1/2) exp(-y**2/4) is used with C
    fixed by continuity at the switch point, times its asymptotic correction
    series unless ``policy.asymptotic_corrections`` is off.
    """
    energy = _check_energy(energy)
    y = float(y)
    if not y >= 0.0:
        raise ValueError(f"y must be >= 0, got {y!r}")
    pair = weber_pair(energy)
    ys = policy.y_switch
    if y <= ys:
        return _series_psi(energy, y, pair, policy)
    psi_s, _ = _series_psi(energy, ys, pair, policy)
    nu = energy - 0.5
    use = policy.asymptotic_corrections
    f_s, _ = _asymptotic_factor(nu, ys) if use else (1.0, 0.0)
    f, df = _asymptotic_factor(nu, y) if use else (1.0, 0.0)
    lead = psi_s / f_s * math.exp(nu * math.log(y / ys) - (y * y - ys * ys) / 4.0)
    psi = lead * f
    return psi, psi * (nu / y - 0.5 * y) + lead * df


def _asymptotic_factor(nu: float, y: float) -> tuple[float, float]:
    """1 - nu(nu-1)/(2y^2) + nu(nu-1)(nu-2)(nu-3)/(8y^4) - ..., cut at its smallest term.

    Returns the factor and its y-derivative.
    """
    t, total, dtotal = 1.0, 1.0, 0.0
    inv = 1.0 / (y * y)
    for k in range(40):
        nxt = -t * (nu - 2 * k) * (nu - 2 * k - 1) * inv / (2 * (k + 1))
        if nxt == 0.0 or abs(nxt) >= abs(t):
            break
        t = nxt
        total += t
        dtotal += -2.0 * (k + 1) * t / y
        if abs(t) < 1e-17 * abs(total):
            break
    return total, dtotal
