"""Numerov shooting for 1-D and radial Schroedinger problems.

Independent of the series machinery: it only sees the potential.  Used as
the cross-check for the bathtub eigenvalues and as the only solver for the
piecewise Coulomb well.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from numba import njit
from scipy.optimize import brentq

from .potentials import CoulombPiecewise, PiecewisePotential

log = logging.getLogger(__name__)

DEFAULT_H = 1e-3


class ShootingError(RuntimeError):
    pass


@dataclass(frozen=True)
class GridSpec:
    z_start: float
    z_end: float
    h: float

    def __post_init__(self):
        if not self.h > 0:
            raise ValueError("step must be positive")
        span = (self.z_end - self.z_start) / self.h
        if abs(span - round(span)) > 1e-6 * max(1.0, span) or round(span) < 10:
            raise ValueError(f"grid span must be an integer >= 10 steps, got {span!r}")

    @property
    def n_steps(self) -> int:
        return int(round((self.z_end - self.z_start) / self.h))

    def points(self) -> np.ndarray:
        return self.z_start + self.h * np.arange(self.n_steps + 1)

    @classmethod
    def covering(cls, z_start: float, z_min_end: float, h: float) -> "GridSpec":
        """Grid from z_start with at least z_min_end as its last point."""
        n = max(10, math.ceil((z_min_end - z_start) / h - 1e-9))
        return cls(z_start, z_start + n * h, h)


@dataclass
class ShootResult:
    """``converged`` means |mismatch| < 1e-9 or a sign change within 1e-10 of ``energy``."""

    energy: float
    mismatch: float
    converged: bool


@njit(cache=True)
def _numerov_kernel(g, h, y0, y1, out):
    # y'' = g y on a uniform grid, in summed form: w = (1 - h^2 g/12) y,
    # w_{i+1} = 2 w_i - w_{i-1} + h^2 g_i y_i.  Far less round-off than the
    # textbook ratio form, whose rounded coefficient shifts the frequency.
    c = h * h / 12.0
    h2 = h * h
    n = g.shape[0]
    out[0] = y0
    out[1] = y1
    w0 = (1.0 - c * g[0]) * y0
    w1 = (1.0 - c * g[1]) * y1
    rescales = 0
    for i in range(1, n - 1):
        w2 = 2.0 * w1 - w0 + h2 * g[i] * out[i]
        out[i + 1] = w2 / (1.0 - c * g[i + 1])
        w0 = w1
        w1 = w2
        if abs(out[i + 1]) > 1e150:
            for j in range(i + 2):
                out[j] *= 1e-150
            w0 *= 1e-150
            w1 *= 1e-150
            rescales += 1
    return rescales


def integrate(potential, energy: float, grid: GridSpec, direction: str = "right", seed=(0.0, 1e-3)) -> np.ndarray:
    """Numerov values of psi'' = (V - E) psi on ``grid`` (ascending order).

    ``direction="right"`` starts from (psi(z_start), psi(z_start + h));
    ``"left"`` from (psi(z_end), psi(z_end - h)).  The result is linear in
    the seed, up to powers of 1e-150 applied when values get too large.
    """
    z = grid.points()
    g = np.asarray(potential(z), dtype=float) - energy
    out = np.empty_like(z)
    y0, y1 = float(seed[0]), float(seed[1])
    if y0 == 0.0 and y1 == 0.0:
        raise ValueError("seed must be nonzero")
    if direction == "right":
        n = _numerov_kernel(g, grid.h, y0, y1, out)
    elif direction == "left":
        n = _numerov_kernel(g[::-1].copy(), grid.h, y0, y1, out)
        out = out[::-1].copy()
    else:
        raise ValueError(f"direction must be 'left' or 'right', got {direction!r}")
    if n:
        log.debug("numerov: rescaled by 1e-150 %d time(s)", n)
    return out


def derivative(values: np.ndarray, g: np.ndarray, i: int, h: float) -> float:
    """Fourth-order psi'(z_i) from Numerov values and g = V - E."""
    c = h * h / 6.0
    return ((1.0 - c * g[i + 1]) * values[i + 1] - (1.0 - c * g[i - 1]) * values[i - 1]) / (2.0 * h)


def _angle_mismatch(psi, dpsi, which):
    norm = math.hypot(psi, dpsi)
    if norm == 0.0:
        return 0.0
    return (dpsi if which == "even" else psi) / norm


class SymmetricProblem:
    """Even potential, parity-resolved shooting from |z| large to z = 0."""

    def __init__(self, potential, parity: str, e_max: float, h: float = DEFAULT_H):
        if parity not in ("even", "odd"):
            raise ValueError("parity must be 'even' or 'odd'")
        self.potential = potential
        self.parity = parity
        self.h = h
        self.grid = GridSpec.covering(-h, potential.outer_extent(e_max), h)

    def solve(self, energy: float) -> np.ndarray:
        z = self.grid.points()
        seed = (1.0, math.exp(self.potential.log_decay(energy, z[-2]) - self.potential.log_decay(energy, z[-1])))
        return integrate(self.potential, energy, self.grid, "left", seed)

    def mismatch(self, energy: float) -> float:
        psi = self.solve(energy)
        z = self.grid.points()[:3]
        g = np.asarray(self.potential(z), dtype=float) - energy
        return _angle_mismatch(psi[1], derivative(psi[:3], g, 1, self.h), self.parity)


class RadialProblem:
    """Radial shooting: outward from the origin, inward from r_max, Wronskian match."""

    def __init__(self, potential: CoulombPiecewise, e_max: float, h: float = DEFAULT_H):
        if not e_max < 0:
            raise ValueError("radial bound states need e_max < 0")
        self.potential = potential
        self.h = h
        kappa = math.sqrt(-e_max)
        r_max = potential.turning_point(e_max) + 40.0 / kappa
        self.grid = GridSpec.covering(h, r_max, h)

    def mismatch(self, energy: float) -> float:
        pot, h = self.potential, self.h
        r = self.grid.points()
        m = int(round((min(pot.turning_point(energy), 0.5 * r[-1]) - r[0]) / h))
        m = min(max(m, 5), len(r) - 6)
        g = np.asarray(pot(r), dtype=float) - energy

        out = np.empty(m + 2)
        _numerov_kernel(g[: m + 2].copy(), h, pot.frobenius(energy, r[0]), pot.frobenius(energy, r[1]), out)
        inner = np.empty(len(r) - m + 1)
        tail = g[m - 1 :][::-1].copy()
        seed1 = math.exp(pot.log_decay(energy, r[-2]) - pot.log_decay(energy, r[-1]))
        _numerov_kernel(tail, h, 1.0, seed1, inner)
        inner = inner[::-1]

        uo, duo = out[m], derivative(out, g, m, h)
        gi = g[m - 1 : m + 2]
        ui, dui = inner[1], derivative(inner[:3], gi, 1, h)
        wr = duo * ui - dui * uo
        norm = math.hypot(uo, duo) * math.hypot(ui, dui)
        return wr / norm if norm else 0.0


def shoot_eigenvalue(problem, bracket: tuple[float, float], xtol: float = 1e-13) -> ShootResult:
    """Refine an eigenvalue inside ``bracket`` where the mismatch changes sign."""
    lo, hi = bracket
    f_lo, f_hi = problem.mismatch(lo), problem.mismatch(hi)
    if f_lo == 0.0:
        return ShootResult(lo, 0.0, True)
    if f_hi == 0.0:
        return ShootResult(hi, 0.0, True)
    if f_lo * f_hi > 0:
        raise ShootingError(f"no sign change of the mismatch on [{lo!r}, {hi!r}]")
    e, info = brentq(problem.mismatch, lo, hi, xtol=xtol, rtol=4 * np.finfo(float).eps, full_output=True)
    mis = problem.mismatch(e)
    ok = abs(mis) < 1e-9
    if not ok:
        # steep mismatch: accept if the root is pinned within 1e-10 either side
        d = 1e-10 * max(1.0, abs(e))
        ok = problem.mismatch(e - d) * problem.mismatch(e + d) <= 0.0
    return ShootResult(e, mis, info.converged and ok)


def _scan(problem, energies) -> list[tuple[float, float]]:
    vals = [problem.mismatch(e) for e in energies]
    brackets = []
    for i in range(len(energies) - 1):
        if vals[i] == 0.0:
            brackets.append((energies[i], energies[i]))
        elif vals[i + 1] != 0.0 and (vals[i] < 0) != (vals[i + 1] < 0):
            brackets.append((energies[i], energies[i + 1]))
    return brackets


def _refine(problem, bracket) -> float:
    if bracket[0] == bracket[1]:
        return bracket[0]
    res = shoot_eigenvalue(problem, bracket)
    if not res.converged:
        raise ShootingError(f"shooting did not converge near E={res.energy!r} (mismatch {res.mismatch:.3g})")
    return res.energy


def symmetric_levels(potential, n_max: int, h: float = DEFAULT_H, step: float = 0.02, e_max: float | None = None):
    """Lowest n_max+1 levels of an even potential, as (energy, parity) pairs."""
    if e_max is None:
        e_max = n_max + 2.0
    levels = []
    for parity in ("even", "odd"):
        prob = SymmetricProblem(potential, parity, e_max, h)
        energies = np.concatenate(([step * 1e-3], np.arange(1, int(round(e_max / step)) + 1) * step))
        for b in _scan(prob, energies):
            levels.append((_refine(prob, b), parity))
    levels.sort()
    if len(levels) < n_max + 1:
        raise ShootingError(f"found {len(levels)} levels below E={e_max}, wanted {n_max + 1}")
    return levels[: n_max + 1]


def bathtub_levels(l: float, n_max: int, h: float = DEFAULT_H) -> list[float]:
    """Numerov eigenvalues of the bathtub (flat bottom, harmonic walls)."""
    return [e for e, _ in symmetric_levels(PiecewisePotential(l), n_max, h)]


def coulomb_piecewise_levels(k: float, R: float, L: int, n_levels: int, h: float = DEFAULT_H, t_step: float = 0.05):
    """Lowest bound levels of the piecewise Coulomb well for angular momentum L.

    Energies are scanned on E = -k**2 / (4 t**2), uniform in t (an effective
    principal quantum number); pure-Coulomb levels sit at integer t = N + L + 1.
    """
    pot = CoulombPiecewise(k, R, L)
    t_max = L + n_levels + 1.5
    for _attempt in range(2):
        prob = RadialProblem(pot, -k * k / (4.0 * t_max**2), h)
        ts = np.arange(max(0.5, L + 0.5), t_max + 1e-12, t_step)
        energies = -k * k / (4.0 * ts**2)
        found = [_refine(prob, b) for b in _scan(prob, energies)]
        if len(found) >= n_levels:
            return sorted(found)[:n_levels]
        t_max += n_levels
    log.warning("only %d bound levels found for k=%g R=%g L=%d", len(found), k, R, L)
    return sorted(found)
