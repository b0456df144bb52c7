"""Bound states of the bathtub: flat bottom on |z| < l, harmonic walls outside.

Inside, psi is cos(k z) or sin(k z) with k = sqrt(E).  Outside, psi is the
decaying harmonic solution, whose value and slope at the wall are a0 and a1
of :func:`weberbox.weber.weber_pair`.  Matching at z = l gives

    even:  a0 k sin(k l) + a1 cos(k l) = 0
    odd:   a0 k cos(k l) - a1 sin(k l) = 0

both free of the tan/cot and Gamma poles.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson
from scipy.optimize import brentq

from .potentials import PiecewisePotential
from .weber import DEFAULT_POLICY, SeriesPolicy, eval_decaying, weber_pair


class EigenSolverError(RuntimeError):
    pass


class BracketMissError(EigenSolverError):
    pass


class MatchingError(EigenSolverError):
    pass


@dataclass(frozen=True)
class Eigenstate:
    n: int
    parity: str
    energy: float
    constants: tuple[float, float, float, float]  # A, B, C, F
    l: float
    nodes: int


@dataclass
class SampledWavefunction:
    grid: np.ndarray
    values: np.ndarray
    norm: float


def root_fn_even(energy: float, l: float) -> float:
    k = math.sqrt(energy)
    a0, a1 = weber_pair(energy)
    return a0 * k * math.sin(k * l) + a1 * math.cos(k * l)


def root_fn_odd(energy: float, l: float) -> float:
    k = math.sqrt(energy)
    a0, a1 = weber_pair(energy)
    return a0 * k * math.cos(k * l) - a1 * math.sin(k * l)



def matching_constants(energy: float, l: float, parity: str) -> tuple[float, float, float, float]:
    """(A, B, C, F) with unit interior amplitude, before normalisation."""
    k = math.sqrt(energy)
    a0, a1 = weber_pair(energy)
    if parity == "even":
        val, slope = math.cos(k * l), -k * math.sin(k * l)
    else:
        val, slope = math.sin(k * l), k * math.cos(k * l)
    # match on whichever of value/slope is better conditioned
    f = val / a0 if abs(a0) >= abs(a1) else slope / a1
    if parity == "even":
        return f, 1.0, 0.0, f
    return -f, 0.0, 1.0, f


def _sign_changes(values) -> int:
    v = np.asarray(values, dtype=float)
    scale = np.max(np.abs(v)) if v.size else 0.0
    v = v[np.abs(v) > 1e-12 * scale]
    return int(np.count_nonzero(np.signbit(v[1:]) != np.signbit(v[:-1])))


def count_nodes(energy: float, l: float, parity: str, policy: SeriesPolicy = DEFAULT_POLICY) -> int:
    """Interior zeros of the assembled state, from its sign pattern on z >= 0."""
    k = math.sqrt(energy)
    _, b, c, f = matching_constants(energy, l, parity)
    z_in = np.linspace(0.0, l, max(2, int(math.ceil(l / 0.02)) + 1))
    inner = b * np.cos(k * z_in) + c * np.sin(k * z_in)
    ys = np.linspace(0.0, policy.y_switch, int(policy.y_switch / 0.02) + 1)[1:]
    outer = [f * eval_decaying(energy, y, policy)[0] for y in ys]
    seq = np.concatenate((inner[1:] if parity == "odd" else inner, outer))
    half = _sign_changes(seq)
    return 2 * half + (1 if parity == "odd" else 0)


def _grid(n_max: int, step: float, e_max: float):
    n = int(round(e_max / step))
    return np.concatenate(([step * 1e-3], step * np.arange(1, n + 1)))


def _roots(fn, l: float, energies) -> list[float]:
    vals = [fn(e, l) for e in energies]
    roots = []
    for i in range(len(energies)):
        if vals[i] == 0.0:
            roots.append(float(energies[i]))
            continue
        # compare signs, not the product: near l = 0 the values can be subnormal
        if i + 1 < len(energies) and vals[i + 1] != 0.0 and (vals[i] < 0) != (vals[i + 1] < 0):
            roots.append(brentq(fn, energies[i], energies[i + 1], args=(l,), xtol=1e-13, rtol=1e-15))
    return roots


def eigenvalues(l: float, n_max: int, step: float = 0.02, check_nodes: bool = True) -> list[Eigenstate]:
    """The n_max+1 lowest bathtub states, parities alternating from even."""
    if not (math.isfinite(l) and l >= 0):
        raise ValueError(f"l must be finite and >= 0, got {l!r}")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    e_max = n_max + 2.0
    # same-parity levels at the bottom are ~ 2 pi^2/(l + 2)^2 apart for wide tubs;
    # keep the grid at half that (only bites for l > 20)
    step = min(step, math.pi**2 / (l + 2.0) ** 2)
    for attempt in range(2):
        energies = _grid(n_max, step, e_max)
        found = sorted(
            [(e, "even") for e in _roots(root_fn_even, l, energies)]
            + [(e, "odd") for e in _roots(root_fn_odd, l, energies)]
        )
        parities_ok = all(p == ("even" if i % 2 == 0 else "odd") for i, (_, p) in enumerate(found))
        if len(found) >= n_max + 1 and parities_ok:
            break
        # extend the range and refine the grid once
        e_max *= 2.0
        step /= 4.0
    else:
        raise BracketMissError(
            f"l={l}: found {len(found)} roots below E={e_max / 2}, wanted {n_max + 1} with alternating parity"
        )

    states = []
    for n, (e, parity) in enumerate(found[: n_max + 1]):
        nodes = count_nodes(e, l, parity) if check_nodes else n
        if nodes != n:
            raise EigenSolverError(f"l={l}: state {n} at E={e:.12g} has {nodes} nodes")
        states.append(Eigenstate(n, parity, e, matching_constants(e, l, parity), l, nodes))
    return states


def eigenstate(l: float, n: int) -> Eigenstate:
    return eigenvalues(l, n)[n]


def assemble_wavefunction(
    state: Eigenstate,
    z_min: float,
    z_max: float,
    h: float,
    policy: SeriesPolicy = DEFAULT_POLICY,
    max_norm: bool = False,
) -> SampledWavefunction:
    """Sample psi(z) on a uniform grid through z = 0, L2-normalised.

    With ``max_norm`` the samples are rescaled to a maximum |psi| of 1
    instead (``norm`` still reports the L2 integral of the output).
    """
    if not h > 0:
        raise ValueError("h must be positive")
    e, l = state.energy, state.l
    k = math.sqrt(e)
    a_, b, c, f = state.constants
    i_lo, i_hi = int(math.ceil(z_min / h - 1e-9)), int(math.floor(z_max / h + 1e-9))
    idx = np.arange(i_lo, i_hi + 1)
    z = idx * h

    # evaluate on |z| once, then mirror with the parity sign
    mags = np.unique(np.abs(idx))
    az = mags * h
    vals = np.empty(az.shape)
    inside = az <= l
    vals[inside] = b * np.cos(k * az[inside]) + c * np.sin(k * az[inside])
    for j in np.flatnonzero(~inside):
        vals[j] = f * eval_decaying(e, az[j] - l, policy)[0]
    lookup = dict(zip(mags.tolist(), vals.tolist()))
    sign = -1.0 if state.parity == "odd" else 1.0
    psi = np.array([lookup[abs(i)] * (sign if i < 0 else 1.0) for i in idx.tolist()])

    # continuity of psi and psi' at the wall
    psi_in, dpsi_in = b * math.cos(k * l) + c * math.sin(k * l), k * (c * math.cos(k * l) - b * math.sin(k * l))
    psi_out, dpsi_out = (f * v for v in eval_decaying(e, 0.0, policy))
    peak = max(np.max(np.abs(psi)), abs(psi_in), 1e-300)
    jump = max(abs(psi_in - psi_out), abs(dpsi_in - dpsi_out))
    if jump > 1e-8 * peak:
        raise MatchingError(f"matching residual {jump:.3g} exceeds 1e-8 of max |psi| = {peak:.3g}")

    norm = simpson(psi * psi, x=z)
    if max_norm:
        psi = psi / np.max(np.abs(psi))
    else:
        psi = psi / math.sqrt(norm)
    return SampledWavefunction(z, psi, float(simpson(psi * psi, x=z)))


def _threads() -> int | None:
    n = int(os.environ.get("WEBERBOX_THREADS", "0") or 0)
    return None if n <= 0 else n


def spectrum_sweep(l_values, n_max: int) -> list[tuple[float, int, str, float, float]]:
    """Rows (l, n, parity, E_n, E_n/E_0) in the order of ``l_values``."""
    l_values = [float(v) for v in l_values]
    if any(b < a for a, b in zip(l_values, l_values[1:])):
        raise ValueError("l_values must be sorted ascending")
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        results = list(pool.map(lambda l: eigenvalues(l, n_max), l_values))
    rows = []
    for l, states in zip(l_values, results):
        e0 = states[0].energy
        rows.extend((l, s.n, s.parity, s.energy, s.energy / e0) for s in states)
    return rows


__all__ = [
    "Eigenstate",
    "SampledWavefunction",
    "PiecewisePotential",
    "root_fn_even",
    "root_fn_odd",
    "eigenvalues",
    "eigenstate",
    "assemble_wavefunction",
    "spectrum_sweep",
    "count_nodes",
    "matching_constants",
]
