"""Acceptance checks shared by ``weberbox verify`` and the test suite.

Each check returns a :class:`CheckResult`; a check passes only if its
numerical condition holds *and* it finishes inside its time budget.
"""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.optimize import brentq

from . import asymptotics as asy
from . import bathtub, hydrogen, numerov, weber


@dataclass
class CheckResult:
    id: str
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0
    budget: float = math.inf
    data: dict = field(default_factory=dict)

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return f"[{flag}] {self.id:>4} {self.title} ({self.seconds:.2f}s/{self.budget:g}s): {self.detail}"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["budget"] = None if math.isinf(self.budget) else self.budget
        return d


_budget_scale = 1.0


def _timed(check_id, title, budget, fn):
    budget = budget * _budget_scale
    t0 = time.perf_counter()
    ok, detail, data = fn()
    dt = time.perf_counter() - t0
    if ok and dt > budget:
        ok, detail = False, f"{detail}; over time budget"
    return CheckResult(check_id, title, bool(ok), detail, dt, budget, data)


def harmonic_limit():
    def run():
        states = bathtub.eigenvalues(1e-6, 5)
        errs = [abs(s.energy - (s.n + 0.5)) for s in states]
        return max(errs) < 1e-4, f"max |E_n - (n+1/2)| = {max(errs):.2e} (< 1e-4)", {"errors": errs}

    return _timed("1", "harmonic limit at l=1e-6", 1.0, run)


def critical_width(h: float = 1e-3):
    def run():
        lc = brentq(lambda l: bathtub.eigenvalues(l, 2, check_nodes=False)[2].energy - 1.5, 0.5, 3.0, xtol=1e-12)
        state = bathtub.eigenvalues(lc, 2)[2]
        wf = bathtub.assemble_wavefunction(state, -(lc + 8.0), lc + 8.0, h)
        v = wf.values
        cross = np.flatnonzero(np.signbit(v[1:]) != np.signbit(v[:-1]))
        nodes = [0.5 * (wf.grid[i] + wf.grid[i + 1]) for i in cross]
        near = len(nodes) == 2 and all(min(abs(z - lc), abs(z + lc)) <= h for z in nodes)
        ok = abs(lc - 1.28) <= 0.01 and near
        return ok, f"l* = {lc:.6f} (1.28 +- 0.01), nodes at {[round(float(z), 4) for z in nodes]}", {"l": lc, "nodes": [float(z) for z in nodes]}

    return _timed("2", "E_2(l) = 3/2 crossing and wall nodes", 5.0, run)


def spectrum_shape(l_values=None):
    def run():
        ls = np.arange(0, 21) * 0.25 if l_values is None else np.asarray(l_values)
        table = np.array([[s.energy for s in bathtub.eigenvalues(float(l), 5)] for l in ls])
        decreasing = bool(np.all(np.diff(table, axis=0) < 0))
        ordered = bool(np.all(np.diff(table, axis=1) > 0))
        return decreasing and ordered, f"strictly decreasing in l: {decreasing}; ordered in n: {ordered}", {}

    return _timed("3", "E_n(l) decreasing, spectrum ordered", 30.0, run)


def box_limit(l: float = 20.0):
    def run():
        series = [s.energy for s in bathtub.eigenvalues(l, 3)]
        oracle = numerov.bathtub_levels(l, 3)
        dev = [abs(series[n] / series[0] - (n + 1) ** 2) / (n + 1) ** 2 for n in range(1, 4)]
        dev_o = [abs(oracle[n] / oracle[0] - (n + 1) ** 2) / (n + 1) ** 2 for n in range(1, 4)]
        ok = max(dev) < 0.05 and max(dev_o) < 0.05
        return ok, f"max rel. deviation from (n+1)^2: series {max(dev):.3%}, numerov {max(dev_o):.3%}", {"dev": dev}

    return _timed("4", "box limit E_n/E_0 at l=20", math.inf, run)


def oracle_equivalence(l_values=(0.5, 1.0, 2.0), n_max: int = 4):
    def run():
        worst = 0.0
        rows = []
        for l in l_values:
            series = [s.energy for s in bathtub.eigenvalues(l, n_max)]
            oracle = numerov.bathtub_levels(l, n_max)
            for n, (a, b) in enumerate(zip(series, oracle)):
                rows.append({"l": l, "n": n, "method_a": a, "method_b": b, "abs_diff": abs(a - b)})
                worst = max(worst, abs(a - b))
        return worst < 1e-6, f"max |series - numerov| = {worst:.2e} (< 1e-6)", {"rows": rows}

    return _timed("5", "series matching vs Numerov eigenvalues", 60.0, run)


def asymptotic_law():
    def run():
        omegas = (50, 100, 200, 400)
        ok, parts = True, []
        for r in (0.5, 1.0, 2.0):
            dev = [abs(asy.series_s(w, r).normalized_ratio - 1.0) for w in omegas]
            good = dev[2] < 0.05 and all(b < a for a, b in zip(dev, dev[1:]))
            ok &= good
            parts.append(f"r={r:g}: |ratio-1| at 200 = {dev[2]:.4f}")
        return ok, "; ".join(parts), {}

    return _timed("6", "omega^r e^-omega S(omega) -> 1", 5.0, run)


def sandwich_bounds():
    def run():
        rec = asy.sandwich_check(300.0, 1.0, 0.9, 1.1)
        ok = rec.head_vanishes < 1e-3 and rec.tail_vanishes < 1e-3 and rec.lower <= rec.total <= rec.upper
        detail = (
            f"head = {rec.head_vanishes:.4g}, tail = {rec.tail_vanishes:.4g} (both need < 1e-3); "
            f"{rec.lower:.4f} <= T = {rec.total:.4f} <= {rec.upper:.4f}"
        )
        return ok, detail, asdict(rec)

    return _timed("7", "sandwich bounds at omega=300, lambda=0.9, sigma=1.1", 2.0, run)


def weber_identity():
    def run():
        a0 = weber.weber_pair(0.5).a0
        ys = np.linspace(0.0, 5.0, 501)
        err = max(abs(weber.eval_decaying(0.5, y)[0] / (a0 * math.exp(-y * y / 4)) - 1.0) for y in ys)
        return err < 1e-10, f"max relative deviation from exp(-y^2/4) = {err:.2e} (< 1e-10)", {}

    return _timed("8", "E=1/2 decaying solution is a Gaussian", 1.0, run)


def ode_residual(energies=(0.3, 1.0, 2.7), h: float = 1e-3):
    def run():
        worst = 0.0
        ys = np.arange(0, 5001) * h
        for e in energies:
            psi = np.array([weber.eval_decaying(e, y)[0] for y in ys])
            res = (psi[2:] - 2 * psi[1:-1] + psi[:-2]) / h**2 + (e - ys[1:-1] ** 2 / 4) * psi[1:-1]
            worst = max(worst, float(np.max(np.abs(res)) / np.max(np.abs(psi))))
        return worst < 1e-6, f"max residual / max|psi| = {worst:.2e} (< 1e-6)", {}

    return _timed("9", "ODE residual of the series solution on [0, 5]", 1.0 * len(energies), run)


def hydrogen_checks():
    def run():
        zeros = []
        for L in range(3):
            for N in range(3):
                xi = 2.0 * (N + L + 1)
                c = 1.0
                for n in range(N + 1):
                    c = hydrogen.radial_recurrence(c, n, L, xi)
                zeros.append(c == 0.0)
        a = all(zeros)
        ratio = hydrogen.radial_asymptotic(100.0, 0, 1.3).ratio
        b = abs(ratio - 1.0) < 0.05
        c_ratios = [hydrogen.radial_recurrence(1.0, 200, L, xi) / (2.0 / 200) for L, xi in ((0, 1.3), (1, 0.9), (2, 3.7))]
        c = all(abs(q - 1.0) < 0.05 for q in c_ratios)
        detail = (
            f"(a) termination {a}; (b) F(100)/predicted = {ratio:.4f} (need within 5% of 1); "
            f"(c) n c_201/(2 c_200) in [{min(c_ratios):.4f}, {max(c_ratios):.4f}]"
        )
        return a and b and c, detail, {"a": a, "b_ratio": ratio, "c": c_ratios}

    return _timed("10", "hydrogen series: termination, asymptotic law, coefficient ratio", 5.0, run)


def coulomb_sanity(R_values=(0.0, 0.5, 1.0, 2.0), n_levels: int = 4):
    def run():
        levels = {R: numerov.coulomb_piecewise_levels(1.0, R, 0, n_levels) for R in R_values}
        exact = [-1.0 / (4 * n * n) for n in range(1, n_levels + 1)]
        rel = max(abs(a - b) / abs(b) for a, b in zip(levels[R_values[0]], exact))
        mono = all(
            all(lo <= hi for lo, hi in zip(levels[r0], levels[r1])) for r0, r1 in zip(R_values, R_values[1:])
        )
        ok = rel < 1e-4 and mono and R_values[0] == 0.0
        return ok, f"R=0 max rel. error {rel:.2e} (< 1e-4); non-decreasing in R: {mono}", {
            "levels": {str(k): v for k, v in levels.items()}
        }

    return _timed("11", "piecewise Coulomb levels", 30.0, run)


CHECKS = {
    "1": harmonic_limit,
    "2": critical_width,
    "3": spectrum_shape,
    "4": box_limit,
    "5": oracle_equivalence,
    "6": asymptotic_law,
    "7": sandwich_bounds,
    "8": weber_identity,
    "9": ode_residual,
    "10": hydrogen_checks,
    "11": coulomb_sanity,
}

QUICK = ("1", "2", "6", "7", "8", "10")


def run_all(quick: bool = False, only=None, budget_scale: float = 1.0) -> list[CheckResult]:
    """Run checks in id order; ``budget_scale`` stretches every time budget (slow machines)."""
    global _budget_scale
    if not (math.isfinite(budget_scale) and budget_scale > 0):
        raise ValueError("budget_scale must be positive")
    ids = list(only) if only else (QUICK if quick else list(CHECKS))
    old, _budget_scale = _budget_scale, budget_scale
    try:
        return [CHECKS[i]() for i in ids]
    finally:
        _budget_scale = old
