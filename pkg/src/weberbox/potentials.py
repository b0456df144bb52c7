"""Potential descriptors shared by the series solver and the Numerov oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class PiecewisePotential:
    """Harmonic walls (|z| - l)**2 / 4 outside |z| < l, a constant inside.

    ``l`` is the half-width in oscillator units, l = sqrt(2 m w / hbar) a.
    Only a constant interior is supported; ``inner=0`` is the bathtub.
    """

    l: float
    inner: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.l) and self.l >= 0):
            raise ValueError(f"half-width must be finite and >= 0, got {self.l!r}")
        if not math.isfinite(self.inner):
            raise ValueError("inner constant must be finite")

    def __call__(self, z):
        z = np.abs(np.asarray(z, dtype=float))
        y = z - self.l
        return np.where(y > 0, 0.25 * y * y, self.inner)

    def log_decay(self, energy: float, z: float) -> float:
        """log of the leading decaying form y**(E-1/2) exp(-y**2/4), y = |z| - l > 0."""
        y = abs(z) - self.l
        return (energy - 0.5) * math.log(y) - 0.25 * y * y

    def outer_extent(self, energy: float) -> float:
        """|z| beyond which the solution is negligible (below 1e-16 relative)."""
        return self.l + max(12.0, 2.0 * math.sqrt(2.0 * max(energy, 0.0)) + 8.0)


@dataclass(frozen=True)
class CoulombPiecewise:
    """Radial problem u'' + (E - V(r) - L(L+1)/r**2) u = 0.

    V(r) = -k/R for r < R and -k/r beyond; R = 0 is the pure Coulomb case.
    Bound levels of the pure case are E = -k**2 / (4 n**2), n = N + L + 1,
    so the hydrogen-series parameter is xi = k / sqrt(-E).
    """

    k: float
    R: float = 0.0
    L: int = 0

    def __post_init__(self):
        if not self.k > 0:
            raise ValueError("k must be positive")
        if not self.R >= 0:
            raise ValueError("R must be >= 0")
        if self.L < 0 or int(self.L) != self.L:
            raise ValueError("L must be a non-negative integer")

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        core = -self.k / np.maximum(r, self.R)
        return core + self.L * (self.L + 1) / (r * r)

    def frobenius(self, energy: float, r: float) -> float:
        """Regular solution near the origin, r**(L+1) (1 + b1 r + b2 r**2 + b3 r**3)."""
        L = self.L
        if r < self.R:
            k, e = 0.0, energy + self.k / self.R
        else:
            k, e = self.k, energy
        b = [1.0, 0.0, 0.0, 0.0]
        for j in range(1, 4):
            prev2 = b[j - 2] if j >= 2 else 0.0
            b[j] = -(k * b[j - 1] + e * prev2) / (j * (j + 2 * L + 1))
        return r ** (L + 1) * (b[0] + r * (b[1] + r * (b[2] + r * b[3])))

    def log_decay(self, energy: float, r: float) -> float:
        kappa = math.sqrt(-energy)
        return -kappa * r + self.k / (2.0 * kappa) * math.log(r)

    def turning_point(self, energy: float) -> float:
        """Outer classical turning point of the Coulomb tail at energy < 0."""
        c = self.L * (self.L + 1)
        disc = self.k * self.k + 4.0 * energy * c
        return (self.k + math.sqrt(max(disc, 0.0))) / (2.0 * -energy)
