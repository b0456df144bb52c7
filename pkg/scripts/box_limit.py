"""E_n/E_0 against l up to l = 20, plus the approach to the infinite-well law.

The ratio tends to (n+1)^2 quickly; E_n itself approaches pi^2 (n+1)^2/(2l)^2
only like (l/(l + delta))^2, where delta = -1/a*(0) ~ 2.09 is the distance the
state leaks into each wall.  The Numerov column is the independent check.
"""

import argparse
import math
from pathlib import Path

import numpy as np

from weberbox import bathtub, numerov
from weberbox.cli import write_table
from weberbox.weber import a_star


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=3)
    ap.add_argument("--outdir", default="results")
    ap.add_argument("--no-numerov", action="store_true")
    args = ap.parse_args()

    delta = -1.0 / a_star(0.0)
    rows = []
    for l in np.arange(0.0, 20.0 + 1e-9, 1.0):
        states = bathtub.eigenvalues(float(l), args.n_max)
        oracle = [math.nan] * len(states) if args.no_numerov else numerov.bathtub_levels(float(l), args.n_max)
        e0 = states[0].energy
        for s, eo in zip(states, oracle):
            box = math.pi**2 * (s.n + 1) ** 2 / (2 * l) ** 2 if l > 0 else math.inf
            rows.append((l, s.n, s.energy, eo, s.energy / e0, box / s.energy, s.energy * (2 * (l + delta)) ** 2 / math.pi**2 / (s.n + 1) ** 2))
    out = Path(args.outdir) / "box_limit.csv"
    cols = ("l", "n", "energy", "energy_numerov", "ratio_to_ground", "box_over_energy", "shifted_box_ratio")
    write_table(out, cols, rows, "csv", {})
    last = [r for r in rows if r[0] == 20.0]
    for r in last:
        print(f"l=20 n={r[1]}: E_n/E_0 = {r[4]:.4f}  box/E = {r[5]:.4f}  with delta = {r[6]:.4f}")
    print(f"delta = {delta:.6f}; wrote {out}")


if __name__ == "__main__":
    main()
