"""Radial series F(rho) against its large-rho law, and piecewise Coulomb levels vs R."""

import argparse
from pathlib import Path

import numpy as np

from weberbox import hydrogen, numerov
from weberbox.cli import write_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="results")
    args = ap.parse_args()
    outdir = Path(args.outdir)

    rows = []
    for L, xi in ((0, 1.3), (1, 0.9), (2, 3.7)):
        pre = hydrogen.asymptotic_prefactor(L, xi)
        for rho in np.arange(10.0, 300.0 + 1e-9, 10.0):
            a = hydrogen.radial_asymptotic(float(rho), L, xi)
            rows.append((L, xi, rho, a.ratio, a.ratio / pre))
        print(f"L={L} xi={xi}: ratio at rho=300 {rows[-1][3]:.4f}, Gamma constant {pre:.4f}, corrected {rows[-1][4]:.4f}")
    write_table(outdir / "hydrogen_ratio.csv", ("L", "xi", "rho", "ratio", "ratio_over_gamma_constant"), rows, "csv", {})

    rows = []
    for R in (0.0, 0.25, 0.5, 1.0, 2.0, 4.0):
        for L in (0, 1):
            for i, e in enumerate(numerov.coulomb_piecewise_levels(1.0, R, L, 3)):
                rows.append((R, L, i, e, 1.0 / (-e) ** 0.5))
    write_table(outdir / "coulomb_levels.csv", ("R", "L", "level", "energy", "xi"), rows, "csv", {})
    print(f"wrote {len(rows)} Coulomb levels")


if __name__ == "__main__":
    main()
