"""E_n(l) for the bathtub, n = 0..5, l in [0, 5] (the spectrum-versus-width plot data).

Writes spectrum_vs_width.csv and prints where E_2 crosses 3/2.
"""

import argparse
import math
from pathlib import Path

import numpy as np
from scipy.optimize import brentq

from weberbox import bathtub
from weberbox.cli import write_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--l-max", type=float, default=5.0)
    ap.add_argument("--l-step", type=float, default=0.05)
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--outdir", default="results")
    args = ap.parse_args()

    ls = np.round(np.arange(0, args.l_max + 1e-9, args.l_step), 12)
    rows = bathtub.spectrum_sweep(ls, args.n_max)
    out = Path(args.outdir) / "spectrum_vs_width.csv"
    write_table(out, ("l", "n", "parity", "energy", "ratio_to_ground"), rows, "csv", {})

    lc = brentq(lambda l: bathtub.eigenvalues(l, 2, check_nodes=False)[2].energy - 1.5, 0.5, 3.0, xtol=1e-12)
    print(f"wrote {len(rows)} rows to {out}")
    print(f"E_2(l) = 3/2 at l = {lc:.10f}  (pi/(2 sqrt(3/2)) = {math.pi / (2 * math.sqrt(1.5)):.10f})")


if __name__ == "__main__":
    main()
