"""Sampled eigenfunctions: n = 2 at the critical half-width, and wide tubs (l = 6).

The critical state has its nodes on the walls; in the wide tub the states
look like box states that leak a little into the harmonic region.
"""

import argparse
import math
from pathlib import Path

from scipy.optimize import brentq

from weberbox import bathtub
from weberbox.cli import write_table


def dump(state, z_max, h, out, max_norm):
    wf = bathtub.assemble_wavefunction(state, -z_max, z_max, h, max_norm=max_norm)
    write_table(out, ("z", "psi"), zip(wf.grid, wf.values), "csv", {})
    return wf


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--h", type=float, default=1e-3)
    ap.add_argument("--outdir", default="results")
    args = ap.parse_args()
    outdir = Path(args.outdir)

    lc = brentq(lambda l: bathtub.eigenvalues(l, 2, check_nodes=False)[2].energy - 1.5, 0.5, 3.0, xtol=1e-12)
    st = bathtub.eigenvalues(lc, 2)[2]
    wf = dump(st, lc + 6, args.h, outdir / "wavefunction_critical.csv", False)
    v = wf.values
    nodes = [0.5 * (wf.grid[i] + wf.grid[i + 1]) for i in range(len(v) - 1) if (v[i] < 0) != (v[i + 1] < 0)]
    print(f"l = {lc:.6f}, E_2 = {st.energy:.12f}, nodes at {[round(float(z), 4) for z in nodes]}")

    l = 6.0
    for n in range(4):
        st = bathtub.eigenstate(l, n)
        dump(st, l + 6, args.h, outdir / f"wavefunction_wide_n{n}.csv", True)
        print(f"l = {l}, n = {n}: E = {st.energy:.10f}, box estimate {math.pi**2 * (n + 1) ** 2 / (4 * l * l):.6f}")


if __name__ == "__main__":
    main()
