"""weberbox command line: tables for plotting spectra, wavefunctions and asymptotics, and the checks.

Exit codes: 0 ok, 1 verification failed, 2 usage error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import sys
from pathlib import Path

import numpy as np

from . import asymptotics as asy
from . import bathtub, hydrogen, numerov, verify

log = logging.getLogger("weberbox")

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


def fmt(x) -> str:
    if isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    return format(float(x), ".15g")


def write_table(path: Path, columns, rows, fmt_kind: str, meta: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    if fmt_kind == "json":
        payload = {"meta": meta, "columns": list(columns), "rows": [dict(zip(columns, r)) for r in rows]}
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(payload, fh, indent=1, sort_keys=False)
            fh.write("\n")
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([fmt(v) for v in r])


def positive(text: str) -> float:
    v = float(text)
    if not (math.isfinite(v) and v > 0):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return v


def float_list(text: str) -> list[float]:
    try:
        vals = [float(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def grid(lo: float, hi: float, step: float) -> np.ndarray:
    if step <= 0 or hi < lo:
        raise UsageError(f"empty range [{lo}, {hi}] with step {step}")
    n = int(math.floor((hi - lo) / step + 1e-9))
    return lo + step * np.arange(n + 1)


def _out(args, default: str) -> Path:
    if args.out:
        return Path(args.out)
    stem = Path(default).stem
    return Path(f"{stem}.{args.format}")


def cmd_spectrum(args) -> int:
    if args.l_min < 0:
        raise UsageError("--l-min must be >= 0")
    ls = grid(args.l_min, args.l_max, args.l_step)
    if args.n_max < 0:
        raise UsageError("--n-max must be >= 0")
    try:
        rows = bathtub.spectrum_sweep(ls, args.n_max)
    except bathtub.EigenSolverError as exc:
        print(f"error: solver failed: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    meta = {"l_min": args.l_min, "l_max": args.l_max, "l_step": args.l_step, "n_max": args.n_max,
            "energy_grid_step": 0.02, "root_xtol": 1e-13}
    path = _out(args, "spectrum.csv")
    write_table(path, ("l", "n", "parity", "energy", "ratio_to_ground"), rows, args.format, meta)
    log.info("wrote %d rows to %s", len(rows), path)
    return EXIT_OK


def cmd_wavefunction(args) -> int:
    if args.l < 0 or args.n < 0:
        raise UsageError("--l and --n must be >= 0")
    try:
        state = bathtub.eigenstate(args.l, args.n)
        wf = bathtub.assemble_wavefunction(state, -args.z_max, args.z_max, args.h, max_norm=args.max_norm)
    except bathtub.EigenSolverError as exc:
        print(f"error: eigenstate not found: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    meta = {"l": args.l, "n": args.n, "energy": state.energy, "parity": state.parity, "h": args.h,
            "z_max": args.z_max, "normalization": "max" if args.max_norm else "L2"}
    path = _out(args, "wavefunction.csv")
    write_table(path, ("z", "psi"), zip(wf.grid, wf.values), args.format, meta)
    return EXIT_OK


def cmd_asymptotics(args) -> int:
    if args.sandwich and any(r <= 0 for r in args.r_list):
        raise UsageError("--sandwich needs every r > 0")
    omegas = grid(args.omega_min, args.omega_max, args.omega_step)
    if omegas[0] <= 0:
        raise UsageError("--omega-min must be > 0")
    cols = ["omega", "r", "normalized_ratio"]
    if args.sandwich:
        cols += ["head", "tail", "lower", "upper"]
    rows = []
    for r in args.r_list:
        for w in omegas:
            rep = asy.series_s(float(w), r)
            row = [w, r, rep.normalized_ratio]
            if args.sandwich:
                rec = asy.sandwich_check(float(w), r, args.lam, args.sigma)
                row += [rec.head_vanishes, rec.tail_vanishes, rec.lower, rec.upper]
            rows.append(row)
    meta = {"r_list": args.r_list, "lambda": args.lam, "sigma": args.sigma, "infinity": "omega + 40 sqrt(omega)"}
    write_table(_out(args, "asymptotics.csv"), cols, rows, args.format, meta)
    return EXIT_OK


def cmd_hydrogen(args) -> int:
    if args.piecewise:
        try:
            levels = numerov.coulomb_piecewise_levels(args.k, args.R, args.L, args.levels, h=args.h)
        except numerov.ShootingError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_NUMERIC
        rows = [(i, e, args.k / math.sqrt(-e)) for i, e in enumerate(levels)]
        meta = {"k": args.k, "R": args.R, "L": args.L, "h": args.h, "units": "u'' + (E - V - L(L+1)/r^2) u = 0"}
        write_table(_out(args, "coulomb_levels.csv"), ("level", "energy", "xi"), rows, args.format, meta)
        return EXIT_OK
    if args.xi is None:
        raise UsageError("--xi is required unless --piecewise is given")
    if hydrogen.is_terminating(args.L, args.xi):
        raise UsageError(f"xi={args.xi} terminates the series for L={args.L}")
    rhos = grid(args.rho_min, args.rho_max, args.rho_step)
    if rhos[0] < 1:
        raise UsageError("--rho-min must be >= 1")
    rows = []
    for rho in rhos:
        a = hydrogen.radial_asymptotic(float(rho), args.L, args.xi, with_prefactor=args.with_prefactor)
        rows.append((rho, a.series_value, a.predicted, a.ratio))
    meta = {"L": args.L, "xi": args.xi, "c0": 1.0, "with_prefactor": args.with_prefactor}
    write_table(_out(args, "hydrogen.csv"), ("rho", "series_value", "predicted", "ratio"), rows, args.format, meta)
    return EXIT_OK


def cmd_verify(args) -> int:
    only = args.only.split(",") if args.only else None
    if only:
        bad = [c for c in only if c not in verify.CHECKS]
        if bad:
            raise UsageError(f"unknown check id(s): {', '.join(bad)}")
    results = verify.run_all(quick=args.quick, only=only, budget_scale=args.budget_scale)
    for r in results:
        print(r.line())
    failed = [r.id for r in results if not r.passed]
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    with open(outdir / "verify.json", "w", encoding="utf-8", newline="\n") as fh:
        json.dump({"passed": not failed, "failed": failed, "checks": [r.to_dict() for r in results]}, fh, indent=1)
        fh.write("\n")
    compare = next((r for r in results if r.id == "5"), None)
    if compare is not None:
        rows = [(d["l"], d["n"], d["method_a"], d["method_b"], d["abs_diff"]) for d in compare.data["rows"]]
        write_table(outdir / "verify_compare.csv", ("l", "n", "method_a", "method_b", "abs_diff"), rows, "csv", {})
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    if failed:
        print(f"failed: {', '.join(failed)}")
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weberbox", description="Piecewise-harmonic eigenproblems and series asymptotics")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", help="output file (default <name>.<format> in the working directory)")
        sp.add_argument("--format", choices=("csv", "json"), default="csv")

    sp = sub.add_parser("spectrum", help="bathtub eigenvalues over a range of half-widths")
    sp.add_argument("--l-min", type=float, default=0.0)
    sp.add_argument("--l-max", type=float, default=5.0)
    sp.add_argument("--l-step", type=positive, default=0.05)
    sp.add_argument("--n-max", type=int, default=5)
    common(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("wavefunction", help="sampled eigenfunction of the bathtub")
    sp.add_argument("--l", type=float, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--z-max", type=positive, default=10.0)
    sp.add_argument("--h", type=positive, default=1e-3)
    sp.add_argument("--max-norm", action="store_true", help="scale to max |psi| = 1 instead of unit L2 norm")
    common(sp)
    sp.set_defaults(func=cmd_wavefunction)

    sp = sub.add_parser("asymptotics", help="omega^r e^-omega S(omega) and the sandwich bounds")
    sp.add_argument("--r-list", type=float_list, default=[0.5, 1.0, 2.0])
    sp.add_argument("--omega-min", type=positive, default=10.0)
    sp.add_argument("--omega-max", type=positive, default=400.0)
    sp.add_argument("--omega-step", type=positive, default=10.0)
    sp.add_argument("--sandwich", action="store_true")
    sp.add_argument("--lambda", dest="lam", type=positive, default=0.9)
    sp.add_argument("--sigma", type=positive, default=1.1)
    common(sp)
    sp.set_defaults(func=cmd_asymptotics)

    sp = sub.add_parser("hydrogen", help="radial series asymptotics or piecewise Coulomb levels")
    sp.add_argument("--L", type=int, default=0)
    sp.add_argument("--xi", type=float)
    sp.add_argument("--rho-min", type=positive, default=1.0)
    sp.add_argument("--rho-max", type=positive, default=200.0)
    sp.add_argument("--rho-step", type=positive, default=1.0)
    sp.add_argument("--with-prefactor", action="store_true",
                    help="include Gamma(2L+2)/Gamma(L+1-xi/2) in the predicted law")
    sp.add_argument("--piecewise", action="store_true")
    sp.add_argument("--k", type=positive, default=1.0)
    sp.add_argument("--R", type=float, default=0.0)
    sp.add_argument("--levels", type=int, default=4)
    sp.add_argument("--h", type=positive, default=1e-3)
    common(sp)
    sp.set_defaults(func=cmd_hydrogen)

    sp = sub.add_parser("verify", help="run the acceptance checks")
    sp.add_argument("--quick", action="store_true", help="fast subset")
    sp.add_argument("--only", help="comma-separated check ids")
    sp.add_argument("--budget-scale", type=positive, default=1.0, help="multiply every time budget")
    sp.add_argument("--outdir", default=".")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    if args.command == "asymptotics" and args.sandwich and not 0 < args.lam < 1 < args.sigma:
        parser.error("need 0 < --lambda < 1 < --sigma")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"weberbox: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
