"""Ladder current for a step and for a smooth pulse, written as CSV."""

import argparse
import sys
import warnings

import numpy as np

from bessel_dirichlet import SignalTrace, TimeGrid, build_series, convolve_response
from bessel_dirichlet.cli import fmt


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nu", type=float, default=0.0)
    ap.add_argument("--tail-tol", type=float, default=1e-5)
    ap.add_argument("--t-max", type=float, default=5.0)
    ap.add_argument("--points", type=int, default=200)
    args = ap.parse_args()

    series = build_series(args.nu, args.tail_tol, 0.01)
    grid = TimeGrid.linear(0.0, args.t_max, args.points)
    pulse = np.sin(np.pi * grid.times / args.t_max) ** 2
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        step = convolve_response(series, SignalTrace(grid, np.ones(len(grid)))).values
        smooth = convolve_response(series, SignalTrace(grid, pulse)).values
    out = sys.stdout
    out.write(f"# nu={fmt(args.nu)}\n# N={series.n_terms}\nt,I_step,V_pulse,I_pulse\n")
    for row in zip(grid.times, step, pulse, smooth):
        out.write(",".join(fmt(v) for v in row) + "\n")


if __name__ == "__main__":
    main()
