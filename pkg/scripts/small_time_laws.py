"""Creep and memory functions at small t against their leading power laws.

The memory function carries a constant correction ``-(nu+1)(2nu+1)`` that
is visible at t = 1e-4 for larger orders; the last column includes it.
"""

import argparse
import math

import numpy as np

from bessel_dirichlet import build_series, creep_F, memory_Phi


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nu", type=float, nargs="+", default=[-0.5, 0.0, 1.0, 3.0])
    ap.add_argument("--tail-tol", type=float, default=1e-4)
    args = ap.parse_args()
    times = np.geomspace(1e-6, 1e-2, 5)
    print("nu,t,F_ratio,Phi_ratio,Phi_ratio_two_term")
    for nu in args.nu:
        s = build_series(nu, args.tail_tol, times[0])
        for t in times:
            lead = 2 * (nu + 1) / math.sqrt(math.pi * t)
            f_ratio = creep_F(s, t) / (4 * (nu + 1) * math.sqrt(t / math.pi))
            phi = memory_Phi(s, t) if t >= s.phi_t_min else float("nan")
            two_term = lead - (nu + 1) * (2 * nu + 1)
            print(f"{nu:g},{t:.1e},{f_ratio:.6f},{phi / lead:.6f},{phi / two_term:.6f}")


if __name__ == "__main__":
    main()
