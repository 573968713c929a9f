"""Error of the truncated sum of 1/j^2, with and without the tail correction."""

import argparse

from bessel_dirichlet import rayleigh_closed_form, rayleigh_partial_sum, zero_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nu", type=float, nargs="+", default=[-0.5, 0.0, 1.0, 5.0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 50, 200, 1000])
    args = ap.parse_args()
    print("nu,N,raw_error,corrected_error,tail_bound")
    for nu in args.nu:
        table = zero_table(nu, max(args.sizes))
        exact = rayleigh_closed_form(nu)
        for n in args.sizes:
            est = rayleigh_partial_sum(table.head(n))
            print(f"{nu:g},{n},{exact - est.partial_sum:.3e},{est.total - exact:.3e},{est.tail_bound:.3e}")


if __name__ == "__main__":
    main()
