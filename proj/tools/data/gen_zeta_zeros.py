#!/usr/bin/env python3
"""Ordinates of the first nontrivial zeros of the Riemann zeta function.

Each zero is located with mpmath.zetazero (Riemann-Siegel / Gram-point
bracketing with root polishing) at 30 significant digits.
"""
import argparse
import mpmath


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--out", default="zeta_zeros.csv")
    args = ap.parse_args()
    mpmath.mp.dps = 30
    with open(args.out, "w") as fh:
        fh.write("# ordinates gamma_j of zeta zeros 1/2 + i gamma_j; source: mpmath.zetazero, "
                 "tools/data/gen_zeta_zeros.py; precision 20 significant digits\n")
        for n in range(1, args.count + 1):
            fh.write(mpmath.nstr(mpmath.zetazero(n).imag, 20) + "\n")


if __name__ == "__main__":
    main()
