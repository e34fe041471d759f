#!/usr/bin/env python3
"""Spectral parameters R of Maass cusp forms on PSL(2,Z) (eigenvalue 1/4 + R^2).

Hejhal's method: the Fourier expansion of an even (cosine) or odd (sine) form is
sampled on two horocycles y = Y1, Y2 below the fundamental domain, pulled back into
it, and the resulting linear system is solved with a_1 = 1.  R is an eigenvalue where
the two solutions for a_2 agree; candidates found by sign changes on a fine grid are
polished with brentq and kept only if the coefficients are multiplicative
(a_2 a_3 = a_6, a_2^2 = a_4 + 1).
"""
import argparse

import numpy as np
from scipy.optimize import brentq


def knorm(R, x):
    """exp(pi R / 2) K_{iR}(x) for real R > 0 and an array of x > 0."""
    x = np.atleast_1d(np.asarray(x, float))
    d = min(0.5, 6.0 / R)
    sd, cd = np.sin(d), np.cos(d)
    smax = np.arccosh(np.maximum(45.0 / (x.min() * sd), 1.0)) + 0.5
    h = min(0.02, 0.5 / (R + 45.0 / np.tan(d)))
    s = np.arange(0, smax + h, h)
    w = np.full(s.shape, h)
    w[0] = h / 2
    X = x[:, None]
    val = np.exp(-X * sd * np.cosh(s)) * np.cos(R * s - X * cd * np.sinh(s))
    return np.exp(R * d) * (val @ w)


def pullback(x, y):
    for _ in range(200):
        x = x - np.round(x)
        if x * x + y * y < 1 - 1e-15:
            d = x * x + y * y
            x, y = -x / d, y / d
        else:
            break
    return x, y


def coefficients(R, Y, parity):
    M0 = int(np.ceil((R + 30) / (2 * np.pi * Y)))
    Q = M0 + 12
    cs = np.cos if parity == 0 else np.sin
    xm = (np.arange(1, Q + 1) - 0.5) / (2 * Q)
    pb = [pullback(x, Y) for x in xm]
    xs = np.array([p[0] for p in pb])
    ys = np.array([p[1] for p in pb])
    n = np.arange(1, M0 + 1)
    K = np.array([knorm(R, 2 * np.pi * l * ys) for l in n])
    Vl = np.sqrt(ys)[None, :] * K * cs(2 * np.pi * n[:, None] * xs[None, :])
    Cn = cs(2 * np.pi * n[:, None] * xm[None, :])
    V = -(2.0 / Q) * Cn @ Vl.T
    V[np.arange(M0), np.arange(M0)] += np.sqrt(Y) * knorm(R, 2 * np.pi * n * Y)
    a = np.linalg.solve(V[1:, 1:], -V[1:, 0])
    return np.concatenate([[1.0], a])


Y1, Y2 = 0.83, 0.69


def mismatch(R, parity):
    return coefficients(R, Y1, parity)[1] - coefficients(R, Y2, parity)[1]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--rmax", type=float, default=32.0)
    ap.add_argument("--step", type=float, default=0.004)
    ap.add_argument("--out", default="maass_eigenvalues.csv")
    args = ap.parse_args()
    found = []
    for parity in (0, 1):
        grid = np.arange(8.0, args.rmax, args.step)
        vals = [mismatch(R, parity) for R in grid]
        for i in range(len(grid) - 1):
            if np.sign(vals[i]) == np.sign(vals[i + 1]):
                continue
            try:
                R0 = brentq(lambda R: mismatch(R, parity), grid[i], grid[i + 1], xtol=1e-13)
            except ValueError:
                continue
            a = coefficients(R0, Y1, parity)
            if abs(a[1] * a[2] - a[5]) < 1e-6 and abs(a[1] ** 2 - a[3] - 1) < 1e-6:
                found.append((R0, parity))
    found.sort()
    with open(args.out, "w") as fh:
        fh.write("# spectral parameters R of Maass cusp forms on PSL(2,Z), R < %g; source: Hejhal's "
                 "method, tools/data/gen_maass.py; precision ~11 decimal places; the constant "
                 "eigenfunction is not listed\n" % args.rmax)
        for R, _ in found:
            fh.write("%.12f\n" % R)


if __name__ == "__main__":
    main()
