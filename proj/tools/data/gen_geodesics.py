#!/usr/bin/env python3
"""Closed geodesics of the modular surface PSL(2,Z)\\H up to a trace bound.

Hyperbolic conjugacy classes of trace t >= 3 correspond to proper equivalence
classes of binary quadratic forms (a, b, c) of discriminant D = t^2 - 4. Each
class is counted by enumerating Gauss-reduced forms and their reduction cycles.
A class whose forms have content f is the n-th power of a primitive class,
where (t + f sqrt(d)) / 2 = eps_d^n and d = D / f^2.

Output: one line per conjugacy class, "length,n" with length = 2 arccosh(t/2).
"""
import argparse
import math
from math import gcd, isqrt


def reduced_forms(D):
    s = math.sqrt(D)
    out = []
    for b in range(1, isqrt(D) + 1):
        if b >= s or (D - b * b) % 4:
            continue
        ac = (b * b - D) // 4  # a*c, negative
        for a in range(1, -ac + 1):
            if ac % a:
                continue
            for sa in (a, -a):
                if s - b < 2 * a < s + b:
                    out.append((sa, b, ac // sa))
    return out


def rho(form, D):
    a, b, c = form
    s = math.sqrt(D)
    m = 2 * abs(c)
    # b' = -b (mod 2|c|) with sqrt(D) - 2|c| < b' < sqrt(D)
    bp = (-b) % m
    while bp < s - m:
        bp += m
    while bp > s:
        bp -= m
    return (c, bp, (bp * bp - D) // (4 * c))


def cycles(D):
    forms = set(reduced_forms(D))
    seen = set()
    reps = []
    for f in sorted(forms):
        if f in seen:
            continue
        cur = f
        while cur not in seen:
            seen.add(cur)
            cur = rho(cur, D)
        reps.append(f)
    return reps


def fundamental_trace(d, t_max):
    for t0 in range(3, t_max + 1):
        u2 = t0 * t0 - 4
        if u2 % d == 0:
            u = isqrt(u2 // d)
            if u * u * d == u2:
                return t0
    raise ValueError(d)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-trace", type=int, default=60)
    ap.add_argument("--out", default="geodesics.csv")
    args = ap.parse_args()
    rows = []
    for t in range(3, args.max_trace + 1):
        D = t * t - 4
        length = 2.0 * math.acosh(t / 2.0)
        for a, b, c in cycles(D):
            f = gcd(gcd(abs(a), b), abs(c))
            d = D // (f * f)
            t0 = fundamental_trace(d, t)
            n = round(math.acosh(t / 2.0) / math.acosh(t0 / 2.0))
            rows.append((length, n))
    with open(args.out, "w") as fh:
        fh.write("# closed geodesics of PSL(2,Z): length,n (one conjugacy class per line); "
                 "source: reduced quadratic form cycles, tools/data/gen_geodesics.py; "
                 "max trace %d; precision 17 significant digits\n" % args.max_trace)
        for length, n in rows:
            fh.write("%.17g,%d\n" % (length, n))


if __name__ == "__main__":
    main()
