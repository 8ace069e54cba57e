#!/usr/bin/env python3
"""Regenerate core/src/lanczos_coefficients.inc.

The coefficients c_0..c_{n-1} of

    Gamma(z+1) = sqrt(2 pi) t^(z+1/2) e^(-t) (c_0 + sum_{i>=1} c_i/(z+i)),
    t = z + g + 1/2,

are fixed by requiring the identity to hold exactly at z = 0, 1, ..., n-1
(collocation at the integers). With g = 607/128 and n = 15 this reproduces
Godfrey's published set. Requires mpmath.

    python3 tools/gen_lanczos.py > core/src/lanczos_coefficients.inc
"""
import argparse

import mpmath as mp


def coefficients(g, n):
    a = mp.matrix(n, n)
    rhs = mp.matrix(n, 1)
    half = mp.mpf(1) / 2
    for r in range(n):
        z = mp.mpf(r)
        t = z + g + half
        rhs[r] = mp.factorial(r) / (mp.sqrt(2 * mp.pi) * t ** (z + half) * mp.exp(-t))
        a[r, 0] = 1
        for i in range(1, n):
            a[r, i] = 1 / (z + i)
    return mp.lu_solve(a, rhs)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--g-num", type=int, default=607)
    parser.add_argument("--g-den", type=int, default=128)
    parser.add_argument("-n", type=int, default=15)
    parser.add_argument("--dps", type=int, default=60)
    args = parser.parse_args()

    mp.mp.dps = args.dps
    g = mp.mpf(args.g_num) / args.g_den
    c = coefficients(g, args.n)

    print("// Generated by tools/gen_lanczos.py; do not edit by hand.")
    print(f"// g = {args.g_num}/{args.g_den}, n = {args.n}, collocation at z = 0..{args.n - 1}.")
    print(f"inline constexpr double lanczos_g = {args.g_num}.0 / {args.g_den}.0;")
    print(f"inline constexpr std::array<double, {args.n}> lanczos_coefficients = {{")
    for v in c:
        print(f"    {mp.nstr(v, 21, min_fixed=0, max_fixed=0)},")
    print("};")


if __name__ == "__main__":
    main()
