#!/usr/bin/env python3
"""Regenerates tests/unit/reference_values.hpp with mpmath at 50 digits.

Usage: python3 tests/reference/gen_reference.py > tests/unit/reference_values.hpp
"""
from mpmath import mp, mpc, mpf, gamma, rgamma, besselj, besseli, hyp1f1, gammainc, exp, pi, polar, rect

mp.dps = 50


def gamma_star(mu, w):
    # w^{-mu} P(mu, w) written as the entire series, summed in high precision.
    s = mpf(0)
    t = mpc(1)
    k = 0
    while True:
        term = w**k * rgamma(mu + k + 1)
        s += term
        if k > 20 and abs(term) < mpf(10) ** (-60) * max(1, abs(s)):
            break
        k += 1
    return exp(-w) * s


def shifted_tail(mu, n, z):
    s = mpf(0)
    k = n
    while True:
        term = (-1) ** k / gamma(k + 1) * (z / 2) ** (2 * k + mu - n) * rgamma(mu - n + k + 1)
        s += term
        if k > n + 20 and abs(term) < mpf(10) ** (-60):
            break
        k += 1
    return s


def c(z):
    z = mpc(z)
    return "cplx{%s, %s}" % (mp.nstr(z.real, 17, min_fixed=-1, max_fixed=1), mp.nstr(z.imag, 17, min_fixed=-1, max_fixed=1))


rows = []


def add(name, args, value):
    rows.append((name, args, value))


for s in [mpc(0.5), mpc(1, 1), mpc(-2.5, 0.5), mpc(10.3), mpc(-15.5), mpc(3, -7), mpc(25, 4)]:
    add("gamma", [s], gamma(s))

for mu, w in [(1, 1), (mpf(1) / 2, mpf(1) / 4), (2.5, mpc(1, 2)), (0.7, mpc(-10, 3)), (-2.5, 30),
              (mpc(3.7, 1), mpc(0, 8)), (-4.3, mpc(-6, -2)), (12, 20), (-0.5, mpc(-30, 1))]:
    add("gamma_star", [mpc(mu), mpc(w)], gamma_star(mpc(mu), mpc(w)))

for mu, w in [(0.5, 1), (1.5, mpc(-8, 1)), (-0.3, mpc(3, 4)), (mpc(2, 1), mpc(-5, -5))]:
    add("kummer_m1", [mpc(mu), mpc(w)], hyp1f1(1, 1 + mpc(mu), mpc(w)))

for mu, z in [(0, 1), (1, 1), (0.5, 2), (-2.5, mpc(1, 1)), (mpc(-0.5, 0.3), mpc(2, 1)), (mpc(3.7, 1), rect(10, pi / 4)),
              (-1, 5), (mpc(1.3, 0.2), mpc(3, -2)), (4.3, 2), (0.25, mpc(-3, 0.5))]:
    add("besselj", [mpc(mu), mpc(z)], besselj(mpc(mu), mpc(z)))

for mu, z in [(0, 1), (0.5, 2), (mpc(-0.5, 0.3), mpc(2, 1)), (2.2, mpc(1, -1)), (-1.5, 4)]:
    add("besseli", [mpc(mu), mpc(z)], besseli(mpc(mu), mpc(z)))

for mu, n, z in [(1.5, 2, 1), (2, 1, 2), (0.5, 3, 2), (mpc(2.2, 0), 4, mpc(1, -1))]:
    add("shifted_tail", [mpc(mu), n, mpc(z)], shifted_tail(mpc(mu), n, mpc(z)))

for mu, k, z in [(0, 1, 1), (2, 2, 3), (2.5, 3, mpc(1, 1)), (mpc(0.3, 0.2), 2, mpc(-1, 2))]:
    add("besselj_deriv", [mpc(mu), k, mpc(z)], besselj(mpc(mu), mpc(z), derivative=k))

print("#ifndef BESSELQUAD_TESTS_REFERENCE_VALUES_HPP")
print("#define BESSELQUAD_TESTS_REFERENCE_VALUES_HPP")
print()
print("// Generated by tests/reference/gen_reference.py (mpmath, 50 digits).")
print()
print('#include "besselquad/numerics.hpp"')
print()
print("#include <array>")
print()
print("namespace reference {")
print()
print("using besselquad::cplx;")
print()
groups = {}
for name, args, value in rows:
    groups.setdefault(name, []).append((args, value))
structs = {
    1: "struct Case1 { cplx a; cplx value; };",
    2: "struct Case2 { cplx a; cplx b; cplx value; };",
    3: "struct Case3 { cplx a; unsigned n; cplx b; cplx value; };",
}
for s in structs.values():
    print(s)
print()
for name, items in groups.items():
    arity = len(items[0][0])
    t = "Case%d" % arity
    print("inline const std::array<%s, %d> %s{{" % (t, len(items), name))
    for args, value in items:
        parts = [c(a) if not isinstance(a, int) else "%du" % a for a in args]
        print("    {%s, %s}," % (", ".join(parts), c(value)))
    print("}};")
    print()
print("} // namespace reference")
print()
print("#endif // BESSELQUAD_TESTS_REFERENCE_VALUES_HPP")
