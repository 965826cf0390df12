"""Regenerates the frozen reference values in tests/oracles.hpp.

Independent of the C++ code: 30-digit mpmath quadrature of the integral form,
plus closed forms where they exist. Run with `python3 gen_oracles.py`.
"""
from mpmath import mp, mpf, quad, log, sin, cot, pi, zeta, harmonic

mp.dps = 30


def g(n, x):
    x = mpf(x)
    kernel = quad(lambda u: n * (1 - u) ** (n - 1) * log(2 * sin(pi * x * u)), [0, 0.5, 1])
    return harmonic(n) - log(2 * pi * x) - kernel


def x_dg(n, x):
    x = mpf(x)
    return -1 - quad(lambda u: n * (1 - u) ** (n - 1) * (pi * x * u) * cot(pi * x * u) if u else n,
                     [0, 1])


def genfunc(x, z):
    x, z = mpf(x), mpf(z)
    kernel = quad(lambda u: log(2 * sin(pi * x * u)) * z / (1 - z * (1 - u)) ** 2, [0, 1])
    return -(z / (1 - z)) * log(2 * pi * x) - log(1 - z) / (1 - z) - kernel


print("zeta(3)         ", zeta(3))
print("zeta(6)         ", zeta(6))
print("int (1-u) log   ", quad(lambda u: (1 - u) * log(2 * sin(pi * u / 2)), [0, 1]))
for n, x in [(1, 0.5), (2, 0.5), (3, 0.5), (2, 1.0), (1, 1.0), (10, 0.5), (9, 0.3), (10, 0.3)]:
    print(f"g({n},{x})", g(n, x))
for n, x in [(1, 0.5), (2, 0.5)]:
    print(f"x g'({n},{x})", x_dg(n, x))
for x, z in [(0.5, 0.5), (0.3, -0.5)]:
    print(f"G({x},{z})", genfunc(x, z))
for x in ["1e-2", "1e-3", "1e-4"]:
    print(f"g(1,{x})", g(1, x))
for n in [10, 20, 40, 80, 160]:
    print(f"g({n},0.5)", g(n, 0.5))
