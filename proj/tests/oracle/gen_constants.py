#!/usr/bin/env python3
"""Regenerates the frozen 40-digit reference constants used by the C++ test
suites (tests/test_certified_log.cpp, tests/test_density_stats.cpp,
tests/acceptance.cpp). Independent of the C++ implementation: everything is
evaluated with mpmath at 50 decimal digits.

Run: python3 tests/oracle/gen_constants.py
"""
from mpmath import mp, log, sqrt

mp.dps = 50
PHI = (1 + sqrt(5)) / 2


def s(x):
    return mp.nstr(x, 42, strip_zeros=False)


def theta(a):
    return log(a) / log(PHI)


def main():
    print("ln2      =", s(log(2)))
    print("ln3      =", s(log(3)))
    print("ln10     =", s(log(10)))
    print("ln199    =", s(log(199)))
    print("lnPhi    =", s(log(PHI)))
    print("sqrt5    =", s(sqrt(5)))
    for a in (2, 3, 7, 10, 100, 199):
        t = theta(a)
        print(f"theta({a:<3}) =", s(t), " floor =", int(t))
    f10 = theta(10) - 4
    print("sigma(10)  =", s(sqrt(f10 * (1 - f10))))
    f199 = theta(199) - 10
    print("sigma(199) =", s(sqrt(f199 * (1 - f199))))
    print("1 - frac(199) =", s(1 - f199))


if __name__ == "__main__":
    main()
