"""Independent reference values for the C++ test suites.

Pure-Python big integers and mpmath only; nothing here touches the C++
implementation. Run once, values are frozen into the tests.
"""
from fractions import Fraction
from itertools import product
from math import comb, factorial

import mpmath as mp

mp.mp.dps = 50


def convolve_power(k, l):
    row = [1]
    for _ in range(k):
        out = [0] * (len(row) + l)
        for i, a in enumerate(row):
            for j in range(l + 1):
                out[i + j] += a
        row = out
    return row


def brute_parts(k, l, n):
    return sum(1 for p in product(range(l + 1), repeat=k) if sum(p) == n)


def multinomial_sum(k, l, n):
    total = 0
    for ks in product(range(k + 1), repeat=l + 1):
        if sum(ks) == k and sum(i * c for i, c in enumerate(ks)) == n:
            term = factorial(k)
            for c in ks:
                term //= factorial(c)
            total += term
    return total


def central_rel_error(m, l):
    exact = convolve_power(m, l)[m * l // 2]
    var = mp.mpf(m) * ((l + 1) ** 2 - 1) / 12
    approx_log = m * mp.log(l + 1) - mp.log(2 * mp.pi * var) / 2
    return abs(mp.expm1(approx_log - mp.log(exact)))


def pointwise_rel_error(m, n, l, row=None):
    row = row or convolve_power(m, l)
    var = mp.mpf(m) * ((l + 1) ** 2 - 1) / 12
    mu = mp.mpf(m * l) / 2
    approx_log = m * mp.log(l + 1) - mp.log(2 * mp.pi * var) / 2 - (n - mu) ** 2 / (2 * var)
    return abs(mp.expm1(approx_log - mp.log(row[n])))


def phi(z):
    return mp.quad(lambda t: mp.npdf(t), [-mp.inf, -8, 0, z]) if z > 0 else \
        mp.quad(lambda t: mp.npdf(t), [-mp.inf, z])


if __name__ == "__main__":
    print("row(6,4)[12] =", convolve_power(6, 4)[12], brute_parts(6, 4, 12))
    print("coeff(10,20,4) =", convolve_power(10, 4)[20])
    print("multinomial(4,3,6) =", multinomial_sum(4, 3, 6), convolve_power(4, 3)[6])
    print("row(5,2) =", convolve_power(5, 2))
    print("pdf(1) =", mp.npdf(1))
    print("Phi(1) quad =", phi(mp.mpf(1)))
    print("log C(100,50) =", mp.log(comb(100, 50)))
    print("central rel err (100,1) =", central_rel_error(100, 1))
    print("sweep(100,4) n=200 rel err =", mp.nstr(pointwise_rel_error(100, 200, 4), 20))
    print("sweep(100,4) n=180 rel err =", mp.nstr(pointwise_rel_error(100, 180, 4), 20))
    p = convolve_power(20, 4)
    print("pmf(20,4)[40] =", Fraction(p[40], 5 ** 20), float(Fraction(p[40], 5 ** 20)))
    for l in (1, 2, 3, 4):
        errs = [central_rel_error(m, l) for m in (10, 20, 40, 80, 160, 320)]
        print("central errors l=%d" % l, [mp.nstr(e, 8) for e in errs],
              "ratios", [mp.nstr(b / a, 5) for a, b in zip(errs, errs[1:])])
    for l in (1,):
        print("l=1 m*err*4:", [mp.nstr(4 * m * central_rel_error(m, 1), 8) for m in (10, 40, 160, 320)])
    print("l=4 m=5 vs 20:", central_rel_error(5, 4), central_rel_error(20, 4))
