#!/usr/bin/env python3
"""High-precision reference values frozen into the unit tests.

Run with mpmath installed; every printed constant is copied verbatim into
tests/unit/*.cpp. Nothing here shares code with the C++ implementation.
"""
from mpmath import mp, mpf, ellipfun, ellipk, exp, pi, sqrt, jtheta, nsum, inf, floor, cos, identify

mp.dps = 50


def modulus_from_nome(q):
    return (jtheta(2, 0, q) / jtheta(3, 0, q)) ** 2


def show(name, value):
    print(f"{name} = {mp.nstr(value, 30)}")


def main():
    k = mpf("0.6")
    m = k * k
    K = ellipk(m)
    Kp = ellipk(1 - m)
    q = exp(-pi * Kp / K)
    show("K(0.6)", K)
    show("nome(0.6)", q)
    show("cn(0.7; 0.6)", ellipfun("cn", mpf("0.7"), m=m))
    show("sn(0.4; 0.5)", ellipfun("sn", mpf("0.4"), m=mpf("0.25")))
    show("k(w=2)", modulus_from_nome(exp(-2)))

    w = mpf("0.31")
    sn = lambda u: ellipfun("sn", u, m=m)
    e52 = (sn(5 * w) / sn(w)) * (sn(4 * w) / sn(2 * w))
    show("E^5_2(0.31, 0.6)", e52)
    show("e_4(0.31, 0.6)", sn(4 * w) / sn(w))
    show("cn(0.93; 0.6)", ellipfun("cn", 3 * w, m=m))
    show("dn(0.62; 0.6)", ellipfun("dn", 2 * w, m=m))
    show("rho_1 cn measure k=0.6", (pi / (k * K)) / (sqrt(q) + 1 / sqrt(q)))
    show("M_2 cn (0.31, 0.6)", (1 + ellipfun("cn", w, m=m)) / 2)

    qq = mpf("0.3")
    alpha = mpf("0.27")
    F = nsum(lambda n: 1 / (qq ** (n + alpha) + qq ** (-n - alpha)), [-inf, inf])
    show("F(0.27; 0.3)", F)

    x = mpf("0.3")
    partial = 2 * sum(4 / (pi**2 * (2 * s + 1) ** 2) * cos(pi * (2 * s + 1) * x) for s in range(2000))
    show("magnus partial sum x=0.3, 2000 odd terms", partial)

    # continued fraction of pi - 3 from 50 digits
    v = +pi - 3
    quotients = []
    for _ in range(8):
        a = int(floor(v))
        quotients.append(a)
        v = 1 / (v - a)
    print("cf(pi-3) =", quotients)
    print("pi-3 (60 digits) =", mp.nstr(+pi - 3, 60))
    mp.dps = 80
    print("golden conjugate (70 digits) =", mp.nstr((sqrt(5) - 1) / 2, 70))


if __name__ == "__main__":
    main()
