"""Independent reference values (mpmath) frozen into the C++ tests."""
import sys

import mpmath
from mpmath import mp, mpf, besselk, quad, cosh, sinh, asinh, acosh, exp, pi, sqrt, linspace

mp.dps = 25


def out(*a):
    print(*a)
    sys.stdout.flush()


out("K_1/2(1)", besselk(0.5, 1))
out("K_0(5)", besselk(0, 5))
out("K_0.25(0.01)", besselk(0.25, mpf("0.01")))
out("K_0.1(30)", besselk(0.1, 30))
out("K_0.5(700)", besselk(0.5, 700))
for eps in ["0", "0.25"]:
    eps = mpf(eps)
    c = 2 * quad(lambda u: exp(-5 * cosh(u)) * cosh(eps * u), [0, 1])
    d = 2 * quad(lambda u: exp(-5 * cosh(u)) * cosh(eps * u), [1, 2, 3, 4])
    out("c,d eps", eps, c, d)
out("W radial s=1 n=1 y=1", 2 * besselk(0.5, 1))
out("W radial s=0.75 n=-2 y=0.5", 2 * besselk(0.25, 1))
out("norm s=1 n=1 [2pi,inf) closed", 4 * pi ** 2 * quad(lambda y: exp(-2 * y) / y ** 2, [2 * pi, 4 * pi, 8 * pi, 16 * pi, 40 * pi]))
out("norm s=.75 n=2 [2pi,4pi]", 2 * pi * quad(lambda y: 8 * besselk(0.25, 2 * y) ** 2 / y, [2 * pi, 4 * pi]))
out("norm s=.6 n=3 [2pi,3pi]", 2 * pi * quad(lambda y: 12 * besselk(0.1, 3 * y) ** 2 / y, [2 * pi, 3 * pi]))
for s, n, b in [(1, 1, 4 * pi), (0.75, 2, 4 * pi), (0.5, 1, 8 * pi)]:
    o = abs(s - 0.5)
    f = lambda y: besselk(o, n * y) ** 2 / y
    out("tail ratio", s, n, b, sqrt(quad(f, linspace(b, b + 40, 41)) / quad(f, linspace(2 * pi, b, 21))))
for s in [0.3, 0.45]:
    for b in [4 * pi, 8 * pi]:
        out("residual ratio sq", s, b, 1 / ((b / (2 * pi)) ** (1 - 2 * s) - 1))
out("gamma0", cosh(1) - 1, "2/gamma0", 2 / (cosh(1) - 1))
lg = mpf("0.01")
L1 = asinh(1 / sinh(lg / 2))
out("L1(0.01)", L1, "c0 mass", 2 * lg * sinh(L1))
out("w(0.1)", mpf("0.1") * cosh(asinh(1 / sinh(mpf("0.05")))))
out("acosh10", acosh(10), "acosh100", acosh(100), "asinh1", asinh(1))
for lgs in ["0.1", "0.01", "0.001"]:
    lgm = mpf(lgs)
    l = lgm / (2 * pi)
    rho = asinh(1 / sinh(pi * l))
    out("deg lg", lgs, l * cosh(rho) - 1 / pi)
out("gd(1)", 2 * mpmath.atan(mpmath.tanh(mpf("0.5"))))
