#!/usr/bin/env python3
"""Reference values for the principal-value integrals used by the test suite.

Form factor: chi2(w) = (w/L)^p / (1 + (w/L)^2)^n with p=1, n=2, L=10.

Two independent routes are evaluated at 40 digits and must agree:
  * mpmath quadrature of the folded integrand [f(a+u) - f(a-u)]/u on [0, a]
    plus the regular tail on [2a, inf);
  * sympy partial fractions with the principal value taken analytically.

Run:  python3 tests/oracles/pv_golden.py
The printed constants are pasted into tests/golden.hpp.
"""
import mpmath as mp
import sympy as sp

mp.mp.dps = 40
P, N, LAM = 1, 2, mp.mpf(10)


def chi2(w):
    u = w / LAM
    return u**P / (1 + u**2) ** N


def pv_folded(a):
    a = mp.mpf(a)
    if a <= 0:
        return mp.quad(lambda w: chi2(w) / (w - a), [0, 1, LAM, mp.inf])
    inner = mp.quad(lambda u: (chi2(a + u) - chi2(a - u)) / u, [0, a])
    tail = mp.quad(lambda w: chi2(w) / (w - a), [2 * a, 2 * a + LAM, mp.inf])
    return inner + tail


def pv_sympy(a_val):
    x = sp.symbols("x", positive=True)
    a = sp.Rational(a_val).limit_denominator(10**6)
    L = sp.Integer(10)
    f = (x / L) / (1 + (x / L) ** 2) ** 2 / (x - a)
    eps = sp.symbols("eps", positive=True)
    F = sp.integrate(sp.apart(f, x), x)
    upper = sp.limit(F, x, sp.oo)
    val = sp.limit((F.subs(x, a - eps) - F.subs(x, 0)) + (upper - F.subs(x, a + eps)), eps, 0)
    return mp.mpf(sp.N(val, 40))


if __name__ == "__main__":
    g2 = mp.mpf("1e-3")
    for a in ["0.5", "1", "1.5", "2.5", "-0.5"]:
        v = pv_folded(a)
        if mp.mpf(a) > 0:
            s = pv_sympy(a)
            assert abs(v - s) < mp.mpf("1e-25"), (a, v, s)
        print(f"PV(eta={a}) = {mp.nstr(v, 20)}")
    print("delta_E FGR =", mp.nstr(g2 * pv_folded(1), 20))
    print("delta_E(B=0.5) =", mp.nstr(g2 / 2 * (pv_folded("1.5") + pv_folded("0.5")), 20))
    print("delta_E(B=1.5) =", mp.nstr(g2 / 2 * (pv_folded("2.5") + pv_folded("-0.5")), 20))
    print("chi2(1) =", mp.nstr(chi2(1), 20), " chi2(3) =", mp.nstr(chi2(3), 20))
