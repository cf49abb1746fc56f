#!/usr/bin/env python3
"""Regenerates the frozen reference values in fixtures.hpp.

All values are computed with mpmath at 50 significant digits (working
precision 80) and printed with 25 digits, which is far below the working
precision, so every printed digit is trustworthy.  The formulas used here
are independent of the C++ implementation paths they are used to check:
hypergeometric values come from mpmath.hyp2f1 (its own analytic
continuation machinery), derivatives from high-precision numerical
differentiation, and integrals from mpmath.quad.

Parameters are spelled as float literals on purpose: the reference must be
computed at the exact binary double the library receives, not at the decimal
value it prints as (the difference is ~1e-16 relative and visible in any
fixture tighter than ~1e-13).
"""

import mpmath as mp

mp.mp.dps = 80
OUT = 25


def g_right(lam, nu, x):
    """2F1(-nu, nu+2*lam; lam+1/2; (1-x)/2)."""
    return mp.hyp2f1(-nu, nu + 2 * lam, lam + mp.mpf(1) / 2, (1 - x) / 2)


def show(name, value):
    print(f"inline constexpr double {name} = {mp.nstr(mp.mpf(value), OUT)};")


def show2(name, value):
    re, im = mp.re(value), mp.im(value)
    print(f"// {name}: ({mp.nstr(re, OUT)}, {mp.nstr(im, OUT)})")


def main():
    one = mp.mpf(1)

    print("// --- log-gamma / pochhammer / 2F1 ---")
    show("kLnFactorial20", mp.log(mp.factorial(20)))
    show("kHyp2f1Generic", mp.hyp2f1(mp.mpf(-1.3), mp.mpf(2.7),
                                     mp.mpf(1.2), mp.mpf(0.25)))

    print("// --- series evaluation ---")
    show("kG_l07_n203_t10", g_right(mp.mpf(0.7), mp.mpf(20.3), mp.cos(1)))
    show("kG_l16_n203_t10", g_right(mp.mpf(1.6), mp.mpf(20.3), mp.cos(1)))
    # near x = -1 (connection-formula territory), incl. half-integer lambdas
    show("kG_l07_n203_t30", g_right(mp.mpf(0.7), mp.mpf(20.3), mp.cos(3)))
    show("kG_l23_n203_t30", g_right(mp.mpf(2.3), mp.mpf(20.3), mp.cos(3)))
    show("kG_l31_n203_t305", g_right(mp.mpf(3.1), mp.mpf(20.3), mp.cos(mp.mpf(3.05))))
    show("kG_l05_n501_t30", g_right(mp.mpf(0.5), mp.mpf(50.1), mp.cos(3)))
    show("kG_l05_n203_t3138", g_right(mp.mpf(0.5), mp.mpf(20.3), mp.cos(mp.mpf(3.138))))
    show("kG_l15_n501_t3138", g_right(mp.mpf(1.5), mp.mpf(50.1), mp.cos(mp.mpf(3.138))))
    show("kG_l45_n203_t31", g_right(mp.mpf(4.5), mp.mpf(20.3), mp.cos(mp.mpf(3.1))))
    # mid-range cancellation stress (z = 1/2)
    show("kG_l20_n501_t157", g_right(mp.mpf(2.0), mp.mpf(50.1), mp.cos(mp.pi / 2)))
    # integer-degree polynomial value
    show("kGegenbauer_n50_l25_x09",
         mp.jacobi(50, 2, 2, mp.mpf(0.9)) / mp.jacobi(50, 2, 2, 1))

    print("// --- derivatives (high-precision numerical differentiation) ---")
    lam, nu = mp.mpf(1.2), mp.mpf(5.5)
    show("kD2G_l12_n55_t11",
         mp.diff(lambda x: g_right(lam, nu, x), mp.cos(mp.mpf(1.1)), 2))
    lam, nu = mp.mpf(0.8), mp.mpf(7.3)
    show("kD1G_l08_n73_t09",
         mp.diff(lambda x: g_right(lam, nu, x), mp.cos(mp.mpf(0.9)), 1))

    print("// --- recurrence seeds/targets ---")
    lam = mp.mpf(1.6)
    x = mp.mpf(0.45)
    show("kG_l16_n32_x045", g_right(lam, mp.mpf(3.2), x))
    show("kG_l16_n42_x045", g_right(lam, mp.mpf(4.2), x))
    show("kG_l16_n52_x045", g_right(lam, mp.mpf(5.2), x))

    print("// --- endpoint coefficients ---")
    def q_coeff(lam, nu):
        return (-mp.sin(nu * mp.pi) / mp.pi * mp.gamma(lam - one / 2)
                * mp.gamma(lam + one / 2) * mp.gamma(nu + 1) / mp.gamma(nu + 2 * lam))
    show("kQ_l16_n37", q_coeff(mp.mpf(1.6), mp.mpf(3.7)))
    show("kQ_l23_n203", q_coeff(mp.mpf(2.3), mp.mpf(20.3)))

    print("// --- asymptotic leading / residual / bounds ---")
    def leading(lam, nu, th):
        return (2 ** lam * mp.gamma(lam + one / 2) / (mp.sqrt(mp.pi) * (nu + lam) ** lam)
                * mp.cos((nu + lam) * th - lam * mp.pi / 2))

    def residual(lam, nu, th):
        return mp.sin(th) ** lam * g_right(lam, nu, mp.cos(th)) - leading(lam, nu, th)

    show("kLead_l07_n203_t10", leading(mp.mpf(0.7), mp.mpf(20.3), one))
    show("kRes_l23_n203_t12", residual(mp.mpf(2.3), mp.mpf(20.3), mp.mpf(1.2)))
    show("kRes_l07_n203_t10", residual(mp.mpf(0.7), mp.mpf(20.3), one))

    def bound_s_case2(lam, nu, th):
        cot = mp.cos(th) / mp.sin(th)
        lead = (lam * (lam - 1) * 2 ** (3 * lam / 2) * mp.gamma(lam + one / 2)
                / (mp.sqrt(mp.pi) * (nu + 1) ** (lam + 1)))
        extra = (2 ** (2 - lam) * mp.gamma(2 * lam - 1) / mp.gamma(lam + 1)
                 * (nu + 1) ** (lam + 1) / (nu - lam + 3) ** (2 * lam - 1)
                 * abs(cot) ** (lam - 2)
                 * (abs(cot) + mp.mpf(2) / 3 * (2 * lam - 1) / (nu - lam + 3)))
        return lead * (abs(cot) + mp.mpf(2) / 3 * (lam + 1) / (nu + 1) + extra)
    show("kS_l31_n203_t10", bound_s_case2(mp.mpf(3.1), mp.mpf(20.3), one))

    def bound_b_case1(lam, nu):
        return (lam * abs(lam - 1) * 2 ** lam * mp.gamma(lam + one / 2) / mp.sqrt(mp.pi)
                * (3 * nu + 5 * lam - 1) / (3 * (nu + lam - 1))
                * mp.exp((1 - lam ** 2) / (nu + lam - 1)))
    show("kB_l07_n203", bound_b_case1(mp.mpf(0.7), mp.mpf(20.3)))

    def bound_b_case2(lam, nu, c):
        return (lam * (lam - 1) * 2 ** (3 * lam / 2) * mp.gamma(lam + one / 2)
                / (3 * mp.sqrt(mp.pi))
                * ((3 * nu + 2 * lam + 5) / (nu + 1)
                   + (c * mp.pi) ** (lam - 2) * mp.gamma(2 * lam - 1) / mp.gamma(lam + 1)
                   * (3 * nu + lam + 7) / (nu - lam + 3)
                   * mp.exp((2 * lam - 5) * (lam + 1) / (nu - lam + 3))))
    show("kB_l31_n203_c1", bound_b_case2(mp.mpf(3.1), mp.mpf(20.3), 1))

    print("// --- contour kernels ---")
    def kern_g(th, t):
        return (mp.cos(th - mp.mpc(0, 1) * t) - mp.cos(th)) / t

    def kern_f(lam, th, t):
        return (kern_g(th, t) ** (lam - 1) - (mp.mpc(0, 1) * mp.sin(th)) ** (lam - 1)) / t

    gv = kern_g(one, mp.mpf(0.5))
    show("kKernG_t10_05_re", mp.re(gv))
    show("kKernG_t10_05_im", mp.im(gv))
    fv = kern_f(mp.mpf(2.3), one, mp.mpf(0.7))
    show("kKernF_l23_t10_07_re", mp.re(fv))
    show("kKernF_l23_t10_07_im", mp.im(fv))

    def f_bound_case2(lam, th, t):
        cot = abs(mp.cos(th) / mp.sin(th))
        return (2 ** (lam / 2) * (lam - 1) * mp.sin(th) ** (lam - 1)
                * (cot + 2 * t / 3)
                * (1 + cot ** (lam - 2) / 2 ** (lam - 2) * t ** (lam - 2)
                   * mp.exp((lam - 2) * t)) * mp.exp((lam - 1) * t))
    show("kFBound_l31_t08_05", f_bound_case2(mp.mpf(3.1), mp.mpf(0.8), mp.mpf(0.5)))

    print("// --- weighted pair (case i: weight sin(theta)) ---")
    lam, nu, th = mp.mpf(0.7), mp.mpf(20.3), mp.mpf(1.5)
    show("kWR_l07_n203_t15", mp.sin(th) * residual(lam, nu, th))

    print("// --- Szego-form leading for integer degree ---")
    def szego(n, lam, th):
        return (2 ** lam * mp.gamma(n + lam + one / 2)
                / (mp.sqrt(mp.pi) * mp.factorial(n) * (n + lam) ** lam)
                * mp.cos((n + lam) * th - lam * mp.pi / 2))
    show("kSzego_n200_l08_t157", szego(200, mp.mpf(0.8), mp.pi / 2))
    show("kSzego_n100_l08_t05", szego(100, mp.mpf(0.8), mp.mpf(0.5)))

    print("// --- quadrature calibration ---")
    show("kBeta13_06", mp.beta(mp.mpf(1.3), mp.mpf(0.6)))
    show("kGamma17_rate21", mp.gamma(mp.mpf(1.7)) / 21 ** mp.mpf(1.7))

    print("// --- fractional-integral identity, lambda=0.4 nu=2.7 s=0.5 x=0.3 ---")
    lam, nu, s, x = mp.mpf(0.4), mp.mpf(2.7), mp.mpf(0.5), mp.mpf(0.3)
    rhs = (mp.gamma(lam + one / 2) / (2 ** s * mp.gamma(lam + s + one / 2))
           * (1 - x * x) ** (lam + s - one / 2) * g_right(lam + s, nu - s, x))
    show("kFci_rhs_l04_n27_s05_x03", rhs)
    lhs = mp.quad(lambda y: (1 - y * y) ** (lam - one / 2) * g_right(lam, nu, y)
                  / (y - x) ** (1 - s), [x, x + mp.mpf(0.05), 1]) / mp.gamma(s)
    show("kFci_lhs_l04_n27_s05_x03", lhs)

    print("// --- envelope constants (max-norm bounds) ---")
    def rho_env(lam, nu):
        return (mp.gamma(lam + one / 2) / mp.sqrt(mp.pi) * mp.sqrt(
            mp.cos(mp.pi * nu / 2) ** 2 * mp.gamma(nu / 2 + one / 2) ** 2
            / mp.gamma((nu + 1) / 2 + lam) ** 2
            + 4 * mp.sin(mp.pi * nu / 2) ** 2 / (nu * nu + 2 * lam * nu + lam)
            * mp.gamma(nu / 2 + 1) ** 2 / mp.gamma(nu / 2 + lam) ** 2))

    def kappa_env(lam, nu):
        return (mp.gamma(lam + one / 2) / mp.sqrt(mp.pi) * mp.sqrt(
            mp.cos(mp.pi * nu / 2) ** 2 * mp.gamma((nu + 1) / 2) ** 2
            / mp.gamma((nu + 1) / 2 + lam) ** 2
            + 4 * mp.sin(mp.pi * nu / 2) ** 2 / (2 * lam - 1 + nu * (nu + 2 * lam))
            * mp.gamma(nu / 2 + 1) ** 2 / mp.gamma(nu / 2 + lam) ** 2))
    show("kRhoEnv_l03_n203", rho_env(mp.mpf(0.3), mp.mpf(20.3)))
    show("kKappaEnv_l25_n203", kappa_env(mp.mpf(2.5), mp.mpf(20.3)))

    print("// --- 50-digit decimal strings for the oracle cross-check ---")
    mp.mp.dps = 80
    v = g_right(mp.mpf(0.7), mp.mpf(20.3), mp.cos(1))
    print(f'inline constexpr const char* kOracleStr_l07_n203_t10 = "{mp.nstr(v, 50)}";')
    v = g_right(mp.mpf(2.3), mp.mpf(20.3), mp.cos(3))
    print(f'inline constexpr const char* kOracleStr_l23_n203_t30 = "{mp.nstr(v, 50)}";')


if __name__ == "__main__":
    main()
