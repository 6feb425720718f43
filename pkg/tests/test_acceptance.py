"""Acceptance criteria 1-12, each at its stated tolerance.

Run with pytest (a PASS/FAIL line per criterion is printed in the terminal
summary) or directly: ``python tests/test_acceptance.py``.
"""

import cmath
import math
import time

import numpy as np
import pytest

from pemc_casimir import force as fm
from pemc_casimir.media import (
    PEC_MATRIX,
    PMC_MATRIX,
    BiIsotropicConstants,
    fresnel_cross_coeffs,
    pemc_reflection_from_m,
    pemc_reflection_from_theta,
    resolvent_closed_form,
    resolvent_neumann,
    theta_from_m,
)
from pemc_casimir.scatter import (
    ANGULAR_KINDS,
    angular_dyadic_integral,
    angular_dyadic_quadrature,
    curl_term_equality_check,
)

RESULTS = {}


def record(num, name, passed, detail):
    RESULTS[num] = (name, bool(passed), detail)
    return passed


def summary_lines():
    return [f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {name}: {detail}"
            for n, (name, ok, detail) in sorted(RESULTS.items())]


def c01_casimir_limit():
    t0 = time.perf_counter()
    pair = fm.PlatePair(0.0, 0.0)
    ref = -math.pi**2 / 240
    errs = {
        "analytic": abs(fm.force_analytic(pair).value / ref - 1),
        "quartic": abs(fm.force_quartic(0.0).value / ref - 1),
        "quadrature": abs(fm.force_quadrature(pair).value / ref - 1),
    }
    # quadrature oracle: int_0^inf x^3 / (e^{2x} - 1) dx = pi^4 / 240
    raw = fm.kernels.integrate_force(0.0, 0.0, 40.0, 1e-14, 1e-12, 200)[0]
    errs["raw integral"] = abs(raw / (math.pi**4 / 240) - 1)
    dt = time.perf_counter() - t0
    ok = max(errs.values()) <= 1e-10 and dt < 1.0
    return record(1, "Casimir limit", ok, f"max rel err {max(errs.values()):.2e} (tol 1e-10), {dt:.3f} s (< 1 s)")


def c02_boyer_ratio():
    ratio = fm.force_analytic(fm.PlatePair(math.pi / 2, 0.0)).value / fm.force_analytic(fm.PlatePair(0.0, 0.0)).value
    err = abs(ratio + 7 / 8)
    return record(2, "Boyer ratio", err <= 1e-12, f"|ratio + 7/8| = {err:.2e} (tol 1e-12)")


def c03_zero_force_angle():
    closed = fm.delta_crit()
    root = fm.delta_crit_bisection()
    ratio = closed / (math.pi / 4)
    ok = abs(closed - root) <= 1e-10 and abs(ratio - 0.96) <= 0.005
    return record(3, "zero-force angle", ok,
                  f"|closed - bisection| = {abs(closed - root):.2e} (tol 1e-10), ratio to pi/4 = {ratio:.5f}")


def c04_sum_rule():
    numeric = fm.sum_rule()
    exact = fm.sum_rule_exact()
    ok = abs(numeric) <= 1e-10 and abs(exact) <= 1e-10
    return record(4, "sum rule", ok, f"quadrature {numeric:.2e}, antiderivative {exact:.2e} (tol 1e-10)")


def c05_three_way():
    t0 = time.perf_counter()
    worst = 0.0
    for d in np.linspace(0.0, math.pi, 50):
        pair = fm.PlatePair(float(d), 0.0)
        a = fm.force_analytic(pair).value
        q = fm.force_quadrature(pair).value
        r = fm.force_quartic(float(d)).value
        worst = max(worst, abs(q - a) / abs(a), abs(r - a) / abs(a), abs(q - r) / abs(r))
    dt = time.perf_counter() - t0
    return record(5, "three-way agreement", worst <= 1e-10 and dt < 10.0,
                  f"max rel err {worst:.2e} (tol 1e-10) at 50 points, {dt:.2f} s (< 10 s)")


def c06_duality_periodicity():
    ref = abs(fm.CASIMIR_NORMALIZED)
    f = lambda tp, tm: fm.force_analytic(fm.PlatePair(tp, tm)).value
    # exact: dyadic grid where (tp + a) - (tm + a) == tp - tm in floating point
    grid = [k / 8.0 for k in range(-20, 21, 3)]
    exact = all(f(tp + a, tm + a) == f(tp, tm) for tp in grid[::2] for tm in grid[1::3] for a in (-2.5, 0.375, 1.0, 6.0))
    worst = 0.0
    for tp in np.linspace(-1.3, 2.9, 7):
        for tm in np.linspace(-0.7, 3.1, 5):
            for a in (-2.0, 0.37, 5.5):
                worst = max(worst, abs(f(tp + a, tm + a) - f(tp, tm)) / ref)
    for d in np.linspace(-3.0, 3.0, 25):
        worst = max(worst, abs(f(d + math.pi, 0.0) - f(d, 0.0)) / ref, abs(f(-d, 0.0) - f(d, 0.0)) / ref)
    return record(6, "duality invariance / periodicity", exact and worst <= 1e-12,
                  f"bitwise on dyadic grid: {exact}; max rel dev {worst:.2e} (tol 1e-12)")


def c07_parameterization():
    ms = np.logspace(-6, 6, 241)
    worst = max(float(np.abs(pemc_reflection_from_theta(theta_from_m(m)) - pemc_reflection_from_m(m)).max())
                for m in np.concatenate([ms, -ms]))
    exact = (np.array_equal(pemc_reflection_from_m(math.inf), PEC_MATRIX)
             and np.array_equal(pemc_reflection_from_m(0.0), PMC_MATRIX)
             and np.array_equal(pemc_reflection_from_m(-math.inf), PEC_MATRIX)
             and np.array_equal(pemc_reflection_from_theta(0.0), PEC_MATRIX))
    return record(7, "parameterization consistency", worst <= 1e-12 and exact,
                  f"max entry diff {worst:.2e} (tol 1e-12); PEC/PMC exact: {exact}")


def c08_resolvent():
    worst = 0.0
    for mag in (0.0, 0.2, 0.5, 0.8):
        for arg in (0.0, 1.1, -2.4):
            b = mag * cmath.exp(1j * arg)
            for tp, tm in ((0.0, 0.0), (0.9, 0.2), (2.0, 0.4), (0.3, 2.8)):
                rp, rm = pemc_reflection_from_theta(tp), pemc_reflection_from_theta(tm)
                for sign in (1, -1):
                    series = np.eye(2) - resolvent_neumann(rp, rm, b, 60, sign)
                    worst = max(worst, float(np.abs(resolvent_closed_form(b, tp - tm, sign) - series).max()))
    bound = 0.8**61 / 0.2
    return record(8, "resolvent oracle", worst <= 1e-12,
                  f"max diff {worst:.2e} (tol 1e-12); 60-term truncation bound at |b| = 0.8 is {bound:.2e}")


def c09_fresnel_limit():
    scales = np.array([1e3, 1e4, 1e5, 1e6])
    slopes = []
    for m in (-3.0, -0.5, 0.25, 1.0, 2.0, 7.0):
        target = pemc_reflection_from_m(m)
        errs = [np.abs(fresnel_cross_coeffs(BiIsotropicConstants.pemc_scaled(m, s), 1.0, 1.0) - target).max()
                for s in scales]
        slopes.append(np.polyfit(np.log10(scales), np.log10(errs), 1)[0])
    ok = all(abs(s + 1.0) <= 0.05 for s in slopes)
    return record(9, "Fresnel -> PEMC limit", ok,
                  f"log-log slopes {min(slopes):.4f}..{max(slopes):.4f} (expect -1 +- 0.05)")


def c10_angular():
    worst = 0.0
    cases = [(3.0, 4.0, 5.0, False), (0.5, 1.2, 1.3, False), (0.0, 2.0, 2.0, False), (1.0, 0.0, 1.0, False),
             (0.6, 1j, 0.8, True), (0.1, 2.5j, math.sqrt(6.24), True)]
    for k_par, k_perp, w, _ in cases:
        for kind in ANGULAR_KINDS:
            for sign in (1, -1):
                c = angular_dyadic_integral(kind, k_par, k_perp, w, sign)
                q = angular_dyadic_quadrature(kind, k_par, k_perp, w, sign, n=512)
                worst = max(worst, float(np.abs(c - q).max()))
    return record(10, "angular dyadic integrals", worst <= 1e-10, f"max entry diff {worst:.2e} (tol 1e-10)")


def c11_curl_equality():
    worst = 0.0
    for kl in np.geomspace(0.05, 10.0, 8):
        for d in np.linspace(0.0, math.pi, 7):
            curl, plain = curl_term_equality_check(float(kl), float(d), 1.0)
            worst = max(worst, abs(curl - plain) / max(abs(curl), abs(plain)))
    return record(11, "curl-term equality", worst <= 1e-11, f"max rel diff {worst:.2e} (tol 1e-11)")


def c12_si_sanity():
    v = fm.force_analytic(fm.PlatePair(0.0, 0.0, 1e-6), units="si").value
    dev = abs(v / -1.30e-3 - 1)
    return record(12, "SI sanity", dev <= 0.005, f"{v:.6e} N/m^2 at 1 um, deviation {dev:.2%} (tol 0.5%)")


CRITERIA = [c01_casimir_limit, c02_boyer_ratio, c03_zero_force_angle, c04_sum_rule, c05_three_way,
            c06_duality_periodicity, c07_parameterization, c08_resolvent, c09_fresnel_limit,
            c10_angular, c11_curl_equality, c12_si_sanity]


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: c.__name__)
def test_acceptance(criterion):
    passed = criterion()
    name, _, detail = RESULTS[int(criterion.__name__[1:3])]
    print(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")
    assert passed, detail


def test_resolvent_error_within_truncation_bound():
    # companion to criterion 8: the 60-term series misses the closed form by
    # no more than the geometric remainder |b|^61 / (1 - |b|)
    for mag in (0.2, 0.5, 0.8):
        bound = mag**61 / (1 - mag)
        for arg in (0.0, 1.1, -2.4):
            b = mag * cmath.exp(1j * arg)
            for tp, tm in ((0.0, 0.0), (0.9, 0.2), (0.3, 2.8)):
                rp, rm = pemc_reflection_from_theta(tp), pemc_reflection_from_theta(tm)
                for sign in (1, -1):
                    series = np.eye(2) - resolvent_neumann(rp, rm, b, 60, sign)
                    err = np.abs(resolvent_closed_form(b, tp - tm, sign) - series).max()
                    assert err <= bound * (1 + 1e-9) + 1e-14


if __name__ == "__main__":
    for c in CRITERIA:
        c()
    print("\n".join(summary_lines()))
