"""Verification battery run by ``pemc-casimir verify``.

Every check returns a :class:`Check`; the battery passes only if all do.
Tolerances are fixed here, not tuned per run.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import force as fm
from .media import (
    BiIsotropicConstants,
    PEC_MATRIX,
    PMC_MATRIX,
    fresnel_cross_coeffs,
    pemc_reflection_from_m,
    pemc_reflection_from_theta,
    resolvent_closed_form,
    resolvent_neumann,
    theta_from_m,
)
from .scatter import (
    ANGULAR_KINDS,
    angular_dyadic_integral,
    angular_dyadic_quadrature,
    curl_term_equality_check,
)
from .specfun import polylog_series, re_li4_quartic


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    error: float
    tolerance: float
    detail: str = ""


def _check(name, error, tolerance, detail=""):
    error = float(error)
    return Check(name, bool(error <= tolerance), error, tolerance, detail)


def three_way_deltas(n=50):
    return np.linspace(0.0, math.pi, n)


def check_casimir_limit(cfg):
    pair = fm.PlatePair(0.0, 0.0)
    ref = fm.CASIMIR_NORMALIZED
    vals = (
        fm.force_analytic(pair).value,
        fm.force_quartic(0.0).value,
        fm.force_quadrature(pair, cfg).value,
    )
    err = max(abs(v - ref) / abs(ref) for v in vals)
    return _check("casimir_limit", err, 1e-10, "analytic, quartic, quadrature vs -pi^2/240")


def check_boyer_ratio(cfg):
    ratio = fm.force_analytic(fm.PlatePair(0.5 * math.pi, 0.0)).value / fm.force_analytic(
        fm.PlatePair(0.0, 0.0)
    ).value
    return _check("boyer_ratio", abs(ratio + 7.0 / 8.0), 1e-12, f"f(pi/2)/f(0) = {ratio!r}")


def check_zero_force_angle(cfg):
    closed = fm.delta_crit()
    root = fm.delta_crit_bisection()
    ratio = closed / (0.25 * math.pi)
    ok_ratio = abs(ratio - 0.96) <= 0.005
    c = _check("zero_force_angle", abs(closed - root), 1e-10, f"ratio to pi/4 = {ratio:.6f}")
    return Check(c.name, c.passed and ok_ratio, c.error, c.tolerance, c.detail)


def check_sum_rule(cfg):
    numeric = fm.sum_rule(cfg)
    exact = fm.sum_rule_exact()
    err = max(abs(numeric), abs(exact))
    return _check("sum_rule", err, 1e-10, f"quadrature {numeric:.3e}, antiderivative {exact:.3e}")


def check_three_way(cfg, fault=0.0):
    worst = 0.0
    for d in three_way_deltas():
        pair = fm.PlatePair(float(d), 0.0)
        a = fm.force_analytic(pair).value
        q = fm.force_quadrature(pair, cfg).value
        r = fm.force_quartic(float(d)).value * (1.0 + fault)
        worst = max(worst, abs(q - a) / abs(a), abs(r - a) / abs(a))
    return _check("three_way_agreement", worst, 1e-10, "50 points in [0, pi]")


def check_duality_and_period(cfg):
    worst = 0.0
    ref = abs(fm.CASIMIR_NORMALIZED)
    for tp in np.linspace(-1.3, 2.9, 7):
        for tm in np.linspace(-0.7, 3.1, 5):
            base = fm.force_analytic(fm.PlatePair(tp, tm)).value
            for alpha in (-2.0, 0.37, 1.0, 5.5):
                shifted = fm.force_analytic(fm.PlatePair(tp + alpha, tm + alpha)).value
                worst = max(worst, abs(shifted - base) / ref)
    for d in np.linspace(-3.0, 3.0, 25):
        base = fm.force_analytic(fm.PlatePair(d, 0.0)).value
        for other in (d + math.pi, -d):
            worst = max(worst, abs(fm.force_analytic(fm.PlatePair(other, 0.0)).value - base) / ref)
    return _check("duality_invariance_periodicity", worst, 1e-12)


def check_scaling_law(cfg):
    ref = fm.force_analytic(fm.PlatePair(0.4, 0.1, 1.0), units="si").value
    worst = 0.0
    for L in (1e-8, 3e-7, 1e-6, 2.5e-5):
        v = fm.force_analytic(fm.PlatePair(0.4, 0.1, L), units="si").value * L**4
        worst = max(worst, abs(v - ref) / abs(ref))
    return _check("scaling_law", worst, 1e-12, "f(L) L^4 constant")


def check_parameterization(cfg):
    ms = np.logspace(-6, 6, 121)
    worst = 0.0
    for m in np.concatenate([ms, -ms, [0.0]]):
        diff = pemc_reflection_from_theta(theta_from_m(m)) - pemc_reflection_from_m(m)
        worst = max(worst, float(np.abs(diff).max()))
    exact = (
        np.array_equal(pemc_reflection_from_m(math.inf), PEC_MATRIX)
        and np.array_equal(pemc_reflection_from_m(-math.inf), PEC_MATRIX)
        and np.array_equal(pemc_reflection_from_m(0.0), PMC_MATRIX)
        and np.array_equal(pemc_reflection_from_theta(0.0), PEC_MATRIX)
    )
    c = _check("parameterization_consistency", worst, 1e-12, f"PEC/PMC limits exact: {exact}")
    return Check(c.name, c.passed and exact, c.error, c.tolerance, c.detail)


def check_resolvent(cfg, terms=60):
    """Closed form vs the ``terms``-term Neumann series; each point must sit
    within the geometric truncation bound |b|^(N+1)/(1-|b|) (plus rounding)."""
    worst = 0.0
    for mag in (0.0, 0.1, 0.35, 0.6, 0.8):
        bound = mag ** (terms + 1) / (1.0 - mag) * (1.0 + 1e-9) + 1e-14
        for arg in (0.0, 1.1, -2.4):
            b = mag * cmath.exp(1j * arg)
            for tp, tm in ((0.0, 0.0), (0.9, 0.2), (2.0, 0.4), (0.3, 2.8)):
                rp = pemc_reflection_from_theta(tp)
                rm = pemc_reflection_from_theta(tm)
                for sign in (1, -1):
                    closed = resolvent_closed_form(b, tp - tm, sign)
                    series = np.eye(2) - resolvent_neumann(rp, rm, b, terms, sign)
                    worst = max(worst, float(np.abs(closed - series).max()) / bound)
    return _check("resolvent_oracle", worst, 1.0,
                  f"closed form vs {terms}-term Neumann series, error / truncation bound")


def fresnel_limit_errors(m=2.0, scales=(1e3, 1e4, 1e5, 1e6)):
    target = pemc_reflection_from_m(m)
    out = []
    for s in scales:
        r = fresnel_cross_coeffs(BiIsotropicConstants.pemc_scaled(m, s), 1.0, 1.0)
        out.append((s, float(np.abs(r - target).max())))
    return out


def check_fresnel_limit(cfg):
    worst = 0.0
    slopes = []
    for m in (-3.0, -0.5, 0.25, 1.0, 2.0, 7.0):
        errs = fresnel_limit_errors(m)
        worst = max(worst, max(e * s / 10.0 for s, e in errs))
        logs = np.log10([s for s, _ in errs])
        loge = np.log10([e for _, e in errs])
        slopes.append(float(np.polyfit(logs, loge, 1)[0]))
    rate_ok = all(abs(sl + 1.0) < 0.05 for sl in slopes)
    c = _check("fresnel_pemc_limit", worst, 1.0, f"error*s/10 <= 1; log-log slopes {min(slopes):.3f}..{max(slopes):.3f}")
    return Check(c.name, c.passed and rate_ok, c.error, c.tolerance, c.detail)


def check_angular(cfg):
    worst = 0.0
    for k_par, k_perp, w in ((3.0, 4.0, 5.0), (0.5, 1.2, 1.3), (0.0, 2.0, 2.0), (1.0, 0.0, 1.0)):
        for kind in ANGULAR_KINDS:
            for sign in (1, -1):
                closed = angular_dyadic_integral(kind, k_par, k_perp, w, sign)
                numeric = angular_dyadic_quadrature(kind, k_par, k_perp, w, sign, n=512)
                worst = max(worst, float(np.abs(closed - numeric).max()))
    for kappa, k_par in ((1.0, 0.6), (2.5, 0.1)):
        xi = math.sqrt(kappa**2 - k_par**2)
        for kind in ANGULAR_KINDS:
            closed = angular_dyadic_integral(kind, k_par, 1j * kappa, xi)
            numeric = angular_dyadic_quadrature(kind, k_par, 1j * kappa, xi, n=512)
            worst = max(worst, float(np.abs(closed - numeric).max()))
    return _check("angular_dyadic_integrals", worst, 1e-10, "closed form vs 512-point trapezoid")


def curl_grid():
    return np.geomspace(0.05, 10.0, 7), np.linspace(0.0, math.pi, 7)


def check_curl_equality(cfg):
    worst = 0.0
    kls, deltas = curl_grid()
    for kl in kls:
        for d in deltas:
            curl, plain = curl_term_equality_check(float(kl), float(d), 1.0)
            scale = max(abs(curl), abs(plain))
            if scale > 0:
                worst = max(worst, abs(curl - plain) / scale)
    return _check("curl_term_equality", worst, 1e-11, "kappa L in [0.05, 10], delta in [0, pi]")


def check_stress_reduction(cfg):
    worst = 0.0
    L = 1.3
    kls, deltas = curl_grid()
    for kl in kls:
        for d in deltas:
            curl, plain = curl_term_equality_check(float(kl) / L, float(d), L)
            from_stress = -0.5 * math.pi * L**3 * (curl + plain)
            direct = fm.force_integrand(float(kl), float(d))
            scale = kl**3 * math.exp(-2 * kl)
            worst = max(worst, abs(from_stress - direct) / scale)
    return _check("stress_reduction", worst, 1e-11, "even-term zz stress vs force integrand")


def check_polylog_quartic(cfg):
    worst = 0.0
    for phi in np.linspace(0.0, 2 * math.pi, 200):
        series = polylog_series(4, cmath.exp(1j * phi), 1e-14).real
        worst = max(worst, abs(series - re_li4_quartic(float(phi))))
    return _check("polylog_quartic", worst, 1e-11, "200-point grid on the unit circle")


def check_si_sanity(cfg):
    value = fm.force_analytic(fm.PlatePair(0.0, 0.0, 1e-6), units="si").value
    return _check("si_sanity", abs(value / -1.30e-3 - 1.0), 0.005, f"{value:.6e} N/m^2 at L = 1 um")


BATTERY = (
    check_casimir_limit,
    check_boyer_ratio,
    check_zero_force_angle,
    check_sum_rule,
    check_three_way,
    check_duality_and_period,
    check_scaling_law,
    check_parameterization,
    check_resolvent,
    check_fresnel_limit,
    check_angular,
    check_curl_equality,
    check_stress_reduction,
    check_polylog_quartic,
    check_si_sanity,
)


def run_battery(cfg=None, fault=0.0):
    """Run every check; ``fault`` perturbs the quartic force (testing only)."""
    cfg = cfg or fm.QuadratureConfig()
    results = []
    for check in BATTERY:
        if check is check_three_way:
            results.append(check(cfg, fault=fault))
        else:
            results.append(check(cfg))
    return results
