"""Casimir pressure between two PEMC plates.

Three independent evaluations of the same quantity:

* ``force_quadrature`` -- adaptive GK21 of the imaginary-frequency integrand,
* ``force_analytic``   -- -(3/8 pi^2) Re Li4(exp(2 i delta)) via the series,
* ``force_quartic``    -- -(1/8 pi^2) [pi^4/30 - delta^2 (pi - delta)^2].

Values are in units of hbar c / L^4 (``units="normalized"``) or N/m^2
(``units="si"``).  Negative means attraction of the plate at z = L.
"""

import cmath
import math
from dataclasses import dataclass

from scipy import optimize
from scipy.constants import c as SPEED_OF_LIGHT
from scipy.constants import hbar as HBAR

from . import kernels
from .errors import AccuracyError, DomainError
from .media import m_from_theta, theta_from_m
from .specfun import polylog_series

HBAR_C = HBAR * SPEED_OF_LIGHT
UNIT_SYSTEMS = ("normalized", "si")

# normalized Casimir pressure -pi^2/240 (PEC-PEC)
CASIMIR_NORMALIZED = -math.pi**2 / 240.0

SERIES_TOL = 1e-15


@dataclass(frozen=True)
class PlatePair:
    """Plate ``-`` at z = 0 with angle theta_minus, plate ``+`` at z = L."""

    theta_plus: float
    theta_minus: float
    separation: float = 1.0

    def __post_init__(self):
        if not self.separation > 0:
            raise DomainError("plate separation must be positive")

    @property
    def delta(self):
        return self.theta_plus - self.theta_minus

    @property
    def m_plus(self):
        return m_from_theta(self.theta_plus)

    @property
    def m_minus(self):
        return m_from_theta(self.theta_minus)

    @classmethod
    def from_m(cls, m_plus, m_minus, separation=1.0):
        return cls(theta_from_m(m_plus), theta_from_m(m_minus), separation)


@dataclass(frozen=True)
class ForceResult:
    value: float
    method: str
    abs_error_estimate: float
    unit_system: str

    def __post_init__(self):
        if not self.abs_error_estimate >= 0:
            raise ValueError("abs_error_estimate must be nonnegative")


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-12
    abs_tol: float = 1e-14
    max_subdivisions: int = 200
    x_cutoff: float = 40.0

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise DomainError("quadrature tolerances must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be at least 1")
        if tail_bound(self.x_cutoff) > self.abs_tol:
            raise DomainError(
                f"x_cutoff={self.x_cutoff} leaves a tail {tail_bound(self.x_cutoff):.3g} "
                f"above abs_tol={self.abs_tol:g}"
            )


def tail_bound(x_cutoff):
    """Bound on int_{x_c}^inf |integrand| dx, uniform in delta.

    |integrand| <= x^3 e^{-2x} / (1 - e^{-2x}) and the last factor is at
    most 1 / (1 - e^{-2 x_c}) on the tail.
    """
    x = float(x_cutoff)
    if x <= 0:
        return math.inf
    poly = x**3 / 2 + 3 * x**2 / 4 + 3 * x / 4 + 3.0 / 8
    return math.exp(-2 * x) * poly / -math.expm1(-2 * x)


def _unit_factor(units, separation):
    if units == "normalized":
        return 1.0
    if units == "si":
        return HBAR_C / separation**4
    raise DomainError(f"unknown unit system {units!r}; expected one of {UNIT_SYSTEMS}")


def reduce_delta(delta):
    """Map delta into [0, pi); the force has period pi."""
    r = math.fmod(delta, math.pi)
    if r < 0.0:
        r += math.pi
    return 0.0 if r >= math.pi else r


def force_integrand(x, delta):
    """x^3 (e^{2x} cos 2 delta - 1) / (1 - 2 e^{2x} cos 2 delta + e^{4x}).

    Accepts scalars or arrays of ``x >= 0``.
    """
    return kernels.force_integrand(x, delta)


def casimir_reference(separation=1.0, units="normalized"):
    """PEC-PEC pressure -pi^2 hbar c / (240 L^4)."""
    return CASIMIR_NORMALIZED * _unit_factor(units, separation)


def force_quadrature(pair, cfg=None, units="normalized"):
    cfg = cfg or QuadratureConfig()
    value, err, _, converged = kernels.integrate_force(
        pair.delta, 0.0, cfg.x_cutoff, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions
    )
    scale = -_unit_factor(units, pair.separation) / math.pi**2
    total_err = abs(scale) * (err + tail_bound(cfg.x_cutoff))
    if not converged:
        raise AccuracyError(
            f"quadrature did not converge in {cfg.max_subdivisions} subdivisions",
            estimate=scale * value,
            abs_error=total_err,
        )
    return ForceResult(scale * value, "quadrature", total_err, units)


def force_analytic(pair, units="normalized", tol=SERIES_TOL):
    """-(3/8 pi^2) Re Li4(exp(2 i delta)), series-evaluated; depends on the
    plates only through delta."""
    z = cmath.exp(2j * pair.delta)
    li4 = polylog_series(4, z, tol).real
    scale = -3.0 * _unit_factor(units, pair.separation) / (8.0 * math.pi**2)
    return ForceResult(scale * li4, "analytic", abs(scale) * tol, units)


def quartic_bracket(delta):
    return math.pi**4 / 30.0 - delta * delta * (math.pi - delta) ** 2


def force_quartic(delta, separation=1.0, units="normalized"):
    """-(1/8 pi^2) [pi^4/30 - delta^2 (pi - delta)^2], for 0 <= delta <= pi."""
    if not 0.0 <= delta <= math.pi:
        raise DomainError(f"delta = {delta!r} outside [0, pi]; reduce it first")
    scale = -_unit_factor(units, separation) / (8.0 * math.pi**2)
    value = scale * quartic_bracket(delta)
    return ForceResult(value, "quartic", 4 * math.ulp(abs(value) + abs(scale)), units)


def force(pair, method="analytic", cfg=None, units="normalized"):
    """Dispatch on ``method``; the quartic path reduces delta first."""
    if method == "analytic":
        return force_analytic(pair, units)
    if method == "quadrature":
        return force_quadrature(pair, cfg, units)
    if method == "quartic":
        return force_quartic(reduce_delta(pair.delta), pair.separation, units)
    raise ValueError(f"unknown method {method!r}")


def delta_crit():
    """Zero-force phase shift (pi/2) (1 - sqrt(1 - 2 sqrt(2/15)))."""
    return 0.5 * math.pi * (1.0 - math.sqrt(1.0 - 2.0 * math.sqrt(2.0 / 15.0)))


def delta_crit_bisection(xtol=1e-15):
    """Bisection root of the quartic force on [0, pi/2]."""
    return optimize.bisect(
        lambda d: force_quartic(d).value, 0.0, 0.5 * math.pi, xtol=xtol, rtol=4 * 2.0**-52,
        maxiter=200,
    )


def sum_rule(cfg=None, upper=0.5 * math.pi):
    """int_0^upper f(delta) d delta of the normalized analytic force, divided
    by |f(0)| * pi / 2.  Vanishes for upper = pi/2."""
    cfg = cfg or QuadratureConfig()

    def f(deltas):
        return [force_analytic(PlatePair(d, 0.0)).value for d in deltas]

    value, err, _, converged = kernels.adaptive_gk(
        f, 0.0, upper, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions
    )
    if not converged:
        raise AccuracyError("sum-rule quadrature did not converge", value, err)
    return value / (abs(CASIMIR_NORMALIZED) * 0.5 * math.pi)


def sum_rule_exact(upper=0.5 * math.pi):
    """Same integral from the antiderivative of the quartic bracket:
    pi^4 d/30 - (pi^2 d^3/3 - pi d^4/2 + d^5/5)."""
    d = upper
    anti = math.pi**4 * d / 30.0 - (math.pi**2 * d**3 / 3.0 - math.pi * d**4 / 2.0 + d**5 / 5.0)
    return -anti / (8.0 * math.pi**2) / (abs(CASIMIR_NORMALIZED) * 0.5 * math.pi)
