"""Casimir pressure between perfect electromagnetic conductor (PEMC) plates.

The public entry points are re-exported here; see the submodules for the
reflection matrices (:mod:`.media`), scattering pieces (:mod:`.scatter`) and
the polylogarithm (:mod:`.specfun`).
"""

from .errors import AccuracyError, DomainError, ResonanceError, SingularConfigurationError
from .force import (
    CASIMIR_NORMALIZED,
    ForceResult,
    PlatePair,
    QuadratureConfig,
    delta_crit,
    delta_crit_bisection,
    force_analytic,
    force_quadrature,
    force_quartic,
    sum_rule,
)
from .kernels import BACKEND
from .specfun import polylog_series, re_li4_quartic

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "BACKEND",
    "CASIMIR_NORMALIZED",
    "DomainError",
    "ForceResult",
    "PlatePair",
    "QuadratureConfig",
    "ResonanceError",
    "SingularConfigurationError",
    "delta_crit",
    "delta_crit_bisection",
    "force_analytic",
    "force_quadrature",
    "force_quartic",
    "polylog_series",
    "re_li4_quartic",
    "sum_rule",
]
