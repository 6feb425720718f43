"""Polylogarithm on the closed unit disk and the quartic form of Re Li4 on
the unit circle."""

import cmath
import math

from .errors import DomainError
from .kernels import li_partial_sum

TWO_PI = 2.0 * math.pi
MAX_TERMS = 50_000_000

# |z| may exceed 1 by a few ulp when built as exp(i*phi)
_UNIT_SLACK = 1e-14


def reduce_angle(phi):
    """Map ``phi`` into [0, 2*pi)."""
    r = math.fmod(phi, TWO_PI)
    if r < 0.0:
        r += TWO_PI
    return 0.0 if r >= TWO_PI else r


def series_tail_bound(n, r, K):
    """Upper bound on |sum_{k>K} z**k / k**n| for |z| = r <= 1.

    The better of the integral bound 1/((n-1) K**(n-1)) (n >= 2) and the
    geometric bound r**(K+1) / ((K+1)**n (1-r)) (r < 1).
    """
    bound = math.inf
    if n >= 2 and K >= 1:
        bound = 1.0 / ((n - 1) * float(K) ** (n - 1))
    if r < 1.0:
        if r == 0.0:
            return 0.0
        geo = math.exp((K + 1) * math.log(r) - n * math.log(K + 1)) / (1.0 - r)
        bound = min(bound, geo)
    return bound


def terms_needed(n, r, tol):
    """Smallest K with ``series_tail_bound(n, r, K) <= tol``."""
    if r == 0.0:
        return 0
    if series_tail_bound(n, r, MAX_TERMS) > tol:
        raise DomainError(f"tolerance {tol:g} needs more than {MAX_TERMS} terms")
    lo, hi = 0, 1
    while series_tail_bound(n, r, hi) > tol:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if series_tail_bound(n, r, mid) > tol:
            lo = mid
        else:
            hi = mid
    return hi


def polylog_series(n, z, tol=1e-14):
    """Li_n(z) = sum_{k>=1} z**k / k**n for |z| <= 1.

    The truncation order is chosen from the analytic tail bound, not from
    the size of the last term, so the returned partial sum is within ``tol``
    of the series limit.

    Parameters
    ----------
    n : int
        positive order; n >= 2 on the unit circle
    z : complex
        argument with |z| <= 1
    tol : float
        positive truncation tolerance

    Returns
    -------
    complex
    """
    if int(n) != n or n < 1:
        raise DomainError(f"order must be a positive integer, got {n!r}")
    n = int(n)
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("polylog argument must be finite")
    if not tol > 0.0:
        raise DomainError("tol must be positive")
    r = abs(z)
    if r > 1.0 + _UNIT_SLACK:
        raise DomainError(f"|z| = {r!r} > 1 is outside the series domain")
    if r >= 1.0 - _UNIT_SLACK:
        if n < 2:
            raise DomainError("Li_1 diverges on the unit circle")
        r = 1.0
    if r == 0.0:
        return 0j
    K = terms_needed(n, r, tol)
    re, im = li_partial_sum(n, r, cmath.phase(z), K)
    return complex(re, im)


def re_li4_quartic(phi):
    """Re Li4(exp(i phi)) = pi^4/90 - pi^2 phi^2/12 + pi phi^3/12 - phi^4/48.

    Valid only for 0 <= phi <= 2*pi; reduce with :func:`reduce_angle` first.
    """
    if not 0.0 <= phi <= TWO_PI:
        raise DomainError(f"phi = {phi!r} outside [0, 2 pi]; reduce it first")
    p = math.pi
    return p**4 / 90.0 - p * p * phi * phi / 12.0 + p * phi**3 / 12.0 - phi**4 / 48.0
