"""Plate materials: bi-isotropic constants, the PEMC parameter M, the duality
angle theta, 2x2 reflection matrices in (s, p) space and the
multiple-reflection resolvent between two plates.

Reflection matrices and resolvents are plain ``numpy`` 2x2 arrays, rows and
columns ordered (s, p).
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ResonanceError, SingularConfigurationError

PEC_MATRIX = np.array([[-1.0, 0.0], [0.0, 1.0]])
PMC_MATRIX = np.array([[1.0, 0.0], [0.0, -1.0]])

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class BiIsotropicConstants:
    """Relative constants of a bi-isotropic medium, D = eps E + xi H,
    B = mu H + zeta E (natural units)."""

    eps: float
    mu: float
    xi: float = 0.0
    zeta: float = 0.0

    def __post_init__(self):
        if self.mu == 0:
            raise DomainError("mu must be nonzero")

    @property
    def index_squared(self):
        return self.eps * self.mu - self.xi * self.zeta

    @classmethod
    def pemc_scaled(cls, m, s):
        """Strong-response medium eps = s M^2, mu = s, xi = zeta = s M; tends to
        the PEMC with parameter M as s -> infinity."""
        return cls(eps=s * m * m, mu=s, xi=s * m, zeta=s * m)


def theta_from_m(m):
    """Duality angle theta in [0, pi) with cot(theta) = M; M = +-inf gives 0."""
    m = float(m)
    if math.isinf(m):
        return 0.0
    return math.atan2(1.0, m)


def m_from_theta(theta):
    """PEMC parameter M = cot(theta); theta = 0 (mod pi) gives +inf."""
    s = math.sin(theta)
    if s == 0.0:
        return math.inf
    return math.cos(theta) / s


def reduce_theta(theta):
    """Canonical duality angle in [0, pi)."""
    r = math.fmod(theta, math.pi)
    if r < 0.0:
        r += math.pi
    return 0.0 if r >= math.pi else r


def pemc_reflection_from_m(m):
    """R = 1/(1+M^2) [[1-M^2, -2M], [-2M, M^2-1]]; exact PEC limit at M = +-inf."""
    m = float(m)
    if math.isinf(m):
        return PEC_MATRIX.copy()
    if abs(m) <= 1.0:
        d = 1.0 + m * m
        diag = (1.0 - m * m) / d
        off = -2.0 * m / d
    else:
        u = 1.0 / m
        d = u * u + 1.0
        diag = (u * u - 1.0) / d
        off = -2.0 * u / d
    return np.array([[diag, off], [off, -diag]])


def pemc_reflection_from_theta(theta):
    """R(theta) = [[-cos 2t, -sin 2t], [-sin 2t, cos 2t]].

    Equal to :func:`pemc_reflection_from_m` at M = cot(theta).
    """
    c = math.cos(2.0 * theta)
    s = math.sin(2.0 * theta)
    return np.array([[-c, -s], [-s, c]])


def perp_wavevector(mat, omega_over_c, k_par):
    """Perpendicular wavenumber sqrt(n^2 (w/c)^2 - k_par^2), n^2 = eps mu - xi zeta,
    on the branch with Im >= 0."""
    if omega_over_c < 0 or k_par < 0:
        raise DomainError("omega_over_c and k_par must be nonnegative")
    k = cmath.sqrt(mat.index_squared * omega_over_c**2 - k_par**2)
    if k.imag < 0.0 or (k.imag == 0.0 and k.real < 0.0):
        k = -k
    return k


def fresnel_cross_coeffs(mat, k1_perp, k2_perp):
    """Reflection matrix of a vacuum / Tellegen-medium (xi = zeta) interface.

    ``k1_perp`` is the perpendicular wavenumber on the vacuum side,
    ``k2_perp`` inside the medium.  With n^2 = eps mu - xi^2 and the common
    denominator Delta = n^2 k1^2 + (eps + mu) k1 k2 + k2^2::

        r_ss = [n^2 k1^2 - k2^2 + (mu - eps) k1 k2] / Delta
        r_pp = [n^2 k1^2 - k2^2 + (eps - mu) k1 k2] / Delta
        r_sp = r_ps = -2 xi k1 k2 / Delta

    At xi = 0 these are the ordinary TE/TM Fresnel coefficients; under
    eps = s M^2, mu = s, xi = zeta = s M they tend to
    :func:`pemc_reflection_from_m` with an O(1/s) error.
    """
    if mat.xi != mat.zeta:
        raise DomainError("cross-polarisabilities must satisfy xi == zeta")
    eps, mu, xi = mat.eps, mat.mu, mat.xi
    n2 = mat.index_squared
    k1 = complex(k1_perp)
    k2 = complex(k2_perp)
    base = n2 * k1 * k1 - k2 * k2
    cross = k1 * k2
    delta = n2 * k1 * k1 + (eps + mu) * cross + k2 * k2
    scale = abs(n2 * k1 * k1) + abs((eps + mu) * cross) + abs(k2 * k2)
    if delta == 0 or abs(delta) <= 8 * _EPS * scale:
        raise SingularConfigurationError("vanishing Fresnel denominator")
    r_ss = (base + (mu - eps) * cross) / delta
    r_pp = (base + (eps - mu) * cross) / delta
    r_sp = -2.0 * xi * cross / delta
    return np.array([[r_ss, r_sp], [r_sp, r_pp]])


def resolvent_closed_form(b, delta, sign=+1):
    """Closed-form multiple-reflection matrix for two PEMC plates.

    b/(1 - 2 b cos 2d + b^2) [[b - cos 2d, +-sin 2d], [-+sin 2d, b - cos 2d]]

    This equals ``I - resolvent_neumann(R(theta+), R(theta-), b)`` for
    ``sign=+1`` (round trip R+ R-), and the transpose for ``sign=-1``.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    b = complex(b)
    c = math.cos(2.0 * delta)
    s = sign * math.sin(2.0 * delta)
    den = 1.0 - 2.0 * b * c + b * b
    if abs(den) <= 8 * _EPS * (1.0 + abs(b)) ** 2:
        raise ResonanceError(f"resolvent singular at b={b!r}, delta={delta!r}")
    pref = b / den
    return pref * np.array([[b - c, s], [-s, b - c]])


def resolvent_neumann(r_plus, r_minus, b, terms, sign=+1):
    """Partial sum sum_{n=0}^{terms} (b R+- R-+)^n of (I - b R+- R-+)^(-1)."""
    if terms < 0:
        raise ValueError("terms must be nonnegative")
    r_plus = np.asarray(r_plus)
    r_minus = np.asarray(r_minus)
    trip = r_plus @ r_minus if sign == 1 else r_minus @ r_plus
    step = complex(b) * trip
    total = np.eye(2, dtype=complex)
    power = np.eye(2, dtype=complex)
    for _ in range(terms):
        power = power @ step
        total = total + power
    return total


def round_trip_resolvent(r_plus, r_minus, b, sign=+1):
    """Exact (I - b R+- R-+)^(-1) by linear solve."""
    r_plus = np.asarray(r_plus)
    r_minus = np.asarray(r_minus)
    trip = r_plus @ r_minus if sign == 1 else r_minus @ r_plus
    return np.linalg.inv(np.eye(2) - complex(b) * trip)
