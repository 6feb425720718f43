"""Plane-wave pieces of the scattering Green's tensor inside the vacuum gap
between two plates, and the stress-tensor checks built from them.

Geometry: plate ``-`` at z = 0, plate ``+`` at z = L, vacuum in between.  For
one in-plane wavevector the reflected part of the Green's tensor is a sum of
dyads ``amplitude * left (x) right``.  The in-plane phase exp(i k_par.(r-r'))
and the measure i/(8 pi^2 k_perp) are kept outside the dyads.

Wave directions and polarisation vectors::

    e_s        = e_kpar x e_z                      (both directions)
    e_p^(+-)   = (i/|k|)(k_par e_z +- k_perp e_kpar)

``e_p^+`` is transverse to the downward wavevector (k_par, -k_perp) and
``e_p^-`` to the upward one (k_par, +k_perp), i.e. the superscript names the
plate the wave last left.  At imaginary frequency |k| is the magnitude xi/c
and all four terms become real decaying exponentials with k_perp = i kappa.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .media import pemc_reflection_from_theta, round_trip_resolvent

E_Z = np.array([0.0, 0.0, 1.0])

ANGULAR_KINDS = ("ss", "pp", "pm", "sp", "ps")


@dataclass(frozen=True)
class PlaneWaveBasis:
    """One plane-wave component in the gap.

    ``omega_over_c`` is the frequency magnitude |k|; with
    ``imaginary_frequency=True`` the dispersion relation reads
    k_par^2 + k_perp^2 = -(xi/c)^2.
    """

    k_par: float
    phi: float
    k_perp: complex
    omega_over_c: float
    imaginary_frequency: bool = False

    def __post_init__(self):
        if self.k_par < 0:
            raise DomainError("k_par must be nonnegative")
        k2 = self.omega_over_c**2
        if self.imaginary_frequency:
            k2 = -k2
        lhs = self.k_par**2 + complex(self.k_perp) ** 2
        scale = max(abs(k2), self.k_par**2, abs(complex(self.k_perp)) ** 2)
        if scale > 0 and abs(lhs - k2) > 1e-12 * scale:
            raise DomainError("k_par^2 + k_perp^2 does not match the frequency")

    @classmethod
    def real(cls, omega_over_c, k_par, phi=0.0):
        """Real frequency; k_perp on the Im >= 0 branch."""
        kp = np.sqrt(complex(omega_over_c**2 - k_par**2))
        if kp.imag < 0:
            kp = -kp
        return cls(k_par, phi, complex(kp), omega_over_c, False)

    @classmethod
    def imaginary(cls, kappa, k_par, phi=0.0):
        """Imaginary frequency xi/c = sqrt(kappa^2 - k_par^2), k_perp = i kappa."""
        if not 0 <= k_par <= kappa:
            raise DomainError("need 0 <= k_par <= kappa")
        xi = math.sqrt(kappa * kappa - k_par * k_par)
        return cls(k_par, phi, 1j * kappa, xi, True)

    @property
    def e_kpar(self):
        return np.array([math.cos(self.phi), math.sin(self.phi), 0.0])

    def wavevector(self, direction):
        """Upward (+1) or downward (-1) wavevector."""
        return self.k_par * self.e_kpar.astype(complex) + direction * self.k_perp * E_Z


def polarization_vectors(basis):
    """Return ``(e_s, e_p_plus, e_p_minus)`` for ``basis``."""
    if basis.omega_over_c == 0:
        raise DomainError("polarisation vectors undefined at |k| = 0")
    ek = basis.e_kpar
    e_s = np.cross(ek, E_Z)
    pref = 1j / basis.omega_over_c
    e_p_plus = pref * (basis.k_par * E_Z + basis.k_perp * ek)
    e_p_minus = pref * (basis.k_par * E_Z - basis.k_perp * ek)
    return e_s, e_p_plus, e_p_minus


@dataclass(frozen=True)
class DyadicBlock:
    """amplitude * left (x) right, with the wavevectors carried by each side.

    ``k_left`` is the wavevector of the wave arriving at r, ``k_right`` that of
    the wave leaving r'; the r' dependence is exp(-i k_right . r').
    """

    term: int
    sigma: tuple
    amplitude: complex
    left: np.ndarray
    right: np.ndarray
    k_left: np.ndarray
    k_right: np.ndarray

    @property
    def even(self):
        return self.term in (1, 2)

    @property
    def matrix(self):
        return self.amplitude * np.outer(self.left, self.right)

    def curl(self):
        """curl G curl' acting on this plane-wave dyad (exact, no differencing)."""
        return -self.amplitude * np.outer(
            np.cross(self.k_left, self.left), np.cross(self.k_right, self.right)
        )


def green_scatter_integrand(basis, r, r_prime, R_plus, R_minus, L):
    """Reflected-wave dyads between the plates for one plane-wave component.

    Terms 1 and 2 carry an even number of reflections, 3 and 4 an odd number::

        1: down <- down   R+ D(-+) R-  b  exp(i k_perp (z' - z))
        2: up   <- up     R- D(+-) R+  b  exp(i k_perp (z - z'))
        3: up   <- down   D(-+) R-        exp(i k_perp (z + z'))
        4: down <- up     D(+-) R+        exp(i k_perp (2L - z - z'))

    with round trip b = exp(2 i k_perp L) and D(+-) = (I - b R+ R-)^(-1).
    Returns a list of 16 :class:`DyadicBlock` (4 terms x 4 polarisation pairs).
    """
    z = float(r[2])
    zp = float(r_prime[2])
    if not (0.0 < z < L and 0.0 < zp < L):
        raise DomainError("both points must lie strictly inside the gap 0 < z < L")
    R_plus = np.asarray(R_plus)
    R_minus = np.asarray(R_minus)
    kp = complex(basis.k_perp)
    b = np.exp(2j * kp * L)
    d_pm = round_trip_resolvent(R_plus, R_minus, b, +1)
    d_mp = round_trip_resolvent(R_plus, R_minus, b, -1)

    e_s, e_p_plus, e_p_minus = polarization_vectors(basis)
    up = {"s": e_s, "p": e_p_minus}
    down = {"s": e_s, "p": e_p_plus}
    k_up = basis.wavevector(+1)
    k_down = basis.wavevector(-1)

    terms = (
        (1, b * R_plus @ d_mp @ R_minus, np.exp(1j * kp * (zp - z)), down, down, k_down, k_down),
        (2, b * R_minus @ d_pm @ R_plus, np.exp(1j * kp * (z - zp)), up, up, k_up, k_up),
        (3, d_mp @ R_minus, np.exp(1j * kp * (z + zp)), up, down, k_up, k_down),
        (4, d_pm @ R_plus, np.exp(1j * kp * (2 * L - z - zp)), down, up, k_down, k_up),
    )
    blocks = []
    for term, mat, phase, out_vecs, in_vecs, k_out, k_in in terms:
        for i, s1 in enumerate("sp"):
            for j, s2 in enumerate("sp"):
                blocks.append(DyadicBlock(
                    term, (s1, s2), complex(mat[i, j] * phase),
                    out_vecs[s1], in_vecs[s2], k_out, k_in,
                ))
    return blocks


def sum_blocks(blocks, parity=None, curl=False):
    """Sum dyads (or their curls); ``parity`` in {None, "even", "odd"}."""
    total = np.zeros((3, 3), dtype=complex)
    for blk in blocks:
        if parity == "even" and not blk.even:
            continue
        if parity == "odd" and blk.even:
            continue
        total = total + (blk.curl() if curl else blk.matrix)
    return total


def _zz_minus_half_trace(x):
    return x[2, 2] - 0.5 * np.trace(x)


def zz_stress_parts(blocks, xi_over_c, parity="even"):
    """(plain, curl) zz stress contributions at coincident points.

    plain = [X - tr(X)/2]_zz with X = (xi/c)^2 (G + G^T);
    curl  = the same with X = curl G curl' + its transpose counterpart.
    The measure i/(8 pi^2 k_perp) is not included.
    """
    g = sum_blocks(blocks, parity)
    c = sum_blocks(blocks, parity, curl=True)
    plain = xi_over_c**2 * _zz_minus_half_trace(g + g.T)
    curl = _zz_minus_half_trace(c + c.T)
    return plain, curl


def _psi_phi_grid(n_psi, n_phi):
    x, w = np.polynomial.legendre.leggauss(n_psi)
    psi = 0.25 * math.pi * (x + 1.0)
    wpsi = 0.25 * math.pi * w
    phi = 2.0 * math.pi * np.arange(n_phi) / n_phi
    return psi, wpsi, phi


def stress_density(kappa, delta, L, z=None, parity="even", n_psi=16, n_phi=4):
    """kappa-resolved zz stress density, split as (plain, curl).

    Integrates the dyads over the in-plane direction phi and over the polar
    angle psi of (k_par, xi/c) = kappa (cos psi, sin psi), including the
    measure i/(8 pi^2 k_perp) and the Jacobian kappa^2 cos(psi).  Plates are
    theta- = 0 and theta+ = delta.  ``z`` is the coincident point (default
    L/2).
    """
    if kappa <= 0 or L <= 0:
        raise DomainError("kappa and L must be positive")
    z = 0.5 * L if z is None else z
    R_plus = pemc_reflection_from_theta(delta)
    R_minus = pemc_reflection_from_theta(0.0)
    psi, wpsi, phis = _psi_phi_grid(n_psi, n_phi)
    wphi = 2.0 * math.pi / n_phi
    point = np.array([0.0, 0.0, z])
    plain = 0.0
    curl = 0.0
    for p, wp in zip(psi, wpsi):
        k_par = kappa * math.cos(p)
        weight = wp * wphi * kappa * kappa * math.cos(p) / (8.0 * math.pi**2 * kappa)
        for phi in phis:
            basis = PlaneWaveBasis.imaginary(kappa, k_par, phi)
            blocks = green_scatter_integrand(basis, point, point, R_plus, R_minus, L)
            pl, cu = zz_stress_parts(blocks, basis.omega_over_c, parity)
            plain += weight * pl
            curl += weight * cu
    return plain, curl


def curl_term_equality_check(kappa, delta, L, n_psi=16, n_phi=4):
    """Return ``(curl_part, plain_part)`` of the even-reflection zz stress
    density at imaginary wavenumber ``kappa``; the two are equal.

    Each part equals -(kappa^3/pi) g with g = force_integrand(kappa L, delta)
    / (kappa L)^3, so force_integrand = -(pi L^3 / 2) (curl + plain).
    """
    plain, curl = stress_density(kappa, delta, L, parity="even", n_psi=n_psi, n_phi=n_phi)
    return float(np.real(curl)), float(np.real(plain))


def angular_dyadic_integral(kind, k_par, k_perp, omega_over_c, sign=+1):
    """Closed form of int_0^{2 pi} dphi of a polarisation dyad.

    kinds: ``ss`` e_s e_s; ``pp`` e_p^+- e_p^+-; ``pm`` e_p^+ e_p^-;
    ``sp`` e_s e_p^(sign); ``ps`` e_p^(sign) e_s.
    """
    if kind not in ANGULAR_KINDS:
        raise DomainError(f"unknown dyad kind {kind!r}; expected one of {ANGULAR_KINDS}")
    if omega_over_c == 0:
        raise DomainError("|k| must be nonzero")
    xx_yy = np.diag([1.0, 1.0, 0.0])
    zz = np.diag([0.0, 0.0, 1.0])
    k2 = omega_over_c**2
    if kind == "ss":
        return math.pi * xx_yy
    if kind == "pp":
        out = -(math.pi / k2) * (2 * k_par**2 * zz + k_perp**2 * xx_yy)
    elif kind == "pm":
        out = -(math.pi / k2) * (2 * k_par**2 * zz - k_perp**2 * xx_yy)
    else:
        anti = np.zeros((3, 3))
        anti[0, 1], anti[1, 0] = 1.0, -1.0
        out = sign * (1j * math.pi * k_perp / omega_over_c) * anti
        if kind == "ps":
            out = out.T
        return out
    return np.real_if_close(np.asarray(out, dtype=complex))


def angular_dyadic_quadrature(kind, k_par, k_perp, omega_over_c, sign=+1, n=512):
    """Trapezoidal phi-quadrature of the same dyads (periodic, n points)."""
    if kind not in ANGULAR_KINDS:
        raise DomainError(f"unknown dyad kind {kind!r}")
    total = np.zeros((3, 3), dtype=complex)
    for phi in 2.0 * math.pi * np.arange(n) / n:
        basis = PlaneWaveBasis(k_par, phi, k_perp, omega_over_c, _is_imag(k_par, k_perp, omega_over_c))
        e_s, e_pp, e_pm = polarization_vectors(basis)
        e_p = e_pp if sign > 0 else e_pm
        pair = {
            "ss": (e_s, e_s),
            "pp": (e_p, e_p),
            "pm": (e_pp, e_pm),
            "sp": (e_s, e_p),
            "ps": (e_p, e_s),
        }[kind]
        total = total + np.outer(*pair)
    return total * (2.0 * math.pi / n)


def _is_imag(k_par, k_perp, omega_over_c):
    lhs = k_par**2 + complex(k_perp) ** 2
    return abs(lhs + omega_over_c**2) < abs(lhs - omega_over_c**2)
