"""Twisted-photon (Bessel-mode) beam construction.

A mode is a cone of plane waves with fixed pitch angle theta_k, total
angular momentum projection m_gamma along z, and helicity Lambda. The
coordinate-space vector potential is a three-term Bessel superposition;
the magnetic field follows in closed form, the electric field is
i*Lambda times the magnetic one, and the Poynting vector is built from
the physical (real-part) fields.

Conventions: Hartree atomic units, wavenumber k = alpha*omega, phases
carried as exp(i*(m_gamma*phi + k_z*z - omega*t)). Polarization basis
vectors are 4-vectors with the time component first.
"""

from dataclasses import dataclass
import math

import numpy as np

from .constants import FINE_STRUCTURE, omega_from_wavelength_nm, wavelength_nm_from_omega
from .specfun import bessel_j

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class BeamParams:
    """Kinematics of one Bessel mode.

    Parameters
    ----------
    omega : float
        Photon energy in Hartree.
    theta_k : float
        Cone pitch angle in radians, 0 <= theta_k <= pi/2. The lower
        endpoint is the plane-wave limit and is allowed so limiting
        cases can be evaluated directly.
    m_gamma : int
        Total angular momentum projection along the beam axis.
    lambda_hel : int
        Helicity, +1 or -1.
    """

    omega: float
    theta_k: float
    m_gamma: int
    lambda_hel: int

    def __post_init__(self):
        if not (math.isfinite(self.omega) and self.omega > 0.0):
            raise ValueError("photon energy must be positive and finite")
        if not (0.0 <= self.theta_k <= math.pi / 2.0):
            raise ValueError("pitch angle must lie in [0, pi/2]")
        if not isinstance(self.m_gamma, (int, np.integer)):
            raise ValueError("m_gamma must be an integer")
        if self.lambda_hel not in (-1, 1):
            raise ValueError("helicity must be +1 or -1")

    @classmethod
    def from_wavelength(cls, wavelength_nm: float, theta_k: float, m_gamma: int, lambda_hel: int):
        return cls(omega_from_wavelength_nm(wavelength_nm), theta_k, m_gamma, lambda_hel)

    @property
    def k(self) -> float:
        """Wavenumber alpha*omega in inverse Bohr radii."""
        return FINE_STRUCTURE * self.omega

    @property
    def kappa(self) -> float:
        """Transverse momentum k*sin(theta_k)."""
        return self.k * math.sin(self.theta_k)

    @property
    def k_z(self) -> float:
        """Longitudinal momentum k*cos(theta_k)."""
        return self.k * math.cos(self.theta_k)

    @property
    def wavelength_nm(self) -> float:
        return wavelength_nm_from_omega(self.omega)


@dataclass(frozen=True)
class PolarizationBasis:
    """The three constant polarization 4-vectors (time component first)."""

    eta_plus: np.ndarray
    eta_minus: np.ndarray
    eta_zero: np.ndarray


_ETA_PLUS = np.array([0.0, -1.0, -1.0j, 0.0], dtype=complex) / _SQRT2
_ETA_MINUS = np.array([0.0, 1.0, -1.0j, 0.0], dtype=complex) / _SQRT2
_ETA_ZERO = np.array([0.0, 0.0, 0.0, 1.0], dtype=complex)
for _v in (_ETA_PLUS, _ETA_MINUS, _ETA_ZERO):
    _v.setflags(write=False)

_BASIS = PolarizationBasis(eta_plus=_ETA_PLUS, eta_minus=_ETA_MINUS, eta_zero=_ETA_ZERO)


def polarization_basis() -> PolarizationBasis:
    return _BASIS


def eta(lambda_pol: int) -> np.ndarray:
    """Basis vector for a polarization label in {-1, 0, +1}."""
    if lambda_pol == 1:
        return _ETA_PLUS
    if lambda_pol == -1:
        return _ETA_MINUS
    if lambda_pol == 0:
        return _ETA_ZERO
    raise ValueError("polarization label must be -1, 0, or +1")


@dataclass(frozen=True)
class FieldSample:
    """Electromagnetic field of the mode at one space-time point.

    E and B are complex 3-vectors and S a real 3-vector, all in
    cylindrical components (rho, phi, z) at the sample's azimuth. S is
    the instantaneous Re(E) x Re(B) of the physical fields, which for
    these modes is time-independent.
    """

    rho: float
    phi: float
    z: float
    time: float
    E: np.ndarray
    B: np.ndarray
    S: np.ndarray


def polarization_vector(params: BeamParams, phi_k: float) -> np.ndarray:
    """Polarization 4-vector of the cone's plane-wave component at azimuth phi_k.

    eps = e^{-i*L*phi_k} cos^2(theta_k/2) eta_L
        + e^{+i*L*phi_k} sin^2(theta_k/2) eta_{-L}
        + (L/sqrt(2)) sin(theta_k) eta_0
    """
    lam = params.lambda_hel
    half = 0.5 * params.theta_k
    c2 = math.cos(half) ** 2
    s2 = math.sin(half) ** 2
    return (
        np.exp(-1j * lam * phi_k) * c2 * eta(lam)
        + np.exp(1j * lam * phi_k) * s2 * eta(-lam)
        + (lam / _SQRT2) * math.sin(params.theta_k) * eta(0)
    )


def _channel_coefficients(params: BeamParams, rho, phi):
    """Complex coefficients of eta(L), eta(-L), eta(0) in the mode, sans prefactor."""
    m = params.m_gamma
    lam = params.lambda_hel
    half = 0.5 * params.theta_k
    c2 = math.cos(half) ** 2
    s2 = math.sin(half) ** 2
    arg = params.kappa * np.asarray(rho, dtype=float)
    phi = np.asarray(phi, dtype=float)
    co = (1j) ** (-lam) * c2 * bessel_j(m - lam, arg) * np.exp(1j * (m - lam) * phi)
    counter = (1j) ** lam * s2 * bessel_j(m + lam, arg) * np.exp(1j * (m + lam) * phi)
    axial = (lam / _SQRT2) * math.sin(params.theta_k) * bessel_j(m, arg) * np.exp(1j * m * phi)
    return co, counter, axial


def vector_potential_components(params: BeamParams, t, x, y, z):
    """Cartesian (A_x, A_y, A_z) of the mode, vectorized over positions.

    The time component vanishes identically (Coulomb gauge with no
    scalar potential).
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    z = np.asarray(z, dtype=float)
    rho = np.hypot(x, y)
    phi = np.arctan2(y, x)
    pref = math.sqrt(params.kappa / (2.0 * math.pi)) * np.exp(
        -1j * (params.omega * np.asarray(t) - params.k_z * z)
    )
    co, counter, axial = _channel_coefficients(params, rho, phi)
    ep = eta(params.lambda_hel)
    em = eta(-params.lambda_hel)
    e0 = eta(0)
    ax = pref * (co * ep[1] + counter * em[1] + axial * e0[1])
    ay = pref * (co * ep[2] + counter * em[2] + axial * e0[2])
    az = pref * (co * ep[3] + counter * em[3] + axial * e0[3])
    return ax, ay, az


def vector_potential(params: BeamParams, x) -> np.ndarray:
    """Coordinate-space vector potential A^mu at a space-time point.

    Parameters
    ----------
    x : sequence (t, x, y, z)
        Time and Cartesian position in atomic units.

    Returns
    -------
    ndarray, shape (4,), complex
        (A^0, A_x, A_y, A_z) with A^0 = 0.
    """
    t, xx, yy, zz = (float(c) for c in x)
    ax, ay, az = vector_potential_components(params, t, xx, yy, zz)
    return np.array([0.0, complex(ax), complex(ay), complex(az)])


def translate(params: BeamParams, b, x) -> np.ndarray:
    """Vector potential of the beam shifted transversely by b = (b_x, b_y).

    Shifting the mode by b means evaluating the unshifted mode at the
    relative position, A_b(x) = A(x - b), with time and z untouched.
    """
    bx, by = (float(c) for c in b)
    t, xx, yy, zz = (float(c) for c in x)
    return vector_potential(params, (t, xx - bx, yy - by, zz))


def magnetic_field_cylindrical(params: BeamParams, t, rho, phi, z):
    """Closed-form complex B = (B_rho, B_phi, B_z), vectorized over positions.

    Valid for either helicity:
        B_rho = i*L*(k/sqrt2) P (c2*u + s2*v)
        B_phi =     (k/sqrt2) P (s2*v - c2*u)
        B_z   = (kappa/sqrt2) P J_m
    with u = J_{m-L}(kappa*rho), v = J_{m+L}(kappa*rho), c2 = cos^2(theta_k/2),
    s2 = sin^2(theta_k/2), and P the common normalization and phase factor.
    """
    m = params.m_gamma
    lam = params.lambda_hel
    half = 0.5 * params.theta_k
    c2 = math.cos(half) ** 2
    s2 = math.sin(half) ** 2
    k = params.k
    kappa = params.kappa
    rho = np.asarray(rho, dtype=float)
    phi = np.asarray(phi, dtype=float)
    z = np.asarray(z, dtype=float)
    u = bessel_j(m - lam, kappa * rho)
    v = bessel_j(m + lam, kappa * rho)
    jm = bessel_j(m, kappa * rho)
    pref = math.sqrt(kappa / (2.0 * math.pi)) * np.exp(
        1j * (m * phi + params.k_z * z - params.omega * np.asarray(t))
    )
    b_rho = 1j * lam * (k / _SQRT2) * pref * (c2 * u + s2 * v)
    b_phi = (k / _SQRT2) * pref * (s2 * v - c2 * u)
    b_z = (kappa / _SQRT2) * pref * jm
    return b_rho, b_phi, b_z


def poynting_components(params: BeamParams, t, x, y, z):
    """Real Poynting vector, vectorized: cylindrical and Cartesian components.

    Built as Re(E) x Re(B) of the physical fields at the sample time.

    Returns
    -------
    (s_rho, s_phi, s_z, s_x, s_y)
        Real arrays broadcast over the input positions.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    rho = np.hypot(x, y)
    phi = np.arctan2(y, x)
    br, bp, bz = magnetic_field_cylindrical(params, t, rho, phi, z)
    lam = params.lambda_hel
    er, ep_, ez = 1j * lam * br, 1j * lam * bp, 1j * lam * bz
    rer, rep, rez = er.real, ep_.real, ez.real
    rbr, rbp, rbz = br.real, bp.real, bz.real
    s_rho = rep * rbz - rez * rbp
    s_phi = rez * rbr - rer * rbz
    s_z = rer * rbp - rep * rbr
    s_x = s_rho * np.cos(phi) - s_phi * np.sin(phi)
    s_y = s_rho * np.sin(phi) + s_phi * np.cos(phi)
    return s_rho, s_phi, s_z, s_x, s_y


def fields(params: BeamParams, x) -> FieldSample:
    """Full field sample (complex E, B and real S) at a space-time point.

    The electric field is i*Lambda times the magnetic one; for
    Lambda = +1 this is the quarter-period phase lead E = i*B, for
    Lambda = -1 it is E = -i*B.
    """
    t, xx, yy, zz = (float(c) for c in x)
    rho = math.hypot(xx, yy)
    phi = math.atan2(yy, xx)
    br, bp, bz = magnetic_field_cylindrical(params, t, rho, phi, zz)
    B = np.array([complex(br), complex(bp), complex(bz)])
    E = 1j * params.lambda_hel * B
    S = np.cross(E.real, B.real)
    return FieldSample(rho=rho, phi=phi, z=zz, time=t, E=E, B=B, S=S)
