"""Reduced atomic factors and the off-axis transition amplitude.

The ground-state atom sits at transverse offset b from the beam axis.
The transition amplitude to a final hydrogenic state factorizes into a
fixed prefactor, a carrier phase, a single Bessel function of the
offset, and a helicity combination C of three reduced atomic factors g.
Each g is a smooth 2D integral over the electron coordinate computed by
Gauss-Legendre quadrature with panel doubling in the radial direction.

The photon energy entering every matrix element is the resonant one for
the transition (energy conservation with recoil neglected); BeamParams
supplies the geometry (pitch angle, m_gamma, helicity).
"""

from dataclasses import dataclass
import cmath
import math
import threading

import numpy as np

from .beam import BeamParams
from .constants import FINE_STRUCTURE
from .quadrature import QuadratureConvergenceError, gauss_legendre, panel_nodes
from .specfun import bessel_j, radial, ylm_phi0

_SQRT2 = math.sqrt(2.0)

N_ANGULAR_NODES = 64
N_RADIAL_NODES = 40
G_REL_TOL = 1.0e-10
_G_ABS_FLOOR = 1.0e-280
_MAX_RADIAL_PANELS = 1024


@dataclass(frozen=True)
class AtomicState:
    """Hydrogenic quantum numbers (n, l, m). The initial state is always (1, 0, 0)."""

    n: int
    l: int
    m: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("principal quantum number must be >= 1")
        if not 0 <= self.l < self.n:
            raise ValueError(f"orbital quantum number {self.l} invalid for n={self.n}")
        if abs(self.m) > self.l:
            raise ValueError(f"|m|={abs(self.m)} exceeds l={self.l}")


@dataclass(frozen=True)
class ReducedFactor:
    """One reduced atomic factor g for polarization channel lambda_pol.

    value is purely real or purely imaginary depending on the parity of
    l_f + m_f + lambda_pol (real when odd); quad_error is the relative
    change on the final panel doubling.
    """

    value: complex
    quad_error: float
    lambda_pol: int
    final: AtomicState
    beam: BeamParams


@dataclass(frozen=True)
class Amplitude:
    """Transition amplitude M(b) and its factorized pieces.

    value = prefactor * exp(i*(m_gamma - m_f)*phi_b) * bessel_factor * combination,
    where prefactor = -sqrt(2*pi*kappa/3) (the fixed e/(m_e a0) scale is
    1 in atomic units), bessel_factor = J_{m_f - m_gamma}(kappa*b), and
    combination is the helicity combination C. b is in Bohr radii.
    """

    value: complex
    final: AtomicState
    beam: BeamParams
    b: float
    phi_b: float
    combination: complex
    bessel_factor: float


def photon_energy_for(final: AtomicState) -> float:
    """Resonant photon energy in Hartree for excitation 1s -> (n_f, l_f, m_f)."""
    if final.n < 2:
        raise ValueError("no excitation transition into the ground level")
    return 0.5 * (1.0 - 1.0 / final.n**2)


def _g_integral(n: int, l: int, m: int, lambda_pol: int, omega: float, theta_k: float):
    """Reduced factor by 2D quadrature; returns (value, relative error).

    g = int_0^inf r^2 dr R_nl(r) R_10(r)
        int_{-1}^{1} dc J_{m-lam}(k r sin(theta_r) sin(theta_k))
                        Y_lm(theta_r, 0) Y_{1 lam}(theta_r, 0)
                        exp(i k r c cos(theta_k))
    with k = alpha*omega. The integrand is smooth, so a fixed 64-node
    angular rule and panel doubling in r converge fast.
    """
    k = FINE_STRUCTURE * omega
    cn, cw = gauss_legendre(N_ANGULAR_NODES)
    sth = np.sqrt(1.0 - cn * cn)
    wvec = cw * ylm_phi0(l, m, cn) * ylm_phi0(1, lambda_pol, cn)
    kt = k * math.sin(theta_k)
    kl = k * math.cos(theta_k)
    order = m - lambda_pol
    r_max = 40.0 * n * n

    def evaluate(panels: int) -> complex:
        rs, rw = panel_nodes(0.0, r_max, panels, N_RADIAL_NODES)
        radw = rw * rs * rs * radial(n, l, rs) * radial(1, 0, rs)
        arg = kt * rs[:, None] * sth[None, :]
        bes = bessel_j(order, arg.ravel()).reshape(arg.shape)
        phase = np.exp(1j * kl * rs[:, None] * cn[None, :])
        return complex(radw @ ((bes * phase) @ wvec))

    panels = 8
    prev = evaluate(panels)
    err = math.inf
    while panels < _MAX_RADIAL_PANELS:
        panels *= 2
        cur = evaluate(panels)
        diff = abs(cur - prev)
        err = diff / abs(cur) if abs(cur) > _G_ABS_FLOOR else diff
        prev = cur
        if err <= G_REL_TOL:
            return cur, err
    raise QuadratureConvergenceError(
        f"reduced factor did not converge below {G_REL_TOL:g} "
        f"(last relative change {err:g})",
        partial=prev,
        error_estimate=err,
    )


_g_cache: dict = {}
_g_lock = threading.Lock()


def clear_g_cache() -> None:
    with _g_lock:
        _g_cache.clear()


def g_reduced(final: AtomicState, lambda_pol: int, beam: BeamParams) -> ReducedFactor:
    """Reduced atomic factor g for one polarization channel.

    Results are memoized by (final state, channel, pitch angle); the
    photon energy is fixed by the transition, so it is not part of the
    key. Safe for concurrent readers.
    """
    if abs(lambda_pol) > 1:
        raise ValueError("polarization channel must be -1, 0, or +1")
    omega = photon_energy_for(final)
    key = (final.n, final.l, final.m, lambda_pol, beam.theta_k)
    with _g_lock:
        hit = _g_cache.get(key)
    if hit is None:
        hit = _g_integral(final.n, final.l, final.m, lambda_pol, omega, beam.theta_k)
        with _g_lock:
            _g_cache[key] = hit
    value, err = hit
    return ReducedFactor(value=value, quad_error=err, lambda_pol=lambda_pol, final=final, beam=beam)


def helicity_combination(final: AtomicState, beam: BeamParams) -> complex:
    """The combination C of the three polarization channels entering M(b).

    C = i^{-L} [cos^2(theta_k/2) g_L + (i/sqrt2) sin(theta_k) g_0
                - sin^2(theta_k/2) g_{-L}]
    C is purely real or purely imaginary because the three g's share a
    realness class.
    """
    lam = beam.lambda_hel
    half = 0.5 * beam.theta_k
    g_co = g_reduced(final, lam, beam).value
    g_ax = g_reduced(final, 0, beam).value
    g_counter = g_reduced(final, -lam, beam).value
    return (1j) ** (-lam) * (
        math.cos(half) ** 2 * g_co
        + (1j / _SQRT2) * math.sin(beam.theta_k) * g_ax
        - math.sin(half) ** 2 * g_counter
    )


def amplitude_prefactor(kappa: float) -> float:
    """Fixed prefactor -sqrt(2*pi*kappa/3); e/(m_e a0) = 1 in atomic units."""
    return -math.sqrt(2.0 * math.pi * kappa / 3.0)


def amplitude(final: AtomicState, beam: BeamParams, b: float, phi_b: float = 0.0) -> Amplitude:
    """Transition amplitude M(b) for the atom at transverse offset b.

    Parameters
    ----------
    final : AtomicState
    beam : BeamParams
        Geometry source (theta_k, m_gamma, helicity); the photon energy
        is the transition's resonant one.
    b : float
        Impact parameter in Bohr radii, >= 0.
    phi_b : float
        Azimuth of the offset; enters only as a carrier phase.
    """
    if not (math.isfinite(b) and b >= 0.0):
        raise ValueError("impact parameter must be finite and >= 0")
    omega = photon_energy_for(final)
    kappa = FINE_STRUCTURE * omega * math.sin(beam.theta_k)
    comb = helicity_combination(final, beam)
    dm = final.m - beam.m_gamma
    if b == 0.0:
        # Kronecker branch: J_{dm}(0) without a -0.0 azimuth pathology
        bes = 1.0 if dm == 0 else 0.0
    else:
        bes = bessel_j(dm, kappa * b)
    value = amplitude_prefactor(kappa) * cmath.exp(1j * (-dm) * phi_b) * bes * comb
    return Amplitude(
        value=value,
        final=final,
        beam=beam,
        b=b,
        phi_b=phi_b,
        combination=comb,
        bessel_factor=float(bes),
    )


def selection_scaling_check(final: AtomicState, beam: BeamParams):
    """Fitted power-law exponents of |g| in sin(theta_k) and in omega.

    Returns (sin_exponent, omega_exponent) from log-log fits of the
    co-helicity channel g at small pitch angles and over a photon-energy
    scan. The leading behavior is
        |g| ~ (omega*cos(theta_k))^max(l_f - |m_f - L| - 1, 0)
              * (omega*sin(theta_k))^{|m_f - L|},
    so the sin fit approaches |m_f - L| and the omega fit approaches
    |m_f - L| + max(l_f - |m_f - L| - 1, 0).
    """
    lam = beam.lambda_hel
    omega_res = photon_energy_for(final)

    thetas = (0.02, 0.04, 0.08)
    mags = []
    for th in thetas:
        val, _ = _g_integral(final.n, final.l, final.m, lam, omega_res, th)
        mags.append(abs(val))
    if min(mags) < 1.0e-300:
        raise ValueError("degenerate fit: reduced factor underflows")
    sin_exp = float(
        np.polyfit(np.log([math.sin(t) for t in thetas]), np.log(mags), 1)[0]
    )

    omegas = (0.1, 0.2, 0.4)
    mags = []
    for om in omegas:
        val, _ = _g_integral(final.n, final.l, final.m, lam, om, beam.theta_k)
        mags.append(abs(val))
    if min(mags) < 1.0e-300:
        raise ValueError("degenerate fit: reduced factor underflows")
    omega_exp = float(np.polyfit(np.log(omegas), np.log(mags), 1)[0])
    return sin_exp, omega_exp
