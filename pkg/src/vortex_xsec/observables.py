"""Position-averaged cross sections and derived beam observables.

Averaging the excitation rate over random atom positions in the
transverse plane turns |M(b)|^2 into |C|^2 times a limiting Bessel
integral that is independent of m_f. All quantities here are reported
in reduced units: sigma_avg is |C|^2 with the common prefactor
2*pi*delta(E_f - E_i - omega) * 8*pi^3*alpha^3 / (3*k_z) factored out.
Every published number is a prefactor-free ratio.

The plane-wave reference used by r_twisted is the theta_k -> 0 limit of
the same framework. Expressed in absolute units the twisted and
plane-wave prefactors differ by the flux factor cos(theta_k) hidden in
k_z, so r_twisted carries an explicit 1/cos(theta_k).
"""

from dataclasses import dataclass, replace
import math
from typing import Optional, Sequence

import numpy as np

from .amplitude import (
    AtomicState,
    amplitude,
    helicity_combination,
    photon_energy_for,
)
from .beam import BeamParams
from .constants import FINE_STRUCTURE
from .quadrature import panel_nodes
from .specfun import bessel_j


class DegenerateTransitionError(ValueError):
    """All contributing rates vanish, so a requested ratio is undefined."""


@dataclass(frozen=True)
class AveragedCrossSection:
    """Position-averaged cross section in reduced units (value = |C|^2)."""

    final: AtomicState
    beam: BeamParams
    value: float


@dataclass(frozen=True)
class AsymmetryPoint:
    """Helicity asymmetry at one impact parameter.

    value is None at an undefined point (both rates exactly zero, e.g.
    on axis when neither beam can reach any final m_f).
    """

    b: float
    value: Optional[float]


def sigma_avg(final: AtomicState, beam: BeamParams) -> AveragedCrossSection:
    """Cross section averaged over atom location, in reduced units.

    The limiting integral of b*J^2_{m_f-m_gamma}(kappa*b) over a disk is
    R/(pi*kappa) independent of the Bessel order, so averaging leaves
    |C|^2; the order-independent factor and the flux live in the
    documented common prefactor.
    """
    comb = helicity_combination(final, beam)
    return AveragedCrossSection(final=final, beam=beam, value=abs(comb) ** 2)


def _sigma_values(n_f: int, l_f: int, beam: BeamParams) -> dict:
    return {
        m: sigma_avg(AtomicState(n_f, l_f, m), beam).value for m in range(-l_f, l_f + 1)
    }


def _forbidden_fraction(sigmas: dict, lambda_hel: int) -> float:
    total = sum(sigmas.values())
    if total <= 0.0:
        raise DegenerateTransitionError("all substate rates vanish")
    allowed = sigmas.get(lambda_hel, 0.0)
    return (total - allowed) / total


def f_twisted(n_f: int, l_f: int, beam: BeamParams) -> float:
    """Fraction of the averaged rate going into plane-wave-forbidden substates.

    Sums sigma_avg over m_f in [-l_f, l_f] and reports the share with
    m_f != Lambda. Always in [0, 1]; tends to 0 in the plane-wave limit.
    """
    if l_f < 1:
        raise ValueError("need l_f >= 1 so that m_f = helicity is reachable")
    return _forbidden_fraction(_sigma_values(n_f, l_f, beam), beam.lambda_hel)


def plane_wave_sigma(n_f: int, l_f: int, beam: BeamParams) -> float:
    """Reduced cross section of the plane-wave limit of the same beam.

    Evaluated as theta_k = 0 within the same framework: only the
    m_f = Lambda substate survives (J_{m_f-lambda}(0) is a Kronecker
    delta) and the combination collapses to the single co-helicity g.
    """
    pw_beam = replace(beam, theta_k=0.0)
    final = AtomicState(n_f, l_f, beam.lambda_hel)
    return abs(helicity_combination(final, pw_beam)) ** 2


def r_twisted(n_f: int, l_f: int, beam: BeamParams) -> float:
    """Total twisted excitation rate over the plane-wave rate into the level.

    The numerator sums sigma_avg over all m_f. Numerator and reference
    carry prefactors 1/k_z and 1/k respectively, so the reduced-unit
    ratio keeps a 1/cos(theta_k) flux factor. A sum rule (rotational
    invariance of the underlying matrix element) makes the remaining
    ratio exactly 1, hence r_twisted = 1/cos(theta_k) -> 1 as
    theta_k -> 0.
    """
    if l_f < 1:
        raise ValueError("need l_f >= 1 for a nonvanishing plane-wave reference")
    reference = plane_wave_sigma(n_f, l_f, beam)
    if reference < 1.0e-300:
        raise DegenerateTransitionError("plane-wave reference rate vanishes")
    total = sum(_sigma_values(n_f, l_f, beam).values())
    return total / (math.cos(beam.theta_k) * reference)


def a_lambda(
    n_f: int, l_f: int, m_bar: int, beam_template: BeamParams, b: float
) -> AsymmetryPoint:
    """Helicity asymmetry at fixed impact parameter.

    Compares two beams with the same total angular momentum budget:
    m_gamma = m_bar - 1 with helicity -1 against m_gamma = m_bar + 1
    with helicity +1. Rates at fixed b are sums of |M(b)|^2 over m_f
    (not position-averaged). Returns an undefined marker when both
    rates are exactly zero.
    """
    beam_minus = replace(beam_template, m_gamma=m_bar - 1, lambda_hel=-1)
    beam_plus = replace(beam_template, m_gamma=m_bar + 1, lambda_hel=1)
    rate_minus = 0.0
    rate_plus = 0.0
    for m in range(-l_f, l_f + 1):
        final = AtomicState(n_f, l_f, m)
        rate_minus += abs(amplitude(final, beam_minus, b).value) ** 2
        rate_plus += abs(amplitude(final, beam_plus, b).value) ** 2
    denom = rate_minus + rate_plus
    if denom == 0.0:
        return AsymmetryPoint(b=b, value=None)
    return AsymmetryPoint(b=b, value=(rate_minus - rate_plus) / denom)


def asymmetry_scan(
    n_f: int, l_f: int, m_bar: int, beam_template: BeamParams, b_values: Sequence[float]
):
    """a_lambda evaluated over a sequence of impact parameters."""
    return [a_lambda(n_f, l_f, m_bar, beam_template, b) for b in b_values]


def disk_averaged_rate(n_f: int, l_f: int, beam: BeamParams, radius: float) -> float:
    """Brute-force disk average of the summed rate, (1/pi R^2) integral of
    sum_m |M(b)|^2 over b <= radius (radius in Bohr radii).

    Converges to (4/(3*radius)) * sum_m sigma_avg as kappa*radius grows;
    used to tie the analytic position average to direct quadrature.
    """
    omega = photon_energy_for(AtomicState(n_f, l_f, 0))
    kappa = FINE_STRUCTURE * omega * math.sin(beam.theta_k)
    if kappa <= 0.0:
        raise ValueError("disk average needs a finite pitch angle")
    n_panels = max(16, int(2.0 * kappa * radius / math.pi) + 4)
    bs, bw = panel_nodes(0.0, radius, n_panels, 8)
    pref2 = 2.0 * math.pi * kappa / 3.0  # squared amplitude prefactor
    total = 0.0
    for m in range(-l_f, l_f + 1):
        comb = helicity_combination(AtomicState(n_f, l_f, m), beam)
        j = bessel_j(m - beam.m_gamma, kappa * bs)
        total += pref2 * abs(comb) ** 2 * float(np.sum(bw * j * j * bs))
    return 2.0 * math.pi * total / (math.pi * radius**2)
