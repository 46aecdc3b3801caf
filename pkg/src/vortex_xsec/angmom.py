"""Angular-momentum bookkeeping of the Bessel mode.

The mode's spin projection along the beam axis is Lambda*cos(theta_k),
its orbital projection is m_gamma - Lambda*cos(theta_k), and their sum
is exactly m_gamma. Both are expectation values: the spin density comes
from the polarization vector, and the orbital share from the three
Bessel intensity channels weighted by their disk-averaged intensities.
"""

from dataclasses import dataclass
import math

import numpy as np

from .beam import BeamParams, polarization_vector
from .quadrature import QuadratureConvergenceError, panel_nodes
from .specfun import bessel_j

DEFAULT_KAPPA_R = 1.0e3
_WEIGHT_TOL = 0.01


@dataclass(frozen=True)
class AngularMomentumBudget:
    """Spin/orbital decomposition of the beam's axis projection."""

    spin: float
    orbital: float
    total: float
    beam: BeamParams


def spin_projection(beam: BeamParams, phi_k: float | None = None) -> float:
    """Spin projection Lambda*cos(theta_k) along the beam axis.

    Evaluated numerically as i*(eps x eps*)_z from the polarization
    vector of one plane-wave component; the azimuth phi_k drops out, so
    a random one is used by default.
    """
    if phi_k is None:
        phi_k = float(np.random.default_rng().uniform(0.0, 2.0 * math.pi))
    eps = polarization_vector(beam, phi_k)[1:]
    cross_z = eps[0] * np.conj(eps[1]) - eps[1] * np.conj(eps[0])
    return float((1j * cross_z).real)


def analytic_channel_weights(beam: BeamParams):
    """Intensity weights of the co-helicity, counter-helicity, and axial
    channels in the R -> infinity disk average: cos^4(theta_k/2),
    sin^4(theta_k/2), sin^2(theta_k)/2. They sum to 1 identically."""
    half = 0.5 * beam.theta_k
    return (
        math.cos(half) ** 4,
        math.sin(half) ** 4,
        0.5 * math.sin(beam.theta_k) ** 2,
    )


def channel_weights(beam: BeamParams, disk_radius: float):
    """Disk-averaged numeric channel weights at finite radius (Bohr radii).

    Each channel's transverse intensity integral of b*J_nu^2(kappa*b) is
    normalized by the shared limit R/(pi*kappa), so the triple converges
    to analytic_channel_weights as kappa*R grows.
    """
    kappa = beam.kappa
    if kappa <= 0.0:
        raise ValueError("channel weights need a finite pitch angle")
    if disk_radius <= 0.0:
        raise ValueError("disk radius must be positive")
    limit = disk_radius / (math.pi * kappa)
    half = 0.5 * beam.theta_k
    coeffs = (math.cos(half) ** 4, math.sin(half) ** 4, 0.5 * math.sin(beam.theta_k) ** 2)
    orders = (
        beam.m_gamma - beam.lambda_hel,
        beam.m_gamma + beam.lambda_hel,
        beam.m_gamma,
    )
    n_panels = max(16, int(2.0 * kappa * disk_radius / math.pi) + 4)
    bs, bw = panel_nodes(0.0, disk_radius, n_panels, 8)
    weights = []
    for coeff, order in zip(coeffs, orders):
        j = bessel_j(order, kappa * bs)
        weights.append(coeff * float(np.sum(bw * bs * j * j)) / limit)
    return tuple(weights)


def orbital_projection(beam: BeamParams, disk_radius: float | None = None) -> float:
    """Orbital projection m_gamma - Lambda*cos(theta_k) along the beam axis.

    The three intensity channels carry orbital numbers m_gamma - Lambda,
    m_gamma + Lambda, and m_gamma. With the exact limiting weights the
    weighted sum collapses to the closed form; passing a finite
    disk_radius uses numeric weights instead and raises if any channel
    is further than 1% from its limit.
    """
    m = beam.m_gamma
    lam = beam.lambda_hel
    orbitals = (m - lam, m + lam, m)
    if disk_radius is None:
        weights = analytic_channel_weights(beam)
        return float(sum(o * w for o, w in zip(orbitals, weights)))
    numeric = channel_weights(beam, disk_radius)
    exact = analytic_channel_weights(beam)
    for w_num, w_ref in zip(numeric, exact):
        if w_ref > 1.0e-12 and abs(w_num / w_ref - 1.0) > _WEIGHT_TOL:
            raise QuadratureConvergenceError(
                f"disk radius too small: channel weight {w_num:.6g} is more than "
                f"{_WEIGHT_TOL:.0%} from its limit {w_ref:.6g}",
                partial=w_num,
                error_estimate=abs(w_num / w_ref - 1.0),
            )
    total_weight = sum(numeric)
    return float(sum(o * w for o, w in zip(orbitals, numeric)) / total_weight)


def total_projection(beam: BeamParams) -> AngularMomentumBudget:
    """Spin + orbital budget; the total equals m_gamma exactly."""
    spin = spin_projection(beam)
    orbital = orbital_projection(beam)
    total = spin + orbital
    if abs(total - beam.m_gamma) > 1.0e-10:
        raise ArithmeticError(
            f"angular momentum budget broken: spin {spin} + orbital {orbital} "
            f"!= m_gamma {beam.m_gamma}"
        )
    return AngularMomentumBudget(spin=spin, orbital=orbital, total=total, beam=beam)
