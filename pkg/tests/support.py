"""Shared brute-force oracles for the test suite."""

import math

import numpy as np

import vortex_xsec as vx
from vortex_xsec.quadrature import gauss_legendre, panel_nodes


def direct_amplitude(final, beam, b_au, phi_b):
    """Brute-force matrix element: 3D quadrature of the shifted beam.

    Folds the Cartesian vector potential, evaluated at positions offset
    by the impact parameter, with the initial-state gradient and the
    final-state wavefunction. Completely independent of the factorized
    route: no impact-parameter Bessel factor, no helicity combination,
    no azimuthal reduction.
    """
    bx, by = b_au * math.cos(phi_b), b_au * math.sin(phi_b)
    r_max = 40.0 * final.n**2
    rs, rw = panel_nodes(0.0, r_max, 16, 24)
    cn, cw = gauss_legendre(64)
    sn = np.sqrt(1.0 - cn * cn)
    nphi = 128
    phis = 2.0 * math.pi * np.arange(nphi) / nphi
    wphi = 2.0 * math.pi / nphi
    rad = vx.radial(final.n, final.l, rs) * vx.radial_derivative_10(rs) / math.sqrt(4.0 * math.pi)
    ylm = vx.ylm_phi0(final.l, final.m, cn)
    total = 0.0 + 0.0j
    r3 = rs[:, None, None]
    c3 = cn[None, :, None]
    s3 = sn[None, :, None]
    w3 = (rw * rs * rs)[:, None, None] * cw[None, :, None] * wphi
    for lo in range(0, nphi, 16):
        ph = phis[lo : lo + 16][None, None, :]
        x = r3 * s3 * np.cos(ph)
        y = r3 * s3 * np.sin(ph)
        z = r3 * c3
        ax, ay, az = vx.vector_potential_components(beam, 0.0, x - bx, y - by, z)
        a_dot_rhat = ax * s3 * np.cos(ph) + ay * s3 * np.sin(ph) + az * c3
        ystar = ylm[None, :, None] * np.exp(-1j * final.m * ph)
        total += np.sum(w3 * rad[:, None, None] * ystar * a_dot_rhat)
    return total


def curl_fd(beam, t, p, h=0.5):
    """Central-difference curl of the vector potential at a point."""

    def a(q):
        return np.asarray(vx.vector_potential(beam, (t, q[0], q[1], q[2]))[1:])

    px, py, pz = p
    dx = (a((px + h, py, pz)) - a((px - h, py, pz))) / (2.0 * h)
    dy = (a((px, py + h, pz)) - a((px, py - h, pz))) / (2.0 * h)
    dz = (a((px, py, pz + h)) - a((px, py, pz - h))) / (2.0 * h)
    return np.array([dy[2] - dz[1], dz[0] - dx[2], dx[1] - dy[0]])
