"""Averaged cross sections, forbidden-fraction and flux ratios, asymmetry.

Regression values were frozen from converged quadrature runs of this
package; the structural identities (sum rule, parity pair, tail
average) are checked independently of those pins.
"""

import math

import numpy as np
import pytest

import vortex_xsec as vx
from vortex_xsec.observables import DegenerateTransitionError, _forbidden_fraction
from vortex_xsec.quadrature import panel_nodes

OMEGA_14 = 0.46875
INV_COS_02 = 1.0203388449411926898  # 1/cos(0.2)


def beam(theta_k=0.2, m_gamma=3, lambda_hel=1):
    return vx.BeamParams(
        omega=OMEGA_14, theta_k=theta_k, m_gamma=m_gamma, lambda_hel=lambda_hel
    )


def test_sigma_avg_matches_helicity_combination():
    b = beam()
    for m in (-1, 0, 1):
        final = vx.AtomicState(4, 1, m)
        s = vx.sigma_avg(final, b)
        c = vx.helicity_combination(final, b)
        assert s.value >= 0.0
        assert math.isclose(s.value, abs(c) ** 2, rel_tol=1e-14)
        assert s.final == final and s.beam == b


def test_sigma_avg_plane_wave_limit():
    nearly_plane = beam(theta_k=1e-6)
    s = vx.sigma_avg(vx.AtomicState(4, 1, 1), nearly_plane)
    pw = vx.plane_wave_sigma(4, 1, nearly_plane)
    assert abs(s.value - pw) < 1e-9 * pw


def test_bessel_square_disk_integral_tail():
    # int_0^R b J_nu(kappa b)^2 db approaches R/(pi kappa) for kappa R >> nu
    kappa = beam().kappa
    radius = 1000.0 / kappa
    bs, ws = panel_nodes(0.0, radius, 660, 8)
    for nu in (0, 1, 4):
        j = vx.bessel_j(nu, kappa * bs)
        val = float(np.sum(ws * bs * j * j))
        assert abs(val - radius / (math.pi * kappa)) < 0.01 * radius / (math.pi * kappa)


def test_forbidden_fraction_values():
    # frozen from converged runs of this package
    assert math.isclose(vx.f_twisted(4, 1, beam()), 0.019834086829018514, rel_tol=1e-7)
    assert math.isclose(vx.f_twisted(4, 3, beam()), 0.202846179422215, rel_tol=1e-7)


def test_forbidden_fraction_bounds_and_limit():
    for n, l in [(2, 1), (4, 1), (4, 3)]:
        f = vx.f_twisted(n, l, beam())
        assert 0.0 <= f <= 1.0
    assert vx.f_twisted(4, 1, beam(theta_k=1e-5)) < 1e-8


def test_forbidden_fraction_rejects_s_states():
    with pytest.raises(ValueError):
        vx.f_twisted(4, 0, beam())


def test_degenerate_guard():
    zeros = {m: 0.0 for m in (-1, 0, 1)}
    with pytest.raises(DegenerateTransitionError):
        _forbidden_fraction(zeros, 1)


def test_cross_section_sum_rule():
    # summing the averaged strength over m_f recovers the plane-wave one;
    # rotational invariance makes this exact, quadrature-level residual only
    for n, l in [(4, 1), (4, 3)]:
        b = beam()
        total = sum(
            vx.sigma_avg(vx.AtomicState(n, l, m), b).value for m in range(-l, l + 1)
        )
        pw = vx.plane_wave_sigma(n, l, b)
        assert abs(total - pw) < 1e-9 * pw


def test_flux_ratio_is_inverse_cosine():
    assert math.isclose(vx.r_twisted(4, 1, beam()), INV_COS_02, rel_tol=1e-9)
    assert math.isclose(vx.r_twisted(4, 3, beam()), INV_COS_02, rel_tol=1e-9)


def test_flux_ratio_limits_and_monotonicity():
    assert abs(vx.r_twisted(4, 1, beam(theta_k=1e-6)) - 1.0) < 1e-9
    values = [vx.r_twisted(4, 1, beam(theta_k=th)) for th in (0.05, 0.1, 0.2)]
    assert values[0] < values[1] < values[2]
    for th, v in zip((0.05, 0.1, 0.2), values):
        assert math.isclose(v, 1.0 / math.cos(th), rel_tol=1e-9)


def test_disk_average_matches_cross_section_sum():
    b = beam()
    radius = 1000.0 / b.kappa
    total = sum(vx.sigma_avg(vx.AtomicState(4, 1, m), b).value for m in (-1, 0, 1))
    disk = vx.disk_averaged_rate(4, 1, b, radius)
    assert abs(disk * 3.0 * radius / 4.0 - total) < 0.01 * total


def test_disk_average_rejects_zero_cone():
    with pytest.raises(ValueError):
        vx.disk_averaged_rate(4, 1, beam(theta_k=0.0), 1000.0)


def test_amplitude_parity_pair():
    # flipping the signs of (m_gamma, helicity, m_f) together leaves |M| unchanged
    lam_au = 2.0 * math.pi / beam().k
    for m_f, b_wl in [(1, 0.4), (0, 0.9), (-1, 1.6)]:
        plus = vx.amplitude(vx.AtomicState(4, 1, m_f), beam(m_gamma=3, lambda_hel=1), b_wl * lam_au)
        minus = vx.amplitude(
            vx.AtomicState(4, 1, -m_f), beam(m_gamma=-3, lambda_hel=-1), b_wl * lam_au
        )
        assert abs(abs(plus.value) - abs(minus.value)) < 1e-12 * abs(plus.value)


def template(m_bar=2):
    return vx.BeamParams(omega=OMEGA_14, theta_k=0.2, m_gamma=m_bar, lambda_hel=1)


def test_asymmetry_on_axis_is_unity():
    # at b = 0 only m_gamma = m_bar - 1 can excite l_f = 1, so the
    # co-rotating beam takes everything
    pt = vx.a_lambda(4, 1, 2, template(), 0.0)
    assert pt.value == 1.0


def test_asymmetry_bounded_and_defined():
    lam_au = 2.0 * math.pi / template().k
    for b_wl in (0.2, 0.58, 1.0, 2.3):
        pt = vx.a_lambda(4, 1, 2, template(), b_wl * lam_au)
        assert pt.value is not None
        assert abs(pt.value) <= 1.0


def test_asymmetry_parity_pair_vanishes():
    # m_bar = 0 pairs beams that are exact mirror images
    lam_au = 2.0 * math.pi / template().k
    for b_wl in (0.3, 0.9, 1.7):
        pt = vx.a_lambda(4, 1, 0, template(0), b_wl * lam_au)
        assert abs(pt.value) < 1e-12


def test_asymmetry_undefined_when_both_rates_vanish():
    # neither m_gamma = 4 with Lambda = -1 nor m_gamma = 6 with Lambda = +1
    # reaches l_f = 1 on axis
    pt = vx.a_lambda(2, 1, 5, template(), 0.0)
    assert pt.value is None
    assert pt.b == 0.0


def test_asymmetry_scan_shape():
    lam_au = 2.0 * math.pi / template().k
    bs = [0.0, 0.5 * lam_au, 1.0 * lam_au]
    pts = vx.asymmetry_scan(4, 1, 2, template(), bs)
    assert [p.b for p in pts] == bs
    assert pts[0].value == 1.0


def _rates(b_au):
    bm = vx.BeamParams(omega=OMEGA_14, theta_k=0.2, m_gamma=1, lambda_hel=-1)
    bp = vx.BeamParams(omega=OMEGA_14, theta_k=0.2, m_gamma=3, lambda_hel=1)
    rm = sum(abs(vx.amplitude(vx.AtomicState(4, 1, m), bm, b_au).value) ** 2 for m in (-1, 0, 1))
    rp = sum(abs(vx.amplitude(vx.AtomicState(4, 1, m), bp, b_au).value) ** 2 for m in (-1, 0, 1))
    return rm, rp


def test_asymmetry_rate_weighted_average_washes_out():
    # averaging the asymmetry over beam positions with the rate as weight
    # tends to zero as the disk grows (both beams excite equally overall)
    kappa = template().kappa

    def weighted_avg(kappa_b):
        radius = kappa_b / kappa
        bs, ws = panel_nodes(0.0, radius, max(8, int(kappa_b / math.pi) + 2), 8)
        num = den = 0.0
        for b, w in zip(bs, ws):
            rm, rp = _rates(float(b))
            num += w * b * (rm - rp)
            den += w * b * (rm + rp)
        return abs(num / den)

    small = weighted_avg(10.0)
    large = weighted_avg(100.0)
    assert large < small
    assert large < 0.01


def test_asymmetry_figure_of_merit_prefers_offset_beam():
    # A^2 times the total rate is tiny on axis and peaks near half a wavelength
    lam_au = 2.0 * math.pi / template().k

    def fom(b_au):
        rm, rp = _rates(b_au)
        return vx.a_lambda(4, 1, 2, template(), b_au).value ** 2 * (rm + rp)

    assert fom(0.58 * lam_au) > 3.0 * fom(0.0)
