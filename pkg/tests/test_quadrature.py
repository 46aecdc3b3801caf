"""Quadrature helper tests."""

import math

import numpy as np
import pytest

from vortex_xsec.quadrature import (
    QuadratureConvergenceError,
    gauss_legendre,
    integrate_fixed,
    integrate_to_convergence,
    panel_nodes,
)


def test_gauss_legendre_polynomial_exactness():
    # n nodes integrate degree 2n-1 exactly on [-1, 1]
    nodes, weights = gauss_legendre(8)
    for p in range(0, 16):
        val = float(np.sum(weights * nodes**p))
        exact = 0.0 if p % 2 else 2.0 / (p + 1)
        assert abs(val - exact) < 1e-14


def test_gauss_legendre_cached_read_only():
    nodes, _ = gauss_legendre(16)
    with pytest.raises(ValueError):
        nodes[0] = 0.0


def test_panel_nodes_cover_interval():
    xs, ws = panel_nodes(1.0, 5.0, 4, 10)
    assert xs.shape == ws.shape == (40,)
    assert xs.min() > 1.0 and xs.max() < 5.0
    assert abs(float(np.sum(ws)) - 4.0) < 1e-13


def test_integrate_fixed_exponential():
    val = integrate_fixed(lambda x: np.exp(-x), 0.0, 20.0, 8, 20)
    assert abs(val - (1.0 - math.exp(-20.0))) < 1e-13


def test_integrate_to_convergence_oscillatory():
    val, err = integrate_to_convergence(lambda x: np.sin(3.0 * x), 0.0, math.pi, rel_tol=1e-12)
    assert abs(val - 2.0 / 3.0) < 1e-11
    assert err <= 1e-12


def test_integrate_to_convergence_flags_rough_integrand():
    # a kink whose quadrature error refuses to fall below the target
    with pytest.raises(QuadratureConvergenceError) as info:
        integrate_to_convergence(
            lambda x: np.abs(x - 1.0 / 3.0) ** 0.1,
            0.0,
            1.0,
            rel_tol=1e-14,
            max_doublings=3,
        )
    assert info.value.partial is not None
