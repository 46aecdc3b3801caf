"""Gauss-Legendre quadrature helpers.

Node/weight sets come from numpy's Legendre module and are cached per
node count. The panel integrator doubles the panel count until the
integral stabilizes, which gives an honest two-grid error estimate for
smooth integrands.
"""

from functools import lru_cache
from typing import Callable

import numpy as np


class QuadratureConvergenceError(RuntimeError):
    """Raised when panel doubling fails to reach the requested tolerance.

    Carries the best available value and its two-grid error estimate so
    callers can report a partial result.
    """

    def __init__(self, message: str, partial=None, error_estimate: float | None = None):
        super().__init__(message)
        self.partial = partial
        self.error_estimate = error_estimate


@lru_cache(maxsize=64)
def gauss_legendre(n_nodes: int):
    """Nodes and weights on [-1, 1]. Cached; treat the arrays as read-only."""
    if n_nodes < 1:
        raise ValueError("need at least one node")
    nodes, weights = np.polynomial.legendre.leggauss(n_nodes)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def panel_nodes(a: float, b: float, n_panels: int, n_nodes: int):
    """Composite Gauss-Legendre grid on [a, b]: flat node and weight arrays."""
    if not b > a:
        raise ValueError("need b > a")
    if n_panels < 1:
        raise ValueError("need at least one panel")
    base_x, base_w = gauss_legendre(n_nodes)
    edges = np.linspace(a, b, n_panels + 1)
    lo = edges[:-1, None]
    hi = edges[1:, None]
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    x = (mid + half * base_x[None, :]).ravel()
    w = (half * base_w[None, :]).ravel()
    return x, w


def integrate_fixed(f: Callable, a: float, b: float, n_panels: int, n_nodes: int):
    """Composite Gauss-Legendre integral of a vectorized integrand."""
    x, w = panel_nodes(a, b, n_panels, n_nodes)
    return np.sum(w * f(x))


def integrate_to_convergence(
    f: Callable,
    a: float,
    b: float,
    rel_tol: float = 1.0e-10,
    abs_floor: float = 1.0e-300,
    start_panels: int = 4,
    n_nodes: int = 40,
    max_doublings: int = 7,
):
    """Integrate a vectorized integrand, doubling panels until converged.

    Returns
    -------
    (value, error_estimate)
        error_estimate is the relative change on the final doubling
        (absolute change when the value is below abs_floor).

    Raises
    ------
    QuadratureConvergenceError
        If the tolerance is not met after max_doublings; the exception
        carries the last value as a partial result.
    """
    panels = start_panels
    prev = integrate_fixed(f, a, b, panels, n_nodes)
    err = np.inf
    for _ in range(max_doublings):
        panels *= 2
        cur = integrate_fixed(f, a, b, panels, n_nodes)
        diff = abs(cur - prev)
        scale = max(abs(cur), abs_floor)
        err = diff / scale if abs(cur) > abs_floor else diff
        prev = cur
        if err <= rel_tol:
            return cur, err
    raise QuadratureConvergenceError(
        f"integral did not converge to {rel_tol:g} after {max_doublings} doublings "
        f"(last relative change {err:g})",
        partial=prev,
        error_estimate=err,
    )
