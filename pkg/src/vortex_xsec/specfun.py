"""Self-contained special functions.

Integer-order Bessel functions of the first kind, hydrogenic radial
wavefunctions, and real spherical harmonics evaluated in the phi = 0
plane (Condon-Shortley phase). All functions accept scalars or numpy
arrays for the continuous argument and are pure, so they are safe to
call from multiple threads.
"""

from dataclasses import dataclass
import math

import numpy as np

MAX_BESSEL_ORDER = 64
MAX_PRINCIPAL_N = 10
MAX_HARMONIC_L = 10

_RESCALE_LIMIT = 1.0e250
_SEED = 1.0e-30


def _check_nl(n: int, l: int) -> None:
    if not (isinstance(n, (int, np.integer)) and isinstance(l, (int, np.integer))):
        raise ValueError("quantum numbers must be integers")
    if n < 1 or n > MAX_PRINCIPAL_N:
        raise ValueError(f"principal quantum number {n} outside [1, {MAX_PRINCIPAL_N}]")
    if l < 0 or l >= n:
        raise ValueError(f"orbital quantum number {l} invalid for n={n}")


def _miller(n: int, ax: np.ndarray) -> np.ndarray:
    """Backward-recurrence evaluation of J_n(ax) for ax >= 0, n >= 0.

    Recurses down from a starting order well above both n and the
    argument, then normalizes with J_0(x) + 2*sum_k J_{2k}(x) = 1.
    Lanes are rescaled independently whenever the unnormalized iterate
    overflows toward 1e250 (tiny arguments grow by ~2m/x per step).
    """
    zero = ax == 0.0
    safe = np.where(zero, 1.0, ax)

    m0 = max(n, int(math.ceil(float(np.max(ax)) if ax.size else 1.0)), 1)
    start = m0 + int(14.0 * m0 ** (1.0 / 3.0)) + 36
    if start % 2:
        start += 1

    jp = np.zeros_like(safe)          # J_{m+1}
    jc = np.full_like(safe, _SEED)    # J_m
    norm = np.zeros_like(safe)
    target = np.zeros_like(safe)

    for m in range(start, 0, -1):
        jm = (2.0 * m / safe) * jc - jp
        jp = jc
        jc = jm
        order = m - 1
        if order == n:
            target = jc.copy()
        if order > 0 and order % 2 == 0:
            norm = norm + 2.0 * jc
        big = np.abs(jc) > _RESCALE_LIMIT
        if big.any():
            scale = np.where(big, 1.0 / _RESCALE_LIMIT, 1.0)
            jc = jc * scale
            jp = jp * scale
            norm = norm * scale
            target = target * scale

    norm = norm + jc  # jc is now the unnormalized J_0
    out = target / norm
    if zero.any():
        out = np.where(zero, 1.0 if n == 0 else 0.0, out)
    return out


def bessel_j(order: int, x):
    """Bessel function of the first kind J_order(x).

    Parameters
    ----------
    order : int
        Any integer with |order| <= 64. Negative orders use
        J_{-n}(x) = (-1)^n J_n(x).
    x : float or array_like
        Finite argument. Negative arguments use J_n(-x) = (-1)^n J_n(x).

    Returns
    -------
    float or ndarray
        Relative accuracy is ~1e-13 or better for |x| <= 1e3.
    """
    if not isinstance(order, (int, np.integer)):
        raise ValueError("order must be an integer")
    if abs(order) > MAX_BESSEL_ORDER:
        raise ValueError(f"|order| > {MAX_BESSEL_ORDER} not supported")
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("argument must be finite")
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)

    n = abs(int(order))
    out = _miller(n, np.abs(arr))
    if order < 0 and n % 2 == 1:
        out = -out
    if n % 2 == 1:
        out = np.where(arr < 0.0, -out, out)
    return float(out[0]) if scalar else out


def radial(n: int, l: int, r):
    """Hydrogenic radial wavefunction R_nl(r) in atomic units.

    Normalized so that the integral of r^2 R_nl^2 over [0, inf) is 1.
    Uses the closed form with an associated Laguerre polynomial built by
    upward three-term recurrence in the degree.
    """
    _check_nl(n, l)
    arr = np.asarray(r, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0.0):
        raise ValueError("radius must be finite and non-negative")
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)

    x = 2.0 * arr / n
    a = 2 * l + 1
    deg = n - l - 1
    lag_prev = np.ones_like(x)
    if deg == 0:
        lag = lag_prev
    else:
        lag = 1.0 + a - x
        for k in range(1, deg):
            lag, lag_prev = ((2 * k + 1 + a - x) * lag - (k + a) * lag_prev) / (k + 1), lag
    norm = math.sqrt(
        (2.0 / n) ** 3 * math.factorial(n - l - 1) / (2.0 * n * math.factorial(n + l))
    )
    out = norm * np.exp(-arr / n) * x**l * lag
    return float(out[0]) if scalar else out


def radial_derivative_10(r):
    """Derivative of the ground-state radial function, R'_10(r) = -R_10(r)."""
    return -radial(1, 0, r)


def ylm_phi0(l: int, m: int, costheta):
    """Real value of the spherical harmonic Y_lm(theta, phi=0).

    Condon-Shortley phase, so Y_{l,-m}(theta, 0) = (-1)^m Y_{lm}(theta, 0).

    Parameters
    ----------
    l, m : int
        |m| <= l <= 10.
    costheta : float or array_like
        cos(theta) in [-1, 1].
    """
    if not (isinstance(l, (int, np.integer)) and isinstance(m, (int, np.integer))):
        raise ValueError("l and m must be integers")
    if l < 0 or l > MAX_HARMONIC_L or abs(m) > l:
        raise ValueError(f"invalid harmonic indices l={l}, m={m}")
    arr = np.asarray(costheta, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(np.abs(arr) > 1.0 + 1e-12):
        raise ValueError("cos(theta) must lie in [-1, 1]")
    scalar = arr.ndim == 0
    arr = np.clip(np.atleast_1d(arr), -1.0, 1.0)

    ma = abs(int(m))
    s = np.sqrt(1.0 - arr * arr)
    pmm = np.ones_like(arr)
    for i in range(ma):
        pmm = pmm * (-(2 * i + 1)) * s
    if l == ma:
        plm = pmm
    else:
        pnext = arr * (2 * ma + 1) * pmm
        for ll in range(ma + 2, l + 1):
            pnext, pmm = ((2 * ll - 1) * arr * pnext - (ll + ma - 1) * pmm) / (ll - ma), pnext
        plm = pnext
    norm = math.sqrt(
        (2 * l + 1) / (4.0 * math.pi) * math.factorial(l - ma) / math.factorial(l + ma)
    )
    out = norm * plm
    if m < 0 and ma % 2 == 1:
        out = -out
    return float(out[0]) if scalar else out


@dataclass(frozen=True)
class RadialWavefunction:
    """Bound hydrogenic radial state R_nl, callable on radii in Bohr."""

    n: int
    l: int

    def __post_init__(self):
        _check_nl(self.n, self.l)

    def __call__(self, r):
        return radial(self.n, self.l, r)


@dataclass(frozen=True)
class SphericalHarmonicSlice:
    """Y_lm restricted to the phi = 0 half-plane, a real function of cos(theta)."""

    l: int
    m: int

    def __post_init__(self):
        if self.l < 0 or self.l > MAX_HARMONIC_L or abs(self.m) > self.l:
            raise ValueError(f"invalid harmonic indices l={self.l}, m={self.m}")

    def __call__(self, costheta):
        return ylm_phi0(self.l, self.m, costheta)
