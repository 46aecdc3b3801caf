"""Physical constants and unit conversions.

Everything downstream works in Hartree atomic units: lengths in Bohr
radii (a0 = 1), energies in Hartree, and the speed of light c = 1/alpha.
A photon of energy omega therefore has wavenumber k = alpha * omega in
inverse Bohr radii.
"""

import math

# CODATA 2018
FINE_STRUCTURE = 7.2973525693e-3
BOHR_RADIUS_NM = 0.052917721090380


def wavenumber_au(omega: float) -> float:
    """Photon wavenumber k in inverse Bohr radii for energy omega in Hartree."""
    return FINE_STRUCTURE * omega


def wavelength_nm_from_omega(omega: float) -> float:
    """Vacuum wavelength in nm for a photon energy in Hartree."""
    if omega <= 0.0:
        raise ValueError("photon energy must be positive")
    return 2.0 * math.pi * BOHR_RADIUS_NM / (FINE_STRUCTURE * omega)


def omega_from_wavelength_nm(wavelength_nm: float) -> float:
    """Photon energy in Hartree for a vacuum wavelength in nm."""
    if wavelength_nm <= 0.0:
        raise ValueError("wavelength must be positive")
    return 2.0 * math.pi * BOHR_RADIUS_NM / (FINE_STRUCTURE * wavelength_nm)


def wavelength_au_from_omega(omega: float) -> float:
    """Vacuum wavelength in Bohr radii, 2*pi/k."""
    return 2.0 * math.pi / wavenumber_au(omega)
