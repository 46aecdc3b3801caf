"""Photoexcitation of hydrogen-like atoms by twisted (Bessel-mode) photons.

Field maps, transition amplitudes at arbitrary impact parameter,
selection rules, position-averaged cross sections, and the derived
beam observables, all in Hartree atomic units.
"""

__version__ = "0.1.0"

from .amplitude import (
    Amplitude,
    AtomicState,
    ReducedFactor,
    amplitude,
    amplitude_prefactor,
    g_reduced,
    helicity_combination,
    photon_energy_for,
    selection_scaling_check,
)
from .angmom import (
    AngularMomentumBudget,
    analytic_channel_weights,
    channel_weights,
    orbital_projection,
    spin_projection,
    total_projection,
)
from .beam import (
    BeamParams,
    FieldSample,
    PolarizationBasis,
    fields,
    magnetic_field_cylindrical,
    polarization_basis,
    polarization_vector,
    poynting_components,
    translate,
    vector_potential,
    vector_potential_components,
)
from .constants import (
    BOHR_RADIUS_NM,
    FINE_STRUCTURE,
    omega_from_wavelength_nm,
    wavelength_nm_from_omega,
)
from .observables import (
    AsymmetryPoint,
    AveragedCrossSection,
    DegenerateTransitionError,
    a_lambda,
    asymmetry_scan,
    disk_averaged_rate,
    f_twisted,
    plane_wave_sigma,
    r_twisted,
    sigma_avg,
)
from .quadrature import QuadratureConvergenceError
from .specfun import (
    RadialWavefunction,
    SphericalHarmonicSlice,
    bessel_j,
    radial,
    radial_derivative_10,
    ylm_phi0,
)

__all__ = [
    "__version__",
    "Amplitude",
    "AtomicState",
    "ReducedFactor",
    "amplitude",
    "amplitude_prefactor",
    "g_reduced",
    "helicity_combination",
    "photon_energy_for",
    "selection_scaling_check",
    "AngularMomentumBudget",
    "analytic_channel_weights",
    "channel_weights",
    "orbital_projection",
    "spin_projection",
    "total_projection",
    "BeamParams",
    "FieldSample",
    "PolarizationBasis",
    "fields",
    "magnetic_field_cylindrical",
    "polarization_basis",
    "polarization_vector",
    "poynting_components",
    "translate",
    "vector_potential",
    "vector_potential_components",
    "BOHR_RADIUS_NM",
    "FINE_STRUCTURE",
    "omega_from_wavelength_nm",
    "wavelength_nm_from_omega",
    "AsymmetryPoint",
    "AveragedCrossSection",
    "DegenerateTransitionError",
    "a_lambda",
    "asymmetry_scan",
    "disk_averaged_rate",
    "f_twisted",
    "plane_wave_sigma",
    "r_twisted",
    "sigma_avg",
    "QuadratureConvergenceError",
    "RadialWavefunction",
    "SphericalHarmonicSlice",
    "bessel_j",
    "radial",
    "radial_derivative_10",
    "ylm_phi0",
]
