"""Hadamard walk on the line: simulation, spectra, and coin entanglement.

The package computes the coin-position entanglement of the discrete-time
Hadamard walk three independent ways and cross-checks them:

* direct position-space stepping (`evolve`, `reduced_density_position`),
* exact wavenumber-space evolution (`fourier_transform`, `k_evolve`),
* long-time quadrature and closed forms (`asymptotic_reduced_density`,
  `localized_entropy`, `h1_eigenvalues`).
"""

from .asymptotics import (
    CLOSED_FORM,
    CLOSED_FORM_COEFFICIENTS,
    AsymptoticCoefficients,
    ClosedFormConstants,
    appendix_coefficients,
    asymptotic_reduced_density,
    asymptotic_reduced_density_symmetric,
    gaussian_asymptotic_entropy,
    h1_eigenvalues,
    localized_delta,
    localized_entropy,
    q_weight,
    r_weight,
)
from .entanglement import (
    DELTA_CLAMP,
    EntanglementResult,
    ReducedDensity,
    entanglement_history,
    entropy,
    entropy_from_delta,
    reduced_density_k,
    reduced_density_position,
)
from .evolution import evolve, hadamard_coin, step
from .quadrature import DEFAULT_GRID_N, PeriodicGrid, integrate_average
from .report import (
    format_number,
    render_table,
    scan_figure,
    simulate_figure,
    sweep_figure,
    write_table,
)
from .spectral import (
    FGFactors,
    KEigensystem,
    eigensystem,
    fg_factors,
    k_evolve,
    single_k_step,
)
from .states import (
    Custom,
    CoinSpinor,
    Gaussian,
    H1,
    InitialCondition,
    KSpinorField,
    Localized,
    PositionState,
    build_initial,
    fourier_transform,
    inverse_fourier,
    position_distribution,
    symmetric_coin,
    variance,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticCoefficients",
    "CLOSED_FORM",
    "CLOSED_FORM_COEFFICIENTS",
    "ClosedFormConstants",
    "CoinSpinor",
    "Custom",
    "DEFAULT_GRID_N",
    "DELTA_CLAMP",
    "EntanglementResult",
    "FGFactors",
    "Gaussian",
    "H1",
    "InitialCondition",
    "KEigensystem",
    "KSpinorField",
    "Localized",
    "PeriodicGrid",
    "PositionState",
    "ReducedDensity",
    "appendix_coefficients",
    "asymptotic_reduced_density",
    "asymptotic_reduced_density_symmetric",
    "build_initial",
    "eigensystem",
    "entanglement_history",
    "entropy",
    "entropy_from_delta",
    "evolve",
    "fg_factors",
    "format_number",
    "fourier_transform",
    "gaussian_asymptotic_entropy",
    "hadamard_coin",
    "h1_eigenvalues",
    "integrate_average",
    "inverse_fourier",
    "k_evolve",
    "localized_delta",
    "localized_entropy",
    "position_distribution",
    "q_weight",
    "r_weight",
    "reduced_density_k",
    "reduced_density_position",
    "render_table",
    "scan_figure",
    "simulate_figure",
    "single_k_step",
    "step",
    "sweep_figure",
    "symmetric_coin",
    "variance",
    "write_table",
]
