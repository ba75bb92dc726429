"""Numerical solvers for the quantum Rabi model with a diamagnetic term.

The package reduces the model with the quadratic field term to a renormalized
Rabi model by an exact Bogoliubov squeeze, diagonalizes it per combined-parity
sector in a truncated Fock basis, provides closed-form rotating-wave spectra
and photon statistics, and evolves coherent-state initial conditions to obtain
the atomic inversion and its Fourier spectrum.
"""

from .dynamics import (
    FrequencySpectrum,
    InitialCondition,
    Projection,
    TimeGrid,
    TimeSeries,
    atomic_density_matrix,
    count_peaks,
    direct_evolution_oracle,
    evolve_inversion,
    fourier_spectrum,
    prepare_dynamics,
    project_initial,
)
from .errors import (
    CompletenessError,
    ConvergenceError,
    ParameterError,
    QrmaError,
    TruncationError,
)
from .model import (
    DerivedParams,
    ModelParams,
    Parity,
    build_parity_block,
    build_qrma_dense,
    build_rotated_dense,
    build_transformed_dense,
    derive_params,
)
from .rwa import (
    RwaLevel,
    rwa_inversion,
    rwa_photon_number,
    rwar_excited,
    rwar_ground,
    rwar_sector_energies,
)
from .spectrum import (
    EigenSolution,
    SpectrumRow,
    find_crossings,
    ground_state,
    photon_number_exact,
    solve_block,
    solve_converged,
    sweep,
)
from .squeeze import (
    FockVector,
    SqueezeSpec,
    coherent_amplitudes,
    squeeze_matrix,
    squeezed_coherent_overlaps,
)
from .tridiag import tridiagonal_eigh, tridiagonal_eigvals

__version__ = "0.1.0"

__all__ = [
    "CompletenessError",
    "ConvergenceError",
    "DerivedParams",
    "EigenSolution",
    "FockVector",
    "FrequencySpectrum",
    "InitialCondition",
    "ModelParams",
    "ParameterError",
    "Parity",
    "Projection",
    "QrmaError",
    "RwaLevel",
    "SpectrumRow",
    "SqueezeSpec",
    "TimeGrid",
    "TimeSeries",
    "TruncationError",
    "atomic_density_matrix",
    "build_parity_block",
    "build_qrma_dense",
    "build_rotated_dense",
    "build_transformed_dense",
    "coherent_amplitudes",
    "count_peaks",
    "derive_params",
    "direct_evolution_oracle",
    "evolve_inversion",
    "find_crossings",
    "fourier_spectrum",
    "ground_state",
    "photon_number_exact",
    "prepare_dynamics",
    "project_initial",
    "rwa_inversion",
    "rwa_photon_number",
    "rwar_excited",
    "rwar_ground",
    "rwar_sector_energies",
    "solve_block",
    "solve_converged",
    "squeeze_matrix",
    "squeezed_coherent_overlaps",
    "sweep",
    "tridiagonal_eigh",
    "tridiagonal_eigvals",
]
