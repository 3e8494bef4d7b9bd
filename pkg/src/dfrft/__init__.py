"""Discrete fractional Fourier transforms realized by Jx-coupled lattices.

The lattice whose nearest-neighbor couplings follow the angular-momentum
matrix Jx has an exactly equidistant spectrum, so its evolution implements
a one-parameter family of unitaries interpolating between the identity
(Z = 0) and a discrete Fourier analog (Z = pi/2). This package provides the
exact spectra and eigenbases, closed-form and spectral transfer matrices,
classical field propagation, two-photon coincidence maps with their parity
suppression laws, and large-lattice convergence checks, plus a batch CLI.
"""

from .biphoton import (
    ClosedFormCalibration,
    CorrelationMatrix,
    PhotonDensity,
    RotationReport,
    SuppressionReport,
    TwoPhotonInput,
    apply_beamsplitter,
    calibrate_outermost_closed_form,
    correlation,
    outermost_pair_correlation,
    photon_density,
    rotation_comparison,
    suppression_report,
)
from .continuum import (
    ContinuumProbe,
    ConvergenceTable,
    continuum_overlap,
    convergence_study,
    eigenrelation_residual,
)
from .errors import NumericError, UsageError
from .lattice import (
    JxMatrix,
    LatticeSpec,
    SpectralBasis,
    analytic_eigenvector,
    build_jx,
    exact_eigenvalues,
    numeric_basis,
    physical_length,
    spectral_basis,
)
from .specfun import JacobiParams, hermite_gauss, jacobi, log_factorial
from .transform import (
    Field,
    GreenMatrix,
    InputProfileSpec,
    closed_form_singular,
    continuous_frft_gaussian,
    dfrft,
    green_closed,
    green_quarter,
    green_spectral,
    make_input,
    propagate,
    zscan,
)

__version__ = "0.1.0"

__all__ = [
    "ClosedFormCalibration",
    "ContinuumProbe",
    "ConvergenceTable",
    "CorrelationMatrix",
    "Field",
    "GreenMatrix",
    "InputProfileSpec",
    "JacobiParams",
    "JxMatrix",
    "LatticeSpec",
    "NumericError",
    "PhotonDensity",
    "RotationReport",
    "SpectralBasis",
    "SuppressionReport",
    "TwoPhotonInput",
    "UsageError",
    "analytic_eigenvector",
    "apply_beamsplitter",
    "build_jx",
    "calibrate_outermost_closed_form",
    "closed_form_singular",
    "continuous_frft_gaussian",
    "continuum_overlap",
    "convergence_study",
    "correlation",
    "dfrft",
    "eigenrelation_residual",
    "exact_eigenvalues",
    "green_closed",
    "green_quarter",
    "green_spectral",
    "hermite_gauss",
    "jacobi",
    "log_factorial",
    "make_input",
    "numeric_basis",
    "outermost_pair_correlation",
    "photon_density",
    "physical_length",
    "propagate",
    "rotation_comparison",
    "spectral_basis",
    "suppression_report",
    "zscan",
]
