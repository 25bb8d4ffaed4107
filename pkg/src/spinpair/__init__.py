"""Two-qubit Heisenberg-XYZ dynamics under intrinsic decoherence.

Builds the two-spin Hamiltonian (XYZ exchange, x/y antisymmetric
spin-orbit couplings, inhomogeneous x-direction field), propagates any
initial density matrix with the spectral closed form of the
double-commutator dephasing master equation, and reports non-local
correlation time series: local quantum Fisher information, local
quantum uncertainty and logarithmic negativity, plus purity.
"""

from .cli import (
    PRESET_IDS,
    PRESETS,
    FigurePreset,
    RunConfig,
    SweepSpec,
    ValidationReport,
    emit,
    figure_preset,
    main,
    parse_config,
    run_simulation,
    run_sweep,
    validate_command,
)
from .errors import (
    InvalidDensityMatrix,
    NotHermitian,
    NotPositiveSemidefinite,
    NumericalDefect,
    ParseError,
    SpinpairError,
    ValidationError,
)
from .evolution import Propagator, TimeGrid, evolve, evolve_series, make_propagator, rk4_oracle
from .linalg import (
    IDENTITY_2,
    PAULIS,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    SpectralDecomposition,
    eig_hermitian,
    hermitian_deviation,
    hermitian_part,
    kron,
    matrix_sqrt_psd,
    partial_transpose_b,
    validate_density_matrix,
)
from .model import Hamiltonian, ModelParams, build_hamiltonian, initial_state
from .quantifiers import (
    CorrelationSample,
    LocalSide,
    log_negativity,
    lqfi,
    lqu,
    purity,
    sample,
)

__version__ = "0.1.0"

__all__ = [
    "CorrelationSample",
    "FigurePreset",
    "Hamiltonian",
    "IDENTITY_2",
    "InvalidDensityMatrix",
    "LocalSide",
    "ModelParams",
    "NotHermitian",
    "NotPositiveSemidefinite",
    "NumericalDefect",
    "PAULIS",
    "PRESET_IDS",
    "PRESETS",
    "ParseError",
    "Propagator",
    "RunConfig",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "SpectralDecomposition",
    "SpinpairError",
    "SweepSpec",
    "TimeGrid",
    "ValidationError",
    "ValidationReport",
    "build_hamiltonian",
    "eig_hermitian",
    "emit",
    "evolve",
    "evolve_series",
    "figure_preset",
    "hermitian_deviation",
    "hermitian_part",
    "initial_state",
    "kron",
    "log_negativity",
    "lqfi",
    "lqu",
    "main",
    "make_propagator",
    "matrix_sqrt_psd",
    "parse_config",
    "partial_transpose_b",
    "purity",
    "rk4_oracle",
    "run_simulation",
    "run_sweep",
    "sample",
    "validate_command",
    "validate_density_matrix",
]
