"""
Two position-coupled harmonic oscillators in the ultrastrong regime.

Truncated two-mode Fock space numerics (``hilbert``), the bare and
normal-mode descriptions of the coupled system (``model``, ``spectrum``),
entanglement and squeezing measures (``measures``) and closed and open
time evolution (``dynamics``).
"""
from .dynamics import (
    EvolutionConfig,
    TimeSeries,
    dt_halving_drift,
    evolve,
    evolve_closed,
    evolve_master_micro,
    evolve_master_phenom,
    steady_state,
)
from .exceptions import CutoffSaturationError, InstabilityError, UnsupportedCaseError
from .hilbert import (
    DensityMatrix,
    FockCutoff,
    StateVector,
    expectation,
    fock_state,
    ladder_ops,
    number_ops,
    parity_op,
    partial_transpose_b,
    vacuum,
)
from .measures import (
    QuadratureSpec,
    ground_negativity_curve,
    log_negativity,
    min_quadrature_variance,
    quadrature_variance_analytic,
    quadrature_variance_numeric,
)
from .model import (
    MechanicalParams,
    ModelParams,
    NormalModeData,
    build_hamiltonian,
    build_rwa_hamiltonian,
    degenerate,
    from_mechanical,
    normal_mode_analysis,
)
from .spectrum import (
    EigenSystem,
    build_squeezers,
    build_U,
    diagonalize,
    ground_excitations_analytic,
    ground_state_analytic_degenerate,
    ground_state_numeric,
    ground_state_transform,
)

__version__ = "0.1.0"
