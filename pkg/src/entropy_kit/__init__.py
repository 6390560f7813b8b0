"""Unified (q, s)-entropies with continuity bounds and a verification harness."""

from .errors import (
    DimMismatch,
    DomainError,
    EntropyKitError,
    IncompleteMeasurement,
    InvalidIndex,
    NonHermitian,
    NotDiagonal,
    NotPositive,
    OutOfValidity,
    PureState,
)
from .tolerances import TOL, Tolerances
from .linops import (
    BipartiteState,
    DensityOperator,
    GeneralizedMeasurement,
    HermitianOperator,
    Isometry,
    OrthogonalResolution,
    ProbabilityDistribution,
    PureStateEnsemble,
    Spectrum,
    apply_generalized,
    diagonal_density,
    ensemble_from_state,
    kyfan_norm,
    matrix_from_dict,
    matrix_to_dict,
    maximally_mixed,
    partial_trace,
    pinch,
    purify,
    random_density,
    random_resolution,
    random_unitary,
    read_density,
    read_matrix,
    schatten_norm,
    spectral_decompose,
    tensor,
    trace_distance,
    trace_power,
    write_matrix,
)
from .entropies import (
    UnifiedParams,
    binary_tsallis,
    q_log,
    quantum_renyi,
    quantum_tsallis,
    renyi,
    tsallis,
    type_q_entropy,
    unified_classical,
    unified_from_power_sum,
    unified_quantum,
)
from .bounds import (
    BoundSpec,
    eta_q,
    fannes_range,
    fannes_tsallis_high_q,
    fannes_tsallis_low_q,
    kappa_s,
    lipschitz_bound,
    low_q_threshold,
    max_unified,
    stability_ratio_bound,
    thermodynamic_ratio_limit,
    unified_fannes_bound,
)
from .verify import (
    ALL_CHECKS,
    CheckReport,
    StabilityExample,
    check_audenaert,
    check_ensemble_bound,
    check_fannes,
    check_mixing_bound,
    check_pinching_traces,
    check_projective_nondecrease,
    check_scalar_lemma,
    check_subadditivity,
    check_triangle,
    qubit_measurement_decrease,
    report_ok,
    run_check,
    search_subadditivity_violation,
    stability_example_states,
    stability_ratio,
)

__version__ = "0.1.0"
