"""Two two-level atoms exchanging excitations with a coherent cavity mode.

The package simulates the closed, resonant dynamics exactly in conserved
excitation blocks, reduces to the two-atom density matrix, and evaluates
the information stack on top of it: impurities, the two-qubit PPT
separability verdict under Pauli attacks, trace-overlap fidelities, the
dense-coding Holevo ceiling, and the eavesdropping security bound.
"""

from .errors import (
    CavityPairError,
    ConfigError,
    NumericsError,
    PsdViolationError,
    ResourceLimitError,
    TruncationLeakError,
)
from .hilbert import (
    EXCITED,
    GROUND,
    HARD_MAX_CUTOFF,
    AtomicInit,
    FockAmplitudes,
    JointState,
    coherent_amplitudes,
    initial_state,
    joint_index,
    unflatten_index,
)
from .dynamics import (
    BlockPropagator,
    DynamicsConfig,
    ExcitationBlock,
    block_hamiltonian,
    evolve,
    excitation_basis,
    propagator_for,
)
from .reduced import (
    SingleQubitDensity,
    TwoQubitDensity,
    schmidt_purity,
    trace_atom,
    trace_field,
)
from .measures import (
    PAULIS,
    ImpurityTriple,
    PptReport,
    impurity,
    impurity_triple,
    overlap_fidelity,
    partial_transpose,
    ppt_report,
    von_neumann_entropy,
)
from .protocol import (
    CodingEnsemble,
    SecurityRecord,
    coded_state,
    disturbance,
    eve_information,
    holevo_bound,
    pauli_channel,
    secure,
    security_record,
    security_threshold,
)
from .analytic import (
    CrossCheckRow,
    ClosedFormCoefficients,
    ClosedFormImpurities,
    coefficient_streams,
    cross_check,
    closed_form_coefficients,
    closed_form_impurities,
)
from .sweep import (
    ALL_COLUMNS,
    ATTACKS,
    MEASURE_GROUPS,
    PRESET_NAMES,
    SweepConfig,
    SweepRecord,
    active_columns,
    emit_csv,
    emit_crosscheck_csv,
    emit_plotscript,
    figure_preset,
    format_csv,
    run_sweep,
    tau_grid,
)

__version__ = "0.1.0"

__all__ = [
    "CavityPairError",
    "ConfigError",
    "NumericsError",
    "PsdViolationError",
    "ResourceLimitError",
    "TruncationLeakError",
    "EXCITED",
    "GROUND",
    "HARD_MAX_CUTOFF",
    "AtomicInit",
    "FockAmplitudes",
    "JointState",
    "coherent_amplitudes",
    "initial_state",
    "joint_index",
    "unflatten_index",
    "BlockPropagator",
    "DynamicsConfig",
    "ExcitationBlock",
    "block_hamiltonian",
    "evolve",
    "excitation_basis",
    "propagator_for",
    "SingleQubitDensity",
    "TwoQubitDensity",
    "schmidt_purity",
    "trace_atom",
    "trace_field",
    "PAULIS",
    "ImpurityTriple",
    "PptReport",
    "impurity",
    "impurity_triple",
    "overlap_fidelity",
    "partial_transpose",
    "ppt_report",
    "von_neumann_entropy",
    "CodingEnsemble",
    "SecurityRecord",
    "coded_state",
    "disturbance",
    "eve_information",
    "holevo_bound",
    "pauli_channel",
    "secure",
    "security_record",
    "security_threshold",
    "CrossCheckRow",
    "ClosedFormCoefficients",
    "ClosedFormImpurities",
    "coefficient_streams",
    "cross_check",
    "closed_form_coefficients",
    "closed_form_impurities",
    "ALL_COLUMNS",
    "ATTACKS",
    "MEASURE_GROUPS",
    "PRESET_NAMES",
    "SweepConfig",
    "SweepRecord",
    "active_columns",
    "emit_csv",
    "emit_crosscheck_csv",
    "emit_plotscript",
    "figure_preset",
    "format_csv",
    "run_sweep",
    "tau_grid",
]
