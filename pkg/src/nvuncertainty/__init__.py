"""Entropic uncertainty with a nuclear-spin quantum memory.

Two-qubit state tools, entropy functionals, an uncertainty-based
entanglement witness, and a pulse-level simulator of the electron-nuclear
readout protocol, including electronic dephasing.
"""

__version__ = "0.1.0"

from .qcore import (
    BlochForm,
    InvalidStateError,
    bloch_compose,
    bloch_decompose,
    hermitian_eigenvalues,
    partial_trace,
    tensor,
    validate_density_matrix,
)
from .states import random_mixed, random_pure, schmidt_state, schmidt_vector, werner_state
from .entropic import (
    PAULI_X,
    PAULI_Z,
    PauliObservable,
    UncertaintyReport,
    binary_entropy,
    complementarity,
    conditional_entropy,
    lower_bound,
    lower_bound_generic,
    measured_conditional_entropy,
    measurement_estimate,
    post_measurement_state,
    uncertainty_closed,
    uncertainty_generic,
    uncertainty_report,
    von_neumann_entropy,
)
from .entwit import WitnessVerdict, concurrence, witness, witness_threshold_q
from .nvsim import (
    CountsTable,
    DephasingModel,
    KappaEstimate,
    ProtocolSequence,
    PulseOp,
    apply_pulse,
    apply_sequence,
    dephase,
    electron_hadamard,
    estimate_me,
    joint_distribution,
    laser_polarize,
    map_nuclear_to_electron_sequence,
    measure_electron_z,
    mw_rotation,
    prepare_schmidt_sequence,
    rf_rotation,
    run_protocol,
)

__all__ = [
    "BlochForm",
    "CountsTable",
    "DephasingModel",
    "InvalidStateError",
    "KappaEstimate",
    "PAULI_X",
    "PAULI_Z",
    "PauliObservable",
    "ProtocolSequence",
    "PulseOp",
    "UncertaintyReport",
    "WitnessVerdict",
    "apply_pulse",
    "apply_sequence",
    "binary_entropy",
    "bloch_compose",
    "bloch_decompose",
    "complementarity",
    "concurrence",
    "conditional_entropy",
    "dephase",
    "electron_hadamard",
    "estimate_me",
    "hermitian_eigenvalues",
    "joint_distribution",
    "laser_polarize",
    "lower_bound",
    "lower_bound_generic",
    "map_nuclear_to_electron_sequence",
    "measure_electron_z",
    "measured_conditional_entropy",
    "measurement_estimate",
    "mw_rotation",
    "partial_trace",
    "post_measurement_state",
    "prepare_schmidt_sequence",
    "random_mixed",
    "random_pure",
    "rf_rotation",
    "run_protocol",
    "schmidt_state",
    "schmidt_vector",
    "tensor",
    "uncertainty_closed",
    "uncertainty_generic",
    "uncertainty_report",
    "validate_density_matrix",
    "von_neumann_entropy",
    "werner_state",
    "witness",
    "witness_threshold_q",
]
