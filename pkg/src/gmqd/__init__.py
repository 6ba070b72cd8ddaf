"""Geometric discord of a two-parameter qubit-qutrit family under noise channels."""

from ._version import __version__
from .channels import (
    ChannelKind,
    KrausSet,
    Locality,
    NoiseScenario,
    Subsystem,
    apply_scenario,
    gamma_of_t,
    qubit_kraus,
    qutrit_kraus,
)
from .dynamics import (
    Coupling,
    SuddenDeathCheck,
    SweepAxis,
    SweepRow,
    SweepSpec,
    check_no_sudden_death,
    gamma_grid,
    run_sweep,
    time_grid,
)
from .errors import GmqdError
from .measures import (
    GmqdResult,
    HermitianBasis,
    MeasurementBasis,
    Method,
    closed_form_coefficients,
    correlation_matrix,
    gmqd_closed_form,
    gmqd_dakic_two_qubit,
    gmqd_numeric,
    gmqd_oracle,
    measurement_matrix,
    reconstruct_state,
    standard_basis,
)
from .states import (
    DensityMatrix,
    TwoParamState,
    bell_state,
    initial_state,
    random_density,
    validate_density,
    werner_state,
)
from .verify import VerificationReport, run_verification

__all__ = [
    "__version__",
    "ChannelKind",
    "Coupling",
    "DensityMatrix",
    "GmqdError",
    "GmqdResult",
    "HermitianBasis",
    "KrausSet",
    "Locality",
    "MeasurementBasis",
    "Method",
    "NoiseScenario",
    "Subsystem",
    "SuddenDeathCheck",
    "SweepAxis",
    "SweepRow",
    "SweepSpec",
    "TwoParamState",
    "VerificationReport",
    "apply_scenario",
    "bell_state",
    "check_no_sudden_death",
    "closed_form_coefficients",
    "correlation_matrix",
    "gamma_grid",
    "gamma_of_t",
    "gmqd_closed_form",
    "gmqd_dakic_two_qubit",
    "gmqd_numeric",
    "gmqd_oracle",
    "initial_state",
    "measurement_matrix",
    "qubit_kraus",
    "qutrit_kraus",
    "random_density",
    "reconstruct_state",
    "run_sweep",
    "run_verification",
    "standard_basis",
    "time_grid",
    "validate_density",
    "werner_state",
]
