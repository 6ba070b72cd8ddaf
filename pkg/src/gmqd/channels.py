"""Kraus-operator noise channels for the qubit and qutrit subsystems.

Each constructor returns the full operator list for one channel strength
gamma in [0, 1], pre-embedded in the composite 6x6 space (qubit operators as
op (x) I3, qutrit operators as I2 (x) op) so application code is uniform.
Operator counts per kind:

    kind              qubit ops   qutrit ops
    dephasing         2           3
    phase-flip        2           3
    bit-flip          2           3
    bit-phase-flip    2           5
    depolarizing      4           9
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    DimensionMismatchError,
    InvalidParametersError,
    NegativeInputError,
    OutOfRangeError,
)
from .linalg import as_matrix
from .states import DensityMatrix, validate_density

COMPLETENESS_TOL = 1e-12

# Single shared phase constant keeps conjugate pairs exactly conjugate.
OMEGA = np.exp(2j * np.pi / 3.0)

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

_I2 = np.eye(2, dtype=complex)
_I3 = np.eye(3, dtype=complex)
_I6 = np.eye(6, dtype=complex)

# Qutrit cyclic shift |j> -> |j+1 mod 3> and its inverse.
_SHIFT_UP = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], dtype=complex)
_SHIFT_DOWN = _SHIFT_UP.T.copy()

# Qutrit phase operator diag(1, w, w*) with w = exp(2 pi i / 3).
_PHASE = np.diag([1.0 + 0j, OMEGA, np.conj(OMEGA)])


class ChannelKind(Enum):
    """The five supported noise types, keyed by their stable string names."""

    DEPHASING = "dephasing"
    PHASE_FLIP = "phase-flip"
    BIT_FLIP = "bit-flip"
    BIT_PHASE_FLIP = "bit-phase-flip"
    DEPOLARIZING = "depolarizing"


class Locality(Enum):
    """Which subsystem(s) the noise acts on."""

    MULTI_LOCAL = "multi-local"
    QUBIT_ONLY = "qubit-only"
    QUTRIT_ONLY = "qutrit-only"


class Subsystem(Enum):
    QUBIT = "qubit"
    QUTRIT = "qutrit"


def _check_gamma(gamma: float, name: str = "gamma") -> None:
    if not 0.0 <= gamma <= 1.0:
        raise OutOfRangeError(f"{name} must lie in [0, 1], got {gamma!r}")


@dataclass(frozen=True)
class KrausSet:
    """Kraus operators for one subsystem, already embedded as 6x6 matrices.

    Completeness sum_k K_k^dag K_k = I6 is enforced at construction.
    """

    subsystem: Subsystem
    ops: tuple[np.ndarray, ...]
    gamma: float

    def __post_init__(self):
        _check_gamma(self.gamma)
        ops = tuple(as_matrix(op).copy() for op in self.ops)
        if not ops:
            raise InvalidParametersError("Kraus set must contain at least one operator")
        acc = np.zeros((6, 6), dtype=complex)
        for op in ops:
            if op.shape != (6, 6):
                raise DimensionMismatchError(f"Kraus operators must be 6x6, got {op.shape}")
            acc += op.conj().T @ op
        deviation = float(np.max(np.abs(acc - _I6)))
        if deviation > COMPLETENESS_TOL:
            raise InvalidParametersError(f"Kraus completeness violated by {deviation:.3e}")
        for op in ops:
            op.setflags(write=False)
        object.__setattr__(self, "ops", ops)


@dataclass(frozen=True)
class NoiseScenario:
    """A channel kind, where it acts, and the strength on each side."""

    kind: ChannelKind
    locality: Locality
    gamma_a: float = 0.0
    gamma_b: float = 0.0

    def __post_init__(self):
        _check_gamma(self.gamma_a, "gamma_a")
        _check_gamma(self.gamma_b, "gamma_b")
        if self.locality is Locality.QUBIT_ONLY and self.gamma_b != 0.0:
            raise InvalidParametersError("qubit-only noise requires gamma_b = 0")
        if self.locality is Locality.QUTRIT_ONLY and self.gamma_a != 0.0:
            raise InvalidParametersError("qutrit-only noise requires gamma_a = 0")


def gamma_of_t(t: float, decay_rate: float) -> float:
    """Time-dependent channel strength 1 - exp(-t * rate), clamped to [0, 1]."""
    if t < 0.0:
        raise NegativeInputError(f"time must be nonnegative, got {t!r}")
    if decay_rate < 0.0:
        raise NegativeInputError(f"decay rate must be nonnegative, got {decay_rate!r}")
    return float(min(1.0, max(0.0, -np.expm1(-t * decay_rate))))


def _qubit_ops(kind: ChannelKind, g: float) -> list[np.ndarray]:
    if kind is ChannelKind.DEPHASING:
        return [
            np.diag([1.0, np.sqrt(1.0 - g)]).astype(complex),
            np.diag([0.0, np.sqrt(g)]).astype(complex),
        ]
    if kind is ChannelKind.PHASE_FLIP:
        return [np.sqrt(1.0 - g / 2.0) * _I2, np.sqrt(g / 2.0) * PAULI[2]]
    if kind is ChannelKind.BIT_FLIP:
        return [np.sqrt(1.0 - g / 2.0) * _I2, np.sqrt(g / 2.0) * PAULI[0]]
    if kind is ChannelKind.BIT_PHASE_FLIP:
        return [np.sqrt(1.0 - g / 2.0) * _I2, np.sqrt(g / 2.0) * PAULI[1]]
    return [np.sqrt(1.0 - 0.75 * g) * _I2] + [np.sqrt(g / 4.0) * s for s in PAULI]


def _qutrit_ops(kind: ChannelKind, g: float) -> list[np.ndarray]:
    w, wc = OMEGA, np.conj(OMEGA)
    if kind is ChannelKind.DEPHASING:
        keep = np.sqrt(1.0 - g)
        return [
            np.diag([1.0, keep, keep]).astype(complex),
            np.diag([0.0, np.sqrt(g), 0.0]).astype(complex),
            np.diag([0.0, 0.0, np.sqrt(g)]).astype(complex),
        ]
    if kind is ChannelKind.PHASE_FLIP:
        return [
            np.sqrt(1.0 - 2.0 * g / 3.0) * _I3,
            np.sqrt(g / 3.0) * np.diag([1.0 + 0j, wc, w]),
            np.sqrt(g / 3.0) * np.diag([1.0 + 0j, w, wc]),
        ]
    if kind is ChannelKind.BIT_FLIP:
        return [
            np.sqrt(1.0 - 2.0 * g / 3.0) * _I3,
            np.sqrt(g / 3.0) * _SHIFT_UP,
            np.sqrt(g / 3.0) * _SHIFT_DOWN,
        ]
    if kind is ChannelKind.BIT_PHASE_FLIP:
        # Four shift-plus-phase unitaries in conjugate pairs.
        f2 = np.array([[0, 0, w], [1, 0, 0], [0, wc, 0]], dtype=complex)
        f4 = np.array([[0, wc, 0], [0, 0, w], [1, 0, 0]], dtype=complex)
        weight = np.sqrt(g / 6.0)
        return [np.sqrt(1.0 - 2.0 * g / 3.0) * _I3] + [
            weight * f for f in (f2, np.conj(f2), f4, np.conj(f4))
        ]
    # Depolarizing: the eight shift/phase products plus the identity remainder.
    y, z = _SHIFT_DOWN, _PHASE
    units = (y, z, y @ y, y @ z, y @ y @ z, y @ z @ z, y @ y @ z @ z, z @ z)
    return [np.sqrt(1.0 - 8.0 * g / 9.0) * _I3] + [np.sqrt(g) / 3.0 * u for u in units]


def qubit_kraus(kind: ChannelKind, gamma_a: float) -> KrausSet:
    """Kraus set acting on the qubit, embedded as op (x) I3."""
    _check_gamma(gamma_a, "gamma_a")
    ops = tuple(np.kron(op, _I3) for op in _qubit_ops(kind, gamma_a))
    return KrausSet(subsystem=Subsystem.QUBIT, ops=ops, gamma=gamma_a)


def qutrit_kraus(kind: ChannelKind, gamma_b: float) -> KrausSet:
    """Kraus set acting on the qutrit, embedded as I2 (x) op."""
    _check_gamma(gamma_b, "gamma_b")
    ops = tuple(np.kron(_I2, op) for op in _qutrit_ops(kind, gamma_b))
    return KrausSet(subsystem=Subsystem.QUTRIT, ops=ops, gamma=gamma_b)


def _apply_ops(mat: np.ndarray, ops: tuple[np.ndarray, ...]) -> np.ndarray:
    out = np.zeros_like(mat)
    for op in ops:
        out += op @ mat @ op.conj().T
    return out


def apply_scenario(rho: DensityMatrix, scenario: NoiseScenario) -> DensityMatrix:
    """Evolve a 6x6 state through the scenario's Kraus operators.

    Multi-local noise sums over both operator lists (the two sets act on
    different tensor factors, so their order is irrelevant); local noise
    applies a single list.  The output is revalidated as a density matrix.
    """
    if rho.dim != 6:
        raise DimensionMismatchError(f"scenario application needs a 6x6 state, got {rho.dim}")
    mat = rho.mat
    if scenario.locality is not Locality.QUTRIT_ONLY:
        mat = _apply_ops(mat, qubit_kraus(scenario.kind, scenario.gamma_a).ops)
    if scenario.locality is not Locality.QUBIT_ONLY:
        mat = _apply_ops(mat, qutrit_kraus(scenario.kind, scenario.gamma_b).ops)
    return validate_density(mat)
