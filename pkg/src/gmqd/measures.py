"""Geometric discord of qubit-qutrit states, computed by independent routes.

The quantity computed throughout is the squared Hilbert-Schmidt distance from
a state to the nearest classical-quantum state, with the qubit as the measured
side.  Four routes are provided and cross-checked against each other in the
test and verification suites:

* :func:`gmqd_numeric` maximises the measured-correlation objective
  tr(A C C^T A^T) over one-qubit measurement bases (coarse grid plus simplex
  refinement) and subtracts the result from tr(C C^T).
* :func:`gmqd_closed_form` evaluates the per-scenario closed-form expression
  for the evolved two-parameter state family.
* :func:`gmqd_oracle` minimises the distance over explicitly parameterised
  classical-quantum states by seeded multi-start derivative-free search.
* :func:`gmqd_dakic_two_qubit` evaluates the spectral two-qubit formula, used
  to cross-check the family's reduction to Werner states.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np
from scipy import optimize

from .channels import PAULI, ChannelKind, Locality, NoiseScenario
from .errors import (
    DimensionMismatchError,
    GmqdError,
    NotHermitianError,
    OutOfRangeError,
    UnsupportedScenarioError,
)
from .states import DensityMatrix, TwoParamState

SQRT2 = np.sqrt(2.0)
SQRT3 = np.sqrt(3.0)
SQRT6 = np.sqrt(6.0)

COEFF_IMAG_TOL = 1e-10
VALUE_CLAMP_TOL = 1e-10

GRID_THETA_POINTS = 64
GRID_PHI_POINTS = 128
REFINE_STARTS = 3

ORACLE_DEFAULT_RESTARTS = 32
ORACLE_DEFAULT_SEED = 0


class Method(Enum):
    NUMERIC = "numeric"
    CLOSED_FORM = "closed-form"
    ORACLE = "oracle"
    DAKIC = "dakic"


@dataclass(frozen=True)
class GmqdResult:
    """A discord value with the extremising measurement angles that produced it.

    ``clamped`` records that a tiny negative from roundoff was zeroed.
    """

    value: float
    argmax_theta: float
    argmax_phi: float
    method: Method
    clamped: bool = False


@dataclass(frozen=True)
class HermitianBasis:
    """Orthonormal Hermitian operator bases for the qubit and qutrit factors."""

    qubit_ops: tuple[np.ndarray, ...]
    qutrit_ops: tuple[np.ndarray, ...]


@dataclass(frozen=True)
class MeasurementBasis:
    """Angles of the one-qubit basis {cos(t)|0> + e^(ip) sin(t)|1>, orthogonal}."""

    theta: float
    phi: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= np.pi / 2.0:
            raise OutOfRangeError(f"theta must lie in [0, pi/2], got {self.theta!r}")
        if not 0.0 <= self.phi < 2.0 * np.pi:
            raise OutOfRangeError(f"phi must lie in [0, 2*pi), got {self.phi!r}")


@lru_cache(maxsize=1)
def standard_basis() -> HermitianBasis:
    """The normalised identity+Pauli qubit basis and its nine-element qutrit analogue.

    Qubit operators carry 1/sqrt(2); qutrit operators carry 1/sqrt(2) on the
    three off-diagonal pairs, 1/sqrt(3) on the identity and 1/sqrt(6) on
    diag(1, 1, -2), making every pairwise Hilbert-Schmidt product a Kronecker
    delta.
    """
    qubit_ops = tuple(
        op / SQRT2 for op in (np.eye(2, dtype=complex),) + PAULI
    )
    s = 1.0 / SQRT2
    qutrit_ops = (
        np.eye(3, dtype=complex) / SQRT3,
        s * np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]], dtype=complex),
        s * np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]], dtype=complex),
        s * np.array([[1, 0, 0], [0, -1, 0], [0, 0, 0]], dtype=complex),
        s * np.array([[0, 0, 1], [0, 0, 0], [1, 0, 0]], dtype=complex),
        s * np.array([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]], dtype=complex),
        np.diag([1.0, 1.0, -2.0]).astype(complex) / SQRT6,
        s * np.array([[0, 0, 0], [0, 0, 1], [0, 1, 0]], dtype=complex),
        s * np.array([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]], dtype=complex),
    )
    for op in qubit_ops + qutrit_ops:
        op.setflags(write=False)
    return HermitianBasis(qubit_ops=qubit_ops, qutrit_ops=qutrit_ops)


@lru_cache(maxsize=1)
def _product_basis() -> np.ndarray:
    """All 36 products X_i (x) Y_j as a (36, 6, 6) array, i-major."""
    basis = standard_basis()
    mats = np.stack(
        [np.kron(x, y) for x in basis.qubit_ops for y in basis.qutrit_ops]
    )
    mats.setflags(write=False)
    return mats


def correlation_matrix(rho: DensityMatrix) -> np.ndarray:
    """4x9 real matrix of overlaps tr(rho X_i (x) Y_j) with the standard basis.

    Row/column labels are 1-based (i in 1..4, j in 1..9) in documentation and
    output; storage is 0-based.  The (1, 1) entry equals 1/sqrt(6) for any
    unit-trace state.
    """
    if rho.dim != 6:
        raise DimensionMismatchError(f"correlation matrix needs a 6x6 state, got {rho.dim}")
    coeffs = np.einsum("kij,ji->k", _product_basis(), rho.mat)
    worst = float(np.max(np.abs(coeffs.imag)))
    if worst > COEFF_IMAG_TOL:
        raise NotHermitianError(
            f"correlation coefficients have imaginary parts up to {worst:.3e}"
        )
    return coeffs.real.reshape(4, 9).copy()


def reconstruct_state(coeffs: np.ndarray) -> np.ndarray:
    """Rebuild the 6x6 matrix sum_ij c_ij X_i (x) Y_j from its coefficients."""
    flat = np.asarray(coeffs, dtype=float).reshape(36)
    return np.einsum("k,kij->ij", flat, _product_basis())


def _measurement_rows(theta: float, phi: float) -> np.ndarray:
    s2 = np.sin(2.0 * theta)
    row = np.array([1.0, s2 * np.cos(phi), s2 * np.sin(phi), np.cos(2.0 * theta)])
    return np.vstack((row, row * np.array([1.0, -1.0, -1.0, -1.0]))) / SQRT2


def measurement_matrix(basis: MeasurementBasis) -> np.ndarray:
    """2x4 matrix of overlaps tr(|k><k| X_i) of the basis projectors."""
    return _measurement_rows(basis.theta, basis.phi)


def _objective(gram: np.ndarray, theta: float, phi: float) -> float:
    a = _measurement_rows(theta, phi)
    return float(np.trace(a @ gram @ a.T))


def _objective_grid(gram: np.ndarray, thetas: np.ndarray, phis: np.ndarray) -> np.ndarray:
    tt, pp = np.meshgrid(thetas, phis, indexing="ij")
    s2 = np.sin(2.0 * tt)
    rows = np.stack(
        [np.ones_like(tt), s2 * np.cos(pp), s2 * np.sin(pp), np.cos(2.0 * tt)],
        axis=-1,
    )
    a = np.stack([rows, rows * np.array([1.0, -1.0, -1.0, -1.0])], axis=-2) / SQRT2
    return np.einsum("tpki,ij,tpkj->tp", a, gram, a)


def _angles_from_direction(e: np.ndarray) -> tuple[float, float]:
    theta = 0.5 * np.arccos(np.clip(e[2], -1.0, 1.0))
    if np.hypot(e[0], e[1]) < 1e-12:
        return float(theta), 0.0
    return float(theta), float(np.arctan2(e[1], e[0]) % (2.0 * np.pi))


def _canonical_angles(theta: float, phi: float) -> tuple[float, float]:
    """Map arbitrary angles to theta in [0, pi/2], phi in [0, 2*pi)."""
    s2 = np.sin(2.0 * theta)
    e = np.array([s2 * np.cos(phi), s2 * np.sin(phi), np.cos(2.0 * theta)])
    return _angles_from_direction(e)


def _clamped(raw: float) -> tuple[float, bool]:
    if raw >= 0.0:
        return raw, False
    if raw >= -VALUE_CLAMP_TOL:
        return 0.0, True
    raise GmqdError(f"discord value {raw!r} below the roundoff clamp window")


def gmqd_numeric(rho: DensityMatrix) -> GmqdResult:
    """Discord as tr(C C^T) minus the grid-plus-simplex maximum of tr(A C C^T A^T).

    A 64x128 grid over (theta, phi) in [0, pi/2] x [0, 2*pi) localises the
    maximum; Nelder-Mead refinement from the three best grid cells polishes it
    to stationarity.  Deterministic for a given input.
    """
    coeffs = correlation_matrix(rho)
    gram = coeffs @ coeffs.T
    total = float(np.trace(gram))

    thetas = np.linspace(0.0, np.pi / 2.0, GRID_THETA_POINTS)
    phis = np.linspace(0.0, 2.0 * np.pi, GRID_PHI_POINTS, endpoint=False)
    grid_vals = _objective_grid(gram, thetas, phis)
    flat = grid_vals.ravel()
    order = np.argsort(flat, kind="stable")

    best_val = -np.inf
    best_angles = (0.0, 0.0)
    for idx in order[-REFINE_STARTS:]:
        t_idx, p_idx = divmod(int(idx), GRID_PHI_POINTS)
        start = np.array([thetas[t_idx], phis[p_idx]])
        res = optimize.minimize(
            lambda x: -_objective(gram, x[0], x[1]),
            start,
            method="Nelder-Mead",
            options={"xatol": 1e-10, "fatol": 1e-14, "maxiter": 800, "maxfev": 1600},
        )
        for val, angles in (
            (float(-res.fun), (float(res.x[0]), float(res.x[1]))),
            (float(flat[idx]), (float(start[0]), float(start[1]))),
        ):
            if val > best_val:
                best_val, best_angles = val, angles

    value, clamped = _clamped(total - best_val)
    theta, phi = _canonical_angles(*best_angles)
    return GmqdResult(
        value=value, argmax_theta=theta, argmax_phi=phi,
        method=Method.NUMERIC, clamped=clamped,
    )


def gmqd_closed_form(scenario: NoiseScenario, b: float, c: float) -> float:
    """Closed-form discord of the family state evolved through the scenario.

    Dispatches on (channel kind, locality); every combination of the five
    kinds and three localities is covered.  Zero strengths reduce every branch
    to the noiseless value (b - c)^2 / 2.
    """
    TwoParamState.from_bc(b, c)  # reject unphysical parameters early
    diff2 = (b - c) ** 2
    ga, gb = scenario.gamma_a, scenario.gamma_b
    kind, locality = scenario.kind, scenario.locality
    if locality is Locality.MULTI_LOCAL:
        if kind is ChannelKind.DEPHASING:
            return 0.5 * diff2 * (1.0 - ga) * (1.0 - gb)
        if kind in (ChannelKind.PHASE_FLIP, ChannelKind.DEPOLARIZING):
            return 0.5 * diff2 * (1.0 - ga) ** 2 * (1.0 - gb) ** 2
        if kind is ChannelKind.BIT_FLIP:
            return diff2 * (1.0 - ga) ** 2 * (6.0 + 5.0 * (gb - 2.0) * gb) / 12.0
        if kind is ChannelKind.BIT_PHASE_FLIP:
            return diff2 * (1.0 - ga) ** 2 * (12.0 + gb * (9.0 * gb - 20.0)) / 24.0
    elif locality is Locality.QUBIT_ONLY:
        if kind is ChannelKind.DEPHASING:
            return 0.5 * diff2 * (1.0 - ga)
        return 0.5 * diff2 * (1.0 - ga) ** 2
    elif locality is Locality.QUTRIT_ONLY:
        if kind is ChannelKind.DEPHASING:
            return 0.5 * diff2 * (1.0 - gb)
        if kind in (ChannelKind.PHASE_FLIP, ChannelKind.DEPOLARIZING):
            return 0.5 * diff2 * (1.0 - gb) ** 2
        if kind is ChannelKind.BIT_FLIP:
            return diff2 * (6.0 + 5.0 * (gb - 2.0) * gb) / 12.0
        if kind is ChannelKind.BIT_PHASE_FLIP:
            return diff2 * (12.0 + gb * (9.0 * gb - 20.0)) / 24.0
    raise UnsupportedScenarioError(f"no closed form for {kind} with {locality}")


def closed_form_coefficients(scenario: NoiseScenario, b: float, c: float) -> np.ndarray:
    """Tabulated 4x9 correlation coefficients of the evolved family state.

    Matches :func:`correlation_matrix` applied after the scenario's channels.
    Local-only scenarios are the multi-local tables with the inactive strength
    already pinned to zero by the scenario itself.
    """
    TwoParamState.from_bc(b, c)
    diff = b - c
    pop = 2.0 - 9.0 * b - 3.0 * c  # population imbalance entering the (1, 7) entry
    ga, gb = scenario.gamma_a, scenario.gamma_b
    kind = scenario.kind
    out = np.zeros((4, 9))
    out[0, 0] = 1.0 / SQRT6
    if kind is ChannelKind.DEPHASING:
        out[0, 6] = -pop / (2.0 * SQRT3)
        out[1, 1] = out[2, 2] = 0.5 * diff * np.sqrt((1.0 - ga) * (1.0 - gb))
        out[3, 3] = 0.5 * diff
    elif kind is ChannelKind.PHASE_FLIP:
        out[0, 6] = -pop / (2.0 * SQRT3)
        out[1, 1] = out[2, 2] = 0.5 * diff * (1.0 - ga) * (1.0 - gb)
        out[3, 3] = 0.5 * diff
    elif kind is ChannelKind.BIT_FLIP:
        out[0, 6] = pop * (gb - 1.0) / (2.0 * SQRT3)
        out[1, 1] = -diff * (2.0 * gb - 3.0) / 6.0
        out[1, 4] = out[1, 7] = diff * gb / 6.0
        out[2, 2] = diff * (2.0 * gb - 3.0) * (ga - 1.0) / 6.0
        out[2, 5] = diff * (ga - 1.0) * gb / 6.0
        out[2, 8] = -out[2, 5]
        out[3, 3] = 0.5 * diff * (gb - 1.0) * (ga - 1.0)
    elif kind is ChannelKind.BIT_PHASE_FLIP:
        out[0, 6] = pop * (gb - 1.0) / (2.0 * SQRT3)
        out[1, 1] = diff * (2.0 * gb - 3.0) * (ga - 1.0) / 6.0
        out[1, 4] = out[1, 7] = diff * (ga - 1.0) * gb / 12.0
        out[2, 2] = -diff * (2.0 * gb - 3.0) / 6.0
        out[2, 5] = diff * gb / 12.0
        out[2, 8] = -out[2, 5]
        out[3, 3] = 0.5 * diff * (gb - 1.0) * (ga - 1.0)
    elif kind is ChannelKind.DEPOLARIZING:
        out[0, 6] = pop * (gb - 1.0) / (2.0 * SQRT3)
        out[1, 1] = out[2, 2] = out[3, 3] = 0.5 * diff * (1.0 - ga) * (1.0 - gb)
    else:
        raise UnsupportedScenarioError(f"no coefficient table for {kind}")
    return out


def _factor_state(v: np.ndarray) -> np.ndarray:
    """Qutrit state L L^dag / tr(L L^dag) from 9 reals filling lower-triangular L."""
    low = np.zeros((3, 3), dtype=complex)
    low[0, 0], low[1, 1], low[2, 2] = v[0], v[1], v[2]
    low[1, 0] = v[3] + 1j * v[4]
    low[2, 0] = v[5] + 1j * v[6]
    low[2, 1] = v[7] + 1j * v[8]
    gram = low @ low.conj().T
    tr = float(gram[0, 0].real + gram[1, 1].real + gram[2, 2].real)
    if tr <= 1e-12:
        return np.eye(3, dtype=complex) / 3.0
    return gram / tr


def _cq_distance(params: np.ndarray, rho_mat: np.ndarray) -> float:
    """Squared distance from rho to the classical-quantum state the params encode."""
    theta, phi = params[0], params[1]
    p = min(max(params[2], 0.0), 1.0)
    cos_t, sin_t = np.cos(theta), np.sin(theta)
    phase = np.exp(1j * phi)
    k1 = np.array([cos_t, phase * sin_t])
    k2 = np.array([sin_t, -phase * cos_t])
    chi = p * np.kron(np.outer(k1, k1.conj()), _factor_state(params[3:12]))
    chi += (1.0 - p) * np.kron(np.outer(k2, k2.conj()), _factor_state(params[12:21]))
    diff = rho_mat - chi
    return float(np.vdot(diff, diff).real)


_ORACLE_LOW = np.array([0.0, 0.0, 0.0] + [-1.0] * 18)
_ORACLE_HIGH = np.array([np.pi / 2.0, 2.0 * np.pi, 1.0] + [1.0] * 18)


def gmqd_oracle(
    rho: DensityMatrix,
    restarts: int = ORACLE_DEFAULT_RESTARTS,
    seed: int = ORACLE_DEFAULT_SEED,
) -> GmqdResult:
    """Brute-force discord: minimise tr((rho - chi)^2) over classical-quantum chi.

    chi = p |k1><k1| (x) tau1 + (1-p) |k2><k2| (x) tau2, where {|k1>, |k2>} is
    the (theta, phi) qubit basis and each qutrit state tau is parameterised by
    a lower-triangular complex factor L as L L^dag / tr(L L^dag); 21 real
    parameters in total.  Runs ``restarts`` derivative-free local searches from
    seeded uniform-random starts, then polishes the winner once more.  This
    route is deliberately independent of the correlation-matrix machinery.
    """
    if rho.dim != 6:
        raise DimensionMismatchError(f"oracle needs a 6x6 state, got {rho.dim}")
    if restarts < 1:
        raise OutOfRangeError(f"restarts must be >= 1, got {restarts}")
    rng = np.random.default_rng(seed)
    mat = np.asarray(rho.mat)

    best_fun = np.inf
    best_x = None
    for _ in range(restarts):
        start = rng.uniform(_ORACLE_LOW, _ORACLE_HIGH)
        res = optimize.minimize(
            _cq_distance, start, args=(mat,), method="Powell",
            options={"xtol": 1e-7, "ftol": 1e-9, "maxfev": 2500},
        )
        if res.fun < best_fun:
            best_fun, best_x = float(res.fun), np.asarray(res.x)

    polish = optimize.minimize(
        _cq_distance, best_x, args=(mat,), method="Powell",
        options={"xtol": 1e-10, "ftol": 1e-13, "maxfev": 6000},
    )
    if polish.fun < best_fun:
        best_fun, best_x = float(polish.fun), np.asarray(polish.x)

    theta, phi = _canonical_angles(float(best_x[0]), float(best_x[1]))
    return GmqdResult(
        value=max(best_fun, 0.0), argmax_theta=theta, argmax_phi=phi,
        method=Method.ORACLE,
    )


def gmqd_dakic_two_qubit(rho: DensityMatrix) -> GmqdResult:
    """Two-qubit discord from the spectral formula on the Bloch decomposition.

    Extracts x_i = tr(rho sigma_i (x) I) and r_ij = tr(rho sigma_i (x) sigma_j),
    forms K = x x^T + R R^T and returns (|x|^2 + |R|^2 - lambda_max(K)) / 4.
    """
    if rho.dim != 4:
        raise DimensionMismatchError(f"two-qubit formula needs a 4x4 state, got {rho.dim}")
    mat = rho.mat
    i2 = np.eye(2, dtype=complex)
    bloch = np.array([np.trace(mat @ np.kron(s, i2)).real for s in PAULI])
    corr = np.array(
        [[np.trace(mat @ np.kron(si, sj)).real for sj in PAULI] for si in PAULI]
    )
    k = np.outer(bloch, bloch) + corr @ corr.T
    evals, evecs = np.linalg.eigh(k)
    raw = 0.25 * (float(bloch @ bloch) + float(np.sum(corr * corr)) - float(evals[-1]))
    value, clamped = _clamped(raw)

    direction = evecs[:, -1].copy()
    for comp in direction:  # fix the eigenvector sign for deterministic angles
        if abs(comp) > 1e-12:
            if comp < 0.0:
                direction = -direction
            break
    theta, phi = _angles_from_direction(direction)
    return GmqdResult(
        value=value, argmax_theta=theta, argmax_phi=phi,
        method=Method.DAKIC, clamped=clamped,
    )
