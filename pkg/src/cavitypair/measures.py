"""Scalar information measures: impurity, entropy, PPT verdict, fidelity."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, NumericsError
from .reduced import TwoQubitDensity, trace_atom

# Pauli operators on one qubit. The second entry is sigma_y without the
# textbook phase i some papers attach; the phase cancels in every
# quadratic expression used here.
PAULIS = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

# A partial transpose eigenvalue below this certifies entanglement;
# anything above is rounding dust on a separable state.
PPT_THRESHOLD = 1e-10

ENTROPY_EIGENVALUE_FLOOR = 1e-12


@dataclass(frozen=True)
class ImpurityTriple:
    """Impurities of the pair state and both single-atom reductions.

    Bounds follow from dimensions: a two-qubit state cannot exceed 3/4,
    a qubit cannot exceed 1/2.
    """

    eta12: float
    eta1: float
    eta2: float

    def __post_init__(self) -> None:
        if not -1e-9 <= self.eta12 <= 0.75 + 1e-9:
            raise NumericsError(f"eta12 = {self.eta12} outside [0, 0.75]")
        for name, value in (("eta1", self.eta1), ("eta2", self.eta2)):
            if not -1e-9 <= value <= 0.5 + 1e-9:
                raise NumericsError(f"{name} = {value} outside [0, 0.5]")


@dataclass(frozen=True)
class PptReport:
    """Smallest partial-transpose eigenvalue and the separability verdict.

    For two qubits the verdict is exact: entangled if and only if the
    partial transpose has a negative eigenvalue.
    """

    min_eigenvalue: float
    entangled: bool

    def __post_init__(self) -> None:
        if self.entangled != (self.min_eigenvalue < -PPT_THRESHOLD):
            raise NumericsError("entangled flag inconsistent with min eigenvalue")


def _as_matrix(rho) -> np.ndarray:
    return rho.matrix if hasattr(rho, "matrix") else np.asarray(rho, dtype=complex)


def impurity(rho) -> float:
    """1 - tr(rho^2), computed entrywise as 1 - sum |rho_ij|^2."""
    mat = _as_matrix(rho)
    return 1.0 - float(np.sum(np.abs(mat) ** 2))


def von_neumann_entropy(rho) -> float:
    """Entropy in bits; eigenvalues below 1e-12 contribute zero."""
    eigvals = np.linalg.eigvalsh(_as_matrix(rho))
    kept = eigvals[eigvals >= ENTROPY_EIGENVALUE_FLOOR]
    return float(-np.sum(kept * np.log2(kept)))


def partial_transpose(rho: TwoQubitDensity, on: int = 2) -> np.ndarray:
    """Transpose the indices of one qubit of the pair state."""
    tensor = _as_matrix(rho).reshape(2, 2, 2, 2)
    if on == 1:
        swapped = np.transpose(tensor, (2, 1, 0, 3))
    elif on == 2:
        swapped = np.transpose(tensor, (0, 3, 2, 1))
    else:
        raise ConfigError("on must be 1 or 2")
    return swapped.reshape(4, 4)


def ppt_report(rho: TwoQubitDensity) -> PptReport:
    """Exact two-qubit separability verdict from the partial transpose."""
    smallest = float(np.linalg.eigvalsh(partial_transpose(rho, on=2))[0])
    return PptReport(smallest, smallest < -PPT_THRESHOLD)


def overlap_fidelity(rho: TwoQubitDensity, pauli_index: int) -> float:
    """Trace overlap tr{rho (U x I) rho (U^dag x I)} for a qubit-1 Pauli.

    This is the raw trace overlap, not the Uhlmann fidelity; index 0
    reduces to the purity tr(rho^2).
    """
    if pauli_index not in (0, 1, 2, 3):
        raise ConfigError("pauli_index must be 0, 1, 2, or 3")
    mat = _as_matrix(rho)
    op = np.kron(PAULIS[pauli_index], np.eye(2))
    rotated = op @ mat @ op.conj().T
    value = np.trace(mat @ rotated)
    return float(value.real)


def impurity_triple(rho: TwoQubitDensity) -> ImpurityTriple:
    """Impurities of the pair and of each atom, from one pair state."""
    return ImpurityTriple(
        eta12=impurity(rho),
        eta1=impurity(trace_atom(rho, 1)),
        eta2=impurity(trace_atom(rho, 2)),
    )
