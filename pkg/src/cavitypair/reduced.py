"""Reduced density operators of the atom pair and single atoms.

The two-qubit basis is ordered |00>, |01>, |10>, |11> with |0> the excited
level, matching the flat joint-state layout, so the partial trace over the
field is a single reshape.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, NumericsError, PsdViolationError
from .hilbert import JointState

HERMITICITY_TOLERANCE = 1e-12
TRACE_TOLERANCE = 1e-12
# Negative eigenvalues above this magnitude are contract violations;
# smaller ones are rounding dust and get clipped.
PSD_DUST = 1e-10


def _validated_density(matrix: np.ndarray, dim: int) -> np.ndarray:
    mat = np.array(matrix, dtype=complex)
    if mat.shape != (dim, dim):
        raise ConfigError(f"density matrix must be {dim}x{dim}, got {mat.shape}")
    herm_dev = float(np.abs(mat - mat.conj().T).max())
    if herm_dev > HERMITICITY_TOLERANCE:
        raise NumericsError(f"Hermiticity deviation {herm_dev:.3e} beyond tolerance")
    mat = 0.5 * (mat + mat.conj().T)
    trace = float(mat.trace().real)
    if abs(trace - 1.0) > TRACE_TOLERANCE:
        raise NumericsError(f"trace {trace} deviates from 1 beyond tolerance")
    mat /= trace
    smallest = float(np.linalg.eigvalsh(mat)[0])
    if smallest < -PSD_DUST:
        raise PsdViolationError(
            f"eigenvalue {smallest:.3e} below the -{PSD_DUST:.0e} dust threshold"
        )
    if smallest < 0:
        # Clip rounding dust to zero and renormalize.
        eigvals, eigvecs = np.linalg.eigh(mat)
        eigvals = np.clip(eigvals, 0.0, None)
        mat = (eigvecs * eigvals) @ eigvecs.conj().T
        mat /= mat.trace().real
    mat.setflags(write=False)
    return mat


@dataclass(frozen=True)
class TwoQubitDensity:
    """4x4 density matrix of the atom pair in the |00>..|11> basis."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrix", _validated_density(self.matrix, 4))


@dataclass(frozen=True)
class SingleQubitDensity:
    """2x2 density matrix of one atom."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrix", _validated_density(self.matrix, 2))


def trace_field(state: JointState) -> TwoQubitDensity:
    """Partial trace over the cavity mode.

    (rho12)_{(s1 s2),(s1' s2')} = sum_n psi(s1,s2,n) conj(psi(s1',s2',n)).
    """
    block = state.amplitudes.reshape(4, state.cutoff + 1)
    return TwoQubitDensity(block @ block.conj().T)


def trace_atom(rho: TwoQubitDensity, which: int) -> SingleQubitDensity:
    """Reduce the pair state to atom 1 or atom 2."""
    tensor = rho.matrix.reshape(2, 2, 2, 2)
    if which == 1:
        reduced = np.einsum("ijkj->ik", tensor)
    elif which == 2:
        reduced = np.einsum("jijk->ik", tensor)
    else:
        raise ConfigError("which must be 1 or 2")
    return SingleQubitDensity(reduced)


def schmidt_purity(state: JointState, boundary: str = "atoms-field") -> float:
    """Purity of either side of a bipartition of the pure joint state.

    "atoms-field" splits the atom pair from the cavity mode; "atom1-rest"
    splits the first atom from everything else. A pure state gives both
    sides the same Schmidt spectrum, so one purity serves both halves.
    """
    per_atom = state.cutoff + 1
    if boundary == "atoms-field":
        block = state.amplitudes.reshape(4, per_atom)
    elif boundary == "atom1-rest":
        block = state.amplitudes.reshape(2, 2 * per_atom)
    else:
        raise ConfigError(f"unknown bipartition {boundary!r}")
    singular = np.linalg.svd(block, compute_uv=False)
    return float(np.sum(singular**4))
