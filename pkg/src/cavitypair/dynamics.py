"""Exact unitary dynamics of the atoms-field system in excitation blocks.

The interaction conserves the total excitation number E = n + [s1=e] +
[s2=e], so the Hamiltonian is block diagonal over E. Each block is at most
4x4; evolution diagonalizes every block once and reuses the
eigendecompositions for all requested times. Time is the scaled variable
tau = coupling * t, so block matrices are dimensionless.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, TruncationLeakError
from .hilbert import EXCITED, GROUND, JointState, joint_index

# Population allowed in blocks whose basis lost states to the Fock cutoff.
LEAK_TOLERANCE = 1e-8


@dataclass(frozen=True)
class DynamicsConfig:
    """Physical scales: coupling sets tau = coupling * t.

    field_frequency is carried for documentation only; at exact resonance
    in the interaction picture it cancels out of every block.
    """

    coupling: float = 1.0
    field_frequency: float = 0.0
    tail_tolerance: float = 1e-12

    def __post_init__(self) -> None:
        if self.coupling <= 0:
            raise ConfigError("coupling must be positive")

    def scaled_time(self, t: float) -> float:
        return self.coupling * t


@dataclass(frozen=True)
class ExcitationBlock:
    """One conserved-excitation sector of the interaction Hamiltonian."""

    excitation: int
    basis: tuple[tuple[int, int, int], ...]
    matrix: np.ndarray
    truncated: bool

    def __post_init__(self) -> None:
        self.matrix.setflags(write=False)


def _nominal_dimension(excitation: int) -> int:
    if excitation == 0:
        return 1
    if excitation == 1:
        return 3
    return 4


def excitation_basis(excitation: int, cutoff: int) -> list[tuple[int, int, int]]:
    """Ordered states (s1, s2, n) with n + [s1=e] + [s2=e] = excitation.

    Fixed order (e,e,E-2), (e,g,E-1), (g,e,E-1), (g,g,E); entries whose
    Fock index is negative or above the cutoff are omitted.
    """
    if excitation < 0:
        raise ConfigError("excitation number must be nonnegative")
    states = []
    for s1, s2 in ((EXCITED, EXCITED), (EXCITED, GROUND), (GROUND, EXCITED), (GROUND, GROUND)):
        n = excitation - (s1 == EXCITED) - (s2 == EXCITED)
        if 0 <= n <= cutoff:
            states.append((s1, s2, n))
    return states


def block_hamiltonian(
    excitation: int, cutoff: int, config: DynamicsConfig | None = None
) -> ExcitationBlock:
    """Interaction Hamiltonian restricted to one excitation sector.

    Matrix elements in units of the coupling: <g,s2,n|H|e,s2,n-1> = sqrt(n)
    for atom 1 and the mirrored element for atom 2. The diagonal vanishes
    at exact resonance. Blocks that lost basis states to the Fock cutoff
    are flagged truncated.
    """
    basis = excitation_basis(excitation, cutoff)
    dim = len(basis)
    h = np.zeros((dim, dim))
    for i, (s1, s2, n) in enumerate(basis):
        for j, (t1, t2, m) in enumerate(basis):
            if s2 == t2 and s1 == GROUND and t1 == EXCITED and n == m + 1:
                h[i, j] = np.sqrt(n)
            if s1 == t1 and s2 == GROUND and t2 == EXCITED and n == m + 1:
                h[i, j] = np.sqrt(n)
    h = h + h.T
    return ExcitationBlock(
        excitation=excitation,
        basis=tuple(basis),
        matrix=h,
        truncated=dim < _nominal_dimension(excitation),
    )


class BlockPropagator:
    """Cached eigendecompositions of every excitation block at one cutoff.

    Blocks of equal dimension are stacked so each propagation step is a
    handful of batched matrix products instead of a Python loop over
    sectors.
    """

    def __init__(self, cutoff: int):
        if cutoff < 0:
            raise ConfigError("cutoff must be nonnegative")
        self.cutoff = cutoff
        self.blocks = tuple(
            block_hamiltonian(e, cutoff) for e in range(cutoff + 3)
        )
        self._block_indices = [
            np.array([joint_index(*s, cutoff) for s in blk.basis], dtype=np.intp)
            for blk in self.blocks
        ]
        truncated = [
            idx
            for blk, idx in zip(self.blocks, self._block_indices)
            if blk.truncated
        ]
        self._truncated_indices = (
            np.concatenate(truncated) if truncated else np.empty(0, dtype=np.intp)
        )
        groups: dict[int, list[int]] = {}
        for e, blk in enumerate(self.blocks):
            groups.setdefault(len(blk.basis), []).append(e)
        self._groups = []
        for dim in sorted(groups):
            members = groups[dim]
            indices = np.stack([self._block_indices[e] for e in members])
            stacked = np.stack([self.blocks[e].matrix for e in members])
            eigvals, eigvecs = np.linalg.eigh(stacked)
            self._groups.append((indices, eigvals, eigvecs))

    def truncation_leak(self, state: JointState) -> float:
        """Population sitting in sectors clipped by the Fock cutoff."""
        return float(np.sum(np.abs(state.amplitudes[self._truncated_indices]) ** 2))

    def manifold_populations(self, state: JointState) -> np.ndarray:
        """Population per excitation number E = 0 .. cutoff+2."""
        psi = state.amplitudes
        return np.array(
            [float(np.sum(np.abs(psi[idx]) ** 2)) for idx in self._block_indices]
        )

    def evolve(self, state: JointState, tau: float) -> JointState:
        """Propagate by the scaled time tau. Pure function of (state, tau)."""
        if state.cutoff != self.cutoff:
            raise ConfigError(
                f"state cutoff {state.cutoff} does not match propagator {self.cutoff}"
            )
        if tau < 0:
            raise ConfigError("scaled time must be nonnegative")
        leak = self.truncation_leak(state)
        if leak > LEAK_TOLERANCE:
            raise TruncationLeakError(
                f"population {leak:.3e} in cutoff-truncated sectors exceeds "
                f"{LEAK_TOLERANCE:.1e}; raise the Fock cutoff"
            )
        psi = state.amplitudes
        out = np.empty_like(psi)
        for indices, eigvals, eigvecs in self._groups:
            sub = psi[indices]
            coeff = np.einsum("bji,bj->bi", eigvecs.conj(), sub)
            coeff *= np.exp(-1j * tau * eigvals)
            out[indices] = np.einsum("bij,bj->bi", eigvecs, coeff)
        return JointState(self.cutoff, out)


_PROPAGATORS: dict[int, BlockPropagator] = {}


def propagator_for(cutoff: int) -> BlockPropagator:
    """Shared per-cutoff propagator cache (read-only after construction)."""
    prop = _PROPAGATORS.get(cutoff)
    if prop is None:
        prop = BlockPropagator(cutoff)
        _PROPAGATORS[cutoff] = prop
    return prop


def evolve(
    state: JointState, tau: float, config: DynamicsConfig | None = None
) -> JointState:
    """Evolve a joint state by scaled time tau using cached blocks.

    config is accepted for signature completeness; at exact resonance the
    propagation depends only on tau.
    """
    return propagator_for(state.cutoff).evolve(state, tau)
