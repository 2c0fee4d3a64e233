"""Truncated joint Hilbert space of two two-level atoms and one field mode.

The joint basis is |s1, s2, n> where s1, s2 label the atoms (excited or
ground) and n is the Fock index of the cavity mode. The field starts in a
coherent state with real, nonnegative amplitudes q_n truncated at a
Poisson-tail tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, NumericsError, ResourceLimitError

# Qubit convention: |0> is the excited level, |1> the ground level.
EXCITED = 0
GROUND = 1

HARD_MAX_CUTOFF = 256
DEFAULT_TAIL_TOLERANCE = 1e-12


def _poisson_log_weights(mean_photon: float, count: int) -> np.ndarray:
    """log of the Poisson pmf p_n = e^-nbar nbar^n / n! for n = 0..count-1.

    Built by the log-domain recurrence log p_{n+1} = log p_n + log(nbar)
    - log(n+1), which stays finite far into the tail.
    """
    logs = np.empty(count)
    logs[0] = -mean_photon
    if count > 1:
        lm = math.log(mean_photon)
        steps = lm - np.log(np.arange(1, count))
        logs[1:] = -mean_photon + np.cumsum(steps)
    return logs


@dataclass(frozen=True)
class FockAmplitudes:
    """Coherent-state amplitudes q_n for Fock levels 0..cutoff.

    The discarded probability beyond the cutoff is bounded by
    tail_tolerance; tail_mass records the actual discarded mass.
    """

    mean_photon: float
    cutoff: int
    amplitudes: np.ndarray
    tail_tolerance: float
    tail_mass: float = field(default=0.0)

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=float)
        if amps.shape != (self.cutoff + 1,):
            raise ConfigError(
                f"amplitudes length {amps.shape} does not match cutoff {self.cutoff}"
            )
        if np.any(amps < 0) or not np.all(np.isfinite(amps)):
            raise NumericsError("coherent amplitudes must be finite and nonnegative")
        tail = 1.0 - float(np.sum(amps**2))
        if tail > self.tail_tolerance:
            raise NumericsError(
                f"discarded tail mass {tail:.3e} exceeds tolerance {self.tail_tolerance:.1e}"
            )
        # Poisson tail monotonicity: strictly decreasing above the mean,
        # except where padding zeros were appended (vacuum with forced cutoff).
        start = int(math.floor(self.mean_photon)) + 1
        for n in range(start, self.cutoff):
            if amps[n] > 0 and amps[n + 1] >= amps[n]:
                raise NumericsError("amplitude tail is not strictly decreasing")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "tail_mass", max(tail, 0.0))


def coherent_amplitudes(
    mean_photon: float,
    tail_tolerance: float = DEFAULT_TAIL_TOLERANCE,
    cutoff: int | None = None,
) -> FockAmplitudes:
    """Build truncated coherent-state amplitudes for mean photon number nbar.

    The cutoff is the smallest Fock index whose discarded Poisson tail is
    at most tail_tolerance, unless an explicit cutoff is given (it must
    still satisfy the tail bound). Raises ResourceLimitError if more than
    HARD_MAX_CUTOFF levels would be needed.
    """
    if mean_photon < 0:
        raise ConfigError("mean photon number must be nonnegative")
    if not 0 < tail_tolerance < 1:
        raise ConfigError("tail tolerance must lie in (0, 1)")
    if cutoff is not None and not 0 <= cutoff <= HARD_MAX_CUTOFF:
        raise ResourceLimitError(
            f"explicit cutoff {cutoff} outside [0, {HARD_MAX_CUTOFF}]"
        )

    if mean_photon == 0:
        chosen = 0 if cutoff is None else cutoff
        amps = np.zeros(chosen + 1)
        amps[0] = 1.0
        return FockAmplitudes(0.0, chosen, amps, tail_tolerance)

    logs = _poisson_log_weights(mean_photon, HARD_MAX_CUTOFF + 1)
    weights = np.exp(logs)
    tail = np.maximum(1.0 - np.cumsum(weights), 0.0)
    if cutoff is None:
        below = np.nonzero(tail <= tail_tolerance)[0]
        if below.size == 0:
            raise ResourceLimitError(
                f"nbar={mean_photon} needs more than {HARD_MAX_CUTOFF} Fock levels"
            )
        chosen = int(below[0])
    else:
        chosen = cutoff
        if tail[chosen] > tail_tolerance:
            raise ConfigError(
                f"cutoff {cutoff} leaves a Poisson tail of {tail[chosen]:.3e}, "
                f"above tolerance {tail_tolerance:.1e}"
            )
    return FockAmplitudes(
        mean_photon, chosen, np.sqrt(weights[: chosen + 1]), tail_tolerance
    )


@dataclass(frozen=True)
class AtomicInit:
    """Initial atomic amplitudes: atom 1 excited, atom 2 in a|e> + b|g>."""

    a: complex
    b: complex

    def __post_init__(self) -> None:
        norm = abs(self.a) ** 2 + abs(self.b) ** 2
        if abs(norm - 1.0) > 1e-12:
            raise ConfigError(f"|a|^2 + |b|^2 = {norm} must equal 1 within 1e-12")

    @classmethod
    def from_excited_weight(cls, a: float) -> "AtomicInit":
        """Real-amplitude convenience: b = sqrt(1 - a^2)."""
        if not 0.0 <= a <= 1.0:
            raise ConfigError("excited weight a must lie in [0, 1]")
        return cls(a, math.sqrt(1.0 - a * a))


@dataclass(frozen=True)
class JointState:
    """Normalized pure state over (atom1, atom2, field), flat-indexed."""

    cutoff: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (4 * (self.cutoff + 1),):
            raise ConfigError(
                f"state length {amps.shape} does not match cutoff {self.cutoff}"
            )
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > 1e-10:
            raise NumericsError(f"state norm {norm} deviates from 1 beyond 1e-10")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)


def joint_index(s1: int, s2: int, n: int, cutoff: int) -> int:
    """Flat index of |s1, s2, n>: field index fastest, then atom 2, atom 1.

    (e,e,0) maps to 0 and (g,g,cutoff) maps to 4*(cutoff+1) - 1.
    """
    if s1 not in (EXCITED, GROUND) or s2 not in (EXCITED, GROUND):
        raise ValueError("atom levels must be EXCITED (0) or GROUND (1)")
    if not 0 <= n <= cutoff:
        raise ValueError(f"Fock index {n} outside [0, {cutoff}]")
    return (2 * s1 + s2) * (cutoff + 1) + n


def unflatten_index(index: int, cutoff: int) -> tuple[int, int, int]:
    """Inverse of joint_index."""
    per_atom = cutoff + 1
    if not 0 <= index < 4 * per_atom:
        raise ValueError(f"flat index {index} outside [0, {4 * per_atom})")
    pair, n = divmod(index, per_atom)
    return pair // 2, pair % 2, n


def initial_state(init: AtomicInit, fock: FockAmplitudes) -> JointState:
    """Product state (a|e,e> + b|e,g>) (x) sum_n q_n |n>, renormalized.

    Renormalization absorbs the truncated Poisson tail so downstream
    invariants see an exactly unit-norm vector.
    """
    per_atom = fock.cutoff + 1
    psi = np.zeros(4 * per_atom, dtype=complex)
    psi[0:per_atom] = init.a * fock.amplitudes
    psi[per_atom : 2 * per_atom] = init.b * fock.amplitudes
    psi /= np.linalg.norm(psi)
    return JointState(fock.cutoff, psi)
