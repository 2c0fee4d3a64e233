"""Dense-coding capacity and eavesdropping security measures.

Alice encodes two classical bits by applying one of the four Paulis to her
atom of a shared pair state; Eve's individual attack is modeled as a Pauli
on the travelling qubit. Disturbance, mutual informations, and the
security verdict follow the conventions documented in the README
(including the inverted orientation of the security inequality, which
declares the channel secure when the disturbance is large).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConfigError, NumericsError
from .measures import PAULIS, overlap_fidelity, von_neumann_entropy
from .reduced import TwoQubitDensity

# Clamp applied inside logarithms so 0*log(0) evaluates to 0.
_LOG_EPS = 1e-15

_UNIFORM = (0.25, 0.25, 0.25, 0.25)


def pauli_channel(rho: TwoQubitDensity, index: int) -> TwoQubitDensity:
    """Conjugate the pair state by a Pauli on qubit 1: (U x I) rho (U^dag x I)."""
    if index not in (0, 1, 2, 3):
        raise ConfigError("Pauli index must be 0, 1, 2, or 3")
    op = np.kron(PAULIS[index], np.eye(2))
    return TwoQubitDensity(op @ rho.matrix @ op.conj().T)


@dataclass(frozen=True)
class CodingEnsemble:
    """The four Pauli-rotated pair states with their coding probabilities."""

    probabilities: tuple[float, float, float, float]
    states: tuple[TwoQubitDensity, TwoQubitDensity, TwoQubitDensity, TwoQubitDensity]

    def __post_init__(self) -> None:
        probs = tuple(float(p) for p in self.probabilities)
        if len(probs) != 4 or any(p < 0 for p in probs):
            raise ConfigError("probabilities must be 4 nonnegative reals")
        if abs(sum(probs) - 1.0) > 1e-12:
            raise ConfigError("probabilities must sum to 1 within 1e-12")
        object.__setattr__(self, "probabilities", probs)

    @classmethod
    def from_channel(
        cls, rho: TwoQubitDensity, probabilities=None
    ) -> "CodingEnsemble":
        probs = _UNIFORM if probabilities is None else tuple(probabilities)
        states = tuple(pauli_channel(rho, i) for i in range(4))
        return cls(probs, states)


def coded_state(ensemble: CodingEnsemble) -> TwoQubitDensity:
    """Probability-weighted average of the ensemble states."""
    mixed = sum(
        p * state.matrix
        for p, state in zip(ensemble.probabilities, ensemble.states)
    )
    return TwoQubitDensity(mixed)


def holevo_bound(rho: TwoQubitDensity, probabilities=None) -> float:
    """Ceiling on the classical information Bob can decode, in bits.

    Computed as S(average state) - sum_i p_i S(state_i); since every
    ensemble member is unitarily equivalent to rho this must equal
    S(average) - S(rho), and both forms are evaluated as a consistency
    guard.
    """
    ensemble = CodingEnsemble.from_channel(rho, probabilities)
    average = coded_state(ensemble)
    mixed_entropy = von_neumann_entropy(average)
    ensemble_term = sum(
        p * von_neumann_entropy(state)
        for p, state in zip(ensemble.probabilities, ensemble.states)
    )
    direct = mixed_entropy - ensemble_term
    shortcut = mixed_entropy - von_neumann_entropy(rho)
    if abs(direct - shortcut) > 1e-8:
        raise NumericsError(
            f"Holevo forms disagree by {abs(direct - shortcut):.3e}; "
            "entropy evaluation is inconsistent"
        )
    return direct


def disturbance(rho: TwoQubitDensity) -> float:
    """Bob's error rate D = 1 - mean of the four Pauli trace overlaps."""
    mean_fidelity = sum(overlap_fidelity(rho, i) for i in range(4)) / 4.0
    return float(min(max(1.0 - mean_fidelity, 0.0), 1.0))


def _plogp_sum(d: float) -> float:
    """(1-D)log2(1-D) + D log2 D with endpoint terms evaluating to 0."""
    d = min(max(d, 0.0), 1.0)
    lo = min(max(d, _LOG_EPS), 1.0 - _LOG_EPS)
    return (1.0 - d) * math.log2(1.0 - lo) + d * math.log2(lo)


def eve_information(d: float) -> float:
    """Eve's mutual information with Alice at disturbance D, in bits."""
    if not 0.0 <= d <= 1.0:
        raise ConfigError("disturbance must lie in [0, 1]")
    return 1.0 + _plogp_sum(d)


def secure(d: float) -> bool:
    """Security verdict: (1-D)log2(1-D) + D log2 D <= -1/2, non-strict.

    Equivalently the binary entropy of D is at least 1/2. Note the
    orientation: large disturbance is declared secure. Implemented as
    stated, with the orientation documented rather than corrected.
    """
    if not 0.0 <= d <= 1.0:
        raise ConfigError("disturbance must lie in [0, 1]")
    return _plogp_sum(d) <= -0.5


@lru_cache(maxsize=1)
def security_threshold() -> float:
    """Smallest disturbance declared secure, found by bisection.

    Solves binary entropy h(D) = 1/2 on (0, 1/2); the secure disturbance
    band is [threshold, 1 - threshold].
    """
    lo, hi = 1e-12, 0.5
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if _plogp_sum(mid) <= -0.5:
            hi = mid
        else:
            lo = mid
    return hi


@dataclass(frozen=True)
class SecurityRecord:
    """Disturbance, both mutual informations, and the security verdict."""

    disturbance: float
    eve_info: float
    bob_info: float
    secure: bool

    def __post_init__(self) -> None:
        if not -1e-12 <= self.eve_info <= 1.0 + 1e-12:
            raise NumericsError(f"I_AE = {self.eve_info} outside [0, 1]")
        if not -1e-9 <= self.bob_info <= 2.0 + 1e-9:
            raise NumericsError(f"I_Bob = {self.bob_info} outside [0, 2]")
        if self.secure != (_plogp_sum(self.disturbance) <= -0.5):
            raise NumericsError("secure flag inconsistent with disturbance")


def security_record(rho: TwoQubitDensity) -> SecurityRecord:
    """Full security snapshot of one pair state under uniform coding."""
    d = disturbance(rho)
    return SecurityRecord(
        disturbance=d,
        eve_info=eve_information(d),
        bob_info=holevo_bound(rho),
        secure=secure(d),
    )
