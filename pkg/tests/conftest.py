"""Shared fixtures and constructors for the test suite."""

from __future__ import annotations

import numpy as np
import pytest

from cavitypair import TwoQubitDensity


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)


def bell_state(kind: str) -> TwoQubitDensity:
    """The four Bell states in the |00>, |01>, |10>, |11> basis."""
    s = 1 / np.sqrt(2)
    vectors = {
        "phi+": np.array([s, 0, 0, s]),
        "phi-": np.array([s, 0, 0, -s]),
        "psi+": np.array([0, s, s, 0]),
        "psi-": np.array([0, s, -s, 0]),
    }
    v = vectors[kind].astype(complex)
    return TwoQubitDensity(np.outer(v, v.conj()))


def random_density(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Random full-rank density matrix via a Wishart-style construction."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    mat = g @ g.conj().T
    return mat / mat.trace().real


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Haar-ish random unitary from the QR decomposition."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))
