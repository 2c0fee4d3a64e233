"""Partial traces, density-matrix invariants, and purity duality."""

import math

import numpy as np
import pytest

from cavitypair import (
    AtomicInit,
    ConfigError,
    NumericsError,
    PsdViolationError,
    SingleQubitDensity,
    TwoQubitDensity,
    coherent_amplitudes,
    evolve,
    impurity,
    initial_state,
    schmidt_purity,
    trace_atom,
    trace_field,
)
from conftest import bell_state

from test_dynamics import dense_evolve


def oracle_trace_field(psi: np.ndarray, cutoff: int) -> np.ndarray:
    """Partial trace via an explicit index sum, independent of reshape."""
    dim = cutoff + 1
    rho = np.zeros((4, 4), dtype=complex)
    for row in range(4):
        for col in range(4):
            for n in range(dim):
                rho[row, col] += psi[row * dim + n] * np.conj(psi[col * dim + n])
    return rho


class TestTraceField:
    def test_initial_product_state(self):
        fock = coherent_amplitudes(5.0)
        state = initial_state(AtomicInit.from_excited_weight(0.5), fock)
        rho = trace_field(state)
        chi = np.array([0.5, math.sqrt(0.75), 0.0, 0.0], dtype=complex)
        np.testing.assert_allclose(rho.matrix, np.outer(chi, chi.conj()), atol=1e-12)
        assert impurity(rho) == pytest.approx(0.0, abs=1e-12)

    def test_trace_one(self):
        fock = coherent_amplitudes(3.0)
        state = evolve(
            initial_state(AtomicInit.from_excited_weight(0.7), fock), 4.2
        )
        assert trace_field(state).matrix.trace().real == pytest.approx(1.0, abs=1e-12)

    def test_matches_dense_oracle(self):
        fock = coherent_amplitudes(2.0, 1e-12, cutoff=20)
        state = initial_state(AtomicInit.from_excited_weight(0.5), fock)
        evolved = evolve(state, 5.0)
        oracle_psi = dense_evolve(state.amplitudes, 5.0, cutoff=20)
        oracle_rho = oracle_trace_field(oracle_psi, 20)
        assert np.abs(trace_field(evolved).matrix - oracle_rho).max() < 1e-9


class TestTraceAtom:
    def test_product_projector(self):
        ket = np.zeros(4, dtype=complex)
        ket[0] = 1.0
        rho = TwoQubitDensity(np.outer(ket, ket))
        for which in (1, 2):
            np.testing.assert_allclose(
                trace_atom(rho, which).matrix,
                [[1, 0], [0, 0]],
                atol=1e-14,
            )

    def test_bell_reductions_maximally_mixed(self):
        rho = bell_state("phi+")
        for which in (1, 2):
            np.testing.assert_allclose(
                trace_atom(rho, which).matrix, np.eye(2) / 2, atol=1e-14
            )

    def test_trace_preserved(self):
        fock = coherent_amplitudes(4.0)
        state = evolve(
            initial_state(AtomicInit.from_excited_weight(0.5), fock), 3.0
        )
        rho = trace_field(state)
        for which in (1, 2):
            reduced = trace_atom(rho, which)
            assert reduced.matrix.trace().real == pytest.approx(1.0, abs=1e-12)

    def test_invalid_selector(self):
        with pytest.raises(ConfigError):
            trace_atom(bell_state("phi+"), 3)


class TestPurityDuality:
    @pytest.mark.parametrize("tau", [0.0, 0.7, 5.0, 21.3])
    def test_pair_vs_field(self, tau):
        fock = coherent_amplitudes(6.0)
        state = evolve(
            initial_state(AtomicInit.from_excited_weight(0.5), fock), tau
        )
        pair_purity = 1.0 - impurity(trace_field(state))
        assert pair_purity == pytest.approx(
            schmidt_purity(state, "atoms-field"), abs=1e-9
        )

    @pytest.mark.parametrize("tau", [0.9, 13.0])
    def test_atom1_vs_complement(self, tau):
        fock = coherent_amplitudes(6.0)
        state = evolve(
            initial_state(AtomicInit.from_excited_weight(0.5), fock), tau
        )
        atom1_purity = 1.0 - impurity(trace_atom(trace_field(state), 1))
        assert atom1_purity == pytest.approx(
            schmidt_purity(state, "atom1-rest"), abs=1e-9
        )

    def test_unknown_boundary(self):
        fock = coherent_amplitudes(1.0)
        state = initial_state(AtomicInit.from_excited_weight(0.5), fock)
        with pytest.raises(ConfigError):
            schmidt_purity(state, "field-atom2")


class TestDensityValidation:
    def test_psd_dust_clipped(self):
        eigvals = np.array([0.6, 0.4 + 5e-11, 0.0, -5e-11])
        rho = TwoQubitDensity(np.diag(eigvals).astype(complex))
        repaired = np.linalg.eigvalsh(rho.matrix)
        assert repaired.min() >= 0.0
        assert rho.matrix.trace().real == pytest.approx(1.0, abs=1e-14)

    def test_genuine_negativity_rejected(self):
        eigvals = np.array([0.7, 0.3 + 1e-8, 0.0, -1e-8])
        with pytest.raises(PsdViolationError):
            TwoQubitDensity(np.diag(eigvals).astype(complex))

    def test_hermiticity_enforced(self):
        mat = np.eye(4, dtype=complex) / 4
        mat[0, 1] = 1e-6
        with pytest.raises(NumericsError):
            TwoQubitDensity(mat)

    def test_trace_enforced(self):
        with pytest.raises(NumericsError):
            TwoQubitDensity(np.eye(4, dtype=complex))

    def test_shape_enforced(self):
        with pytest.raises(ConfigError):
            SingleQubitDensity(np.eye(4, dtype=complex) / 4)

    def test_matrix_readonly(self):
        rho = bell_state("phi+")
        with pytest.raises(ValueError):
            rho.matrix[0, 0] = 5.0
