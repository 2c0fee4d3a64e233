"""Coding ensembles, Holevo bound, disturbance, and the security verdict."""

import math

import numpy as np
import pytest

from cavitypair import (
    CodingEnsemble,
    ConfigError,
    NumericsError,
    SecurityRecord,
    TwoQubitDensity,
    coded_state,
    disturbance,
    eve_information,
    holevo_bound,
    pauli_channel,
    secure,
    security_record,
    security_threshold,
    von_neumann_entropy,
)
from conftest import bell_state, random_density

# Threshold disturbance where binary entropy reaches 1/2, found by
# test-local bisection below and frozen here for readability.
D_STAR = 0.1100279


def entropy_gap_oracle(d: float) -> float:
    """(1-D)log2(1-D) + D log2 D + 1/2, the security equality residue."""
    terms = 0.0
    for p in (d, 1.0 - d):
        if p > 0:
            terms += p * math.log2(p)
    return terms + 0.5


def bisect_threshold() -> float:
    lo, hi = 1e-9, 0.5
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        if entropy_gap_oracle(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return hi


class TestPauliChannel:
    def test_identity_index(self):
        rho = bell_state("phi+")
        np.testing.assert_allclose(
            pauli_channel(rho, 0).matrix, rho.matrix, atol=1e-15
        )

    @pytest.mark.parametrize("index", [1, 2, 3])
    def test_involution(self, index, rng):
        rho = TwoQubitDensity(random_density(rng, 4))
        twice = pauli_channel(pauli_channel(rho, index), index)
        np.testing.assert_allclose(twice.matrix, rho.matrix, atol=1e-14)

    def test_spectrum_preserved(self, rng):
        rho = TwoQubitDensity(random_density(rng, 4))
        base = np.linalg.eigvalsh(rho.matrix)
        for index in range(4):
            rotated = np.linalg.eigvalsh(pauli_channel(rho, index).matrix)
            np.testing.assert_allclose(rotated, base, atol=1e-12)

    def test_invalid_index(self):
        with pytest.raises(ConfigError):
            pauli_channel(bell_state("phi+"), 5)


class TestCodingEnsemble:
    def test_uniform_default(self):
        ens = CodingEnsemble.from_channel(bell_state("phi+"))
        assert ens.probabilities == (0.25, 0.25, 0.25, 0.25)
        assert len(ens.states) == 4

    def test_probability_validation(self):
        rho = bell_state("phi+")
        with pytest.raises(ConfigError):
            CodingEnsemble.from_channel(rho, (0.5, 0.5, 0.5, -0.5))
        with pytest.raises(ConfigError):
            CodingEnsemble.from_channel(rho, (0.3, 0.3, 0.3, 0.3))


class TestCodedState:
    def test_bell_averages_to_maximal_mixture(self):
        ens = CodingEnsemble.from_channel(bell_state("phi+"))
        np.testing.assert_allclose(
            coded_state(ens).matrix, np.eye(4) / 4, atol=1e-12
        )

    def test_degenerate_distribution(self, rng):
        rho = TwoQubitDensity(random_density(rng, 4))
        ens = CodingEnsemble.from_channel(rho, (1.0, 0.0, 0.0, 0.0))
        np.testing.assert_allclose(coded_state(ens).matrix, rho.matrix, atol=1e-14)

    def test_trace_preserved(self, rng):
        ens = CodingEnsemble.from_channel(
            TwoQubitDensity(random_density(rng, 4)), (0.1, 0.2, 0.3, 0.4)
        )
        assert coded_state(ens).matrix.trace().real == pytest.approx(1.0, abs=1e-12)


class TestHolevoBound:
    def test_bell_two_bits(self):
        assert holevo_bound(bell_state("phi+")) == pytest.approx(2.0, abs=1e-10)

    def test_maximally_mixed_zero(self):
        rho = TwoQubitDensity(np.eye(4, dtype=complex) / 4)
        assert holevo_bound(rho) == pytest.approx(0.0, abs=1e-10)

    def test_product_projector_one_bit(self):
        # Oracle: average the four rotated projectors directly; the mix is
        # (|0><0| + |1><1|)/2 on qubit 1 times |0><0|, entropy 1 bit.
        ket = np.zeros(4, dtype=complex)
        ket[0] = 1.0
        rho = TwoQubitDensity(np.outer(ket, ket))
        mixed = np.zeros((4, 4), dtype=complex)
        for i in range(4):
            mixed += 0.25 * pauli_channel(rho, i).matrix
        assert von_neumann_entropy(mixed) == pytest.approx(1.0, abs=1e-12)
        assert holevo_bound(rho) == pytest.approx(1.0, abs=1e-10)

    def test_two_forms_agree(self, rng):
        for _ in range(10):
            rho = TwoQubitDensity(random_density(rng, 4))
            ens = CodingEnsemble.from_channel(rho)
            direct = von_neumann_entropy(coded_state(ens).matrix) - sum(
                p * von_neumann_entropy(s.matrix)
                for p, s in zip(ens.probabilities, ens.states)
            )
            assert holevo_bound(rho) == pytest.approx(direct, abs=1e-10)

    def test_range(self, rng):
        for _ in range(10):
            value = holevo_bound(TwoQubitDensity(random_density(rng, 4)))
            assert -1e-10 <= value <= 2.0 + 1e-10


class TestDisturbance:
    def test_bell(self):
        assert disturbance(bell_state("phi+")) == pytest.approx(0.75, abs=1e-12)

    def test_product_projector(self):
        ket = np.zeros(4, dtype=complex)
        ket[0] = 1.0
        rho = TwoQubitDensity(np.outer(ket, ket))
        assert disturbance(rho) == pytest.approx(0.5, abs=1e-12)

    def test_maximally_mixed(self):
        rho = TwoQubitDensity(np.eye(4, dtype=complex) / 4)
        assert disturbance(rho) == pytest.approx(0.75, abs=1e-12)


class TestEveInformation:
    def test_endpoints(self):
        assert eve_information(0.0) == pytest.approx(1.0, abs=1e-12)
        assert eve_information(1.0) == pytest.approx(1.0, abs=1e-12)
        assert eve_information(0.5) == pytest.approx(0.0, abs=1e-12)

    def test_threshold_matches_bisection_oracle(self):
        oracle = bisect_threshold()
        assert oracle == pytest.approx(D_STAR, abs=1e-6)
        assert security_threshold() == pytest.approx(oracle, abs=1e-9)
        assert eve_information(security_threshold()) == pytest.approx(0.5, abs=1e-9)

    def test_domain_enforced(self):
        with pytest.raises(ConfigError):
            eve_information(-0.1)
        with pytest.raises(ConfigError):
            eve_information(1.1)


class TestSecure:
    def test_known_points(self):
        assert secure(0.5)
        assert not secure(0.01)
        assert not secure(0.99)

    def test_threshold_boundary_non_strict(self):
        threshold = security_threshold()
        assert secure(threshold)
        assert not secure(threshold - 1e-9)
        assert secure(1.0 - threshold)
        assert not secure(1.0 - threshold + 1e-9)

    def test_equivalent_to_eve_information_bound(self):
        for d in np.linspace(0.0, 1.0, 2001):
            assert secure(float(d)) == (eve_information(float(d)) <= 0.5)


class TestSecurityRecord:
    def test_from_state(self):
        record = security_record(bell_state("phi+"))
        assert record.disturbance == pytest.approx(0.75, abs=1e-12)
        assert record.bob_info == pytest.approx(2.0, abs=1e-10)
        assert record.secure
        assert record.eve_info == pytest.approx(
            eve_information(0.75), abs=1e-12
        )

    def test_consistency_enforced(self):
        with pytest.raises(NumericsError):
            SecurityRecord(
                disturbance=0.5, eve_info=0.0, bob_info=1.0, secure=False
            )
        with pytest.raises(NumericsError):
            SecurityRecord(
                disturbance=0.5, eve_info=1.5, bob_info=1.0, secure=True
            )
