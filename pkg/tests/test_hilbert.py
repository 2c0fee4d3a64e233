"""Coherent amplitudes, index maps, and initial-state construction."""

import math

import mpmath
import numpy as np
import pytest

from cavitypair import (
    EXCITED,
    GROUND,
    AtomicInit,
    ConfigError,
    FockAmplitudes,
    JointState,
    NumericsError,
    ResourceLimitError,
    coherent_amplitudes,
    initial_state,
    joint_index,
    unflatten_index,
)

# Poisson pmf at n=10 for nbar=10, from direct log-domain evaluation
# (exp(-10 + 10 ln 10 - ln 10!)); independent of the package recurrence.
Q10_SQUARED = 0.12511003572113372


def poisson_pmf(nbar: float, n: int) -> float:
    return math.exp(-nbar + n * math.log(nbar) - math.lgamma(n + 1))


class TestCoherentAmplitudes:
    def test_vacuum(self):
        fock = coherent_amplitudes(0.0, 1e-12)
        assert fock.cutoff == 0
        assert fock.amplitudes.tolist() == [1.0]

    def test_tail_bound_guarantee(self):
        fock = coherent_amplitudes(10.0, 1e-12)
        total = np.sum(fock.amplitudes**2)
        assert 1 - 1e-12 <= total <= 1.0 + 1e-15

    def test_weight_matches_direct_poisson_evaluation(self):
        fock = coherent_amplitudes(10.0, 1e-12)
        assert fock.amplitudes[10] ** 2 == pytest.approx(
            poisson_pmf(10.0, 10), abs=1e-15
        )
        assert fock.amplitudes[10] ** 2 == pytest.approx(Q10_SQUARED, abs=1e-12)

    @pytest.mark.parametrize("nbar", [1.0, 10.0, 20.0])
    def test_discarded_tail_against_high_precision_sum(self, nbar):
        # Exact Poisson tail beyond the cutoff, accumulated at 50 digits.
        fock = coherent_amplitudes(nbar, 1e-12)
        with mpmath.workdps(50):
            tail = mpmath.mpf(1) - sum(
                mpmath.e ** (-nbar) * mpmath.mpf(nbar) ** n / mpmath.factorial(n)
                for n in range(fock.cutoff + 1)
            )
        assert float(tail) <= 1e-12

    def test_cutoff_is_smallest_satisfying(self):
        fock = coherent_amplitudes(10.0, 1e-12)
        shorter = np.sum(fock.amplitudes[: fock.cutoff] ** 2)
        assert 1 - shorter > 1e-12

    def test_explicit_cutoff(self):
        fock = coherent_amplitudes(2.0, 1e-12, cutoff=20)
        assert fock.cutoff == 20
        assert fock.amplitudes.shape == (21,)
        assert 1 - np.sum(fock.amplitudes**2) <= 1e-12

    def test_explicit_cutoff_too_small(self):
        with pytest.raises(ConfigError):
            coherent_amplitudes(10.0, 1e-12, cutoff=12)

    def test_invalid_inputs(self):
        with pytest.raises(ConfigError):
            coherent_amplitudes(-1.0)
        with pytest.raises(ConfigError):
            coherent_amplitudes(1.0, 0.0)
        with pytest.raises(ConfigError):
            coherent_amplitudes(1.0, 1.0)

    def test_hard_maximum(self):
        with pytest.raises(ResourceLimitError):
            coherent_amplitudes(400.0)

    def test_tail_monotonicity_enforced(self):
        fock = coherent_amplitudes(2.0, 1e-12)
        doctored = fock.amplitudes.copy()
        doctored[-1], doctored[-2] = doctored[-2], doctored[-1]
        with pytest.raises(NumericsError):
            FockAmplitudes(2.0, fock.cutoff, doctored, 1e-10)

    def test_amplitudes_readonly(self):
        fock = coherent_amplitudes(2.0)
        with pytest.raises(ValueError):
            fock.amplitudes[0] = 0.0


class TestJointIndex:
    def test_corner_values(self):
        assert joint_index(EXCITED, EXCITED, 0, cutoff=7) == 0
        assert joint_index(GROUND, GROUND, 7, cutoff=7) == 4 * 8 - 1

    def test_bijection_exhaustive(self):
        cutoff = 3
        seen = set()
        for s1 in (EXCITED, GROUND):
            for s2 in (EXCITED, GROUND):
                for n in range(cutoff + 1):
                    flat = joint_index(s1, s2, n, cutoff)
                    assert unflatten_index(flat, cutoff) == (s1, s2, n)
                    seen.add(flat)
        assert seen == set(range(4 * (cutoff + 1)))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            joint_index(EXCITED, EXCITED, 5, cutoff=4)
        with pytest.raises(ValueError):
            joint_index(2, 0, 0, cutoff=4)
        with pytest.raises(ValueError):
            unflatten_index(100, cutoff=3)


class TestAtomicInit:
    def test_normalization_enforced(self):
        with pytest.raises(ConfigError):
            AtomicInit(1.0, 1.0)

    def test_from_excited_weight(self):
        init = AtomicInit.from_excited_weight(0.5)
        assert init.b == pytest.approx(math.sqrt(0.75), abs=1e-15)
        with pytest.raises(ConfigError):
            AtomicInit.from_excited_weight(1.5)


class TestInitialState:
    def test_pure_excited_vacuum(self):
        state = initial_state(AtomicInit(1.0, 0.0), coherent_amplitudes(0.0))
        expected = np.zeros(4, dtype=complex)
        expected[0] = 1.0
        np.testing.assert_allclose(state.amplitudes, expected, atol=1e-15)

    def test_superposition_amplitudes(self):
        fock = coherent_amplitudes(2.0)
        state = initial_state(AtomicInit.from_excited_weight(0.5), fock)
        per_atom = fock.cutoff + 1
        # renormalization rescales by at most the tail tolerance
        np.testing.assert_allclose(
            state.amplitudes[per_atom : 2 * per_atom],
            math.sqrt(0.75) * fock.amplitudes,
            atol=1e-11,
        )

    def test_norm_exact(self):
        state = initial_state(
            AtomicInit.from_excited_weight(0.3), coherent_amplitudes(5.0)
        )
        assert np.linalg.norm(state.amplitudes) == pytest.approx(1.0, abs=1e-12)

    def test_support_size(self):
        fock = coherent_amplitudes(3.0)
        state = initial_state(AtomicInit.from_excited_weight(0.5), fock)
        assert np.count_nonzero(state.amplitudes) == 2 * (fock.cutoff + 1)


class TestJointState:
    def test_norm_enforced(self):
        with pytest.raises(NumericsError):
            JointState(0, np.array([1.0, 1.0, 0.0, 0.0], dtype=complex))

    def test_length_enforced(self):
        with pytest.raises(ConfigError):
            JointState(1, np.array([1.0, 0, 0, 0], dtype=complex))
