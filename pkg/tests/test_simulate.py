import math

import numpy as np
import pytest

from conftest import random_circuit
from rangeoracles.circuit import Circuit, compose, empty
from rangeoracles.gates import h, x
from rangeoracles.oracles import (
    AdderSpec,
    LessThanSpec,
    RangeSpec,
    add_const,
    less_than,
    range_oracle_a,
    range_oracle_b,
)
from rangeoracles.simulate import (
    apply_circuit,
    basis_state,
    circuit_unitary,
    equal_up_to_global_phase,
    is_unitary,
    phase_profile,
    uniform_superposition,
)


class TestUniformSuperposition:
    def test_three_qubits(self):
        state = uniform_superposition(3)
        np.testing.assert_array_equal(state, np.full(8, 1 / math.sqrt(8)))

    def test_one_qubit(self):
        np.testing.assert_allclose(
            uniform_superposition(1), [1 / math.sqrt(2)] * 2, atol=0
        )

    def test_zero_qubits_rejected(self):
        with pytest.raises(ValueError):
            uniform_superposition(0)

    def test_matches_hadamard_on_every_qubit(self):
        c = Circuit(4, tuple(h(q) for q in range(4)))
        got = apply_circuit(c, basis_state(4, 0))
        np.testing.assert_allclose(got, uniform_superposition(4), atol=1e-12)


class TestApplyCircuit:
    def test_empty_circuit_is_identity(self, rng):
        state = rng.normal(size=8) + 1j * rng.normal(size=8)
        state /= np.linalg.norm(state)
        np.testing.assert_array_equal(apply_circuit(empty(3), state), state)

    def test_bit_flip_convention(self):
        # qubit 0 is the least significant bit
        got = apply_circuit(Circuit(3, (x(0),)), basis_state(3, 0))
        np.testing.assert_array_equal(got, basis_state(3, 1))

    def test_less_than_marks_low_states(self):
        got = apply_circuit(less_than(LessThanSpec(3, 4)), uniform_superposition(3))
        np.testing.assert_allclose(np.abs(got), np.full(8, 1 / math.sqrt(8)), atol=1e-12)
        assert all(np.angle(got[i]) == pytest.approx(math.pi) for i in range(4))
        assert all(np.angle(got[i]) == 0.0 for i in range(4, 8))

    def test_qubit_count_mismatch(self):
        with pytest.raises(ValueError):
            apply_circuit(empty(3), basis_state(2, 0))

    def test_norm_preserved_across_builders(self, rng):
        circuits = [
            less_than(LessThanSpec(4, 11)),
            add_const(AdderSpec(4, 7)),
            range_oracle_a(RangeSpec(4, 3, 12)),
            range_oracle_b(RangeSpec(4, 3, 12)),
        ]
        for c in circuits:
            for k in range(16):
                out = apply_circuit(c, basis_state(4, k))
                assert abs(np.linalg.norm(out) - 1.0) < 1e-10

    def test_linearity(self, rng):
        c = random_circuit(rng, 4, 15)
        xs = rng.normal(size=16) + 1j * rng.normal(size=16)
        ys = rng.normal(size=16) + 1j * rng.normal(size=16)
        alpha, beta = 0.3 - 0.1j, 1.1 + 0.7j
        lhs = apply_circuit(c, alpha * xs + beta * ys)
        rhs = alpha * apply_circuit(c, xs) + beta * apply_circuit(c, ys)
        np.testing.assert_allclose(lhs, rhs, atol=1e-10)


class TestCircuitUnitary:
    def test_empty_circuit(self):
        np.testing.assert_array_equal(circuit_unitary(empty(2)), np.eye(4))

    def test_add_const_permutation(self):
        # oracle: brute force over all 8 basis states
        u = circuit_unitary(add_const(AdderSpec(3, 3)))
        want = np.zeros((8, 8), dtype=complex)
        for col in range(8):
            want[(col + 3) % 8, col] = 1.0
        np.testing.assert_allclose(u, want, atol=1e-12)

    def test_range_a_diagonal(self):
        u = circuit_unitary(range_oracle_a(RangeSpec(3, 4, 7)))
        np.testing.assert_allclose(u, np.diag([1, 1, 1, 1, -1, -1, -1, -1]), atol=1e-12)

    def test_cap_enforced(self):
        with pytest.raises(ValueError, match="capped"):
            circuit_unitary(empty(11))

    def test_unitarity_of_built_oracles(self):
        for n in (3, 5, 6):
            dim = 1 << n
            for c in [
                range_oracle_a(RangeSpec(n, 1, dim - 2)),
                range_oracle_b(RangeSpec(n, 1, dim - 2)),
                add_const(AdderSpec(n, 5)),
            ]:
                assert is_unitary(circuit_unitary(c), 1e-9)

    def test_composition_is_matrix_product(self, rng):
        for n in (3, 5):
            a = random_circuit(rng, n, 10)
            b = random_circuit(rng, n, 10)
            got = circuit_unitary(compose(a, b))
            want = circuit_unitary(b) @ circuit_unitary(a)
            np.testing.assert_allclose(got, want, atol=1e-9)


class TestEqualUpToGlobalPhase:
    def test_negated_matrix(self, rng):
        u = circuit_unitary(random_circuit(rng, 3, 10))
        assert equal_up_to_global_phase(u, -u, 1e-12)

    def test_single_sign_flip_detected(self):
        u = np.diag([1.0, 1.0, 1.0, -1.0]).astype(complex)
        v = u.copy()
        v[0, 0] = -1.0
        assert not equal_up_to_global_phase(u, v, 1e-9)

    def test_a_and_b_unitaries_differ_but_states_agree(self):
        spec = RangeSpec(3, 4, 7)
        ua = circuit_unitary(range_oracle_a(spec))
        ub = circuit_unitary(range_oracle_b(spec))
        assert not equal_up_to_global_phase(ua, ub, 1e-9)
        sa = apply_circuit(range_oracle_a(spec), uniform_superposition(3))
        sb = apply_circuit(range_oracle_b(spec), uniform_superposition(3))
        np.testing.assert_allclose(sa, sb, atol=1e-9)

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            equal_up_to_global_phase(np.eye(2), np.eye(4))


class TestPhaseProfile:
    def test_marked_range_profile(self):
        state = apply_circuit(range_oracle_a(RangeSpec(3, 4, 7)), uniform_superposition(3))
        profile = phase_profile(state)
        assert [e.state for e in profile.entries] == list(range(8))
        for e in profile.entries:
            assert e.magnitude == pytest.approx(1 / math.sqrt(8), abs=1e-12)
            assert e.phase == (math.pi if 4 <= e.state <= 7 else 0.0)

    def test_single_basis_state(self):
        profile = phase_profile(basis_state(4, 0))
        assert len(profile.entries) == 1
        assert profile.entries[0].state == 0 and profile.entries[0].phase == 0.0

    def test_b_on_uniform_marks_range(self):
        state = apply_circuit(range_oracle_b(RangeSpec(3, 2, 5)), uniform_superposition(3))
        profile = phase_profile(state)
        marked = {e.state for e in profile.entries if e.phase == pytest.approx(math.pi)}
        assert marked == {2, 3, 4, 5}

    def test_zero_state_rejected(self):
        with pytest.raises(ValueError):
            phase_profile(np.zeros(8, dtype=complex))

    def test_phases_in_half_open_interval(self, rng):
        state = rng.normal(size=16) + 1j * rng.normal(size=16)
        state /= np.linalg.norm(state)
        profile = phase_profile(state)
        assert all(-math.pi < e.phase <= math.pi for e in profile.entries)
        assert profile.entries[0].phase == 0.0
