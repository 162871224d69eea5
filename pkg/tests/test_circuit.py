import numpy as np
import pytest

from conftest import random_circuit
from rangeoracles.circuit import (
    Circuit,
    append,
    compose,
    depth,
    empty,
    from_json,
    from_text,
    inverse,
    relabel,
    to_json,
    to_text,
)
from rangeoracles.gates import Gate, Kind, cp, cx, h, mcz, rz, sx, x, z
from rangeoracles.simulate import circuit_unitary


class TestGateValidation:
    def test_duplicate_operands_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            Gate(Kind.CX, (1, 1))

    def test_mcz_needs_operands(self):
        with pytest.raises(ValueError):
            Gate(Kind.MCZ, ())

    def test_arity_enforced(self):
        with pytest.raises(ValueError):
            Gate(Kind.H, (0, 1))

    def test_angle_required_and_finite(self):
        with pytest.raises(ValueError):
            Gate(Kind.RZ, (0,))
        with pytest.raises(ValueError, match="finite"):
            Gate(Kind.RZ, (0,), float("nan"))
        with pytest.raises(ValueError, match="no angle"):
            Gate(Kind.X, (0,), 1.0)

    def test_operand_mask(self):
        assert mcz(0, 2, 3).operand_mask == 0b1101


class TestAppend:
    def test_appends_one_gate(self):
        c = append(empty(3), h(0))
        assert len(c.gates) == 1 and c.gates[0] == h(0)

    def test_input_unchanged(self):
        base = empty(3)
        append(base, h(0))
        assert len(base.gates) == 0

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            append(empty(3), x(5))

    def test_duplicate_operands_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            append(empty(3), Gate(Kind.CX, (1, 1)))


class TestCompose:
    def test_mismatched_qubit_counts(self):
        with pytest.raises(ValueError, match="compose"):
            compose(empty(2), empty(3))

    def test_identity_of_composition(self):
        c = Circuit(2, (h(0), cx(0, 1)))
        assert compose(c, empty(2)) == c
        assert compose(empty(2), c) == c

    def test_unitary_is_product(self, rng):
        # oracle: multiply the separately extracted unitaries
        for _ in range(5):
            a = random_circuit(rng, 3, 8)
            b = random_circuit(rng, 3, 8)
            got = circuit_unitary(compose(a, b))
            want = circuit_unitary(b) @ circuit_unitary(a)
            np.testing.assert_allclose(got, want, atol=1e-10)


class TestDepth:
    def test_disjoint_qubits_share_a_layer(self):
        assert depth(Circuit(2, (h(0), h(1)))) == 1

    def test_same_qubit_serializes(self):
        assert depth(Circuit(1, (h(0), x(0)))) == 2

    def test_empty_circuit(self):
        assert depth(empty(4)) == 0

    def test_hand_layered_example(self):
        # layers: {H0, H1} {CX01} {RZ1, SX0} {MCZ012}
        c = Circuit(3, (h(0), h(1), cx(0, 1), rz(0.3, 1), sx(0), mcz(0, 1, 2)))
        assert depth(c) == 4

    def test_subadditive_under_composition(self, rng):
        for _ in range(10):
            a = random_circuit(rng, 4, 12)
            b = random_circuit(rng, 4, 12)
            assert depth(compose(a, b)) <= depth(a) + depth(b)

    def test_composition_equality_case(self):
        # b's first gate touches the qubit of a's only layer chain
        a = Circuit(2, (x(0), x(0)))
        b = Circuit(2, (x(0), x(1)))
        assert depth(compose(a, b)) == depth(a) + depth(b)

    def test_invariant_under_relabeling(self, rng):
        for _ in range(10):
            c = random_circuit(rng, 5, 20)
            perm = rng.permutation(5).tolist()
            assert depth(relabel(c, perm)) == depth(c)


class TestRelabel:
    def test_must_be_permutation(self):
        with pytest.raises(ValueError):
            relabel(empty(3), [0, 0, 1])

    def test_applies_to_all_gates(self):
        c = Circuit(3, (cx(0, 2), z(1)))
        out = relabel(c, [2, 1, 0])
        assert out.gates == (cx(2, 0), z(1))


class TestInverse:
    def test_inverse_cancels(self, rng):
        for _ in range(5):
            drawn = random_circuit(rng, 3, 12)
            c = Circuit(3, tuple(g for g in drawn.gates if g.kind is not Kind.SX))
            u = circuit_unitary(compose(c, inverse(c)))
            np.testing.assert_allclose(u, np.eye(8), atol=1e-10)

    def test_sx_has_no_inverse_in_vocabulary(self):
        with pytest.raises(ValueError, match="SX"):
            inverse(Circuit(1, (sx(0),)))


class TestSerialization:
    def test_text_round_trip(self, rng):
        for _ in range(10):
            c = random_circuit(rng, 4, 15)
            assert from_text(to_text(c)) == c

    def test_json_round_trip(self, rng):
        for _ in range(10):
            c = random_circuit(rng, 4, 15)
            assert from_json(to_json(c)) == c

    def test_text_format_shape(self):
        c = Circuit(3, (h(0), cp(0.25, 0, 2), mcz(0, 1)))
        text = to_text(c)
        lines = text.strip().splitlines()
        assert lines[0] == "qubits 3"
        assert lines[1] == "H 0"
        assert lines[2].startswith("CP 0.25")
        assert lines[3] == "MCZ 0 1"

    def test_theta_printed_with_full_precision(self):
        theta = 0.1234567890123456789
        c = Circuit(1, (rz(theta, 0),))
        assert from_text(to_text(c)).gates[0].theta == c.gates[0].theta

    def test_missing_header_rejected(self):
        with pytest.raises(ValueError, match="header"):
            from_text("H 0\n")

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError, match="unknown gate kind"):
            from_text("qubits 1\nFOO 0\n")
