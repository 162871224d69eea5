import math

import numpy as np
import pytest

from conftest import random_circuit
from rangeoracles.circuit import Circuit, gate_kinds
from rangeoracles.decompose import (
    DEFAULT_BASIS,
    BasisSet,
    DecompositionError,
    decompose_to_basis,
    mcz_phase_network,
)
from rangeoracles.gates import Gate, Kind, cp, cx, h, mcz, p, z
from rangeoracles.oracles import (
    AdderSpec,
    LessThanSpec,
    RangeSpec,
    add_const,
    less_than,
    qft,
    range_oracle_a,
    range_oracle_b,
)
from rangeoracles.patterns import mcz_unitary
from rangeoracles.simulate import circuit_unitary, equal_up_to_global_phase


def _only_basis(circuit, basis=DEFAULT_BASIS):
    return all(g.kind in basis for g in circuit.gates)


class TestBasisSet:
    def test_non_empty(self):
        with pytest.raises(ValueError):
            BasisSet(frozenset())

    def test_from_names(self):
        basis = BasisSet.from_names(["CX", "RZ"])
        assert Kind.CX in basis and Kind.H not in basis

    def test_from_file(self, tmp_path):
        path = tmp_path / "basis.txt"
        path.write_text("CX\nRZ  # comment\n\nSX\nX\n")
        assert BasisSet.from_file(path) == DEFAULT_BASIS


class TestSingleGateRules:
    def test_h_is_three_gates_over_rz_sx(self):
        out = decompose_to_basis(Circuit(1, (h(0),)))
        assert [g.kind for g in out.gates] == [Kind.RZ, Kind.SX, Kind.RZ]
        want = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
        assert equal_up_to_global_phase(circuit_unitary(out), want, 1e-12)

    def test_cx_already_native(self):
        c = Circuit(2, (cx(0, 1),))
        assert decompose_to_basis(c) == c

    def test_z_and_p_lower_to_rz(self):
        for gate, want in [
            (z(0), np.diag([1, -1])),
            (p(0.7, 0), np.diag([1, np.exp(0.7j)])),
        ]:
            out = decompose_to_basis(Circuit(1, (gate,)))
            assert [g.kind for g in out.gates] == [Kind.RZ]
            assert equal_up_to_global_phase(circuit_unitary(out), want, 1e-12)

    @pytest.mark.parametrize("theta", [0.1, math.pi / 2, -2.3, math.pi])
    def test_cp_expansion(self, theta):
        out = decompose_to_basis(Circuit(2, (cp(theta, 0, 1),)))
        assert _only_basis(out) and len(out.gates) == 5
        want = np.diag([1, 1, 1, np.exp(1j * theta)])
        assert equal_up_to_global_phase(circuit_unitary(out), want, 1e-12)

    def test_no_rule_into_restricted_basis(self):
        with pytest.raises(DecompositionError):
            decompose_to_basis(Circuit(1, (h(0),)), BasisSet.from_names(["CX", "RZ", "X"]))


class TestMczNetwork:
    @pytest.mark.parametrize("k", range(1, 7))
    def test_matches_predicate_up_to_global_phase(self, k):
        # oracle: diagonal built from the all-ones predicate
        out = decompose_to_basis(Circuit(k, (Gate(Kind.MCZ, tuple(range(k))),)))
        assert _only_basis(out)
        assert equal_up_to_global_phase(
            circuit_unitary(out), mcz_unitary(k, range(k)), 1e-9
        )

    @pytest.mark.parametrize("k", range(1, 7))
    def test_gate_counts(self, k):
        gates = mcz_phase_network(tuple(range(k)))
        rz_count = sum(1 for g in gates if g.kind is Kind.RZ)
        cx_count = sum(1 for g in gates if g.kind is Kind.CX)
        assert rz_count == 2**k - 1
        assert cx_count == max(2**k - 2, 0)

    def test_non_contiguous_participants(self):
        out = decompose_to_basis(Circuit(5, (Gate(Kind.MCZ, (0, 2, 4)),)))
        assert equal_up_to_global_phase(
            circuit_unitary(out), mcz_unitary(5, (0, 2, 4)), 1e-9
        )

    def test_four_participants_example(self):
        out = decompose_to_basis(Circuit(4, (Gate(Kind.MCZ, (0, 1, 2, 3)),)))
        assert _only_basis(out)
        want = np.diag([1.0] * 15 + [-1.0]).astype(complex)
        assert equal_up_to_global_phase(circuit_unitary(out), want, 1e-9)


class TestCircuitLevel:
    def test_random_circuits_preserve_unitary(self, rng):
        for _ in range(10):
            c = random_circuit(rng, 4, 12)
            out = decompose_to_basis(c)
            assert _only_basis(out)
            assert equal_up_to_global_phase(
                circuit_unitary(out), circuit_unitary(c), 1e-9
            )

    def test_every_oracle_decomposes_to_basis_only(self):
        circuits = []
        for n in range(3, 7):
            dim = 1 << n
            circuits.append(less_than(LessThanSpec(n, dim // 2 + 1)))
            circuits.append(add_const(AdderSpec(n, 3)))
            circuits.append(qft(n))
            circuits.append(range_oracle_a(RangeSpec(n, 1, dim - 2)))
            circuits.append(range_oracle_b(RangeSpec(n, 1, dim - 2)))
            circuits.append(mcz(n, range(n)))
        for c in circuits:
            assert _only_basis(decompose_to_basis(c))

    def test_oracles_preserve_unitary_up_to_phase(self):
        for n in (3, 4):
            dim = 1 << n
            for c in [
                less_than(LessThanSpec(n, 5)),
                add_const(AdderSpec(n, dim - 1)),
                qft(n),
                range_oracle_a(RangeSpec(n, 2, 5)),
                range_oracle_b(RangeSpec(n, 2, 5)),
            ]:
                assert equal_up_to_global_phase(
                    circuit_unitary(decompose_to_basis(c)), circuit_unitary(c), 1e-9
                )
