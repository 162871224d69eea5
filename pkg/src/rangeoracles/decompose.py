"""Lowering circuits to a hardware basis gate set.

Default basis is {CX, RZ, SX, X}. Every rule is exact up to a single global
phase; connectivity is taken as all-to-all, so no routing happens here.

Decompositions:
    Z      -> RZ(pi)
    P(t)   -> RZ(t)
    H      -> RZ(pi/2) SX RZ(pi/2)
    CP(t)  -> RZ(t/2)_c RZ(t/2)_t CX RZ(-t/2)_t CX
    MCZ    -> Gray-code phase network over the participants
              (2^k - 1 RZ and 2^k - 2 CX for k participants)
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .circuit import Circuit
from .gates import Gate, Kind, cx, rz, sx


class DecompositionError(ValueError):
    """A gate kind has no rule into the requested basis."""


@dataclass(frozen=True)
class BasisSet:
    """Set of gate kinds a target executes natively."""

    kinds: frozenset[Kind]

    def __post_init__(self) -> None:
        if not self.kinds:
            raise ValueError("basis set may not be empty")
        object.__setattr__(self, "kinds", frozenset(self.kinds))

    def __contains__(self, kind: Kind) -> bool:
        return kind in self.kinds

    @classmethod
    def from_names(cls, names) -> "BasisSet":
        return cls(frozenset(Kind(name.strip()) for name in names))

    @classmethod
    def from_file(cls, path: str | Path) -> "BasisSet":
        """One kind name per line; blank lines and # comments ignored."""
        names = []
        for line in Path(path).read_text().splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                names.append(line)
        return cls.from_names(names)


DEFAULT_BASIS = BasisSet(frozenset({Kind.CX, Kind.RZ, Kind.SX, Kind.X}))


def mcz_phase_network(qubits: tuple[int, ...]) -> list[Gate]:
    """Exact ancilla-free expansion of MCZ into RZ and CX.

    Writes pi * AND(x) as a signed sum of subset parities,
    AND = 2^(1-k) * sum over nonempty S of (-1)^(|S|+1) XOR(S),
    and walks the subsets in Gray-code order grouped by largest element so
    each parity costs one CX. Equal to the MCZ diagonal up to global phase.
    """
    qs = sorted(qubits)
    k = len(qs)
    base = math.pi / (1 << (k - 1))
    gates: list[Gate] = []
    for j, target in enumerate(qs):
        # subsets T of qs[:j], each contributing a rotation on parity(T + {target})
        gates.append(rz(base, target))  # T = {}, |S| = 1
        prev = 0
        for step in range(1, 1 << j):
            gray = step ^ (step >> 1)
            changed = (gray ^ prev).bit_length() - 1
            gates.append(cx(qs[changed], target))
            size = gray.bit_count() + 1
            gates.append(rz(base if size % 2 else -base, target))
            prev = gray
        if j > 0:  # final Gray mask is the single bit j-1; one CX restores
            gates.append(cx(qs[j - 1], target))
    return gates


def _rule_z(g: Gate) -> list[Gate]:
    return [rz(math.pi, g.qubits[0])]


def _rule_p(g: Gate) -> list[Gate]:
    return [rz(g.theta, g.qubits[0])]


def _rule_h(g: Gate) -> list[Gate]:
    q = g.qubits[0]
    return [rz(math.pi / 2, q), sx(q), rz(math.pi / 2, q)]


def _rule_cp(g: Gate) -> list[Gate]:
    c, t = g.qubits
    half = g.theta / 2.0
    return [rz(half, c), rz(half, t), cx(c, t), rz(-half, t), cx(c, t)]


def _rule_mcz(g: Gate) -> list[Gate]:
    return mcz_phase_network(g.qubits)


RULES = {
    Kind.Z: _rule_z,
    Kind.P: _rule_p,
    Kind.H: _rule_h,
    Kind.CP: _rule_cp,
    Kind.MCZ: _rule_mcz,
}


def decompose_to_basis(circuit: Circuit, basis: BasisSet = DEFAULT_BASIS) -> Circuit:
    """Expand every gate into basis kinds; unitary preserved up to global phase."""
    gates = list(circuit.gates)
    changed = True
    while changed:
        changed = False
        out: list[Gate] = []
        for g in gates:
            if g.kind in basis:
                out.append(g)
            elif g.kind in RULES:
                out.extend(RULES[g.kind](g))
                changed = True
            else:
                raise DecompositionError(
                    f"no decomposition rule for {g.kind} into basis"
                )
        gates = out
    return Circuit(circuit.n_qubits, tuple(gates))
