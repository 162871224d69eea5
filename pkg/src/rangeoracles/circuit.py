"""Immutable circuits: composition, layered depth, relabeling, serialization.

Circuits are values. Every operation returns a new circuit and never mutates
its inputs, so circuits can be shared freely across threads.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .gates import PARAMETRIC, Gate, Kind


@dataclass(frozen=True)
class Circuit:
    """Ordered gate sequence over a fixed qubit count."""

    n_qubits: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.n_qubits < 1:
            raise ValueError(f"n_qubits must be >= 1, got {self.n_qubits}")
        object.__setattr__(self, "gates", tuple(self.gates))
        for gate in self.gates:
            _check_fits(gate, self.n_qubits)

    def __len__(self) -> int:
        return len(self.gates)


def _check_fits(gate: Gate, n_qubits: int) -> None:
    for q in gate.qubits:
        if q >= n_qubits:
            raise ValueError(
                f"{gate.kind} operand q{q} out of range for {n_qubits}-qubit circuit"
            )


def empty(n_qubits: int) -> Circuit:
    return Circuit(n_qubits)


def append(circuit: Circuit, gate: Gate) -> Circuit:
    """Return a copy of `circuit` with `gate` appended."""
    _check_fits(gate, circuit.n_qubits)
    return Circuit(circuit.n_qubits, circuit.gates + (gate,))


def extend(circuit: Circuit, gates: Iterable[Gate]) -> Circuit:
    """Return a copy of `circuit` with all `gates` appended in order."""
    added = tuple(gates)
    for gate in added:
        _check_fits(gate, circuit.n_qubits)
    return Circuit(circuit.n_qubits, circuit.gates + added)


def compose(first: Circuit, second: Circuit) -> Circuit:
    """Gates of `first` followed by gates of `second`.

    The unitary of the result is U_second · U_first.
    """
    if first.n_qubits != second.n_qubits:
        raise ValueError(
            f"cannot compose circuits over {first.n_qubits} and {second.n_qubits} qubits"
        )
    return Circuit(first.n_qubits, first.gates + second.gates)


def depth(circuit: Circuit) -> int:
    """Number of layers under greedy as-soon-as-possible scheduling.

    Scanning gates in order, each gate lands in layer
    1 + max(layer of the latest earlier gate sharing an operand qubit),
    or layer 1 if its qubits are untouched so far. Empty circuit -> 0.
    """
    last = [0] * circuit.n_qubits
    deepest = 0
    for gate in circuit.gates:
        layer = 1 + max(last[q] for q in gate.qubits)
        for q in gate.qubits:
            last[q] = layer
        if layer > deepest:
            deepest = layer
    return deepest


def relabel(circuit: Circuit, permutation: Sequence[int]) -> Circuit:
    """Apply a qubit permutation consistently to every gate.

    `permutation[old]` is the new index of qubit `old`; it must be a
    permutation of range(n_qubits).
    """
    if sorted(permutation) != list(range(circuit.n_qubits)):
        raise ValueError("permutation must rearrange exactly range(n_qubits)")
    gates = tuple(
        Gate(g.kind, tuple(permutation[q] for q in g.qubits), g.theta)
        for g in circuit.gates
    )
    return Circuit(circuit.n_qubits, gates)


_INVERSE_SELF = frozenset({Kind.H, Kind.X, Kind.Z, Kind.CX, Kind.MCZ})


def inverse(circuit: Circuit) -> Circuit:
    """Exact inverse: reversed gate order with negated angles.

    Only defined for kinds whose inverse stays in the gate vocabulary
    (everything except SX).
    """
    gates = []
    for g in reversed(circuit.gates):
        if g.kind in _INVERSE_SELF:
            gates.append(g)
        elif g.kind in PARAMETRIC:
            gates.append(Gate(g.kind, g.qubits, -g.theta))
        else:
            raise ValueError(f"no in-vocabulary inverse for {g.kind}")
    return Circuit(circuit.n_qubits, tuple(gates))


def gate_kinds(circuit: Circuit) -> frozenset[Kind]:
    return frozenset(g.kind for g in circuit.gates)


# --- serialization ---------------------------------------------------------
#
# Text format: header line `qubits N`, then one gate per line,
# `KIND [theta] q_i q_j ...` with theta printed to 17 significant digits
# (enough for a lossless float64 round-trip).


def to_text(circuit: Circuit) -> str:
    lines = [f"qubits {circuit.n_qubits}"]
    for g in circuit.gates:
        parts = [g.kind.value]
        if g.kind in PARAMETRIC:
            parts.append(f"{g.theta:.17g}")
        parts.extend(str(q) for q in g.qubits)
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Circuit:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("qubits"):
        raise ValueError("circuit text must start with a `qubits N` header")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"malformed header: {lines[0]!r}")
    n_qubits = int(header[1])
    gates = []
    for ln in lines[1:]:
        tokens = ln.split()
        try:
            kind = Kind(tokens[0])
        except ValueError:
            raise ValueError(f"unknown gate kind {tokens[0]!r}") from None
        if kind in PARAMETRIC:
            theta = float(tokens[1])
            qubits = tuple(int(t) for t in tokens[2:])
            gates.append(Gate(kind, qubits, theta))
        else:
            gates.append(Gate(kind, tuple(int(t) for t in tokens[1:])))
    return Circuit(n_qubits, tuple(gates))


def to_json_dict(circuit: Circuit) -> dict:
    gates = []
    for g in circuit.gates:
        entry: dict = {"kind": g.kind.value, "qubits": list(g.qubits)}
        if g.kind in PARAMETRIC:
            entry["theta"] = g.theta
        gates.append(entry)
    return {"qubits": circuit.n_qubits, "gates": gates}


def from_json_dict(data: dict) -> Circuit:
    gates = tuple(
        Gate(Kind(entry["kind"]), tuple(entry["qubits"]), entry.get("theta"))
        for entry in data["gates"]
    )
    return Circuit(int(data["qubits"]), gates)


def to_json(circuit: Circuit) -> str:
    return json.dumps(to_json_dict(circuit), indent=2)


def from_json(text: str) -> Circuit:
    return from_json_dict(json.loads(text))
