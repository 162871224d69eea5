"""Gate vocabulary: kinds, operand/parameter validation, and constructors.

Qubit convention used throughout the package: basis index bit k is qubit k,
with qubit 0 the least significant bit. Integer labels of basis states
therefore read directly off the amplitude index.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class Kind(str, Enum):
    H = "H"
    X = "X"
    SX = "SX"
    Z = "Z"
    RZ = "RZ"
    P = "P"
    CX = "CX"
    CP = "CP"
    MCZ = "MCZ"

    def __str__(self) -> str:  # prints as the bare name in messages/serialization
        return self.value


# Kinds carrying a rotation angle.
PARAMETRIC = frozenset({Kind.RZ, Kind.P, Kind.CP})

# Fixed operand counts; MCZ is variadic (>= 1, all operands symmetric).
_ARITY = {
    Kind.H: 1,
    Kind.X: 1,
    Kind.SX: 1,
    Kind.Z: 1,
    Kind.RZ: 1,
    Kind.P: 1,
    Kind.CX: 2,
    Kind.CP: 2,
}


@dataclass(frozen=True)
class Gate:
    """One gate instance: kind, operand qubits, optional angle (radians)."""

    kind: Kind
    qubits: tuple[int, ...]
    theta: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        if self.kind is Kind.MCZ:
            if len(self.qubits) < 1:
                raise ValueError("MCZ needs at least one operand qubit")
        elif len(self.qubits) != _ARITY[self.kind]:
            raise ValueError(
                f"{self.kind} takes {_ARITY[self.kind]} operand(s), got {len(self.qubits)}"
            )
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"duplicate operand qubits in {self.kind}: {self.qubits}")
        if any(q < 0 for q in self.qubits):
            raise ValueError(f"negative qubit index in {self.kind}: {self.qubits}")
        if self.kind in PARAMETRIC:
            if self.theta is None:
                raise ValueError(f"{self.kind} requires an angle")
            if not math.isfinite(self.theta):
                raise ValueError(f"{self.kind} angle must be finite, got {self.theta}")
            object.__setattr__(self, "theta", float(self.theta))
        elif self.theta is not None:
            raise ValueError(f"{self.kind} takes no angle")

    @property
    def operand_mask(self) -> int:
        """Bitmask with a 1 at every operand qubit."""
        mask = 0
        for q in self.qubits:
            mask |= 1 << q
        return mask


def h(q: int) -> Gate:
    return Gate(Kind.H, (q,))


def x(q: int) -> Gate:
    return Gate(Kind.X, (q,))


def sx(q: int) -> Gate:
    return Gate(Kind.SX, (q,))


def z(q: int) -> Gate:
    return Gate(Kind.Z, (q,))


def rz(theta: float, q: int) -> Gate:
    return Gate(Kind.RZ, (q,), theta)


def p(theta: float, q: int) -> Gate:
    return Gate(Kind.P, (q,), theta)


def cx(control: int, target: int) -> Gate:
    return Gate(Kind.CX, (control, target))


def cp(theta: float, control: int, target: int) -> Gate:
    return Gate(Kind.CP, (control, target), theta)


def mcz(*qubits: int) -> Gate:
    return Gate(Kind.MCZ, tuple(qubits))
