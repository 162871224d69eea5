import numpy as np
import pytest

from rangeoracles.circuit import Circuit
from rangeoracles.gates import Gate, Kind

ALL_KINDS = (
    Kind.H,
    Kind.X,
    Kind.SX,
    Kind.Z,
    Kind.RZ,
    Kind.P,
    Kind.CX,
    Kind.CP,
    Kind.MCZ,
)


def random_circuit(rng: np.random.Generator, n: int, length: int) -> Circuit:
    """Seeded random circuit drawing from every gate kind."""
    gates = []
    for _ in range(length):
        kind = ALL_KINDS[rng.integers(len(ALL_KINDS))]
        if kind is Kind.MCZ:
            k = int(rng.integers(1, n + 1))
            qubits = tuple(sorted(rng.choice(n, size=k, replace=False).tolist()))
            gates.append(Gate(kind, qubits))
        elif kind in (Kind.CX, Kind.CP):
            a, b = rng.choice(n, size=2, replace=False).tolist()
            theta = float(rng.uniform(-np.pi, np.pi)) if kind is Kind.CP else None
            gates.append(Gate(kind, (a, b), theta))
        else:
            q = int(rng.integers(n))
            theta = (
                float(rng.uniform(-np.pi, np.pi))
                if kind in (Kind.RZ, Kind.P)
                else None
            )
            gates.append(Gate(kind, (q,), theta))
    return Circuit(n, tuple(gates))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240809)
