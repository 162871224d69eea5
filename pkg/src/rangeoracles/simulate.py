"""Dense statevector simulation and the measurement-free checks built on it.

States are 1-D complex128 arrays of length 2^n; basis index i encodes the
integer i (qubit 0 = least significant bit). Unitaries are (2^n, 2^n) arrays
whose column j is the circuit applied to |j>.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .circuit import Circuit

STATE_QUBIT_CAP = 20
UNITARY_QUBIT_CAP = 10


def zero_state(n: int) -> np.ndarray:
    if n < 1:
        raise ValueError("need at least one qubit")
    state = np.zeros(1 << n, dtype=np.complex128)
    state[0] = 1.0
    return state


def basis_state(n: int, k: int) -> np.ndarray:
    if not 0 <= k < (1 << n):
        raise ValueError(f"basis index {k} out of range for {n} qubits")
    state = np.zeros(1 << n, dtype=np.complex128)
    state[k] = 1.0
    return state


def uniform_superposition(n: int) -> np.ndarray:
    """The state (1/sqrt(2^n)) * sum_i |i>, every phase 0."""
    if n < 1:
        raise ValueError("need at least one qubit")
    dim = 1 << n
    return np.full(dim, 1.0 / math.sqrt(dim), dtype=np.complex128)


def apply_circuit(circuit: Circuit, state: np.ndarray) -> np.ndarray:
    """Return U_circuit . state; the input state is not modified."""
    dim = 1 << circuit.n_qubits
    if state.shape != (dim,):
        raise ValueError(
            f"state of length {state.shape} does not match {circuit.n_qubits} qubits"
        )
    if circuit.n_qubits > STATE_QUBIT_CAP:
        raise ValueError(f"state simulation capped at {STATE_QUBIT_CAP} qubits")
    amps = np.ascontiguousarray(state, dtype=np.complex128).reshape(dim, 1).copy()
    kernels.apply_flat(amps, kernels.flatten(circuit))
    return amps[:, 0]


def circuit_unitary(circuit: Circuit, cap: int = UNITARY_QUBIT_CAP) -> np.ndarray:
    """Full unitary by evolving all basis columns at once."""
    if circuit.n_qubits > cap:
        raise ValueError(f"unitary extraction capped at {cap} qubits")
    dim = 1 << circuit.n_qubits
    u = np.eye(dim, dtype=np.complex128)
    kernels.apply_flat(u, kernels.flatten(circuit))
    return u


def is_unitary(u: np.ndarray, tol: float = 1e-9) -> bool:
    dim = u.shape[0]
    return bool(np.max(np.abs(u.conj().T @ u - np.eye(dim))) <= tol)


def is_diagonal(u: np.ndarray, tol: float = 1e-9) -> bool:
    return bool(np.max(np.abs(u - np.diag(np.diagonal(u)))) <= tol)


def equal_up_to_global_phase(a: np.ndarray, b: np.ndarray, tol: float = 1e-9) -> bool:
    """True iff a == phi * b for one unit scalar phi, to elementwise tolerance.

    phi is read off the largest-magnitude entry of b.
    """
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    flat_b = b.reshape(-1)
    idx = int(np.argmax(np.abs(flat_b)))
    pivot = flat_b[idx]
    if abs(pivot) <= tol:  # b ~ 0: equal only if a ~ 0 too
        return bool(np.max(np.abs(a)) <= tol)
    phi = a.reshape(-1)[idx] / pivot
    mag = abs(phi)
    if mag == 0.0:
        return False
    phi /= mag
    return bool(np.max(np.abs(a - phi * b)) <= tol)


@dataclass(frozen=True)
class ProfileEntry:
    state: int
    magnitude: float
    phase: float  # radians in (-pi, pi], relative to the first nonzero entry


@dataclass(frozen=True)
class PhaseProfile:
    """Magnitude/phase of every basis state with magnitude above threshold."""

    n_qubits: int
    entries: tuple[ProfileEntry, ...]


def _wrap_angle(x: float) -> float:
    """Reduce to (-pi, pi]."""
    w = x - 2.0 * math.pi * round(x / (2.0 * math.pi))
    if w <= -math.pi:
        w += 2.0 * math.pi
    return w


def phase_profile(state: np.ndarray, threshold: float = 1e-12) -> PhaseProfile:
    """Per-state magnitude and phase, normalized so the first entry has phase 0."""
    mags = np.abs(state)
    nonzero = np.flatnonzero(mags > threshold)
    if len(nonzero) == 0:
        raise ValueError("zero state has no phase profile")
    n = int(round(math.log2(len(state))))
    reference = float(np.angle(state[nonzero[0]]))
    entries = tuple(
        ProfileEntry(
            int(i),
            float(mags[i]),
            _wrap_angle(float(np.angle(state[i])) - reference),
        )
        for i in nonzero
    )
    return PhaseProfile(n, entries)


def profile_to_json_dict(profile: PhaseProfile) -> dict:
    return {
        "qubits": profile.n_qubits,
        "entries": [
            {"state": e.state, "magnitude": e.magnitude, "phase": e.phase}
            for e in profile.entries
        ],
    }


def profile_table(profile: PhaseProfile) -> str:
    """Aligned text table used by the CLI."""
    width = max(5, len(str((1 << profile.n_qubits) - 1)))
    lines = [f"{'state':>{width}}  {'magnitude':>12}  {'phase':>12}"]
    for e in profile.entries:
        lines.append(f"{e.state:>{width}}  {e.magnitude:>12.9f}  {e.phase:>12.9f}")
    return "\n".join(lines) + "\n"


def unitary_to_json_dict(u: np.ndarray) -> dict:
    return {
        "dim": u.shape[0],
        "real": u.real.tolist(),
        "imag": u.imag.tolist(),
    }


def unitary_table(u: np.ndarray) -> str:
    """Compact aligned rendering of a small unitary."""
    rows = []
    for row in u:
        rows.append("  ".join(f"{z.real:+.3f}{z.imag:+.3f}j" for z in row))
    return "\n".join(rows) + "\n"


def profile_to_json(profile: PhaseProfile) -> str:
    return json.dumps(profile_to_json_dict(profile), indent=2)
