"""Hot kernels with backend selection: compiled extension or pure NumPy.

Two operations dominate runtime: applying a gate list to a block of
statevectors and the as-soon-as-possible layer count used by the depth
sweep. Both come in a compiled (Cython) and a pure-Python flavor with
identical semantics; the compiled one is used when the extension built.
Set RANGEORACLES_PURE_PYTHON=1 to force the fallback.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .circuit import Circuit
from .gates import Kind

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built; fall back silently
    _compiled = None

if os.environ.get("RANGEORACLES_PURE_PYTHON"):
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"

# Flat gate encoding shared with the extension (keep in sync with _kernels.pyx):
# one row per gate, columns (kind, qa, qb, theta). qa is the sole operand for
# 1-qubit kinds, the control for CX/CP, and the participant bitmask for MCZ.
# qb is the CX/CP target, -1 otherwise.
KIND_CODE = {
    Kind.X: 0,
    Kind.SX: 1,
    Kind.H: 2,
    Kind.Z: 3,
    Kind.RZ: 4,
    Kind.P: 5,
    Kind.CX: 6,
    Kind.CP: 7,
    Kind.MCZ: 8,
}


@dataclass(frozen=True)
class FlatCircuit:
    """Array form of a circuit, ready for the kernels."""

    n_qubits: int
    kinds: np.ndarray  # int64 (g,)
    qa: np.ndarray  # int64 (g,)
    qb: np.ndarray  # int64 (g,)
    thetas: np.ndarray  # float64 (g,)
    masks: np.ndarray  # int64 (g,) operand bitmasks

    def __len__(self) -> int:
        return len(self.kinds)


def flatten(circuit: Circuit) -> FlatCircuit:
    g = len(circuit.gates)
    kinds = np.empty(g, dtype=np.int64)
    qa = np.empty(g, dtype=np.int64)
    qb = np.full(g, -1, dtype=np.int64)
    thetas = np.zeros(g, dtype=np.float64)
    masks = np.empty(g, dtype=np.int64)
    for i, gate in enumerate(circuit.gates):
        kinds[i] = KIND_CODE[gate.kind]
        masks[i] = gate.operand_mask
        if gate.kind is Kind.MCZ:
            qa[i] = gate.operand_mask
        elif gate.kind in (Kind.CX, Kind.CP):
            qa[i], qb[i] = gate.qubits
        else:
            qa[i] = gate.qubits[0]
        if gate.theta is not None:
            thetas[i] = gate.theta
    return FlatCircuit(circuit.n_qubits, kinds, qa, qb, thetas, masks)


# --- statevector kernel ----------------------------------------------------

_SX = np.array([[0.5 + 0.5j, 0.5 - 0.5j], [0.5 - 0.5j, 0.5 + 0.5j]])
_H = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0)


def apply_flat_py(amps: np.ndarray, flat: FlatCircuit) -> None:
    """Apply the gates of `flat` in order to `amps` (dim, batch), in place."""
    n = flat.n_qubits
    dim = amps.shape[0]
    idx = np.arange(dim)
    for i in range(len(flat)):
        code = flat.kinds[i]
        a, b, theta = int(flat.qa[i]), int(flat.qb[i]), flat.thetas[i]
        if code <= 2:  # X, SX, H: dense 1-qubit update
            u = _H if code == 2 else (_SX if code == 1 else None)
            v = amps.reshape(-1, 2, (1 << a) * amps.shape[1])
            lo = v[:, 0].copy()
            if u is None:  # X
                v[:, 0] = v[:, 1]
                v[:, 1] = lo
            else:
                v[:, 0] = u[0, 0] * lo + u[0, 1] * v[:, 1]
                v[:, 1] = u[1, 0] * lo + u[1, 1] * v[:, 1]
        elif code <= 5:  # Z, RZ, P: 1-qubit diagonal
            v = amps.reshape(-1, 2, (1 << a) * amps.shape[1])
            if code == 3:
                v[:, 1] *= -1.0
            elif code == 5:
                v[:, 1] *= np.exp(1j * theta)
            else:
                v[:, 0] *= np.exp(-0.5j * theta)
                v[:, 1] *= np.exp(0.5j * theta)
        elif code == 6:  # CX
            src = idx[(idx & (1 << a) != 0) & (idx & (1 << b) == 0)]
            dst = src | (1 << b)
            tmp = amps[src].copy()
            amps[src] = amps[dst]
            amps[dst] = tmp
        elif code == 7:  # CP
            sel = idx[(idx & (1 << a) != 0) & (idx & (1 << b) != 0)]
            amps[sel] *= np.exp(1j * theta)
        else:  # MCZ, qa holds the participant mask
            amps[(idx & a) == a] *= -1.0
    # note: the (dim, batch) -> (-1, 2, 2**q * batch) reshape works because
    # amps is C-contiguous and bit q of the row index selects the middle axis


def asap_depth_py(masks, n_qubits: int) -> int:
    """Layer count of a gate sequence given per-gate operand bitmasks."""
    if isinstance(masks, np.ndarray):
        masks = masks.tolist()
    last = [0] * n_qubits
    deepest = 0
    for mask in masks:
        layer = 0
        m = mask
        while m:
            q = (m & -m).bit_length() - 1
            if last[q] > layer:
                layer = last[q]
            m &= m - 1
        layer += 1
        m = mask
        while m:
            last[(m & -m).bit_length() - 1] = layer
            m &= m - 1
        if layer > deepest:
            deepest = layer
    return deepest


def apply_flat(amps: np.ndarray, flat: FlatCircuit) -> None:
    """Backend-dispatching gate application; `amps` is (dim, batch) complex128."""
    if _compiled is not None:
        _compiled.apply_flat(
            amps, flat.kinds, flat.qa, flat.qb, flat.thetas, flat.n_qubits
        )
    else:
        apply_flat_py(amps, flat)


def asap_depth(masks: np.ndarray, n_qubits: int) -> int:
    if _compiled is not None:
        return _compiled.asap_depth(np.ascontiguousarray(masks), n_qubits)
    return asap_depth_py(masks, n_qubits)


def backends() -> dict[str, dict]:
    """Available kernel implementations, keyed by name (for benchmarks/tests)."""
    out = {"python": {"apply_flat": apply_flat_py, "asap_depth": asap_depth_py}}
    if _compiled is not None:
        out["compiled"] = {
            "apply_flat": lambda amps, flat: _compiled.apply_flat(
                amps, flat.kinds, flat.qa, flat.qb, flat.thetas, flat.n_qubits
            ),
            "asap_depth": lambda masks, n: _compiled.asap_depth(
                np.ascontiguousarray(masks), n
            ),
        }
    return out
