"""Name-based access to the oracle builders and their reference patterns.

Used by the CLI and the documentation cards, which both address oracles by
id string plus a parameter mapping.
"""
from __future__ import annotations

import numpy as np

from . import patterns
from .circuit import Circuit
from .oracles import (
    AdderSpec,
    LessThanSpec,
    RangeSpec,
    add_const,
    less_than,
    mcz,
    qft,
    range_oracle_a,
    range_oracle_b,
)

ORACLE_IDS = ("range-a", "range-b", "less-than", "add", "mcz", "qft")


def _require(params: dict, *names: str) -> list:
    missing = [name for name in names if params.get(name) is None]
    if missing:
        raise ValueError(f"missing parameter(s): {', '.join(missing)}")
    return [params[name] for name in names]


def _participants(params: dict) -> tuple[int, ...]:
    (n,) = _require(params, "qubits")
    raw = params.get("participants")
    if raw is None:
        return tuple(range(n))
    return tuple(int(q) for q in raw)


def build_oracle(oracle_id: str, params: dict) -> Circuit:
    """Construct the named oracle from a flat parameter mapping."""
    if oracle_id == "range-a":
        n, n1, n2 = _require(params, "qubits", "n1", "n2")
        return range_oracle_a(RangeSpec(n, n1, n2))
    if oracle_id == "range-b":
        n, n1, n2 = _require(params, "qubits", "n1", "n2")
        return range_oracle_b(RangeSpec(n, n1, n2))
    if oracle_id == "less-than":
        n, m = _require(params, "qubits", "m")
        return less_than(LessThanSpec(n, m))
    if oracle_id == "add":
        n, a = _require(params, "qubits", "a")
        return add_const(AdderSpec(n, a))
    if oracle_id == "mcz":
        (n,) = _require(params, "qubits")
        return mcz(n, _participants(params))
    if oracle_id == "qft":
        (n,) = _require(params, "qubits")
        return qft(n)
    raise ValueError(f"unknown oracle id {oracle_id!r}")


def reference_unitary(oracle_id: str, params: dict) -> np.ndarray:
    """Closed-form unitary the named oracle must implement."""
    if oracle_id == "range-a":
        n, n1, n2 = _require(params, "qubits", "n1", "n2")
        return patterns.range_a_unitary(RangeSpec(n, n1, n2))
    if oracle_id == "range-b":
        n, n1, n2 = _require(params, "qubits", "n1", "n2")
        return patterns.range_b_unitary(RangeSpec(n, n1, n2))
    if oracle_id == "less-than":
        n, m = _require(params, "qubits", "m")
        return patterns.less_than_unitary(LessThanSpec(n, m))
    if oracle_id == "add":
        n, a = _require(params, "qubits", "a")
        return patterns.add_const_unitary(AdderSpec(n, a))
    if oracle_id == "mcz":
        (n,) = _require(params, "qubits")
        return patterns.mcz_unitary(n, _participants(params))
    if oracle_id == "qft":
        (n,) = _require(params, "qubits")
        return patterns.qft_unitary(n)
    raise ValueError(f"unknown oracle id {oracle_id!r}")
