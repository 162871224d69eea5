"""Closed-form reference unitaries built directly from the definitions.

These are written from the target semantics (predicates, permutations, the
DFT formula), independently of the circuit builders, so comparing a
simulated builder against its pattern is a genuine two-route check.
"""
from __future__ import annotations

import numpy as np

from .oracles import AdderSpec, LessThanSpec, RangeSpec


def less_than_unitary(spec: LessThanSpec) -> np.ndarray:
    dim = 1 << spec.n
    signs = np.where(np.arange(dim) < spec.m, -1.0, 1.0)
    return np.diag(signs).astype(np.complex128)


def mcz_unitary(n: int, participants) -> np.ndarray:
    dim = 1 << n
    mask = 0
    for q in participants:
        mask |= 1 << q
    idx = np.arange(dim)
    signs = np.where((idx & mask) == mask, -1.0, 1.0)
    return np.diag(signs).astype(np.complex128)


def add_const_unitary(spec: AdderSpec) -> np.ndarray:
    dim = 1 << spec.n
    u = np.zeros((dim, dim), dtype=np.complex128)
    for col in range(dim):
        u[(col + spec.a) % dim, col] = 1.0
    return u


def qft_unitary(n: int) -> np.ndarray:
    dim = 1 << n
    grid = np.outer(np.arange(dim), np.arange(dim))
    return np.exp(2j * np.pi * grid / dim) / np.sqrt(dim)


def range_a_unitary(spec: RangeSpec) -> np.ndarray:
    """Diagonal +-1 with -1 exactly on indices in [n1, n2]."""
    idx = np.arange(1 << spec.n)
    signs = np.where((idx >= spec.n1) & (idx <= spec.n2), -1.0, 1.0)
    return np.diag(signs).astype(np.complex128)


def range_b_unitary(spec: RangeSpec) -> np.ndarray:
    """One nonzero per column: column x maps to row (x+n1) mod N,
    with value -1 iff x < n2-n1+1."""
    dim = 1 << spec.n
    length = spec.n2 - spec.n1 + 1
    u = np.zeros((dim, dim), dtype=np.complex128)
    for col in range(dim):
        u[(col + spec.n1) % dim, col] = -1.0 if col < length else 1.0
    return u
