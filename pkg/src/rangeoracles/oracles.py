"""Builders for the phase oracles and their arithmetic components.

All builders are pure functions returning circuits; the values baked into a
circuit here (thresholds, range bounds, addends) are construction-time
parameters, not inputs of the finished oracle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .circuit import Circuit, compose, inverse
from .gates import Gate, Kind, cp, cx, h, p, x, z


@dataclass(frozen=True)
class RangeSpec:
    """Closed integer range [n1, n2] over an n-qubit register."""

    n: int
    n1: int
    n2: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("need at least one qubit")
        if not 0 <= self.n1 <= self.n2 <= (1 << self.n) - 1:
            raise ValueError(
                f"range [{self.n1}, {self.n2}] invalid for {self.n} qubits"
            )


@dataclass(frozen=True)
class LessThanSpec:
    """Threshold m for marking states x < m; m may reach 2^n (mark all)."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("need at least one qubit")
        if not 0 <= self.m <= (1 << self.n):
            raise ValueError(f"threshold {self.m} out of [0, 2^{self.n}]")


@dataclass(frozen=True)
class AdderSpec:
    """Constant addend, reduced modulo 2^n at construction."""

    n: int
    a: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("need at least one qubit")
        object.__setattr__(self, "a", int(self.a) % (1 << self.n))


def mcz(n: int, participants) -> Circuit:
    """Phase flip on basis states where every participant bit is 1."""
    qs = tuple(sorted(int(q) for q in participants))
    if not qs:
        raise ValueError("mcz needs at least one participant")
    if qs[-1] >= n:
        raise ValueError(f"participant q{qs[-1]} out of range for {n} qubits")
    return Circuit(n, (Gate(Kind.MCZ, qs),))


def less_than(spec: LessThanSpec) -> Circuit:
    """Diagonal oracle with -1 exactly on states x < m.

    One multi-controlled-Z pattern per set bit b of m: participants are the
    qubits above b plus b itself, X-conjugated wherever the pattern expects
    a 0 (the 0 bits of m above b, and b itself). m = 0 is the empty circuit;
    m = 2^n is a global -1 realized as Z X Z X on qubit 0.
    """
    n, m = spec.n, spec.m
    if m == 0:
        return Circuit(n)
    if m == 1 << n:
        return Circuit(n, (z(0), x(0), z(0), x(0)))
    gates: list[Gate] = []
    for b in reversed(range(n)):
        if not (m >> b) & 1:
            continue
        flips = [q for q in range(b + 1, n) if not (m >> q) & 1]
        flips.append(b)
        participants = tuple(range(b, n))
        gates.extend(x(q) for q in flips)
        gates.append(Gate(Kind.MCZ, participants))
        gates.extend(x(q) for q in flips)
    return Circuit(n, tuple(gates))


def _qft_cascade(n: int) -> list[Gate]:
    """H/CP cascade of the Fourier transform, without the final reversal.

    After the cascade, qubit j carries the phase 2*pi*x / 2^(j+1), i.e. the
    component the reversed qubit n-1-j of the textbook transform expects.
    """
    gates: list[Gate] = []
    for j in reversed(range(n)):
        gates.append(h(j))
        for k in reversed(range(j)):
            gates.append(cp(math.pi / (1 << (j - k)), k, j))
    return gates


def qft(n: int) -> Circuit:
    """Textbook DFT: |x> -> (1/sqrt(N)) sum_y exp(2*pi*i*x*y/N) |y>."""
    if n < 1:
        raise ValueError("need at least one qubit")
    gates = _qft_cascade(n)
    for j in range(n // 2):  # qubit reversal as three CX each
        a, b = j, n - 1 - j
        gates.extend([cx(a, b), cx(b, a), cx(a, b)])
    return Circuit(n, tuple(gates))


def iqft(n: int) -> Circuit:
    """Exact inverse of qft(n)."""
    return inverse(qft(n))


def add_const(spec: AdderSpec) -> Circuit:
    """|x> -> |(x + a) mod 2^n>, preserving relative phases of any input.

    Fourier-basis constant addition: cascade in, one phase rotation per
    qubit encoding the addend, cascade out. The qubit reversal cancels
    between the two transforms, so it is skipped on both sides; rotations
    with angle 0 mod 2*pi are dropped.
    """
    n, a = spec.n, spec.a
    if a == 0:
        return Circuit(n)
    gates = _qft_cascade(n)
    for j in range(n):
        rem = a % (1 << (j + 1))
        if rem:
            gates.append(p(2.0 * math.pi * rem / (1 << (j + 1)), j))
    gates.extend(inverse(Circuit(n, tuple(_qft_cascade(n)))).gates)
    return Circuit(n, tuple(gates))


def range_oracle_a(spec: RangeSpec) -> Circuit:
    """Range marker from two threshold oracles: less-than n1, less-than n2+1.

    States below n1 are marked twice and return to phase 0, leaving -1
    exactly on [n1, n2]. Diagonal, so it works on any input state and the
    two thresholds commute.
    """
    lo = less_than(LessThanSpec(spec.n, spec.n1))
    hi = less_than(LessThanSpec(spec.n, spec.n2 + 1))
    return compose(lo, hi)


def range_oracle_b(spec: RangeSpec) -> Circuit:
    """Range marker from one threshold oracle and a displacement.

    Marks x < n2-n1+1, then adds n1 so the marked block lands on [n1, n2].
    The order is fixed. Not diagonal: the range semantics hold only on a
    fully superposed input without relative phases; on other inputs it
    displaces amplitudes instead of marking in place.
    """
    marked = less_than(LessThanSpec(spec.n, spec.n2 - spec.n1 + 1))
    shift = add_const(AdderSpec(spec.n, spec.n1))
    return compose(marked, shift)
