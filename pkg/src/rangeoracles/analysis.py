"""Depth comparison of the two range-oracle constructions.

For every interval [n1, n2] with 0 < n1 < n2 < 2^n - 1, both constructions
are lowered to the basis gate set and measured with the layered depth
metric. Connectivity is all-to-all throughout: no routing is applied, and
every CSV this module emits says so in a comment line.
"""
from __future__ import annotations

import json
import statistics
from dataclasses import asdict, dataclass

import numpy as np

from . import kernels
from .circuit import depth as circuit_depth
from .decompose import DEFAULT_BASIS, BasisSet, decompose_to_basis
from .oracles import (
    AdderSpec,
    LessThanSpec,
    RangeSpec,
    add_const,
    less_than,
    range_oracle_a,
    range_oracle_b,
)

CSV_COMMENT = "# connectivity: all-to-all, no routing applied"
CSV_HEADER = "n,n1,n2,depth_a,depth_b,gates_a,gates_b"

SWEEP_N_MIN = 3
SWEEP_N_CAP = 10
DEFAULT_N_MAX = 8


@dataclass(frozen=True)
class DepthRecord:
    """Post-decomposition depth and gate count of both constructions."""

    n: int
    n1: int
    n2: int
    depth_a: int
    depth_b: int
    gates_a: int
    gates_b: int


@dataclass(frozen=True)
class SweepStats:
    """Per-qubit-count aggregate over all measured intervals."""

    n: int
    intervals: int
    min_a: int
    median_a: float
    max_a: int
    min_b: int
    median_b: float
    max_b: int
    frac_b_lower: float  # fraction of intervals with depth_b < depth_a


@dataclass(frozen=True)
class SweepSummary:
    per_n: tuple[SweepStats, ...]


def measure_pair(spec: RangeSpec, basis: BasisSet = DEFAULT_BASIS) -> DepthRecord:
    """Depth/gate record for one interval; deterministic for fixed rules."""
    a = decompose_to_basis(range_oracle_a(spec), basis)
    b = decompose_to_basis(range_oracle_b(spec), basis)
    return DepthRecord(
        n=spec.n,
        n1=spec.n1,
        n2=spec.n2,
        depth_a=circuit_depth(a),
        depth_b=circuit_depth(b),
        gates_a=len(a.gates),
        gates_b=len(b.gates),
    )


def sweep_intervals(n: int) -> list[tuple[int, int]]:
    """All (n1, n2) with 0 < n1 < n2 < 2^n - 1, in lexicographic order."""
    top = (1 << n) - 1
    return [(n1, n2) for n1 in range(1, top - 1) for n2 in range(n1 + 1, top)]


def _component_masks(n: int, basis: BasisSet) -> tuple[dict, dict]:
    """Operand-mask arrays of the decomposed threshold/adder components.

    The two constructions only ever concatenate these, so caching the
    decomposed pieces once per qubit count keeps the sweep linear in the
    total gate volume.
    """
    lt = {}
    for m in range(0, (1 << n) + 1):
        c = decompose_to_basis(less_than(LessThanSpec(n, m)), basis)
        lt[m] = kernels.flatten(c).masks
    add = {}
    for a in range(0, 1 << n):
        c = decompose_to_basis(add_const(AdderSpec(n, a)), basis)
        add[a] = kernels.flatten(c).masks
    return lt, add


def sweep(
    n_min: int = SWEEP_N_MIN,
    n_max: int = DEFAULT_N_MAX,
    basis: BasisSet = DEFAULT_BASIS,
) -> tuple[list[DepthRecord], SweepSummary]:
    """One record per valid interval for every qubit count in [n_min, n_max]."""
    if not SWEEP_N_MIN <= n_min <= n_max <= SWEEP_N_CAP:
        raise ValueError(
            f"sweep bounds must satisfy {SWEEP_N_MIN} <= n_min <= n_max <= {SWEEP_N_CAP}"
        )
    records: list[DepthRecord] = []
    for n in range(n_min, n_max + 1):
        lt, add = _component_masks(n, basis)
        for n1, n2 in sweep_intervals(n):
            masks_a = np.concatenate((lt[n1], lt[n2 + 1]))
            masks_b = np.concatenate((lt[n2 - n1 + 1], add[n1]))
            records.append(
                DepthRecord(
                    n=n,
                    n1=n1,
                    n2=n2,
                    depth_a=kernels.asap_depth(masks_a, n),
                    depth_b=kernels.asap_depth(masks_b, n),
                    gates_a=len(masks_a),
                    gates_b=len(masks_b),
                )
            )
    records.sort(key=lambda r: (r.n, r.n1, r.n2))
    return records, summarize(records)


def summarize(records: list[DepthRecord]) -> SweepSummary:
    per_n = []
    for n in sorted({r.n for r in records}):
        group = [r for r in records if r.n == n]
        depths_a = [r.depth_a for r in group]
        depths_b = [r.depth_b for r in group]
        lower = sum(1 for r in group if r.depth_b < r.depth_a)
        per_n.append(
            SweepStats(
                n=n,
                intervals=len(group),
                min_a=min(depths_a),
                median_a=float(statistics.median(depths_a)),
                max_a=max(depths_a),
                min_b=min(depths_b),
                median_b=float(statistics.median(depths_b)),
                max_b=max(depths_b),
                frac_b_lower=lower / len(group),
            )
        )
    return SweepSummary(per_n=tuple(per_n))


@dataclass(frozen=True)
class GrowthReport:
    """Max depth per qubit count and consecutive-n growth ratios."""

    max_depth_a: dict[int, int]
    max_depth_b: dict[int, int]
    ratios_a: dict[int, float]  # keyed by the larger n
    ratios_b: dict[int, float]
    threshold: float
    flagged: bool


def growth_check(records: list[DepthRecord], threshold: float = 3.0) -> GrowthReport:
    """Flag exponential blowup: any depth(n+1)/depth(n) above the threshold."""
    ns = sorted({r.n for r in records})
    if len(ns) < 4 or ns != list(range(ns[0], ns[0] + len(ns))):
        raise ValueError("growth check needs records for >= 4 consecutive qubit counts")
    max_a = {n: max(r.depth_a for r in records if r.n == n) for n in ns}
    max_b = {n: max(r.depth_b for r in records if r.n == n) for n in ns}
    ratios_a = {n: max_a[n] / max_a[n - 1] for n in ns[1:]}
    ratios_b = {n: max_b[n] / max_b[n - 1] for n in ns[1:]}
    worst = max(list(ratios_a.values()) + list(ratios_b.values()))
    return GrowthReport(
        max_depth_a=max_a,
        max_depth_b=max_b,
        ratios_a=ratios_a,
        ratios_b=ratios_b,
        threshold=threshold,
        flagged=worst > threshold,
    )


def records_to_csv(records: list[DepthRecord]) -> str:
    lines = [CSV_COMMENT, CSV_HEADER]
    for r in sorted(records, key=lambda r: (r.n, r.n1, r.n2)):
        lines.append(
            f"{r.n},{r.n1},{r.n2},{r.depth_a},{r.depth_b},{r.gates_a},{r.gates_b}"
        )
    return "\n".join(lines) + "\n"


def records_from_csv(text: str) -> list[DepthRecord]:
    records = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#") or line.startswith("n,"):
            continue
        n, n1, n2, da, db, ga, gb = (int(v) for v in line.split(","))
        records.append(DepthRecord(n, n1, n2, da, db, ga, gb))
    return records


def sweep_to_json_dict(records: list[DepthRecord], summary: SweepSummary) -> dict:
    return {
        "connectivity": "all-to-all (no routing applied)",
        "records": [asdict(r) for r in records],
        "summary": [asdict(s) for s in summary.per_n],
    }


def sweep_to_json(records: list[DepthRecord], summary: SweepSummary) -> str:
    return json.dumps(sweep_to_json_dict(records, summary), indent=2)
