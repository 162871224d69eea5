"""Machine-checkable documentation cards for the oracle builders.

A card records what a function-level docstring cannot enforce: the black-box
function, the constituent oracles, which parameters are consumed when the
circuit is built versus when it is applied, the required input state, the
guaranteed output state, and measured circuit properties. Cards are
generated from the builders and re-verified against simulation, so they
cannot silently drift from the code.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from importlib import resources

import jsonschema
import numpy as np

from . import registry
from .circuit import depth as circuit_depth
from .circuit import gate_kinds
from .decompose import DEFAULT_BASIS, decompose_to_basis
from .simulate import (
    apply_circuit,
    basis_state,
    circuit_unitary,
    is_diagonal,
    uniform_superposition,
)

CHECK_QUBIT_CAP = 6
_DEPTH_SUMMARY_SPAN = 3  # card n plus the next sizes, capped at 8 qubits
_DEPTH_SUMMARY_MAX_N = 8


@dataclass(frozen=True)
class Component:
    oracle_id: str
    params: dict


@dataclass(frozen=True)
class Preconditions:
    input_state: str  # "any" | "uniform"
    description: str


@dataclass(frozen=True)
class DepthEntry:
    qubits: int
    depth: int


@dataclass(frozen=True)
class CircuitProperties:
    gate_set: tuple[str, ...]  # measured on the decomposed circuit, not declared
    connectivity: str
    depth_summary: tuple[DepthEntry, ...]


@dataclass(frozen=True)
class OracleDocCard:
    name: str
    oracle_id: str
    black_box_function: str
    components: tuple[Component, ...]
    builder_params: dict
    oracle_params: dict
    preconditions: Preconditions
    postconditions: str
    circuit_properties: CircuitProperties
    notes: str = ""


@dataclass(frozen=True)
class CheckResult:
    claim: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class CheckReport:
    results: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


_RANGE_BLACK_BOX = (
    "f(x) = -1 if n1 <= x <= n2 else +1: flips the sign (pi phase) of every "
    "basis state whose integer label lies in [{n1}, {n2}]"
)

_ORACLE_PARAMS = {
    "target_qubits": (
        "which register qubits the finished circuit is applied to; chosen at "
        "application time and irrelevant to construction"
    )
}


def _component_list(oracle_id: str, params: dict) -> tuple[Component, ...]:
    n = params["qubits"]
    if oracle_id == "range-a":
        return (
            Component("less-than", {"qubits": n, "m": params["n2"] + 1}),
            Component("less-than", {"qubits": n, "m": params["n1"]}),
        )
    if oracle_id == "range-b":
        length = params["n2"] - params["n1"] + 1
        return (
            Component("less-than", {"qubits": n, "m": length}),
            Component("add", {"qubits": n, "a": params["n1"]}),
        )
    if oracle_id == "less-than":
        comps = []
        m = params["m"]
        if 0 < m < (1 << n):
            for b in reversed(range(n)):
                if (m >> b) & 1:
                    comps.append(
                        Component("mcz", {"qubits": n, "participants": list(range(b, n))})
                    )
        return tuple(comps)
    if oracle_id == "add":
        return (Component("qft", {"qubits": n}),)
    return ()


def _scaled_params(oracle_id: str, params: dict, n: int) -> dict:
    scaled = dict(params)
    scaled["qubits"] = n
    if oracle_id == "mcz" and "participants" not in params:
        # keep the original participant set when the register grows
        scaled["participants"] = list(range(params["qubits"]))
    return scaled


def _depth_at(oracle_id: str, params: dict, basis=DEFAULT_BASIS) -> int:
    return circuit_depth(decompose_to_basis(registry.build_oracle(oracle_id, params), basis))


def _depth_summary(oracle_id: str, params: dict, sweep_data=None) -> tuple[DepthEntry, ...]:
    base = params["qubits"]
    entries = []
    for n in range(base, min(base + _DEPTH_SUMMARY_SPAN, _DEPTH_SUMMARY_MAX_N + 1)):
        scaled = _scaled_params(oracle_id, params, n)
        from_sweep = None
        if sweep_data is not None and oracle_id in ("range-a", "range-b"):
            for record in sweep_data:
                if (record.n, record.n1, record.n2) == (n, scaled["n1"], scaled["n2"]):
                    from_sweep = record.depth_a if oracle_id == "range-a" else record.depth_b
                    break
        entries.append(DepthEntry(n, from_sweep if from_sweep is not None else _depth_at(oracle_id, scaled)))
    return tuple(entries)


def generate_card(oracle_id: str, params: dict, sweep_data=None) -> OracleDocCard:
    """Build the documentation card for one configured oracle.

    `sweep_data` (a list of depth records) is optional; matching entries are
    reused for the depth summary so the card agrees with an emitted CSV.
    """
    if oracle_id not in registry.ORACLE_IDS:
        raise ValueError(f"unknown oracle id {oracle_id!r}")
    params = dict(params)
    circuit = registry.build_oracle(oracle_id, params)  # validates params early
    decomposed = decompose_to_basis(circuit, DEFAULT_BASIS)

    if oracle_id in ("range-a", "range-b"):
        black_box = _RANGE_BLACK_BOX.format(n1=params["n1"], n2=params["n2"])
        postconditions = (
            "basis states in [{n1}, {n2}] carry a pi phase; every other "
            "amplitude of the input is untouched".format(**params)
        )
    elif oracle_id == "less-than":
        black_box = (
            "f(x) = -1 if x < {m} else +1: flips the sign of every basis state "
            "below the threshold".format(**params)
        )
        postconditions = (
            "basis states x < {m} carry a pi phase; magnitudes and all other "
            "phases unchanged".format(**params)
        )
    elif oracle_id == "add":
        black_box = "x -> (x + {a}) mod 2^{qubits} on basis-state labels".format(**params)
        postconditions = (
            "a displacement on any given input state: |x> maps to "
            "|(x + {a}) mod 2^{qubits}>, and the phases of the displaced "
            "amplitudes are maintained".format(**params)
        )
    elif oracle_id == "mcz":
        participants = list(registry._participants(params))
        params.setdefault("participants", participants)
        black_box = (
            f"f(x) = -1 if all participant bits {participants} of x are 1, else +1"
        )
        postconditions = (
            "a pi phase exactly on basis states whose participant bits are all 1; "
            "everything else unchanged"
        )
    else:  # qft
        black_box = "discrete Fourier transform of the amplitude vector"
        postconditions = (
            "|x> -> (1/sqrt(N)) sum_y exp(2 pi i x y / N) |y>; amplitudes become "
            "the DFT of the input amplitudes"
        )

    if oracle_id == "range-b":
        preconditions = Preconditions(
            "uniform",
            "a full superposed input state without relative phases, "
            "(1/sqrt(N)) sum_i |i>; on any other input the marked block is "
            "displaced instead of marked in place",
        )
    elif oracle_id in ("add", "qft"):
        preconditions = Preconditions(
            "any",
            "any input state; the oracle rearranges amplitudes rather than "
            "marking in place, so downstream code must track the mapping",
        )
    else:
        preconditions = Preconditions(
            "any",
            "any input state; the oracle is diagonal and marks in place "
            "regardless of amplitudes",
        )

    properties = CircuitProperties(
        gate_set=tuple(sorted(k.value for k in gate_kinds(decomposed))),
        connectivity="all-to-all (no routing assumed or applied)",
        depth_summary=_depth_summary(oracle_id, params, sweep_data),
    )
    builder_params = {k: v for k, v in params.items() if v is not None}
    return OracleDocCard(
        name=f"{oracle_id} oracle",
        oracle_id=oracle_id,
        black_box_function=black_box,
        components=_component_list(oracle_id, params),
        builder_params=builder_params,
        oracle_params=dict(_ORACLE_PARAMS),
        preconditions=preconditions,
        postconditions=postconditions,
        circuit_properties=properties,
        notes="",
    )


def _expected_output(card: OracleDocCard, state: np.ndarray) -> np.ndarray:
    """Output state the card's postcondition promises for `state`.

    Range cards promise in-place marking, so both implementations are held
    to the diagonal range pattern here; that is exactly what makes a wrong
    precondition detectable.
    """
    params = card.builder_params
    if card.oracle_id in ("range-a", "range-b"):
        reference = registry.reference_unitary("range-a", params)
    else:
        reference = registry.reference_unitary(card.oracle_id, params)
    return reference @ state


def check_card(card: OracleDocCard, tol: float = 1e-9) -> CheckReport:
    """Re-verify every checkable claim of a card against simulation."""
    n = card.builder_params["qubits"]
    if n > CHECK_QUBIT_CAP:
        raise ValueError(f"card checking capped at {CHECK_QUBIT_CAP} qubits")
    results = []

    try:
        circuit = registry.build_oracle(card.oracle_id, card.builder_params)
    except ValueError as exc:
        return CheckReport((CheckResult("buildable", False, str(exc)),))
    results.append(CheckResult("buildable", True))

    for comp in card.components:
        try:
            registry.build_oracle(comp.oracle_id, comp.params)
            results.append(CheckResult(f"component:{comp.oracle_id}", True))
        except ValueError as exc:
            results.append(CheckResult(f"component:{comp.oracle_id}", False, str(exc)))

    # postcondition on the documented precondition inputs
    inputs = [("uniform", uniform_superposition(n))]
    if card.preconditions.input_state == "any":
        inputs.extend(
            (f"basis:{k}", basis_state(n, k)) for k in range(1 << n)
        )
        rng = np.random.default_rng(20240809)
        random_state = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
        random_state /= np.linalg.norm(random_state)
        inputs.append(("random", random_state))
    postcondition_ok = True
    detail = ""
    for label, state in inputs:
        produced = apply_circuit(circuit, state)
        expected = _expected_output(card, state)
        err = float(np.max(np.abs(produced - expected)))
        if err > tol:
            postcondition_ok = False
            mismatch = int(np.argmax(np.abs(produced - expected)))
            detail = (
                f"input {label}: amplitude of |{mismatch}> is "
                f"{produced[mismatch]:.6f}, postcondition promises "
                f"{expected[mismatch]:.6f} (max error {err:.3e})"
            )
            break
    results.append(CheckResult("postcondition", postcondition_ok, detail))

    unitary = circuit_unitary(circuit)
    diagonal = is_diagonal(unitary, tol)
    precondition_ok = diagonal or bool(card.preconditions.description.strip())
    results.append(
        CheckResult(
            "precondition-documented",
            precondition_ok,
            "" if precondition_ok else "non-diagonal oracle with empty precondition",
        )
    )

    for entry in card.circuit_properties.depth_summary:
        scaled = _scaled_params(card.oracle_id, card.builder_params, entry.qubits)
        measured = _depth_at(card.oracle_id, scaled)
        ok = measured == entry.depth
        results.append(
            CheckResult(
                f"depth:n={entry.qubits}",
                ok,
                "" if ok else f"card says {entry.depth}, measured {measured}",
            )
        )

    decomposed = decompose_to_basis(circuit, DEFAULT_BASIS)
    measured_set = tuple(sorted(k.value for k in gate_kinds(decomposed)))
    ok = measured_set == tuple(card.circuit_properties.gate_set)
    results.append(
        CheckResult(
            "gate-set",
            ok,
            "" if ok else f"card says {card.circuit_properties.gate_set}, measured {measured_set}",
        )
    )
    return CheckReport(tuple(results))


# --- serialization ---------------------------------------------------------


def _load_schema() -> dict:
    text = resources.files("rangeoracles").joinpath("doccard.schema.json").read_text()
    return json.loads(text)


def card_to_dict(card: OracleDocCard) -> dict:
    return asdict(card)


def card_from_dict(data: dict) -> OracleDocCard:
    """Strict parse: the published schema rejects unknown or missing fields."""
    jsonschema.validate(data, _load_schema())
    properties = data["circuit_properties"]
    return OracleDocCard(
        name=data["name"],
        oracle_id=data["oracle_id"],
        black_box_function=data["black_box_function"],
        components=tuple(
            Component(c["oracle_id"], dict(c["params"])) for c in data["components"]
        ),
        builder_params=dict(data["builder_params"]),
        oracle_params=dict(data["oracle_params"]),
        preconditions=Preconditions(**data["preconditions"]),
        postconditions=data["postconditions"],
        circuit_properties=CircuitProperties(
            gate_set=tuple(properties["gate_set"]),
            connectivity=properties["connectivity"],
            depth_summary=tuple(
                DepthEntry(e["qubits"], e["depth"]) for e in properties["depth_summary"]
            ),
        ),
        notes=data["notes"],
    )


def render(card: OracleDocCard, format: str = "markdown") -> str:
    """Deterministic rendering; json round-trips to an equal card."""
    if format == "json":
        return json.dumps(card_to_dict(card), indent=2, sort_keys=True) + "\n"
    if format != "markdown":
        raise ValueError(f"unknown format {format!r}")
    lines = [f"# {card.name}", ""]
    lines += ["## Black Box", "", card.black_box_function, ""]
    lines += ["## Components", ""]
    if card.components:
        for comp in card.components:
            args = ", ".join(f"{k}={v}" for k, v in sorted(comp.params.items()))
            lines.append(f"- {comp.oracle_id}({args})")
    else:
        lines.append("- none (primitive)")
    lines += ["", "## Parameters", "", "Builder parameters (consumed when the circuit is constructed):", ""]
    for k, v in sorted(card.builder_params.items()):
        lines.append(f"- {k} = {v}")
    lines += ["", "Oracle parameters (aspects of applying the finished circuit):", ""]
    for k, v in sorted(card.oracle_params.items()):
        lines.append(f"- {k}: {v}")
    lines += ["", "## Preconditions", "", f"Input state: {card.preconditions.input_state}", "", card.preconditions.description, ""]
    lines += ["## Postconditions", "", card.postconditions, ""]
    lines += ["## Circuit Properties", ""]
    lines.append(f"- gate set: {', '.join(card.circuit_properties.gate_set)}")
    lines.append(f"- connectivity: {card.circuit_properties.connectivity}")
    lines.append("- depth by register size:")
    for entry in card.circuit_properties.depth_summary:
        lines.append(f"    - {entry.qubits} qubits: depth {entry.depth}")
    if card.notes:
        lines += ["", "## Notes", "", card.notes]
    return "\n".join(lines) + "\n"
