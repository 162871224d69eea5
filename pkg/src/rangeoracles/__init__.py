"""Construction, simulation, verification, depth analysis and documentation
of integer-range phase oracles and their components."""

from .circuit import (
    Circuit,
    append,
    compose,
    depth,
    empty,
    extend,
    from_json,
    from_text,
    inverse,
    relabel,
    to_json,
    to_text,
)
from .decompose import DEFAULT_BASIS, BasisSet, DecompositionError, decompose_to_basis
from .gates import Gate, Kind
from .oracles import (
    AdderSpec,
    LessThanSpec,
    RangeSpec,
    add_const,
    iqft,
    less_than,
    mcz,
    qft,
    range_oracle_a,
    range_oracle_b,
)
from .simulate import (
    PhaseProfile,
    apply_circuit,
    basis_state,
    circuit_unitary,
    equal_up_to_global_phase,
    phase_profile,
    uniform_superposition,
)
from .analysis import DepthRecord, SweepSummary, growth_check, measure_pair, sweep
from .cards import OracleDocCard, check_card, generate_card, render

__version__ = "0.1.0"
