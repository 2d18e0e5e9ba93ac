"""
Domination sequences: footprint semantics, exact solvers, zero forcing,
regular-graph bounds and proof-guided constructions.
"""

from grundylab.domination.bounds import (
    BoundKind, BoundSpec, grundy_bound_spec, grundy_regular_lower_bound,
    zero_forcing_bound_spec, zero_forcing_regular_upper_bound, zgrundy_bound_spec,
    zgrundy_regular_lower_bound,
)
from grundylab.domination.forcing import (
    ForcingState, check_history, closure_mask, forcing_closure, is_zero_forcing_set,
)
from grundylab.domination.heuristics import (
    constructive_sequence, family_m_witness, greedy_min_footprint, odd_cycle_start,
    theorem21_start_pair, unit_start, zgrundy_cubic_prefix,
)
from grundylab.domination.sequences import (
    Variant, VertexSequence, WitnessRecord, dominated_set, footprints,
    is_closed_neighborhood_sequence, is_dominating, is_valid, is_z_sequence,
    single_footprint_count, validate_witness, witness_from_json, witness_to_json,
)
from grundylab.domination.solvers import (
    SolveResult, SolveStats, brute_force_grundy, grundy_number, zero_forcing_number,
)
