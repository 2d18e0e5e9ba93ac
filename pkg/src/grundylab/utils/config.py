"""
Configuration models for grundylab.

Defaults live here rather than in the environment: every run is fully
described by its arguments so that reports stay reproducible.
"""

import logging

from pydantic import BaseModel, Field

# Configure logging
logger = logging.getLogger(__name__)

DEFAULT_MEMO_STATE_LIMIT = 4_000_000
DEFAULT_DIRECT_FORCING_MAX_ORDER = 24
DEFAULT_BRUTE_FORCE_MAX_ORDER = 10
DEFAULT_RANDOM_REGULAR_MAX_ATTEMPTS = 1000
DEFAULT_PREFIX_SEARCH_NODE_LIMIT = 200_000


class SolverConfig(BaseModel):
    """Limits for the exact solvers and the proof-guided constructions."""
    memo_state_limit: int = Field(
        DEFAULT_MEMO_STATE_LIMIT, ge=1,
        description="Memo entries before the Grundy solver falls back to branch-and-bound",
    )
    direct_forcing_max_order: int = Field(
        DEFAULT_DIRECT_FORCING_MAX_ORDER, ge=0,
        description="Largest order on which the direct zero forcing search runs",
    )
    brute_force_max_order: int = Field(
        DEFAULT_BRUTE_FORCE_MAX_ORDER, ge=0,
        description="Order guard of the brute-force oracle",
    )
    random_regular_max_attempts: int = Field(
        DEFAULT_RANDOM_REGULAR_MAX_ATTEMPTS, ge=1,
        description="Draws of the random regular sampler before a connected sample is given up",
    )
    prefix_search_node_limit: int = Field(
        DEFAULT_PREFIX_SEARCH_NODE_LIMIT, ge=1,
        description="Node budget of the cubic Z-sequence prefix search",
    )


class VerifyConfig(BaseModel):
    """Settings of the verification harness."""
    workers: int = Field(1, ge=1, description="Worker processes used to evaluate the stream")
    dedup: bool = Field(True, description="Collapse isomorphic graphs of an enumerated stream")
    exact_max_order: int = Field(
        24, ge=0,
        description="Largest order on which family members outside the extremal list are solved exactly",
    )
    solver: SolverConfig = Field(default_factory=SolverConfig)


DEFAULT_SOLVER_CONFIG = SolverConfig()
