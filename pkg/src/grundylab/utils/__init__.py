"""
Utility modules for grundylab.
"""

from grundylab.utils.config import SolverConfig, VerifyConfig, DEFAULT_SOLVER_CONFIG
from grundylab.utils.error_handler import (
    AppError, GraphError, Graph6Error, SequenceError, SolverError,
    SolverInconsistencyError, BoundError, FamilyError, SamplerError,
    VerificationInputError, UsageError, handle_errors,
)
from grundylab.utils.log_utils import describe_graph, log_timing
