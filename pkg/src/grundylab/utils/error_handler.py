"""
Error handling utilities for grundylab.

This module provides the exception hierarchy shared by every sub-package and
the decorator used to log failures of public entry points.
"""

import functools
import logging
import traceback
from typing import Optional

# Configure logging
logger = logging.getLogger(__name__)


class AppError(Exception):
    """Base exception class for application errors."""
    def __init__(self, message: str, details: Optional[str] = None):
        self.message = message
        self.details = details
        super().__init__(message)


class GraphError(AppError):
    """Invalid graph construction or a graph that violates an operation's precondition."""


class Graph6Error(GraphError):
    """Malformed graph6 text or an order outside the supported header range."""


class SequenceError(AppError):
    """Invalid vertex order or a witness that does not re-validate."""


class SolverError(AppError):
    """Solver precondition violated (isolated vertices, order guard, ...)."""


class SolverInconsistencyError(SolverError):
    """Two independent computations of the same invariant disagree."""


class BoundError(AppError):
    """Bound formula evaluated outside its hypotheses."""


class FamilyError(AppError):
    """Bad skeleton, unit assignment or recognizer input."""


class SamplerError(AppError):
    """Random regular sampler cannot satisfy its request."""


class VerificationInputError(AppError):
    """An ingested graph does not satisfy the stream requirements."""


class UsageError(AppError):
    """Command-line usage problem."""


def handle_errors(func):
    """Decorator to log errors raised by public functions and re-raise them."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except AppError as e:
            logger.error(f"Error in {func.__name__}: {e.message}")
            if e.details:
                logger.debug(f"Details: {e.details}")
            raise
        except Exception as e:
            # Anything else is a bug; keep the traceback around
            logger.error(f"Error in {func.__name__}: {str(e)}")
            logger.debug(traceback.format_exc())
            raise
    return wrapper
