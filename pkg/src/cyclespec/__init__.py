"""Exact tools relating chromatic number to the cycle lengths a graph contains."""

from .errors import BudgetExceeded, CyclespecError, InputError, PipelineError, PreconditionError
from .graph import Graph

__all__ = ["BudgetExceeded", "CyclespecError", "Graph", "InputError", "PipelineError", "PreconditionError"]
__version__ = "0.1.0"
