"""Exception types and the node-expansion budget shared by the exact solvers."""

import os

DEFAULT_BUDGET = 10_000_000


class CyclespecError(Exception):
    """Base class for every error raised by this package."""


class InputError(CyclespecError, ValueError):
    """Malformed input: bad vertex ids, invalid parameters, broken files."""


class PreconditionError(InputError):
    """A documented precondition (e.g. a chromatic number threshold) fails."""


class PipelineError(CyclespecError):
    """An internal assertion of a proof pipeline failed at a named stage."""

    def __init__(self, stage, message):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage


class BudgetExceeded(CyclespecError):
    """Search ran out of node expansions.

    ``lower`` and ``upper`` carry the best bounds known when the search
    stopped (``None`` when the solver has none to report).
    """

    def __init__(self, message="search budget exhausted", lower=None, upper=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


def default_budget():
    value = os.environ.get("CYCLESPEC_BUDGET")
    if value:
        try:
            return int(value)
        except ValueError:
            raise InputError(f"CYCLESPEC_BUDGET must be an integer, got {value!r}")
    return DEFAULT_BUDGET


class Budget:
    """Counter of search-node expansions with a hard ceiling."""

    __slots__ = ("limit", "used")

    def __init__(self, limit=None):
        self.limit = default_budget() if limit is None else int(limit)
        self.used = 0

    def tick(self, amount=1):
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceeded(f"budget of {self.limit} node expansions exhausted")

    @property
    def remaining(self):
        return max(0, self.limit - self.used)

    def __repr__(self):
        return f"Budget(used={self.used}, limit={self.limit})"


def as_budget(budget):
    """Accept ``None`` (fresh default budget), an int limit or a ``Budget``."""
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)
