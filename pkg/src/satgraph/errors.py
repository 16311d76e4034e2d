"""Exception types shared across the package."""
from __future__ import annotations


class DomainError(ValueError):
    """A parameter lies outside an operation's valid range."""


class Graph6Error(ValueError):
    """Malformed graph6 input.  `offset` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class ParseError(ValueError):
    """Malformed hypergraph text input."""


class VerificationError(ValueError):
    """An input failed a stated precondition check (for example, a graph
    handed to the certificate engine turned out not to be saturated)."""


class IntegrityError(RuntimeError):
    """An engine invariant failed, which means the input violated a
    precondition (for example minimum degree below t)."""


class FatalInconsistencyError(RuntimeError):
    """A verified-saturated subject violated a proven lower bound.

    This cannot happen for correct code on correct inputs; if it fires,
    either the verifier or the bound evaluator is wrong.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class BudgetExceededError(RuntimeError):
    """Internal signal: a search ran out of its node or time budget."""
