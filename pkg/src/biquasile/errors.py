"""Exception types shared across the package."""

from __future__ import annotations


class BiquasileError(ValueError):
    """Base class for domain failures (exit code 1 on the command line)."""


class MalformedTableError(BiquasileError):
    """An operation table has the wrong shape or an out-of-range entry."""


class NotLatinError(BiquasileError):
    """An operation table is not a Latin square."""


class ExchangeAxiomError(BiquasileError):
    """The exchange axiom fails; ``witness`` is the first failing (x, y, a, b)."""

    def __init__(self, message: str, witness: tuple[int, int, int, int]):
        super().__init__(message)
        self.witness = witness


class ParseError(ValueError):
    """A text file could not be parsed (exit code 2 on the command line)."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class BudgetExceededError(RuntimeError):
    """The brute-force oracle would exceed its evaluation budget (exit code 3)."""
