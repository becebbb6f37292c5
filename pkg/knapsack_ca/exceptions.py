"""
Exception hierarchy for the knapsack solvers.

Library code raises these; only the CLI turns them into exit statuses.
"""

from typing import Optional


class KnapsackError(Exception):
    """Base class for every error raised by knapsack_ca."""


class DimensionError(KnapsackError, ValueError):
    """A solution's length does not match the instance item count."""


class DomainError(KnapsackError, ValueError):
    """An argument lies outside a function's mathematical domain."""


class InvalidInstanceError(KnapsackError, ValueError):
    """Instance data breaks an invariant (lengths, positivity)."""


class InstanceParseError(KnapsackError, ValueError):
    """An instance file could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None, source: Optional[str] = None):
        self.line = line
        self.source = source
        location = ""
        if source:
            location += f"{source}:"
        if line is not None:
            location += f"line {line}: "
        elif location:
            location += " "
        super().__init__(f"{location}{message}")


class BudgetError(KnapsackError, ValueError):
    """An exact solver refused an instance that exceeds its work budget."""


class PreconditionError(KnapsackError, ValueError):
    """An instance does not meet a solver's input requirements."""


class ConfigError(KnapsackError, ValueError):
    """Configuration values are missing or out of range."""
