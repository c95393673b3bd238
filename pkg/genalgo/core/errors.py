"""Exception hierarchy for genalgo.

Every error raised for bad input derives from ``GAError``, which is itself a
``ValueError`` so callers that only know about ``ValueError`` keep working.
"""

from typing import Any


class GAError(ValueError):
    """Base class for all genalgo input and domain errors."""


class InvalidInstanceError(GAError):
    """A problem instance is malformed (bad label, too few places, self-edge)."""


class ConflictError(GAError):
    """Two edge rows give different distances for the same pair of places."""


class IncompleteInstanceError(GAError):
    """An edge list does not cover every unordered pair of declared places.

    Attributes:
        missing: The missing pairs as ``(from_label, to_label)`` tuples.
    """

    def __init__(self, message: str, missing: list[tuple[str, str]]) -> None:
        super().__init__(message)
        self.missing = missing


class DomainError(GAError):
    """A numeric argument lies outside its allowed range."""


class ChromosomeValidationError(GAError):
    """A chromosome violates its encoding invariants.

    Attributes:
        verdict: Structured description of the violation.
    """

    def __init__(self, message: str, verdict: Any = None) -> None:
        super().__init__(message)
        self.verdict = verdict


class ConfigurationError(GAError):
    """A run configuration is invalid.

    Attributes:
        violations: Human readable violations, one per offending field.
    """

    def __init__(self, message: str, violations: list[str] | None = None) -> None:
        super().__init__(message)
        self.violations = violations or []


class InstanceTooLargeError(GAError):
    """The exhaustive oracle refuses instances above its size cap."""


class ExactOptimumFound(GAError):
    """Raised by ``step`` when a zero-fitness individual makes selection undefined."""


class OutputError(GAError):
    """A run log or summary could not be written."""
