"""Shared exception types."""


class GuardExceeded(ValueError):
    """An exhaustive scan was requested beyond the configured guard limit."""


class IndeterminateEvaluation(ArithmeticError):
    """A denominator line vanished at the evaluation point; caller should resample."""


class PoleEvaluation(ArithmeticError):
    """The function has a genuine pole at the evaluation point."""


class SearchExhausted(RuntimeError):
    """Rejection sampling ran out of retries; the field is likely too small."""
