"""Shared exception types."""


class BoundExceeded(ValueError):
    """A requested object is larger than the configured size bound."""


class BudgetExceeded(RuntimeError):
    """A search exceeded its node budget.  The result is discarded, never truncated."""


class FixtureMismatch(RuntimeError):
    """A bundled fixture failed verification (transcription or engine bug)."""
