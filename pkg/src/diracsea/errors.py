"""Shared exception types."""


class PreconditionError(ValueError):
    """A physical validity condition does not hold (e.g. k_w >= m)."""
