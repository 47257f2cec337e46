"""Shared exception types."""


class DomainError(ValueError):
    """An argument fell outside an operation's documented domain."""
