"""Shared exception types."""


class UnsolvedError(RuntimeError):
    """A search exceeded its explicit budget before reaching an exact answer."""


class AdversaryError(RuntimeError):
    """An adversary strategy produced an answer inconsistent with every placement."""
