"""Exceptions raised when a mathematically asserted property fails at runtime.

These are distinct from ValueError (bad arguments): a VerificationError means
an internal claim the library relies on was contradicted by computation.
"""


class VerificationError(Exception):
    """An asserted mathematical property failed."""


class ClassificationError(VerificationError):
    """The residue classification lost existence or uniqueness of a witness."""


class UniquenessError(VerificationError):
    """An extremal object expected to be unique was attained more than once."""
