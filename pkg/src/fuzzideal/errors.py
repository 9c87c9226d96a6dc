"""Exception hierarchy.

User-facing problems (bad input, violated preconditions) derive from
:class:`FuzzIdealError`; :class:`InvariantBreach` signals that a computed
result contradicts a property the library relies on.
"""

from __future__ import annotations


class FuzzIdealError(ValueError):
    """Base class for precondition and input errors."""


class StructureError(FuzzIdealError):
    """An operation table is malformed (ragged, missing cell, unknown element)."""


class ParseError(FuzzIdealError):
    """A text file could not be parsed."""


class NotALatticeError(FuzzIdealError):
    """The natural order of an algebra has no join or meet for some pair."""

    def __init__(self, message: str, witness: tuple[str, ...]):
        super().__init__(message)
        self.witness = witness


class NotBooleanError(FuzzIdealError):
    def __init__(self, message: str, witness: tuple[str, ...]):
        super().__init__(message)
        self.witness = witness


class EmptySubsetError(FuzzIdealError):
    """Ideals are nonempty by definition."""


class NotAnIdealError(FuzzIdealError):
    pass


class DuplicateIdealError(FuzzIdealError):
    pass


class RankDeficientError(FuzzIdealError):
    """Rows of a generator matrix are linearly dependent over GF(2).

    ``witness`` holds the indices of a nonempty set of rows whose XOR is zero.
    """

    def __init__(self, message: str, witness: tuple[int, ...]):
        super().__init__(message)
        self.witness = witness


class NotBooleanFormError(FuzzIdealError):
    def __init__(self, message: str, row: int):
        super().__init__(message)
        self.row = row


class BudgetExceededError(FuzzIdealError):
    pass


class InvariantBreach(RuntimeError):
    """A computed result contradicts an invariant the library depends on."""
