"""Exception hierarchy.

Everything raised on bad user input derives from :class:`InvalidParameters`
so the command line layer can map it to a single exit status.
"""

from __future__ import annotations


class LinRSError(Exception):
    """Base class for all package errors."""


class InvalidParameters(LinRSError, ValueError):
    """Input violates a precondition."""


class NonPrimeP(InvalidParameters):
    pass


class KTooLarge(InvalidParameters):
    pass


class FieldTooLargeForTables(InvalidParameters):
    pass


class EnumerationTooLarge(InvalidParameters):
    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"enumeration of {count} subspaces exceeds cap {cap}")


class TooManyRows(InvalidParameters):
    pass


class DependentU(InvalidParameters):
    pass


class BadR(InvalidParameters):
    pass


class BadIndex(InvalidParameters):
    pass


class LengthMismatch(InvalidParameters):
    pass


class FieldMismatch(LinRSError, TypeError):
    """Matrices living over different fields were combined."""


class InternalInconsistency(LinRSError, ArithmeticError):
    """A closed-form quantity came out impossible (e.g. a negative count)."""
