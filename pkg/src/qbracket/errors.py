"""Exception hierarchy shared by every module of the package."""


class QBracketError(Exception):
    """Base class for all errors raised by qbracket."""


class DomainError(QBracketError, ValueError):
    """An argument lies outside the domain of the operation."""


class PoleError(DomainError):
    """Evaluation at a pole (e.g. zeta at s = 1, a Laurent polynomial at 0)."""


class ResourceLimitError(QBracketError):
    """A configured size cap (partition size, Bernoulli index, |D|) was exceeded."""


class UnitError(QBracketError, ArithmeticError):
    """Division by a series whose constant term is not invertible, or exp/log misuse."""


class AlignmentError(QBracketError):
    """Two series with different q-offsets were combined additively."""


class TruncationError(QBracketError):
    """A requested accuracy cannot be reached with the available terms."""
