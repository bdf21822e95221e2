class DenumerantError(Exception):
    """Base class for errors raised by this package."""


class TruncationError(DenumerantError, IndexError):
    """A series coefficient beyond the known truncation window was requested."""


class FieldMismatchError(DenumerantError, TypeError):
    """Operands live in different coefficient fields."""


class SeriesDomainError(DenumerantError, ValueError):
    """exp/log/inverse precondition violated."""


class PoleError(DenumerantError, ZeroDivisionError):
    """A parameter sits on a pole of the requested function."""


class ConsistencyError(DenumerantError, ArithmeticError):
    """An internal exactness check failed; indicates an arithmetic bug."""


class WavePeriodError(DenumerantError, ValueError):
    """The requested period divides none of the components."""
