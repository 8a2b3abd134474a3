class GradedTensorError(Exception):
    """Base class for errors raised by this package."""


class ContextError(GradedTensorError):
    """Unknown generator, or conflicting generator declarations."""


class ArityError(GradedTensorError, ValueError):
    """Operands live in tensor powers of different arity, or a position is out of range."""


class FieldMismatchError(GradedTensorError, TypeError):
    """Operands have coefficients in different fields."""


class IdealError(GradedTensorError, ValueError):
    """An ideal was given a generator that is not a monomial tensor."""
