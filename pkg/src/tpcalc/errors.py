"""Exception hierarchy.  ``TpcError`` subclasses are user errors."""


class TpcError(Exception):
    """Base class for errors caused by user input."""


class LiteralError(TpcError, ValueError):
    pass


class TagMismatch(TpcError, ValueError):
    pass


class NotRepresentable(TpcError, ValueError):
    """No s with s + 1 = v: the matrix lies outside the full-calculus image."""


class ColorError(TpcError, ValueError):
    pass


class TypeMismatch(TpcError, ValueError):
    """Ill-typed composition or generator."""


class NotFunctional(TpcError, ValueError):
    pass


class ShapeError(TpcError, ValueError):
    pass


class RefusedError(TpcError, ValueError):
    """Operation refused, e.g. equivalence over floating point."""


class InternalError(AssertionError):
    """An invariant of the implementation failed."""
