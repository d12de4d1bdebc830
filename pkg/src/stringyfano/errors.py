"""Exception types raised by stringyfano."""


class StringyFanoError(Exception):
    """Base class for all library errors."""


class ZeroVector(StringyFanoError, ValueError):
    pass


class ShapeMismatch(StringyFanoError, ValueError):
    pass


class SingularMatrix(StringyFanoError, ValueError):
    pass


class EmptyInput(StringyFanoError, ValueError):
    pass


class NotFullDimensional(StringyFanoError, ValueError):
    pass


class InvalidPolytope(StringyFanoError, ValueError):
    """Repeated or redundant vertices, or an unsupported ambient dimension."""


class OriginNotInterior(StringyFanoError, ValueError):
    pass


class NotAFacet(StringyFanoError, ValueError):
    pass


class UnsupportedDimension(StringyFanoError, ValueError):
    pass


class NotCanonicalFano(StringyFanoError, ValueError):
    pass


class NotSimplicial(StringyFanoError, ValueError):
    pass


class NotLDP(StringyFanoError, ValueError):
    pass


class NotAlmostPseudoreflexive(StringyFanoError, ValueError):
    pass


class InternalInconsistency(StringyFanoError, RuntimeError):
    """A computed quantity violated an identity that must always hold."""


class ParseError(StringyFanoError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyCheckSet(StringyFanoError, ValueError):
    pass
