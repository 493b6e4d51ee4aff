"""Exception types shared across the package."""


class MonofgError(Exception):
    pass


class InvalidAlgebra(MonofgError, ValueError):
    """Quiver or relation data violates a structural requirement."""


class AntichainViolation(InvalidAlgebra):
    pass


class InfiniteDimensional(MonofgError):
    pass


class ParseError(MonofgError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ResourceBound(MonofgError):
    """A configured size cap was hit (too many chains, algebra too big...)."""


class BoundTooSmall(ResourceBound):
    pass


class TooLarge(ResourceBound):
    pass


class InvariantViolation(MonofgError):
    pass


class NotPerfect(MonofgError):
    pass


class NotApplicable(MonofgError):
    pass


class DegreeMismatch(MonofgError, ValueError):
    pass


class NotSymmetric(MonofgError, ValueError):
    pass


class OddDegree(MonofgError, ValueError):
    pass


class NotGorensteinError(NotApplicable):
    pass
