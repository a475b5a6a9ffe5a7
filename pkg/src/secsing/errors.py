class DomainError(ValueError):
    """Argument outside the domain of an operation."""


class DegreeError(DomainError):
    """Degrees of the operands are incompatible."""


class PreconditionError(ValueError):
    """A rank hypothesis required by a conormal bound does not hold.

    ``actual`` carries the rank that was observed, ``expected`` the rank the
    hypothesis asks for.
    """

    def __init__(self, message, actual=None, expected=None):
        super().__init__(message)
        self.actual = actual
        self.expected = expected


class ParseError(ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
