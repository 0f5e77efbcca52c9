"""Exception types shared across the library."""


class SecmatError(Exception):
    """Base class for all library errors."""


class RingMismatchError(SecmatError):
    """Operands belong to different rings or have incompatible arity."""


class ParseError(SecmatError):
    """Malformed input text; carries the offending position (1-based)."""

    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


class SemanticError(SecmatError):
    """Input parsed but violates a semantic requirement (e.g. homogeneity)."""


class GenericityError(SecmatError):
    """Repeated random changes of coordinates disagreed; genericity not reached."""


class InvariantViolation(SecmatError):
    """An internal mathematical invariant failed; indicates a bug."""


class PreconditionError(SecmatError):
    """An operation was called with its stated hypotheses unmet."""


class InconclusiveError(PreconditionError):
    """Matrix-based detection hypotheses fail at the requested degree."""


class InfiniteReductionNumberError(SecmatError):
    """The requested sectional-matrix row never becomes zero."""

    def __init__(self, row):
        super().__init__(
            f"row {row} of the sectional matrix never vanishes; "
            "the reduction number is infinite"
        )
        self.row = row


class EnumerationGuardError(SecmatError):
    """A brute-force enumeration would exceed the configured size guard."""
