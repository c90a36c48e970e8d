"""Exception hierarchy shared by every module."""


class FThreshError(Exception):
    """Base class for all library errors."""


class ContextError(FThreshError):
    """Operands live in different rings."""


class ArgumentError(FThreshError, ValueError):
    pass


class ParseError(FThreshError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class NotArtinianError(FThreshError):
    pass


class PreconditionError(FThreshError):
    """An operation was called on an input outside its domain (e.g. a ring that is not F-pure)."""


class NotSplitError(PreconditionError):
    def __init__(self, e, message=None):
        self.e = e
        super().__init__(message or f"ring is not F-split at level e={e}")


class NotPrincipalError(PreconditionError):
    """The Fedder colon is not principal modulo the bracket power.

    The partially filled certificate is attached as ``certificate``.
    """

    def __init__(self, certificate):
        self.certificate = certificate
        super().__init__("(I^[p]:I) is not generated by one element modulo I^[p]")


class FieldTooSmallError(PreconditionError):
    def __init__(self, message, partial=None):
        self.partial = partial
        super().__init__(message)


class MinimalityError(FThreshError):
    pass


class BudgetExceededError(FThreshError):
    def __init__(self, message, partial=None):
        self.partial = partial
        super().__init__(message)


class InvariantViolation(FThreshError, AssertionError):
    """A mathematical identity that must hold was observed to fail."""
