"""Exception hierarchy shared by all engines."""


class PFKitError(Exception):
    """Base class for every error raised by pfkit."""


class PreconditionError(PFKitError):
    """An engine input violates a documented precondition."""


class BadLeading(PreconditionError):
    pass


class ZeroLeading(PreconditionError):
    pass


class NonSquareLeading(PreconditionError):
    pass


class ViolatedNonvanishing(PreconditionError):
    pass


class DegenerateQuadraticPart(PreconditionError):
    pass


class IrrationalCoefficient(PFKitError):
    """A period coefficient left the rationals; always an implementation bug."""


class NotSupported(PreconditionError):
    pass


class NotMUM(PreconditionError):
    pass


class NormalizationFailure(PFKitError):
    pass


class NotFound(PFKitError):
    """No operator in the searched (d, r) box annihilates the series."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = list(trace or [])


class ParseError(PFKitError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InsufficientTermsWarning(UserWarning):
    """Fewer equations than unknowns; the kernel may be spuriously large."""
