"""Exception hierarchy shared by every module of the package."""


class HFSError(ValueError):
    """Base class for all domain errors raised by hfsim."""


class EmptyElement(HFSError):
    pass


class OutOfRange(HFSError):
    def __init__(self, value):
        super().__init__(f"membership grade {value!r} outside [0, 1]")
        self.value = value


class UniverseMismatch(HFSError):
    pass


class InvalidSpec(HFSError):
    pass


class GridMismatch(HFSError):
    pass


class WeightNotNormalized(HFSError):
    pass


class InvalidProblem(HFSError):
    pass


class DegenerateScores(HFSError):
    pass


class ParseError(HFSError):
    """Malformed input document; ``location`` names the line or field."""

    def __init__(self, message, location=None):
        text = f"{location}: {message}" if location else message
        super().__init__(text)
        self.location = location


class ValidationError(HFSError):
    """Well-formed document that violates a domain invariant.

    ``reason`` is a short tag such as ``"OutOfRange"`` or ``"WeightSum"``.
    """

    def __init__(self, reason, message):
        super().__init__(f"{reason}: {message}")
        self.reason = reason


class BoundaryWarning(UserWarning):
    """A similarity value fell outside [0, 1]."""
