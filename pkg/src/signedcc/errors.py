"""Exception types raised across the package."""


class SignedGraphError(ValueError):
    """Base class for invalid signed-graph input."""


class SelfLoop(SignedGraphError):
    pass


class DuplicateEdge(SignedGraphError):
    pass


class VertexOutOfRange(SignedGraphError):
    pass


class OverlappingSets(SignedGraphError):
    pass


class PartitionMismatch(SignedGraphError):
    pass


class EnumerationTruncated(RuntimeError):
    """Cycle enumeration bound is below n and the caller did not opt in."""


class TooLarge(RuntimeError):
    """Instance exceeds an exhaustive oracle's size limit."""


class GenerationExhausted(RuntimeError):
    """Rejection sampler ran out of attempts."""


class GraphFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
