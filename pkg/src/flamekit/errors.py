"""Exception hierarchy shared by all flamekit modules."""


class FlameKitError(Exception):
    """Base class for every error raised by flamekit."""


class GraphFormatError(FlameKitError, ValueError):
    """A graph or edge-set file could not be parsed or failed validation."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class UnknownVertexError(FlameKitError, KeyError):
    pass


class UnknownEdgeError(FlameKitError, KeyError):
    pass


class CycleError(FlameKitError):
    """Raised when an acyclic digraph was required.

    ``cycle`` holds the edge ids of one directed cycle, in traversal order.
    """

    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__("digraph contains a directed cycle: " + " ".join(self.cycle))


class NotLinkedError(FlameKitError):
    pass


class DependentSetError(FlameKitError):
    pass


class NotAFlameError(FlameKitError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"edge set is not a flame: fails at vertex {vertex!r}")


class NotLargeError(FlameKitError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"edge set is not large at vertex {vertex!r}")


class AugmentationError(FlameKitError):
    pass


class BoundExceededError(FlameKitError):
    pass
