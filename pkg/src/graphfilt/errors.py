"""Exception hierarchy shared across the package."""


class GraphFiltError(Exception):
    """Base class for all errors raised by this package."""


class IndexOutOfRange(GraphFiltError):
    pass


class DuplicateEdge(GraphFiltError):
    pass


class NonPositiveWeight(GraphFiltError):
    pass


class SelfLoop(GraphFiltError):
    pass


class DimensionMismatch(GraphFiltError):
    pass


class TooLargeForOracle(GraphFiltError):
    pass


class FilterDomainError(GraphFiltError):
    pass


class InvalidProbability(GraphFiltError):
    pass


class InvalidK(GraphFiltError):
    pass


class InvalidCount(GraphFiltError):
    pass


class ZeroStartVector(GraphFiltError):
    pass


class EmptySpectrum(GraphFiltError):
    pass


class DegenerateSpectrum(GraphFiltError):
    pass


class ParseError(GraphFiltError):
    """Raised on malformed edge-list or signal files; carries a line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ConfigError(GraphFiltError):
    """Invalid experiment configuration."""
