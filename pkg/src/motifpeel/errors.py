"""Exception types shared across the package."""


class MotifPeelError(Exception):
    """Base class for all motifpeel errors."""


class EdgeListParseError(MotifPeelError):
    """Raised on a malformed edge-list line; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class GeneratorConfigError(MotifPeelError):
    """Raised when a synthetic-graph configuration is infeasible."""


class NoMotifError(MotifPeelError):
    """Raised when the graph contains no instance of the query clique."""


class NoAdmissiblePrefixError(MotifPeelError):
    """Raised when a peel trace has no prefix with a well-defined conductance."""


class OracleTooLargeError(MotifPeelError):
    """Raised when a graph exceeds the exhaustive oracle's vertex limit."""


class UndefinedResultError(MotifPeelError):
    """Raised when a ratio metric has a zero denominator (signaled, never silent)."""
