"""Exception types raised by the public API.

Operations that can legitimately come up empty (no separator exists, no cut
within budget, attribute not well formed) return ``None`` instead of raising;
exceptions are reserved for violated preconditions and malformed input.
"""


class ImpsepError(Exception):
    """Base class for all errors raised by this package."""


class InvalidVertexError(ImpsepError):
    """A vertex id does not belong to the graph at hand."""


class InvalidArgumentError(ImpsepError):
    """An argument violates an operation precondition (overlap, empty set, ...)."""


class NotASeparatorError(ImpsepError):
    """A vertex set claimed to be an X-Y separator does not disconnect X from Y."""


class NonMinimalSeparatorError(ImpsepError):
    """An operation defined only for minimal separators received a non-minimal one."""


class NotNormalizedError(ImpsepError):
    """The witness calculus requires N(X) to be the unique smallest X-Y separator."""


class NotInNeighborhoodError(ImpsepError):
    """A cover set handed to the witness calculus must be a subset of N(X)."""


class AdjacentTerminalsError(ImpsepError):
    """Two terminals share an edge, so no vertex multiway cut can exist."""


class NoSeparatorError(ImpsepError):
    """Raised by operations whose contract requires an X-Y separator to exist."""


class GraphFormatError(ImpsepError):
    """A graph file is malformed; carries the offending 1-based line number."""

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason
