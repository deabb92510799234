"""Exception types shared across the package.

The CLI maps these onto exit codes, so solver and I/O code should raise the
most specific type that applies.
"""


class RectCoverError(Exception):
    """Base class for all package errors."""


class InvalidInputError(RectCoverError, ValueError):
    """Input violates a documented precondition."""


class CrossingPairError(InvalidInputError):
    """A crossing rectangle pair where none is allowed."""

    def __init__(self, pair, message=None):
        self.pair = tuple(pair)
        super().__init__(message or f"crossing pair {self.pair!r}")


class CrossingChainError(InvalidInputError):
    """Three rectangles that cross pairwise (a chain in the crossing order)."""

    def __init__(self, chain):
        self.chain = tuple(chain)
        super().__init__(f"pairwise-crossing triple {self.chain!r}")


class UncoveredEdgeError(InvalidInputError):
    """A claimed vertex cover misses an edge."""

    def __init__(self, edge, message=None):
        self.edge = tuple(edge)
        super().__init__(message or f"edge {self.edge!r} is not covered")


class ResourceLimitError(RectCoverError):
    """A configured resource ceiling was exceeded."""


class WidthCeilingError(ResourceLimitError):
    """Tree decomposition width exceeds the dynamic-programming ceiling."""


class SizeLimitError(ResourceLimitError):
    """Instance exceeds the exact solver's size limit."""


class GenerationBudgetError(ResourceLimitError):
    """Rejection sampling ran out of attempts."""
