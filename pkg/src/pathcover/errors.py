"""Exception types shared across the package."""


class PathcoverError(Exception):
    """Base class for all package errors."""


class GraphError(PathcoverError):
    """Invalid graph construction input."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class NotCubicError(GraphError):
    pass


class OddOrderCubicError(NotCubicError):
    """A cubic graph must have an even number of vertices."""


class NotANetError(PathcoverError):
    """Triangle is not a net (outside neighbors missing or not distinct)."""


class InvalidCoverError(PathcoverError):
    """A path cover failed validation where a valid one was required."""


class MalformedGraph6Error(PathcoverError):
    pass


class UnsupportedFormatError(MalformedGraph6Error):
    """sparse6 / digraph6 input, which this codec deliberately rejects."""


class NotBiconnectedError(PathcoverError):
    pass


class KTooSmallError(PathcoverError):
    """Ring construction needs at least two gadgets to stay simple."""


class OddOrderError(PathcoverError):
    """Cubic random generation needs even n >= 4."""


class RetryExhaustedError(PathcoverError):
    """Rejection sampling hit its retry cap."""


class TooLargeError(PathcoverError):
    """Instance exceeds the exact/enumeration size cap."""


class SearchTimeout(PathcoverError):
    """Backtracking search exhausted its node budget; never a wrong answer."""


class MapMismatchError(PathcoverError):
    """Gadget map does not describe the given graph."""


class IdentityMismatchError(PathcoverError):
    """Weight transfer simulation disagreed with the closed form: a classification bug."""
