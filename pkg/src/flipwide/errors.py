"""Exception types shared across the package."""


class FlipwideError(Exception):
    """Base class for all errors raised by this package."""


class OutOfRangeError(FlipwideError):
    """A vertex index or vertex set lies outside 0..n-1."""


class LoopError(FlipwideError):
    """An edge (u, u) was supplied; graphs here are loop-free."""


class LoopQueryError(FlipwideError):
    """Adjacency was queried for a pair (u, u)."""


class DuplicateVertexError(FlipwideError):
    """An ordered vertex list contains a repeated vertex."""


class TooLargeError(FlipwideError):
    """Input exceeds the documented exhaustive-search range."""


class InvalidSpecError(FlipwideError):
    """A family spec has missing or out-of-range parameters."""


class MalformedInputError(FlipwideError):
    """Bytes or text do not parse as the expected format."""


class InvalidPathError(FlipwideError):
    """A vertex sequence is not a path of the graph it was given with."""


class MissingWitnessError(FlipwideError):
    """A witness instance was verified without a witness set attached."""


class PreconditionFailedError(FlipwideError):
    """A conversion step was called on an instance violating its contract."""


class BoundViolatedError(FlipwideError):
    """Strict mode: both flip sides exceed the deletion bound.

    Carries diagnostics explaining which hypothesis of the one-flip
    extraction is false on this instance.
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class SizeRequirementUnmetError(FlipwideError):
    """Guaranteed mode: a candidate pool is below the required chain size."""


class ChainSizeOverflowError(FlipwideError):
    """An iterated Ramsey value exceeded the configured ceiling."""
