"""Domain errors raised by the colq package."""


class ColqError(Exception):
    """Base class for every domain error."""


class LoopArrowError(ColqError):
    """An arrow with equal source and target."""


class ColourOutOfRangeError(ColqError):
    """A colour outside 0..m."""


class MonochromaticityViolationError(ColqError):
    """Two different colours on the same ordered vertex pair."""


class SkewConflictError(ColqError):
    """Explicitly listed partner arrows that contradict skew-symmetry."""


class BadSizeError(ColqError):
    """A size parameter out of the defined range (e.g. D_n with n < 4)."""


class VertexOutOfRangeError(ColqError):
    """A vertex label outside 1..n."""


class MissingArrowError(ColqError):
    """A path step between non-adjacent vertices."""


class NotACycleError(ColqError):
    """A vertex sequence that is not a closed simple cycle."""


class DisconnectedError(ColqError):
    """An operation that requires a connected quiver got a disconnected one."""


class CapExceededError(ColqError):
    """A state-space search hit its cap before deciding."""


class BudgetExceededError(ColqError):
    """Exhaustive generation would exceed the configured candidate budget."""


class FormatError(ColqError):
    """Malformed quiver file or JSON payload."""
