"""Exception types shared across the package.

Most errors subclass ValueError so generic callers can catch broadly;
DivisionByZero subclasses ZeroDivisionError to match Python conventions.
"""


class GrmError(Exception):
    """Base class for all package-specific errors."""


class DivisionByZero(GrmError, ZeroDivisionError):
    """Division or inversion of the zero field element."""


class FieldMismatch(GrmError, ValueError):
    """Elements or codes from different fields were combined."""


class UnsupportedField(GrmError, ValueError):
    """Requested field size is not in the built-in table."""


class NoEmbeddingDefined(GrmError, ValueError):
    """No designated quadratic extension/subfield for this field."""


class ZeroInput(GrmError, ValueError):
    """Operation requires a nonzero input."""


class DimensionMismatch(GrmError, ValueError):
    """Vector or code lengths do not agree."""


class EmptyCode(GrmError, ValueError):
    """Operation undefined on the zero code."""


class NotNested(GrmError, ValueError):
    """Required (strict) code containment does not hold."""


class CapExceeded(GrmError, RuntimeError):
    """An exhaustive enumeration would exceed the configured cap."""


class OrderOutOfRange(GrmError, ValueError):
    """Reed-Muller order outside the valid range."""


class LengthCapExceeded(GrmError, ValueError):
    """Code length would exceed the configured maximum."""


class NotSelfOrthogonal(GrmError, ValueError):
    """Code is not self-orthogonal under the required inner product."""


class WitnessInvalid(GrmError, ValueError):
    """Supplied puncture witness fails validation."""


class WitnessNotFound(GrmError, RuntimeError):
    """No vector of the requested weight was found.

    ``proven_absent`` is True when a completed exhaustive scan proves no
    such vector exists, False when only a partial/subcode scan ran.
    """

    def __init__(self, message: str, proven_absent: bool = False):
        super().__init__(message)
        self.proven_absent = proven_absent


class WitnessSearchFailed(GrmError, RuntimeError):
    """A search that is mathematically guaranteed to succeed came up empty."""


class PointOrderMismatch(GrmError, ValueError):
    """No configured point bijection between the two evaluation domains."""


class InexactParameters(GrmError, ValueError):
    """Operation requires exact (not lower-bound) code parameters."""
