"""Exception types shared across the package."""


class BezoutError(Exception):
    """Base class for all library errors."""


class RingMismatch(BezoutError):
    """Operands belong to different ring handles."""


class ZeroModulus(BezoutError):
    """Quotient construction with a zero modulus."""


class UnitModulus(BezoutError):
    """Quotient construction with a unit modulus (trivial ring)."""


class UnsupportedRing(BezoutError):
    """Operation is not defined for this ring instance."""


class TooLarge(BezoutError):
    """Enumeration or brute-force analysis exceeds the configured cap."""


class NotDivisible(BezoutError):
    """Exact division has no solution."""


class SearchExhausted(BezoutError):
    """A bounded witness search ran out of candidates."""


class ZeroInput(BezoutError):
    """The element argument must be nonzero."""


class UnitOrZeroInput(BezoutError):
    """Classification is not defined for units or zero."""


class NotRegular(BezoutError):
    """The element is a zero divisor where a regular element is required."""


class PreconditionFailed(BezoutError):
    """A stated comaximality / unimodularity precondition does not hold."""


class NotComaximal(BezoutError):
    """The two elements do not generate the whole ring."""


class FactorizationBudgetExceeded(BezoutError):
    """Factoring stopped: cofactor not resolved within the trial budget."""


class NoNontrivialIdempotent(BezoutError):
    """The idempotent search found only 0 and 1 (indecomposable quotient)."""


class TraceInvariantViolation(BezoutError):
    """A constructed reduction trace failed one of its defining identities."""


class InternalCheckFailed(BezoutError):
    """A computed result failed its own post-verification; nothing is emitted."""


class MalformedInput(BezoutError):
    """Unparseable ring description, element or matrix file."""
