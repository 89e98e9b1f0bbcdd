"""Exception types shared across the toolkit."""


class RamseyChoiceError(Exception):
    """Base class for all toolkit-specific failures."""


class InvalidPart(RamseyChoiceError):
    """A decomposition part was smaller than 2."""


class BoundExceeded(RamseyChoiceError):
    """A requested computation lies outside the configured search bounds."""


class EmptyResult(RamseyChoiceError):
    """An enumeration that must be non-empty came back empty.

    Raised when no prime triple sums to an odd target in range; that would
    contradict the ternary Goldbach theorem, so it is a hard failure.
    """


class NoSuchPrime(RamseyChoiceError):
    """No prime with the required divisibility properties exists."""


class PreconditionViolated(RamseyChoiceError):
    """A recipe was invoked outside the case it handles."""


class BranchExhausted(RamseyChoiceError):
    """Every branch of a case analysis failed to produce a verified result."""


class CertificateSearchFailed(RamseyChoiceError):
    """Neither the constructive nor the exhaustive path found a certificate."""


class OracleDisagreement(RamseyChoiceError):
    """Two independent computations of the same fact disagreed."""


class NotBlocking(RamseyChoiceError):
    """The requested model cannot exist because the decomposition admits m.

    Carries the witness subset whose cycle intersections all share a factor
    with their cycle lengths; the construction failing in exactly this way is
    a second oracle for the blocking test.
    """


class CapExceeded(RamseyChoiceError):
    """A staged construction hit its size cap; carries a progress report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report or {}


class BadSubset(RamseyChoiceError):
    """A subset argument was not a valid subset of the expected universe."""
