"""Exception types shared across the package.

Domain errors (bad mathematical input) derive from DomainError; internal
consistency failures that indicate a bug in this package derive from
InternalInconsistencyError and should never be caught by callers.
"""


class DomainError(ValueError):
    """Input is outside the mathematical domain an operation supports."""


class NotPrimeError(DomainError):
    """A number required to be prime is composite."""


class TooLargeError(DomainError):
    """Field or enumeration size exceeds the supported budget."""


class InvalidDegreeError(DomainError):
    """Extension or polynomial degree outside the supported range."""


class NotSquarefreeError(DomainError):
    """Polynomial required to be squarefree has a repeated factor."""


class DegenerateCharacterError(DomainError):
    """Character sum request is degenerate (trivial character or f in x^p + linear)."""


class UnsupportedDegreeError(DomainError):
    """Operation only implemented for specific polynomial degrees."""


class ZeroBError(DomainError):
    """The linear coefficient b must be nonzero for the fiber-product curves."""


class NotSmoothError(DomainError):
    """Curve instance is singular; zeta extraction is not valid."""


class BadFieldError(DomainError):
    """Field size outside what the quartic bound machinery accepts."""


class WildRamificationError(DomainError):
    """Characteristic too small for tame ramification (p <= degree)."""


class CrossCheckFailedError(DomainError):
    """Degree-table assembly failed its internal cross-sums (degenerate profile)."""


class IndexMismatchError(DomainError):
    """Two tables that must share degree/partition indexing do not."""


class InternalInconsistencyError(AssertionError):
    """An invariant that must hold for every valid input failed: a bug."""


class HasseViolationError(InternalInconsistencyError):
    """Extracted zeta data violates the Weil bounds: counting bug or missed singularity."""
