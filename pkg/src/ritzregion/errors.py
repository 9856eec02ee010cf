"""Exception hierarchy for ritzregion.

Every error raised on purpose by the library derives from :class:`RitzError`.
Errors that signal a violated hypothesis of the characterization (an interior
eigenvalue, a point outside the numerical range, a collinear spectrum) derive
from :class:`HypothesisViolation` so callers such as the CLI can map them to a
single exit code.
"""


class RitzError(Exception):
    """Base class of all ritzregion errors."""


class InputError(RitzError, ValueError):
    """An argument is malformed or violates a precondition."""


class HypothesisViolation(RitzError):
    """The inputs are valid but fall outside the characterized setting."""


# geometry
class EmptyInput(InputError):
    pass


class DegenerateLine(InputError):
    pass


class EmptyRegion(InputError):
    pass


class DegenerateTriangle(InputError):
    pass


class OutsideTriangle(InputError):
    pass


class NotOnSegment(InputError):
    pass


class OverlappingSegments(InputError):
    pass


class PointAtCenter(InputError):
    pass


# spectrum
class TooFewEigenvalues(InputError):
    pass


class InteriorEigenvalue(HypothesisViolation):
    """Some eigenvalue lies strictly inside the numerical range."""


class OutsideW(HypothesisViolation):
    """The prescribed Ritz value is not in the numerical range."""


class CollinearSpectrum(HypothesisViolation):
    """All eigenvalues lie on one line."""


class InternalInconsistency(RitzError):
    """A case analysis that should be exhaustive matched nothing."""


# weights
class NoFullSupport(RitzError):
    pass


# ritz
class NotIsometry(InputError):
    pass


class VertexInput(InputError):
    pass


class InconsistentCevians(RitzError):
    pass


class NotNormalized(InputError):
    pass


class NormalizationFailed(RitzError):
    pass


class CoincidentConjugates(NormalizationFailed):
    pass


# verify
class RankOutOfRange(InputError):
    pass


class BadCount(InputError):
    pass
