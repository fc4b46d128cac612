"""Exception hierarchy.

Every error raised deliberately by the package derives from
:class:`PTSpectraError`, so callers (the CLI in particular) can catch the
whole family at once and map subclasses to exit codes.
"""


class PTSpectraError(ValueError):
    pass


# special functions
class DegenerateRecurrence(PTSpectraError):
    pass


class DegreeTooLarge(PTSpectraError):
    pass


# potential specification / evaluation
class PtViolation(PTSpectraError):
    pass


class SingularShift(PTSpectraError):
    pass


class NonPositiveScale(PTSpectraError):
    pass


class PoleHit(PTSpectraError):
    pass


class AsymmetricGrid(PTSpectraError):
    pass


# spectra
class ZeroDenominator(PTSpectraError):
    pass


class NotApplicable(PTSpectraError):
    pass


class NoImaginaryParameter(PTSpectraError):
    pass


# wavefunctions
class BranchAmbiguity(PTSpectraError):
    pass


class GridTooCoarse(PTSpectraError):
    pass


# numerical solve
class UnsupportedFamily(PTSpectraError):
    pass


class ConvergenceFailure(PTSpectraError):
    pass


class UsageError(PTSpectraError):
    pass
