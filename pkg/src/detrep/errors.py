"""Exception hierarchy shared by all detrep modules."""


class DetrepError(Exception):
    """Base class for every error raised by this package."""


class SingularMatrix(DetrepError, ArithmeticError):
    pass


class BothZero(DetrepError, ValueError):
    pass


class ZeroColumn(DetrepError, ValueError):
    pass


class ZeroPolynomial(DetrepError, ValueError):
    pass


class ZeroMatrix(DetrepError, ValueError):
    pass


class DimensionMismatch(DetrepError, ValueError):
    pass


class BadDimensions(DetrepError, ValueError):
    pass


class NotIndependent(DetrepError, ValueError):
    """The entries of a linear-form matrix are linearly dependent."""


class RankNotOne(DetrepError, ValueError):
    def __init__(self, rank, message=None):
        self.rank = rank
        super().__init__(message or f"expected a rank-one matrix, got rank {rank}")


class NotEquivalent(DetrepError):
    """Refutation of equivalence, carrying the reason and a concrete witness."""

    def __init__(self, reason, witness=None, message=None):
        self.reason = reason
        self.witness = witness
        super().__init__(message or reason)


class NotInSpan(NotEquivalent, ValueError):
    def __init__(self, entry, message=None):
        super().__init__("entry-not-in-span", entry,
                         message or f"entry {entry} is not in the span of the reference entries")


class InvariantViolation(DetrepError, AssertionError):
    """An internal consistency check failed."""


class BothBranchesSucceed(InvariantViolation):
    """Both A = S B T and A = S B^t T verified; never expected for r >= 1."""


class NotContained(DetrepError, ValueError):
    pass


class RankUnexpected(DetrepError, ValueError):
    def __init__(self, expected, found):
        self.expected = expected
        self.found = found
        super().__init__(f"generic rank along the curve is {found}, expected {expected}")


class TrivialKernel(DetrepError, ValueError):
    pass


class RankTooLow(DetrepError, ValueError):
    pass


class LiftFailed(DetrepError, ValueError):
    pass


class FormatError(DetrepError, ValueError):
    """Malformed instance file."""
