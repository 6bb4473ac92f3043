"""Exception hierarchy shared by every module of the package."""


class StabMultError(Exception):
    """Base class for all computation errors raised by stabmult."""


class SizeMismatchError(StabMultError, ValueError):
    pass


class LengthError(StabMultError, ValueError):
    pass


class DimensionMismatchError(StabMultError, ValueError):
    pass


class NonDominantWeightError(StabMultError, ValueError):
    pass


class NonPartitionError(StabMultError, ValueError):
    """A stretched offset ``a + n*direction`` stopped being weakly decreasing."""


class NotWeylInvariantError(StabMultError, ValueError):
    pass


class GradingViolationError(StabMultError, ValueError):
    pass


class CutoffError(StabMultError, RuntimeError):
    """The layer at the proven degree cutoff contributed; the cutoff is wrong."""


class NegativeMultiplicityError(StabMultError, RuntimeError):
    """A quotient module came out with a negative weight multiplicity."""


class NonAdditiveMatrixError(StabMultError, ValueError):
    pass


class DegreeCapError(StabMultError, ValueError):
    pass


class WindowError(StabMultError, ValueError):
    pass


class CacheConflictError(StabMultError, RuntimeError):
    pass
