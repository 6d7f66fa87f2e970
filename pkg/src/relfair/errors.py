"""Exception hierarchy. Every error names the invariant it guards."""


class RelfairError(ValueError):
    """Base class for input and validation errors."""


class EmptyInput(RelfairError):
    pass


class DimensionMismatch(RelfairError):
    pass


class DegenerateProblem(RelfairError):
    """Some individual has zero ability: b_i(X) = 0."""


class NonpositiveScale(RelfairError):
    pass


class NonpositiveShift(RelfairError):
    pass


class PointNotInProblem(RelfairError):
    pass


class NotInSimplex(RelfairError):
    pass


class BadParameter(RelfairError):
    pass


class BadNorm(RelfairError):
    pass


class MonotonicityViolation(RelfairError):
    """Mean-minus-norm objective is not weakly monotone for this penalty."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NonMonotoneRule(RelfairError):
    """The rule's objective is not nondecreasing, so corner maximization is unsound."""


class PrecisionUnavailable(RelfairError):
    pass


class NonConvergence(RelfairError):
    pass


class BadInstance(RelfairError):
    """An axiom instance does not satisfy the axiom's preconditions."""


class BudgetExceeded(RelfairError):
    pass
