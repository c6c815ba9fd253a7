"""Exception hierarchy shared by every module of the package."""


class AntimagicError(Exception):
    """Base class for all errors raised by this package."""


class LabelSetInvalid(AntimagicError):
    """The labels are not a bijection onto 1..m."""


class NotAntimagic(AntimagicError):
    """Two vertices share a vertex sum, so the induced ordering is undefined."""


class NotStronglyAntimagic(AntimagicError):
    pass


class ShapeInvalid(AntimagicError):
    pass


class TargetInvalid(AntimagicError):
    """An extension target violates the degree-gap precondition."""


class AlreadyAdjacent(AntimagicError):
    pass


class EmptyClass(AntimagicError):
    pass


class VerificationFailed(AntimagicError):
    """A construction produced a labeling that the verifier rejects."""


class HasLeaves(AntimagicError):
    pass


class LeafCountInvalid(AntimagicError):
    pass


class IndexInvalid(AntimagicError):
    pass


class LayoutInvalid(AntimagicError):
    pass


class NotReduced(AntimagicError):
    pass


class SubcaseUnmatched(AntimagicError):
    pass


class ShapeMismatch(AntimagicError):
    pass


class ResidualUnsolved(AntimagicError):
    """A reduced double spider outside the covered cases was too large to search."""

    def __init__(self, message, shape=None):
        super().__init__(message)
        self.shape = shape


class BudgetExceeded(AntimagicError):
    """The search ran out of nodes or time before it could decide."""


class ParseError(AntimagicError):
    pass
