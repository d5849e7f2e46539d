"""Exception hierarchy shared by all modules."""


class QuotientClosedError(Exception):
    pass


class QuiverError(QuotientClosedError, ValueError):
    pass


class CycleError(QuiverError):
    pass


class NumberingError(QuiverError):
    pass


class DisconnectedError(QuiverError):
    pass


class NotFiniteType(QuotientClosedError):
    pass


class CapExceeded(QuotientClosedError):
    pass


class NotASubword(QuotientClosedError):
    pass


class NotReduced(QuotientClosedError):
    pass


class NotARoot(QuotientClosedError):
    pass


class TheoremViolation(QuotientClosedError):
    """A computation contradicted a proven statement. Indicates a bug."""


class ZeroModuleHit(TheoremViolation):
    pass


class AmbiguousMaximum(TheoremViolation):
    pass


class CriterionMismatch(TheoremViolation):
    pass


class CrossCheckMismatch(TheoremViolation):
    pass


class NotSortable(QuotientClosedError):
    pass


class DecompositionFailure(QuotientClosedError):
    pass


class FieldTooLargeForEnumeration(QuotientClosedError):
    pass
