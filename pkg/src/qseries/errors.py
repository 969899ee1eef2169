class QSeriesError(ValueError):
    """Base class for all errors raised by this package."""


class NonUnitConstantTerm(QSeriesError):
    pass


class ResidueOutOfRange(QSeriesError):
    pass


class OrderExceeded(QSeriesError):
    pass


class DivergentSpec(QSeriesError):
    pass


class BadResidue(QSeriesError):
    pass


class InsufficientOrder(QSeriesError):
    pass


class BuildFailure(QSeriesError):
    def __init__(self, entry_id, cause):
        super().__init__(f"{entry_id}: {cause}")
        self.entry_id = entry_id
        self.cause = cause
