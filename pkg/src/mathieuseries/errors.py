"""Exception types shared across the package."""


class OrderOverflowError(ValueError):
    """A polynomial / derivative order beyond the supported cap was requested."""


class ParameterError(ValueError):
    """A parameter combination violates the domain constraints of a series."""


class RegimeError(ParameterError):
    """An operation restricted to (gamma, alpha) in Z+ x N was called outside it."""


class ToleranceError(RuntimeError):
    """The requested tolerance cannot be met within the term/evaluation budget."""


class SearchBudgetError(RuntimeError):
    """An extremum search exhausted its evaluation budget."""


class WitnessNotFoundError(RuntimeError):
    """A counterexample scan finished without finding a witness (reported, not fatal)."""


class CrossValidationError(RuntimeError):
    """Two independently computed error brackets for the same quantity do not overlap."""
