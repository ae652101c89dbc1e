"""Exception hierarchy.

Every error raised on bad input derives from :class:`DesignError`, so callers
that only care about "this input is unusable" can catch one type.
"""


class DesignError(ValueError):
    pass


class ValidationError(DesignError):
    """The block list does not form a (v, k, lambda)-design."""


class PairCoverageViolation(ValidationError):
    def __init__(self, pair: tuple[int, int], count: int, lam: int):
        self.pair = pair
        self.count = count
        self.lam = lam
        super().__init__(
            f"pair {{{pair[0]},{pair[1]}}} is covered {count} times, expected {lam}"
        )


class BlockSizeViolation(ValidationError):
    def __init__(self, index: int, size: int, k: int):
        self.index = index
        self.size = size
        self.k = k
        super().__init__(f"block {index + 1} has {size} points, expected {k}")


class TrivialDesign(ValidationError):
    pass


class NotSymmetric(DesignError):
    pass


class DegenerateResidual(DesignError):
    pass


class DegenerateDerived(DesignError):
    pass


class NotPrime(DesignError):
    pass


class BadOrder(DesignError):
    pass


class DifferenceCoverageViolation(DesignError):
    pass


class NotSteiner(DesignError):
    pass


class NotSts(DesignError):
    pass


class GirthTooSmall(DesignError):
    pass


class InconsistentTauBeta(DesignError):
    pass


class InvalidConfiguration(DesignError):
    pass


class DesignSyntaxError(DesignError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class InstanceTooLarge(DesignError):
    pass


class BudgetExceeded(RuntimeError):
    """An enumeration hit its node or size budget before finishing."""


class IncompleteEnumeration(DesignError):
    pass
