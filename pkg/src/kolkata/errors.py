"""Exception hierarchy shared by all modules."""


class InequalityError(Exception):
    """Base class for every error raised by this package."""


class EmptyInput(InequalityError, ValueError):
    pass


class NegativeValue(InequalityError, ValueError):
    def __init__(self, index, value=None):
        self.index = index
        self.value = value
        super().__init__(f"negative value {value!r} at index {index}")


class NonPositiveCount(InequalityError, ValueError):
    def __init__(self, index, count=None):
        self.index = index
        self.count = count
        super().__init__(f"count must be a positive integer, got {count!r} at index {index}")


class AllZeroIncome(InequalityError, ValueError):
    def __init__(self):
        super().__init__("at least one income must be positive")


class ParameterOutOfDomain(InequalityError, ValueError):
    def __init__(self, name, constraint, value=None):
        self.name = name
        self.constraint = constraint
        self.value = value
        super().__init__(f"parameter {name}={value!r} violates {constraint}")


class DomainError(InequalityError, ValueError):
    """A population or income share outside [0, 1]."""


class CountTooSmall(InequalityError, ValueError):
    pass


class ConvergenceFailure(InequalityError, ArithmeticError):
    pass


class OrderingViolation(InequalityError, AssertionError):
    """normalized k <= Pietra <= Gini failed; indicates a bug, not bad input."""


class InsufficientPoints(InequalityError, ValueError):
    pass


class DegenerateWindow(InequalityError, ValueError):
    pass


class NoFixedPointInRange(InequalityError, ValueError):
    pass


class ParseError(InequalityError, ValueError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{reason}")
