"""Exception hierarchy shared by every module of the package."""


class CartanError(Exception):
    """Base class for all domain errors raised by supercartan."""


class DataError(CartanError):
    """Input data violates a documented contract (CLI exit code 65)."""


# scalar field
class DivisionByZero(DataError, ZeroDivisionError):
    pass


class IncompatibleFields(DataError):
    pass


class NegativeDiscriminant(DataError):
    pass


# Cartan data model
class ZeroRow(DataError):
    pass


class EmptySubset(DataError):
    pass


class InvariantViolation(DataError):
    pass


class Decomposable(DataError):
    pass


# reflections
class NotIsotropic(DataError):
    pass


class IsotropicVertex(DataError):
    pass


class NotIntegral(DataError):
    pass


# orbits
class TooLarge(DataError):
    pass


# classification
class InvalidParameters(DataError):
    pass


class EvenCrossCount(InvalidParameters):
    pass


class TooSmall(InvalidParameters):
    pass


class BranchClassificationFailure(CartanError):
    """The two Q-system branches violate the expected inequalities; signals a bug."""


# growth / oracle
class NotGCM(DataError):
    pass


class TooFewDegrees(DataError):
    pass


class BasisTooLarge(DataError):
    pass


class SpecSyntaxError(DataError):
    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
