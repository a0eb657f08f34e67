"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command-line front end:
2 for malformed input, 3 for semantic errors, 4 for resource limits.
"""


class VanidealError(Exception):
    exit_code = 3


class ParseError(VanidealError, ValueError):
    exit_code = 2

    def __init__(self, message, position=None, line=None):
        self.position = position
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"col {position}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class NotPrimePower(VanidealError, ValueError):
    pass


class FieldMismatch(VanidealError, ValueError):
    pass


class DivisionByZero(VanidealError, ZeroDivisionError):
    pass


class RingMismatch(VanidealError, ValueError):
    pass


class ZeroPolynomial(VanidealError, ValueError):
    pass


class DimensionMismatch(VanidealError, ValueError):
    pass


class EmptyInput(VanidealError, ValueError):
    pass


class ZeroIdeal(VanidealError, ValueError):
    pass


class NotHomogeneous(VanidealError, ValueError):
    pass


class UnitIdeal(VanidealError, ValueError):
    pass


class EmptyVariety(VanidealError, ValueError):
    pass


class EmptyPointSet(VanidealError, ValueError):
    pass


class NonvanishingWitnessInvalid(VanidealError, ValueError):
    pass


class SizeLimit(VanidealError):
    exit_code = 4


class IterationLimit(VanidealError):
    """A fixpoint iteration did not stabilise within its round cap."""

    exit_code = 4
