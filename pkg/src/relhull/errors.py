"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command-line front end:
2 parse, 3 range/precondition, 4 engine capability, 5 enumeration budget.
"""

from __future__ import annotations


class RelHullError(Exception):
    exit_code = 1


class ParseError(RelHullError):
    exit_code = 2


class RangeError(RelHullError):
    """Bad argument: out of range, mismatched shapes, violated precondition."""

    exit_code = 3


class CapabilityError(RelHullError):
    """The engine could not produce what was asked for."""

    exit_code = 4


class EnumerationTooLarge(RelHullError):
    exit_code = 5

    def __init__(self, size: int, budget: int):
        super().__init__(f"enumeration of {size} words exceeds budget {budget}")
        self.size = size
        self.budget = budget


# finite field
class NonPrimeCharacteristic(RangeError):
    pass


class ReducibleModulus(RangeError):
    pass


class FieldTooLarge(RangeError):
    pass


class MixedFields(RangeError):
    pass


class ExponentOutOfRange(RangeError):
    pass


class DivisionByZero(RangeError, ZeroDivisionError):
    pass


# matrices and codes
class DimensionMismatch(RangeError):
    pass


class LengthMismatch(DimensionMismatch):
    pass


class ZeroScalingEntry(RangeError):
    pass


class EmptyGenerator(RangeError):
    pass


class UndefinedDistance(RangeError):
    """Minimum distance of the zero code."""


class IndexOutOfRange(RangeError):
    pass


# hull engine
class TargetOutOfRange(RangeError):
    pass


class AlreadyAtLowerBound(RangeError):
    pass


class PreconditionViolated(RangeError):
    pass


class NoWitnessFound(CapabilityError):
    pass


class ConditionUnsatisfiable(CapabilityError):
    pass


class IncreaseHypothesisNotWitnessed(CapabilityError):
    pass


# quantum codes
class DegenerateDelta(CapabilityError):
    """Both set differences in the distance formula are empty.

    The dimension parameters are still well defined and are attached.
    """

    def __init__(self, n: int, kappa: int, c: int):
        super().__init__(f"minimum distance undefined for [[{n},{kappa},?;{c}]]: both differences empty")
        self.n = n
        self.kappa = kappa
        self.c = c


class OddExtensionDegree(CapabilityError):
    pass


class NotPureInput(RangeError):
    pass


class SandwichViolated(RangeError):
    pass


class PurityNotPreserved(CapabilityError):
    pass


class ConditionViolated(RangeError):
    def __init__(self, condition: int, message: str):
        super().__init__(f"condition ({condition}) violated: {message}")
        self.condition = condition


class EmptyDifference(RangeError):
    pass


class NotDecreasing(RangeError):
    pass


class DistanceTooSmall(RangeError):
    pass


class WeightOneAmbiguity(RangeError):
    pass


# evaluation codes
class ExponentOutOfBox(RangeError):
    pass


class DOutOfRange(RangeError):
    pass


class NoTwistFound(CapabilityError):
    pass
