"""Exception types shared across the package."""


class RootLociError(Exception):
    pass


class DivisionByZero(RootLociError, ZeroDivisionError):
    pass


class ZeroFunction(RootLociError):
    pass


class PoleAtPoint(RootLociError):
    pass


class NotAdmissible(RootLociError):
    pass


class WeightMismatch(RootLociError):
    pass


class NotSymmetric(RootLociError):
    pass


class BadPattern(RootLociError):
    pass


class GenericityFailure(RootLociError):
    pass


class SingularSystem(RootLociError):
    pass


class NonExactDivision(RootLociError):
    pass


class NoRepresentation(RootLociError):
    pass


class ProportionalityFailure(RootLociError):
    pass


class NeitherStructure(RootLociError):
    pass


class ParseError(RootLociError):
    pass
