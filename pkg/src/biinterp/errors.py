"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class BiinterpError(Exception):
    """Base class for every error raised by this package."""


# group construction / validation

class GroupError(BiinterpError):
    pass


class NotLatinSquare(GroupError):
    pass


class NoIdentityAtZero(GroupError):
    pass


class NotAssociative(GroupError):
    pass


class NotAPermutation(GroupError):
    pass


class GroupTooLarge(GroupError):
    pass


# extension data

class NotNormal(BiinterpError):
    pass


class TrivialH(BiinterpError):
    pass


class TrivialIndex(BiinterpError):
    pass


# logic

class FormulaSyntaxError(BiinterpError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class UnboundVariable(BiinterpError):
    pass


class UnboundParameter(BiinterpError):
    pass


class ComplexityCap(BiinterpError):
    def __init__(self, message: str, estimate: int | None = None):
        super().__init__(message)
        self.estimate = estimate


class NotGenerating(BiinterpError):
    pass


class ArityMismatch(BiinterpError):
    pass


# encoding / interpretations

class NotInGamma(BiinterpError):
    pass


class EncodingCollision(BiinterpError):
    def __init__(self, message: str, collisions):
        super().__init__(message)
        self.collisions = collisions


class NotAutomorphism(BiinterpError):
    pass


class KappaMismatch(BiinterpError):
    def __init__(self, message: str, missing, extra):
        super().__init__(message)
        self.missing = missing
        self.extra = extra


class FormulaExactnessFailure(BiinterpError):
    def __init__(self, message: str, counterexample):
        super().__init__(message)
        self.counterexample = counterexample


class GraphMismatch(BiinterpError):
    def __init__(self, message: str, counterexample):
        super().__init__(message)
        self.counterexample = counterexample
