"""Exception hierarchy shared by every module."""

from __future__ import annotations


class LoopHopfError(Exception):
    """Base class for all errors raised by loophopf."""


class InvalidInputError(LoopHopfError, ValueError):
    """A precondition on the arguments does not hold."""


class IncompatibleFieldError(InvalidInputError):
    """Operands live over different finite fields or truncation bounds."""


class NotInvertibleError(LoopHopfError, ArithmeticError):
    """Division by zero, or inversion of a non-invertible endomorphism."""


class ExtensionRequiredError(LoopHopfError):
    """A root exists only in a proper extension of the working field."""

    def __init__(self, message: str, degree: int):
        super().__init__(message)
        self.degree = degree


class VerificationError(LoopHopfError):
    """A constructed table failed the Hopf axiom verifier."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class NotHopfError(VerificationError):
    """The bialgebra has no two-sided antipode."""


class ClassificationError(LoopHopfError):
    """A table lies outside the classified family (non-commutative, wrong dimension, ...)."""


class TableFormatError(InvalidInputError):
    """A table file does not follow the canonical JSON layout."""
