"""Exception hierarchy.

Every error raised while reading or validating an input is an
``InputError``; the CLI maps those to exit code 1.
"""
from __future__ import annotations


class ReticError(Exception):
    """Base class; ``witness`` holds whatever reproduces the problem."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class InputError(ReticError):
    pass


class ParseError(InputError):
    pass


class ArityMismatch(InputError):
    pass


class RangeViolation(InputError):
    pass


class SignatureMismatch(InputError):
    pass


class NotACongruence(InputError):
    pass


class NotAMorphism(InputError):
    pass


class NotARing(InputError):
    pass


class LatticeLawViolation(InputError):
    pass


class CommutatorAxiomViolation(InputError):
    pass


class CompactSetViolation(InputError):
    pass


class JoinDensityViolation(InputError):
    pass


class CommutatorAsymmetry(ReticError):
    """The two orientations of the pair-algebra construction disagree."""


class BasisViolation(ReticError):
    pass


class DistributivityViolation(ReticError):
    pass


class NotWellDefined(ReticError):
    pass
