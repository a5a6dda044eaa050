"""Positioned diagnostics raised by the pipeline stages."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SourcePos:
    """A point in an input file (1-based line, 1-based column)."""

    file: str
    line: int
    col: int

    def __str__(self) -> str:
        return f"{self.file}:{self.line}:{self.col}"

    def key(self):
        return (self.line, self.col)


class Diagnostic(Exception):
    """Base class for all positioned errors.

    `code` is the stable diagnostic name used in CLI output and tests;
    subclasses pin it so callers can match on either the class or the code.
    """

    code = "Error"

    def __init__(self, message: str, pos: SourcePos | None = None):
        super().__init__(message)
        self.message = message
        self.pos = pos

    def __str__(self) -> str:
        loc = f"{self.pos}: " if self.pos else ""
        return f"{loc}{self.code}: {self.message}"


# frontend

class ParseError(Diagnostic):
    code = "SyntaxError"

    def __init__(self, message, pos=None, expected=()):
        super().__init__(message, pos)
        self.expected = tuple(expected)


class UnknownClauseError(Diagnostic):
    code = "UnknownClause"


# sema

class TypeCheckError(Diagnostic):
    code = "TypeError"


class LogicInCodeError(Diagnostic):
    code = "LogicInCode"


class GhostWritesRealError(Diagnostic):
    code = "GhostWritesReal"


class UnresolvedNameError(Diagnostic):
    code = "UnresolvedName"


# elaborator

class ImpureLemmaError(Diagnostic):
    code = "ImpureLemma"


class ConflictingClauseError(Diagnostic):
    code = "ConflictingClause"


class ForwardLemmaUseError(Diagnostic):
    code = "ForwardLemmaUse"

    def __init__(self, message, pos=None, target_pos=None):
        super().__init__(message, pos)
        self.target_pos = target_pos


class AlreadyElaboratedError(Diagnostic):
    code = "AlreadyElaborated"


# vcgen

class MissingLoopInvariantError(Diagnostic):
    code = "MissingLoopInvariant"


class MissingLoopVariantError(Diagnostic):
    code = "MissingLoopVariant"


class MissingDecreasesError(Diagnostic):
    code = "MissingDecreases"


# smt backend

class UnsupportedConstructError(Diagnostic):
    code = "UnsupportedConstruct"


class SolverFailure(Diagnostic):
    code = "SolverError"


# oracle

class FuelExhausted(Exception):
    """A recursive logic definition did not bottom out within the fuel bound."""


class Trap(Exception):
    """Concrete execution hit a runtime error (invalid access, fuel, overflow)."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason
