# errors.py – exception hierarchy shared by every module

from __future__ import annotations

from dataclasses import dataclass


class WirecatError(Exception):
    """Root of all errors raised on bad input."""


@dataclass(frozen=True)
class Diagnostic:
    """One problem found while validating a signature."""

    kind: str
    declaration: str
    message: str

    def __str__(self) -> str:
        return f"{self.kind} in {self.declaration}: {self.message}"


class SignatureError(WirecatError):
    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))


class DuplicateId(WirecatError):
    pass


class UnknownReference(WirecatError):
    pass


class EndpointMismatch(WirecatError):
    pass


class SearchBudgetExceeded(WirecatError):
    """The equality search visited more diagrams than allowed: verdict unknown."""

    def __init__(self, visited: int, limit: int):
        self.visited = visited
        self.limit = limit
        super().__init__(f"search budget exceeded after {visited} diagrams (limit {limit})")


class CellMisapplied(WirecatError):
    def __init__(self, index: int, reason: str):
        self.index = index
        self.reason = reason
        super().__init__(f"cell {index}: {reason}")


class NotUnitEndomorphism(WirecatError):
    pass


class UnassignedGenerator(WirecatError):
    pass


class ModelError(WirecatError):
    pass


class MalformedTables(ModelError):
    pass


class InconsistentTables(ModelError):
    pass


class AxiomPrereqFailed(ModelError):
    pass


class NotOneObject(ModelError):
    pass


class DSLSyntaxError(WirecatError):
    def __init__(self, line: int, column: int, expected: str, text: str = ""):
        self.line = line
        self.column = column
        self.expected = expected
        self.got = text
        msg = f"syntax error at line {line}, column {column}: expected {expected}"
        if text:
            msg += f" (got {text!r})"
        super().__init__(msg)


class InvalidMove(WirecatError):
    """A structural move was requested where its shape does not occur."""
