"""Error hierarchy. Every error carries ``kind`` (its class name) for reports."""
from __future__ import annotations


class QuqeError(Exception):
    @property
    def kind(self) -> str:
        return type(self).__name__


# ========================== syntax ==========================
class WffSyntaxError(QuqeError):
    def __init__(self, msg: str, line: int | None = None, column: int | None = None):
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{msg}{where}")
        self.line = line
        self.column = column


class TypeCheckError(QuqeError):
    pass


class UnknownConstant(TypeCheckError):
    pass


class TypeMismatch(TypeCheckError):
    def __init__(self, msg: str, path: str = "/"):
        super().__init__(f"{msg} (at {path})")
        self.path = path


class EvalArgNotEpsilon(TypeCheckError):
    pass


class IllegalTypeParameter(QuqeError):
    pass


class NotEvaluationFree(QuqeError):
    pass


class HoleTypeMismatch(QuqeError):
    pass


# ========================== algebra / engine ==========================
class RecursionDepthExceeded(QuqeError):
    pass


class FuelExhausted(QuqeError):
    pass


class IllTyped(TypeCheckError):
    pass


class NotFormula(QuqeError):
    pass


# ========================== kernel ==========================
class KernelError(QuqeError):
    pass


class UnknownSchema(KernelError):
    pass


class SideConditionViolated(KernelError):
    def __init__(self, which: str):
        super().__init__(f"side condition violated: {which}")
        self.which = which


class IllTypedParams(KernelError):
    pass


class IllegalPath(KernelError):
    pass


class MismatchAtPath(KernelError):
    pass


class NotAnEquation(KernelError):
    pass


class NotModusPonens(KernelError):
    pass


class BadReference(KernelError):
    pass


class HypothesisNotAdmissible(KernelError):
    pass


class PreconditionNotDischarged(KernelError):
    pass


class SubstUndefined(KernelError):
    pass


class SubstUnknown(KernelError):
    pass


# ========================== files / stdlib ==========================
class ScriptError(QuqeError):
    def __init__(self, msg: str, source: str | None = None, line: int | None = None):
        where = f"{source}:{line}: " if source and line is not None else f"{source}: " if source else ""
        super().__init__(f"{where}{msg}")
        self.source = source
        self.line = line


class RedefinedName(QuqeError):
    pass


class ScriptFailed(QuqeError):
    def __init__(self, name: str, line: int | None, reason: str = ""):
        super().__init__(f"{name} failed at line {line}: {reason}")
        self.name = name
        self.line = line


class NotFormulaLiteral(QuqeError):
    pass


class UsageError(QuqeError):
    pass


class LineMismatch(KernelError):
    pass
