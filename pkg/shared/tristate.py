from __future__ import annotations
from enum import Enum
from typing import Callable, Iterable


class TriState(Enum):
    FALSE = 0
    TRUE = 1
    UNKNOWN = 2

    def is_true(self) -> bool:
        return self is TriState.TRUE

    def is_false(self) -> bool:
        return self is TriState.FALSE

    def is_unknown(self) -> bool:
        return self is TriState.UNKNOWN

    def to_bool(self) -> bool:
        if self is TriState.UNKNOWN:
            raise ValueError("UNKNOWN has no boolean value")
        return self is TriState.TRUE

    @staticmethod
    def from_bool(b: bool) -> "TriState":
        return TriState.TRUE if b else TriState.FALSE

    @staticmethod
    def all(args: Iterable["TriState"]) -> "TriState":
        args = list(args)
        if any(a.is_false() for a in args):
            return TriState.FALSE
        if any(a.is_unknown() for a in args):
            return TriState.UNKNOWN
        return TriState.TRUE

    @staticmethod
    def any(args: Iterable["TriState"]) -> "TriState":
        args = list(args)
        if any(a.is_true() for a in args):
            return TriState.TRUE
        if any(a.is_unknown() for a in args):
            return TriState.UNKNOWN
        return TriState.FALSE

    @staticmethod
    def all_lazy(thunks: Iterable[Callable[[], "TriState"]]) -> "TriState":
        """Conjunction that stops at the first FALSE."""
        unknown = False
        for t in thunks:
            v = t()
            if v.is_false():
                return TriState.FALSE
            unknown = unknown or v.is_unknown()
        return TriState.UNKNOWN if unknown else TriState.TRUE

    @staticmethod
    def not_(arg: "TriState") -> "TriState":
        if arg.is_true():
            return TriState.FALSE
        if arg.is_false():
            return TriState.TRUE
        return TriState.UNKNOWN

    def __str__(self) -> str:
        return self.name.lower()
