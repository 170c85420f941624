# syntax/types.py
from __future__ import annotations

from dataclasses import dataclass
from typing import Union


# ==========================
# Type symbols
# ==========================
@dataclass(frozen=True)
class Base:
    name: str               # "i", "o" or "eps"

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Fun:
    result: "TypeExpr"      # (result arg): functions from arg to result
    arg: "TypeExpr"

    def __str__(self) -> str:
        return f"({self.result} {self.arg})"


@dataclass(frozen=True)
class Pair:
    first: "TypeExpr"
    second: "TypeExpr"

    def __str__(self) -> str:
        return f"<{self.first}, {self.second}>"


@dataclass(frozen=True)
class TVar:
    """Type metavariable; appears only in axiom catalogue patterns."""
    name: str

    def __str__(self) -> str:
        return self.name


TypeExpr = Union[Base, Fun, Pair]

IOTA = Base("i")
O = Base("o")
EPS = Base("eps")


def fn(*tys: TypeExpr) -> TypeExpr:
    """fn(a, b, c) builds ((a b) c), the left-nested result-first notation."""
    out = tys[0]
    for t in tys[1:]:
        out = Fun(out, t)
    return out


def unify(pattern, ty: TypeExpr, env: dict[str, TypeExpr]) -> bool:
    """Match a type pattern (possibly with TVars) against a concrete type, extending env."""
    if isinstance(pattern, TVar):
        bound = env.get(pattern.name)
        if bound is None:
            env[pattern.name] = ty
            return True
        return bound == ty
    if isinstance(pattern, Base):
        return pattern == ty
    if isinstance(pattern, Fun):
        return isinstance(ty, Fun) and unify(pattern.result, ty.result, env) and unify(pattern.arg, ty.arg, env)
    if isinstance(pattern, Pair):
        return isinstance(ty, Pair) and unify(pattern.first, ty.first, env) and unify(pattern.second, ty.second, env)
    return False


def resolve(pattern, env: dict[str, TypeExpr]) -> TypeExpr:
    if isinstance(pattern, TVar):
        if pattern.name not in env:
            raise KeyError(pattern.name)
        return env[pattern.name]
    if isinstance(pattern, Fun):
        return Fun(resolve(pattern.result, env), resolve(pattern.arg, env))
    if isinstance(pattern, Pair):
        return Pair(resolve(pattern.first, env), resolve(pattern.second, env))
    return pattern
