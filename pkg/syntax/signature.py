# syntax/signature.py
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional

from shared.errors import IllegalTypeParameter, RedefinedName
from syntax.types import EPS, O, Fun, Pair, TypeExpr, fn
from syntax.wff import Const, Wff

# ==========================
# Logical constants (one family per name, instantiated per type)
# ==========================
Q_NAME, IOTA_NAME, PAIR_NAME = "Q", "iota", "pair"
EPS_FAMILIES: Dict[str, TypeExpr] = {
    "var": fn(O, EPS),
    "con": fn(O, EPS),
    "app": fn(EPS, EPS, EPS),
    "abs": fn(EPS, EPS, EPS),
    "cond": fn(EPS, EPS, EPS, EPS),
    "quot": fn(EPS, EPS),
    "eval": fn(EPS, EPS, EPS),
    "eval-free": fn(O, EPS),
    "not-free-in": fn(O, EPS, EPS),
    "cleanse": fn(EPS, EPS),
    "sub": fn(EPS, EPS, EPS, EPS),
}
WFF_NAME = "wff"
LOGICAL_NAMES = frozenset({Q_NAME, IOTA_NAME, PAIR_NAME, WFF_NAME, *EPS_FAMILIES})


def Q(alpha: TypeExpr) -> Const:
    return Const(Q_NAME, fn(O, alpha, alpha))


def iota(alpha: TypeExpr) -> Const:
    if alpha == O:
        raise IllegalTypeParameter("iota at type o is not a primitive constant")
    return Const(IOTA_NAME, Fun(alpha, Fun(O, alpha)))


def pair_c(alpha: TypeExpr, beta: TypeExpr) -> Const:
    return Const(PAIR_NAME, fn(Pair(alpha, beta), beta, alpha))


def wff_c(alpha: TypeExpr) -> Const:
    return Const(WFF_NAME, fn(O, EPS), alpha)


def eps_c(name: str) -> Const:
    return Const(name, EPS_FAMILIES[name])


VAR, CON, APP, ABS, COND, QUOT, EVAL = (eps_c(n) for n in ("var", "con", "app", "abs", "cond", "quot", "eval"))
EVAL_FREE, NFI, CLEANSE, SUB = (eps_c(n) for n in ("eval-free", "not-free-in", "cleanse", "sub"))
Q_OOO = Q(O)


def logical_type_ok(c: Const) -> bool:
    """True when ``c`` is a legal instance of a logical-constant family."""
    t = c.ty
    if c.name == Q_NAME:
        return c.index is None and isinstance(t, Fun) and isinstance(t.result, Fun) \
            and t.result.result == O and t.result.arg == t.arg
    if c.name == IOTA_NAME:
        return c.index is None and isinstance(t, Fun) and t.result != O and t.arg == Fun(O, t.result)
    if c.name == PAIR_NAME:
        if c.index is not None or not (isinstance(t, Fun) and isinstance(t.result, Fun)):
            return False
        p = t.result.result
        return isinstance(p, Pair) and p.first == t.arg and p.second == t.result.arg
    if c.name == WFF_NAME:
        return c.index is not None and t == fn(O, EPS)
    if c.name in EPS_FAMILIES:
        return c.index is None and t == EPS_FAMILIES[c.name]
    return False


def family_instance(name: str, params: list[TypeExpr]) -> Const:
    """Logical constant by (family, type parameters)."""
    if name == Q_NAME and len(params) == 1:
        return Q(params[0])
    if name == IOTA_NAME and len(params) == 1:
        return iota(params[0])
    if name == PAIR_NAME and len(params) == 2:
        return pair_c(*params)
    if name == WFF_NAME and len(params) == 1:
        return wff_c(params[0])
    if name in EPS_FAMILIES and not params:
        return eps_c(name)
    raise IllegalTypeParameter(f"no logical constant {name} with parameters {params}")


# ==========================
# Signature
# ==========================
@dataclass
class Signature:
    consts: Dict[str, TypeExpr] = field(default_factory=dict)   # nonlogical constants
    defs: Dict[str, Wff] = field(default_factory=dict)          # named abbreviations (closed, expanded)

    def declare(self, name: str, ty: TypeExpr) -> None:
        if name in LOGICAL_NAMES:
            raise RedefinedName(f"{name} is a logical constant")
        if name in self.consts or name in self.defs:
            raise RedefinedName(f"{name} is already declared")
        self.consts[name] = ty

    def define(self, name: str, body: Wff) -> None:
        if name in LOGICAL_NAMES or name in self.consts or name in self.defs:
            raise RedefinedName(f"{name} is already declared")
        self.defs[name] = body

    def resolves(self, c: Const) -> bool:
        if c.name in LOGICAL_NAMES:
            return logical_type_ok(c)
        return c.index is None and self.consts.get(c.name) == c.ty

    def is_primitive(self, c: Wff) -> bool:
        return isinstance(c, Const) and self.resolves(c)

    def lookup_def(self, name: str) -> Optional[Wff]:
        return self.defs.get(name)

    def copy(self) -> "Signature":
        return Signature(dict(self.consts), dict(self.defs))
