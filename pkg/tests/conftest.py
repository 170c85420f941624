"""Seeded random wffs for the property tests.

Corpus sizes are scaled down for the default run; set ``QUQE_FULL=1`` for
the full acceptance sizes.
"""
from __future__ import annotations

import os
import random

import pytest

from syntax import sugar as S
from syntax.types import EPS, IOTA, O, Fun, TypeExpr
from syntax.wff import Abs, App, Cond, Const, Eval, Quote, Var, Wff

FULL = os.getenv("QUQE_FULL", "") not in ("", "0")
BASES: tuple[TypeExpr, ...] = (IOTA, O, EPS)
NAMES = ("x", "y", "z")
SEED = 20241017


def scaled(full: int, quick: int) -> int:
    return full if FULL else quick


class WffGen:
    """Random well-typed wffs over the base types.

    ``closed`` draws variables only from enclosing binders; ``ef`` puts
    evaluations inside quotations only.
    """

    def __init__(self, seed: int = SEED, leaf: float = 0.35):
        self.rng = random.Random(seed)
        self.leaf = leaf

    def ty(self) -> TypeExpr:
        return self.rng.choice(BASES)

    def var(self, ty: TypeExpr) -> Var:
        return Var(self.rng.choice(NAMES), ty)

    def _leaf(self, ty: TypeExpr, closed: bool, bound: tuple[Var, ...]) -> Wff:
        options: list[Wff] = [Const(self.rng.choice(("c", "d")), ty)]
        if ty == O:
            options += [S.TRUE, S.FALSE]
        if closed:
            options += [v for v in bound if v.ty == ty]
        else:
            options.append(self.var(ty))
        return self.rng.choice(options)

    def wff(self, ty: TypeExpr, depth: int = 5, closed: bool = False, ef: bool = False,
            bound: tuple[Var, ...] = ()) -> Wff:
        if depth <= 0 or self.rng.random() < self.leaf:
            return self._leaf(ty, closed, bound)
        kinds = ["app", "abs-app", "cond"]
        if ty == EPS:
            kinds.append("quote")
        if not ef:
            kinds.append("eval")
        kind = self.rng.choice(kinds)
        d = depth - 1
        if kind == "app":
            aty = self.ty()
            f = Const("g", Fun(ty, aty)) if closed or self.rng.random() < 0.5 else Var("f", Fun(ty, aty))
            return App(f, self.wff(aty, d, closed, ef, bound))
        if kind == "abs-app":
            x = self.var(self.ty())
            body = self.wff(ty, d, closed, ef, bound + (x,))
            return App(Abs(x, body), self.wff(x.ty, d, closed, ef, bound))
        if kind == "cond":
            return Cond(self.wff(O, d, closed, ef, bound), self.wff(ty, d, closed, ef, bound),
                        self.wff(ty, d, closed, ef, bound))
        if kind == "quote":
            return Quote(self.wff(self.ty(), d))
        return Eval(self.wff(EPS, d, closed, ef, bound), ty)

    def any(self, depth: int = 5, **kw) -> Wff:
        return self.wff(self.ty(), depth, **kw)


@pytest.fixture
def gen() -> WffGen:
    return WffGen()
