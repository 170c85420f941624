# stdlib/fixtures.py
"""Shipped example tables: double substitution and and-simp."""
from __future__ import annotations

import os
from typing import Literal, Optional

from pydantic import BaseModel

from algebra.ops import PartialResult, cleanse, subst
from shared.config import CFG
from shared.util import load_json
from syntax.grammar import parse_wff
from syntax.wff import Quote, Wff


def fixtures_dir() -> str:
    return os.path.join(os.path.dirname(os.path.abspath(CFG.stdlib_path)), "fixtures")


class DoubleSubstFixture(BaseModel):
    name: str
    op: Literal["sub", "cleanse"]
    a: Optional[str] = None         # wff substituted (sub only)
    x: Optional[str] = None         # variable (sub only)
    c: str                          # construction operated on
    expect: str                     # represented wff, or "undefined" / "unknown"


class AndSimpFixture(BaseModel):
    a: str
    b: str
    expect: str


def _cases(name: str) -> list[dict]:
    return load_json(os.path.join(fixtures_dir(), name)).get("cases", [])


def load_double_subst() -> list[DoubleSubstFixture]:
    return [DoubleSubstFixture.model_validate(d) for d in _cases("double_subst.json")]


def load_and_simp() -> list[AndSimpFixture]:
    return [AndSimpFixture.model_validate(d) for d in _cases("and_simp.json")]


# ------------- runners -------------
def run_double_subst(case: DoubleSubstFixture) -> PartialResult:
    c = parse_wff(case.c)
    if case.op == "cleanse":
        return cleanse(c)
    return subst(Quote(parse_wff(case.a or "")), Quote(parse_wff(case.x or "")), c)


def expected(case: DoubleSubstFixture) -> Optional[Wff]:
    """The wff a defined result must represent; None for undefined or unknown."""
    return None if case.expect in ("undefined", "unknown") else parse_wff(case.expect)
