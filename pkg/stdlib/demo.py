# stdlib/demo.py
"""The library demonstrations run by ``quqe demo``."""
from __future__ import annotations

import logging
from typing import Optional

from pydantic import BaseModel

from kernel.proof import Theory
from stdlib import fixtures as F
from stdlib.theories import and_simp, check_schemas, check_shipped, load_stdlib
from syntax.grammar import parse_wff
from syntax.wff import Quote

log = logging.getLogger(__name__)


class DemoItem(BaseModel):
    name: str
    ok: bool
    detail: str = ""


def _and_simp_table() -> DemoItem:
    cases = F.load_and_simp()
    bad = [f"{c.a} / {c.b}" for c in cases
           if and_simp(Quote(parse_wff(c.a)), Quote(parse_wff(c.b))).body != parse_wff(c.expect)]
    return DemoItem(name="and-simp", ok=not bad, detail=f"{len(cases) - len(bad)}/{len(cases)} pairs"
                    + (f"; wrong: {', '.join(bad)}" if bad else ""))


def _double_subst() -> list[DemoItem]:
    out = []
    for case in F.load_double_subst():
        r = F.run_double_subst(case)
        want = F.expected(case)
        ok = r.wff == want if want is not None else str(r) == case.expect
        out.append(DemoItem(name=f"{case.op} {case.name}", ok=ok, detail=str(r)))
    return out


def run(theory: Optional[Theory] = None) -> list[DemoItem]:
    lib = load_stdlib(theory, recheck=False)
    items = [DemoItem(name=r.name, ok=r.ok, detail=r.summary()) for r in check_shipped(lib)]
    items.append(_and_simp_table())
    items.extend(_double_subst())
    items.extend(DemoItem(name=f"schema {c.name}", ok=c.ok, detail=f"{c.expect}: {c.detail}")
                 for c in check_schemas(lib).checks)
    log.info("demo: %d/%d passed", sum(i.ok for i in items), len(items))
    return items
