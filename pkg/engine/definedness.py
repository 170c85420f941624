# engine/definedness.py
from __future__ import annotations

from typing import Optional

from algebra.ops import SyntaxAlgebra
from shared.errors import TypeCheckError
from shared.tristate import TriState
from syntax import sugar
from syntax.signature import PAIR_NAME
from syntax.types import EPS, O
from syntax.wff import Abs, App, Cond, Const, Quote, Var, Wff, spine, type_of


def defined_here(w: Wff, alg: Optional[SyntaxAlgebra] = None) -> TriState:
    """Definedness read off the syntax, without rewriting."""
    if isinstance(w, (Var, Const, Quote, Abs)):
        return TriState.TRUE
    try:
        ty = type_of(w)
    except TypeCheckError:
        return TriState.UNKNOWN
    if ty == O:
        return TriState.TRUE
    if sugar.match_bottom(w) is not None:
        return TriState.FALSE
    alg = alg or SyntaxAlgebra()
    if ty == EPS:
        r = alg.value(w)
        if r.is_defined():
            return TriState.TRUE
        if r.is_undefined():
            return TriState.FALSE
    if isinstance(w, Cond):
        t = alg.decide(w.test)
        if not t.is_unknown():
            return defined_here(w.then if t.is_true() else w.els, alg)
        branches = {defined_here(w.then, alg), defined_here(w.els, alg)}
        return branches.pop() if len(branches) == 1 else TriState.UNKNOWN
    if isinstance(w, App):
        if defined_here(w.fn, alg).is_false() or defined_here(w.arg, alg).is_false():
            return TriState.FALSE
        head, args = spine(w)
        if isinstance(head, Const) and head.name == PAIR_NAME and len(args) == 2:
            return TriState.all(defined_here(a, alg) for a in args)
    return TriState.UNKNOWN
