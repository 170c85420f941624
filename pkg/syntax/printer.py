# syntax/printer.py
"""Printing wffs back into the text grammar.

Faithful mode prints quotations as written and E-structure as constructor
applications. Display mode also re-quotes decodable E-structure. Sugar is
re-introduced greedily, longest pattern first, unless ``sugar`` is off.
"""
from __future__ import annotations

from typing import Callable, Optional

from syntax import sugar as S
from syntax.encoding import decode
from syntax.signature import EPS_FAMILIES, Signature
from syntax.types import O, TypeExpr
from syntax.wff import Abs, App, Cond, Const, Eval, Hole, Quote, Var, Wff


def print_type(t: TypeExpr) -> str:
    return str(t)


def _binop(op: str) -> Callable:
    return lambda self, m: f"({self.show(m[0])} {op} {self.show(m[1])})"


def _binder(kw: str) -> Callable:
    return lambda self, m: f"({kw} {m[0].name}:{m[0].ty} . {self.show(m[1])})"


def _eq(self, m) -> str:
    op = "<=>" if m[2] == O else "=="
    return f"({self.show(m[0])} {op} {self.show(m[1])})"


class Printer:
    def __init__(self, sugar: bool = True, display: bool = False, sig: Signature | None = None):
        self.sugar = sugar
        self.display = display
        self.defs: dict[Wff, str] = {}
        if sig is not None and sugar:
            self.defs = {body: name for name, body in sig.defs.items()}

    def __call__(self, w: Wff) -> str:
        return self.show(w)

    # ------------- helpers -------------
    def _resugar(self, w: Wff) -> Optional[str]:
        if w in self.defs:
            return f"${self.defs[w]}"
        if S.is_true(w):
            return "T"
        if S.is_false(w):
            return "F"
        bt = S.match_bottom(w)
        if bt is not None:
            return f"bot:{bt}"
        for matcher, render in self._RULES:
            m = matcher(w)
            if m is not None:
                return render(self, m)
        return None

    _RULES = [
        (S.match_qeq, _binop("~~")),
        (S.match_exists1, _binder("exists1")),
        (S.match_exists, _binder("exists")),
        (S.match_undefined, lambda self, a: f"({self.show(a)} ?)"),
        (S.match_neq, _binop("!=")),
        (S.match_not, lambda self, a: f"(~ {self.show(a)})"),
        (S.match_forall, _binder("forall")),
        (S.match_defined, lambda self, a: f"({self.show(a)} !)"),
        (S.match_eq, _eq),
        (S.match_desc, _binder("desc")),
        (S.match_and, _binop("&")),
        (S.match_or, _binop("|")),
        (S.match_imp, _binop("=>")),
        (S.match_fst, lambda self, a: f"(fst {self.show(a)})"),
        (S.match_snd, lambda self, a: f"(snd {self.show(a)})"),
        (S.match_var_alpha, lambda self, m: f"(var-a {m[0]} {self.show(m[1])})"),
        (S.match_con_alpha, lambda self, m: f"(con-a {m[0]} {self.show(m[1])})"),
        (S.match_eval_free_alpha, lambda self, m: f"(eval-free-a {m[0]} {self.show(m[1])})"),
        (S.match_syn_closed, lambda self, a: f"(syn-closed {self.show(a)})"),
    ]

    def _is_constructor_app(self, w: Wff) -> bool:
        head = w
        while isinstance(head, App):
            head = head.fn
        return isinstance(head, Const) and head.name in EPS_FAMILIES

    def _app_parts(self, w: Wff) -> list[Wff]:
        if isinstance(w, App) and (not self.sugar or self._resugar(w) is None):
            return self._app_parts(w.fn) + [w.arg]
        return [w]

    # ------------- public API -------------
    def show(self, w: Wff) -> str:
        if self.display and isinstance(w, App) and self._is_constructor_app(w):
            d = decode(w)
            if d is not None:
                return f"(quote {self.show(d)})"
        if self.sugar and isinstance(w, (App, Abs)):
            s = self._resugar(w)
            if s is not None:
                return s
        if isinstance(w, Var):
            return f"{w.name}:{w.ty}"
        if isinstance(w, Const):
            if w.index is not None:
                return f"#{w.name}[{w.index}]:{w.ty}"
            return f"#{w.name}:{w.ty}"
        if isinstance(w, App):
            parts = self._app_parts(w.fn) + [w.arg]
            return "(" + " ".join(self.show(p) for p in parts) + ")"
        if isinstance(w, Abs):
            return f"(\\{w.binder.name}:{w.binder.ty}. {self.show(w.body)})"
        if isinstance(w, Cond):
            return f"(if {self.show(w.test)} {self.show(w.then)} {self.show(w.els)})"
        if isinstance(w, Quote):
            return f"(quote {self.show(w.body)})"
        if isinstance(w, Eval):
            return f"(eval {self.show(w.arg)} : {w.ty})"
        if isinstance(w, Hole):
            return f"(unquote {self.show(w.payload)} : {w.ty})"
        raise TypeError(f"not a wff: {w!r}")


def print_wff(w: Wff, sugar: bool = True, display: bool = False, sig: Signature | None = None) -> str:
    return Printer(sugar=sugar, display=display, sig=sig).show(w)
