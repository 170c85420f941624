# syntax/encoding.py
"""The encoding E of wffs as type-eps constructions, and its inverse."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from shared.errors import HoleTypeMismatch
from syntax.signature import ABS, APP, COND, EVAL, QUOT
from syntax.types import EPS
from syntax.wff import ATOMS, Abs, App, Cond, Const, Eval, Hole, Quote, Var, Wff, app, children, type_of

TY_VAR = "_ty"      # name of the variable that designates an evaluation's type


@dataclass(frozen=True)
class Construction:
    wff: Wff            # E-structure of type eps
    decoded: Wff        # the wff it represents

    @classmethod
    def of(cls, a: Wff) -> "Construction":
        return cls(encode(a), a)

    @classmethod
    def from_literal(cls, w: Wff) -> Optional["Construction"]:
        d = decode(canonical(w))
        return None if d is None else cls(canonical(w), d)


def encode(a: Wff) -> Wff:
    if isinstance(a, ATOMS):
        return Quote(a)
    if isinstance(a, App):
        return app(APP, encode(a.fn), encode(a.arg))
    if isinstance(a, Abs):
        return app(ABS, Quote(a.binder), encode(a.body))
    if isinstance(a, Cond):
        return app(COND, encode(a.test), encode(a.then), encode(a.els))
    if isinstance(a, Quote):
        return App(QUOT, encode(a.body))
    if isinstance(a, Eval):
        return app(EVAL, encode(a.arg), Quote(Var(TY_VAR, a.ty)))
    if isinstance(a, Hole):
        return a.payload
    raise TypeError(f"not a wff: {a!r}")


def decode(w: Wff) -> Optional[Wff]:
    """The wff whose encoding is exactly ``w``, if any."""
    if isinstance(w, Quote):
        return w.body if isinstance(w.body, ATOMS) else None
    if not isinstance(w, App):
        return None
    head, args = _const_spine(w)
    if head == APP and len(args) == 2:
        f, a = decode(args[0]), decode(args[1])
        return None if f is None or a is None else App(f, a)
    if head == ABS and len(args) == 2:
        x, b = decode(args[0]), decode(args[1])
        return Abs(x, b) if isinstance(x, Var) and b is not None else None
    if head == COND and len(args) == 3:
        parts = [decode(p) for p in args]
        return None if any(p is None for p in parts) else Cond(*parts)
    if head == QUOT and len(args) == 1:
        b = decode(args[0])
        return None if b is None else Quote(b)
    if head == EVAL and len(args) == 2:
        b, v = decode(args[0]), decode(args[1])
        if b is None or not (isinstance(v, Var) and v.name == TY_VAR):
            return None
        return Eval(b, v.ty)
    return None


def _const_spine(w: Wff) -> tuple[Wff, list[Wff]]:
    args: list[Wff] = []
    while isinstance(w, App):
        args.append(w.arg)
        w = w.fn
    args.reverse()
    return w, args


def is_literal(w: Wff) -> bool:
    return decode(canonical(w)) is not None


def canonical(w: Wff) -> Wff:
    """Rewrite every quotation of a non-atom into its E-structure."""
    if isinstance(w, Quote):
        return w if isinstance(w.body, ATOMS) else encode(w.body)
    if isinstance(w, App):
        f, a = canonical(w.fn), canonical(w.arg)
        return w if f is w.fn and a is w.arg else App(f, a)
    if isinstance(w, Abs):
        b = canonical(w.body)
        return w if b is w.body else Abs(w.binder, b)
    if isinstance(w, Cond):
        t, a, b = canonical(w.test), canonical(w.then), canonical(w.els)
        return w if (t, a, b) == (w.test, w.then, w.els) else Cond(t, a, b)
    if isinstance(w, Eval):
        a = canonical(w.arg)
        return w if a is w.arg else Eval(a, w.ty)
    return w


def quasiquote(template: Wff) -> Wff:
    """Encode ``template``, splicing the payload of each hole in place."""
    for h in _holes(template):
        ty = type_of(h.payload)
        if ty != EPS:
            raise HoleTypeMismatch(f"hole payload has type {ty}, expected eps")
    return encode(template)


def _holes(w: Wff):
    if isinstance(w, Hole):
        yield w
        return
    for c in children(w):
        yield from _holes(c)


def fill_holes(template: Wff, fillers: list[Wff]) -> Wff:
    """Replace holes left to right by the given wffs (of the holes' types)."""
    it = iter(fillers)

    def go(w: Wff) -> Wff:
        if isinstance(w, Hole):
            return next(it)
        if isinstance(w, App):
            return App(go(w.fn), go(w.arg))
        if isinstance(w, Abs):
            return Abs(w.binder, go(w.body))
        if isinstance(w, Cond):
            return Cond(go(w.test), go(w.then), go(w.els))
        if isinstance(w, Quote):
            return Quote(go(w.body))
        if isinstance(w, Eval):
            return Eval(go(w.arg), w.ty)
        return w

    return go(template)


def quote_atom(a: Var | Const) -> Wff:
    return Quote(a)
