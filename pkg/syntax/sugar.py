# syntax/sugar.py
"""Defined constants and abbreviations, as constructors and recognizers.

Every constructor returns the exact primitive expansion. Bound variables
introduced by an expansion use the reserved names %0, %1, %2. Each
recognizer is the partial inverse of its constructor and returns None
on a miss.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Optional

from shared.errors import IllegalTypeParameter
from syntax.signature import (
    CON, EVAL_FREE, IOTA_NAME, NFI, Q, Q_NAME, Q_OOO, VAR, iota, logical_type_ok, pair_c, wff_c,
)
from syntax.types import EPS, O, Fun, Pair, TypeExpr, fn
from syntax.wff import Abs, App, Cond, Const, Eval, Quote, Var, Wff, app, type_of

OOO = fn(O, O, O)


def rv(i: int, ty: TypeExpr) -> Var:
    """Reserved variable %i."""
    return Var(f"%{i}", ty)


# ==========================
# Constructors
# ==========================
def eq(a: Wff, b: Wff, ty: TypeExpr | None = None) -> Wff:
    if ty is None:
        ty = type_of(a)
    return App(App(Q(ty), a), b)


def iff(a: Wff, b: Wff) -> Wff:
    return App(App(Q_OOO, a), b)


TRUE = eq(Q_OOO, Q_OOO, OOO)
FALSE = eq(Abs(rv(0, O), TRUE), Abs(rv(0, O), rv(0, O)), fn(O, O))

_G = rv(2, OOO)
AND_C = Abs(rv(0, O), Abs(rv(1, O), eq(
    Abs(_G, app(_G, TRUE, TRUE)), Abs(_G, app(_G, rv(0, O), rv(1, O))), Fun(O, OOO))))
NOT_C = App(Q_OOO, FALSE)


def and_(a: Wff, b: Wff) -> Wff:
    return app(AND_C, a, b)


def conj(*xs: Wff) -> Wff:
    """Left-nested conjunction ((a & b) & c)."""
    out = xs[0]
    for x in xs[1:]:
        out = and_(out, x)
    return out


def not_(a: Wff) -> Wff:
    return App(NOT_C, a)


IMP_C = Abs(rv(0, O), Abs(rv(1, O), iff(rv(0, O), and_(rv(0, O), rv(1, O)))))
OR_C = Abs(rv(0, O), Abs(rv(1, O), not_(and_(not_(rv(0, O)), not_(rv(1, O))))))


def imp(a: Wff, b: Wff) -> Wff:
    return app(IMP_C, a, b)


def or_(a: Wff, b: Wff) -> Wff:
    return app(OR_C, a, b)


def forall(x: Var, a: Wff) -> Wff:
    return eq(Abs(rv(0, x.ty), TRUE), Abs(x, a), Fun(O, x.ty))


def exists(x: Var, a: Wff) -> Wff:
    return not_(forall(x, not_(a)))


def exists1(x: Var, a: Wff) -> Wff:
    return exists(x, eq(Abs(x, a), App(Q(x.ty), x), Fun(O, x.ty)))


def neq(a: Wff, b: Wff, ty: TypeExpr | None = None) -> Wff:
    return not_(eq(a, b, ty))


def defined(a: Wff, ty: TypeExpr | None = None) -> Wff:
    return eq(a, a, ty)


def undefined(a: Wff, ty: TypeExpr | None = None) -> Wff:
    return not_(defined(a, ty))


def qeq(a: Wff, b: Wff, ty: TypeExpr | None = None) -> Wff:
    if ty is None:
        ty = type_of(a)
    return imp(or_(defined(a, ty), defined(b, ty)), eq(a, b, ty))


def desc(x: Var, a: Wff) -> Wff:
    if x.ty == O:
        raise IllegalTypeParameter("definite description at type o")
    return App(iota(x.ty), Abs(x, a))


@lru_cache(maxsize=None)
def bottom(alpha: TypeExpr) -> Wff:
    if alpha == O:
        return FALSE
    x = rv(0, alpha)
    return desc(x, neq(x, x, alpha))


def if_(a: Wff, b: Wff, c: Wff) -> Wff:
    return Cond(a, b, c)


def quote(a: Wff) -> Wff:
    return Quote(a)


def evaluation(a: Wff, alpha: TypeExpr) -> Wff:
    return Eval(a, alpha)


@lru_cache(maxsize=None)
def fst_c(alpha: TypeExpr, beta: TypeExpr) -> Wff:
    if alpha == O:
        raise IllegalTypeParameter("fst needs a first component type other than o")
    z, x, y = rv(0, Pair(alpha, beta)), rv(1, alpha), rv(2, beta)
    return Abs(z, desc(x, exists(y, eq(z, app(pair_c(alpha, beta), x, y), Pair(alpha, beta)))))


@lru_cache(maxsize=None)
def snd_c(alpha: TypeExpr, beta: TypeExpr) -> Wff:
    if beta == O:
        raise IllegalTypeParameter("snd needs a second component type other than o")
    z, x, y = rv(0, Pair(alpha, beta)), rv(1, alpha), rv(2, beta)
    return Abs(z, desc(y, exists(x, eq(z, app(pair_c(alpha, beta), x, y), Pair(alpha, beta)))))


def fst(a: Wff, ty: TypeExpr | None = None) -> Wff:
    ty = ty or type_of(a)
    if not isinstance(ty, Pair):
        raise IllegalTypeParameter(f"fst applied at {ty}")
    return App(fst_c(ty.first, ty.second), a)


def snd(a: Wff, ty: TypeExpr | None = None) -> Wff:
    ty = ty or type_of(a)
    if not isinstance(ty, Pair):
        raise IllegalTypeParameter(f"snd applied at {ty}")
    return App(snd_c(ty.first, ty.second), a)


def _eps_pred(pred: Const, alpha: TypeExpr) -> Wff:
    x = rv(0, EPS)
    return Abs(x, and_(App(pred, x), App(wff_c(alpha), x)))


@lru_cache(maxsize=None)
def var_alpha_c(alpha: TypeExpr) -> Wff:
    return _eps_pred(VAR, alpha)


@lru_cache(maxsize=None)
def con_alpha_c(alpha: TypeExpr) -> Wff:
    return _eps_pred(CON, alpha)


@lru_cache(maxsize=None)
def eval_free_alpha_c(alpha: TypeExpr) -> Wff:
    return _eps_pred(EVAL_FREE, alpha)


SYN_CLOSED_C = Abs(rv(0, EPS), forall(rv(1, EPS), imp(App(VAR, rv(1, EPS)), app(NFI, rv(1, EPS), rv(0, EPS)))))


def var_alpha(alpha: TypeExpr, a: Wff) -> Wff:
    return App(var_alpha_c(alpha), a)


def con_alpha(alpha: TypeExpr, a: Wff) -> Wff:
    return App(con_alpha_c(alpha), a)


def eval_free_alpha(alpha: TypeExpr, a: Wff) -> Wff:
    return App(eval_free_alpha_c(alpha), a)


def syn_closed(a: Wff) -> Wff:
    return App(SYN_CLOSED_C, a)


# ==========================
# Recognizers
# ==========================
def match_eq(w: Wff) -> Optional[tuple[Wff, Wff, TypeExpr]]:
    if isinstance(w, App) and isinstance(w.fn, App) and isinstance(w.fn.fn, Const) \
            and w.fn.fn.name == Q_NAME and logical_type_ok(w.fn.fn):
        return w.fn.arg, w.arg, w.fn.fn.ty.arg
    return None


def match_iff(w: Wff) -> Optional[tuple[Wff, Wff]]:
    m = match_eq(w)
    if m and m[2] == O:
        return m[0], m[1]
    return None


def is_true(w: Wff) -> bool:
    return w == TRUE


def is_false(w: Wff) -> bool:
    return w == FALSE


def _binary(w: Wff, const: Wff) -> Optional[tuple[Wff, Wff]]:
    if isinstance(w, App) and isinstance(w.fn, App) and w.fn.fn == const:
        return w.fn.arg, w.arg
    return None


def match_and(w: Wff) -> Optional[tuple[Wff, Wff]]:
    return _binary(w, AND_C)


def match_or(w: Wff) -> Optional[tuple[Wff, Wff]]:
    return _binary(w, OR_C)


def match_imp(w: Wff) -> Optional[tuple[Wff, Wff]]:
    return _binary(w, IMP_C)


def match_not(w: Wff) -> Optional[Wff]:
    if isinstance(w, App) and w.fn == NOT_C:
        return w.arg
    return None


def match_forall(w: Wff) -> Optional[tuple[Var, Wff]]:
    m = match_eq(w)
    if not m:
        return None
    lhs, rhs, _ = m
    if isinstance(rhs, Abs) and lhs == Abs(rv(0, rhs.binder.ty), TRUE):
        return rhs.binder, rhs.body
    return None


def match_exists(w: Wff) -> Optional[tuple[Var, Wff]]:
    inner = match_not(w)
    f = match_forall(inner) if inner is not None else None
    if f is None:
        return None
    body = match_not(f[1])
    return (f[0], body) if body is not None else None


def match_exists1(w: Wff) -> Optional[tuple[Var, Wff]]:
    e = match_exists(w)
    if e is None:
        return None
    x, body = e
    m = match_eq(body)
    if m and isinstance(m[0], Abs) and m[0].binder == x and m[1] == App(Q(x.ty), x):
        return x, m[0].body
    return None


def match_neq(w: Wff) -> Optional[tuple[Wff, Wff]]:
    inner = match_not(w)
    m = match_eq(inner) if inner is not None else None
    return (m[0], m[1]) if m else None


def match_defined(w: Wff) -> Optional[Wff]:
    m = match_eq(w)
    if m and m[0] == m[1]:
        return m[0]
    return None


def match_undefined(w: Wff) -> Optional[Wff]:
    inner = match_not(w)
    return match_defined(inner) if inner is not None else None


def match_qeq(w: Wff) -> Optional[tuple[Wff, Wff]]:
    m = match_imp(w)
    if not m:
        return None
    d, e = m
    o = match_or(d)
    q = match_eq(e)
    if not o or not q:
        return None
    a, b = q[0], q[1]
    if match_defined(o[0]) == a and match_defined(o[1]) == b:
        return a, b
    return None


def match_desc(w: Wff) -> Optional[tuple[Var, Wff]]:
    if isinstance(w, App) and isinstance(w.fn, Const) and w.fn.name == IOTA_NAME \
            and logical_type_ok(w.fn) and isinstance(w.arg, Abs):
        return w.arg.binder, w.arg.body
    return None


def match_bottom(w: Wff) -> Optional[TypeExpr]:
    if w == FALSE:
        return O
    d = match_desc(w)
    if d and d[0] == rv(0, d[0].ty) and w == bottom(d[0].ty):
        return d[0].ty
    return None


def _match_pair_proj(w: Wff, builder) -> Optional[Wff]:
    if not (isinstance(w, App) and isinstance(w.fn, Abs)):
        return None
    zty = w.fn.binder.ty
    if not isinstance(zty, Pair) or w.fn.binder.name != "%0":
        return None
    try:
        return w.arg if w.fn == builder(zty.first, zty.second) else None
    except IllegalTypeParameter:
        return None


def match_fst(w: Wff) -> Optional[Wff]:
    return _match_pair_proj(w, fst_c)


def match_snd(w: Wff) -> Optional[Wff]:
    return _match_pair_proj(w, snd_c)


def _match_eps_pred(w: Wff, builder) -> Optional[tuple[TypeExpr, Wff]]:
    if not (isinstance(w, App) and isinstance(w.fn, Abs) and w.fn.binder == rv(0, EPS)):
        return None
    conj_ = match_and(w.fn.body)
    if not conj_ or not isinstance(conj_[1], App) or not isinstance(conj_[1].fn, Const):
        return None
    alpha = conj_[1].fn.index
    if alpha is None:
        return None
    return (alpha, w.arg) if w.fn == builder(alpha) else None


def match_var_alpha(w: Wff) -> Optional[tuple[TypeExpr, Wff]]:
    return _match_eps_pred(w, var_alpha_c)


def match_con_alpha(w: Wff) -> Optional[tuple[TypeExpr, Wff]]:
    return _match_eps_pred(w, con_alpha_c)


def match_eval_free_alpha(w: Wff) -> Optional[tuple[TypeExpr, Wff]]:
    return _match_eps_pred(w, eval_free_alpha_c)


def match_syn_closed(w: Wff) -> Optional[Wff]:
    if isinstance(w, App) and w.fn == SYN_CLOSED_C:
        return w.arg
    return None


def match_if(w: Wff) -> Optional[tuple[Wff, Wff, Wff]]:
    return (w.test, w.then, w.els) if isinstance(w, Cond) else None


# Lambda-defined constants: applications of these are treated as opaque
# operators by the normalizer and re-sugared by the printer.
def is_defined_operator(f: Wff) -> bool:
    if f in (AND_C, OR_C, IMP_C, SYN_CLOSED_C):
        return True
    if isinstance(f, Abs) and f.binder.name == "%0":
        sample = App(f, f.binder)
        return any(m(sample) is not None for m in (
            match_fst, match_snd, match_var_alpha, match_con_alpha, match_eval_free_alpha))
    return False
