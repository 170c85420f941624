# algebra/ops.py
"""Computable syntax predicates and operators over constructions.

Each operator works on the wff a construction represents (its decoded
form) and follows the clause lists for var, con, wff^a, eval-free,
not-free-in, cleanse and sub. Undecidable side conditions come back as
``TriState.UNKNOWN`` / ``PartialResult.UNKNOWN``; nothing here guesses.
"""
from __future__ import annotations

import functools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from shared.config import CFG
from shared.errors import RecursionDepthExceeded, TypeCheckError
from shared.tristate import TriState
from syntax import sugar
from syntax.encoding import TY_VAR, canonical, decode, encode
from syntax.signature import ABS, APP, CLEANSE, COND, CON, EVAL, EVAL_FREE, NFI, QUOT, SUB, VAR, WFF_NAME
from syntax.types import EPS, O, TypeExpr
from syntax.wff import (
    Abs, App, Cond, Const, Eval, Quote, Var, Wff, free_vars, app, is_evaluation_free, spine, type_of, variables,
)

log = logging.getLogger(__name__)


# ==========================
# Results
# ==========================
class Status(Enum):
    DEFINED = "defined"
    UNDEFINED = "undefined"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class PartialResult:
    status: Status
    wff: Optional[Wff] = None       # the represented wff when defined

    @staticmethod
    def defined(w: Wff) -> "PartialResult":
        return PartialResult(Status.DEFINED, w)

    def is_defined(self) -> bool:
        return self.status is Status.DEFINED

    def is_undefined(self) -> bool:
        return self.status is Status.UNDEFINED

    def is_unknown(self) -> bool:
        return self.status is Status.UNKNOWN

    @property
    def construction(self) -> Wff:
        if self.wff is None:
            raise ValueError(f"{self.status.value} result has no construction")
        return encode(self.wff)

    def __str__(self) -> str:
        return self.status.value


UNDEFINED = PartialResult(Status.UNDEFINED)
UNKNOWN = PartialResult(Status.UNKNOWN)


def _typed(w: Wff) -> Optional[TypeExpr]:
    try:
        return type_of(w)
    except TypeCheckError:
        return None


def _strict(results: list[PartialResult]) -> Optional[PartialResult]:
    """UNDEFINED or UNKNOWN when some argument is not defined, else None."""
    if any(r.is_undefined() for r in results):
        return UNDEFINED
    if any(r.is_unknown() for r in results):
        return UNKNOWN
    return None


def _tracked(method):
    @functools.wraps(method)
    def wrapper(self, *args):
        self.depth += 1
        if self.depth > self.max_depth:
            raise RecursionDepthExceeded(f"{method.__name__}: depth {self.depth} exceeds {self.max_depth}")
        try:
            return method(self, *args)
        finally:
            self.depth -= 1
    return wrapper


def instantiate(body: Wff, x: Var, r: Wff) -> Wff:
    """Replace free ``x`` in ``body`` by the closed wff ``r``.

    Evaluation arguments are entered, quotation bodies are not.
    """
    if isinstance(body, Var):
        return r if body == x else body
    if isinstance(body, (Const, Quote)):
        return body
    if isinstance(body, App):
        return App(instantiate(body.fn, x, r), instantiate(body.arg, x, r))
    if isinstance(body, Abs):
        return body if body.binder == x else Abs(body.binder, instantiate(body.body, x, r))
    if isinstance(body, Cond):
        return Cond(instantiate(body.test, x, r), instantiate(body.then, x, r), instantiate(body.els, x, r))
    if isinstance(body, Eval):
        return Eval(instantiate(body.arg, x, r), body.ty)
    return body


# ==========================
# The algebra
# ==========================
class SyntaxAlgebra:
    """One instance per top-level query; carries the recursion-depth guard."""

    def __init__(self, max_depth: int | None = None):
        self.max_depth = max_depth or CFG.max_depth
        self.depth = 0

    # ------------- epsilon evaluation -------------
    @_tracked
    def value(self, w: Wff) -> PartialResult:
        """Value of an eps-typed wff, as the wff its construction represents."""
        if isinstance(w, Quote):
            return PartialResult.defined(w.body)
        if isinstance(w, (Var, Const)):
            return UNKNOWN
        if isinstance(w, Cond):
            t = self.decide(w.test)
            if t.is_unknown():
                return UNKNOWN
            return self.value(w.then if t.is_true() else w.els)
        if isinstance(w, Eval):
            inner = self.value(w.arg)
            if not inner.is_defined():
                return inner
            d = inner.wff
            if not is_evaluation_free(d) or _typed(d) != EPS:
                return UNDEFINED
            return self.value(d)
        if isinstance(w, App):
            return self._value_app(w)
        return UNKNOWN

    def _value_app(self, w: App) -> PartialResult:
        head, args = spine(w)
        if isinstance(head, Const) and head in _BUILDERS and len(args) == _BUILDERS[head][0]:
            vals = [self.value(a) for a in args]
            bad = _strict(vals)
            if bad is not None:
                return bad
            return _BUILDERS[head][1](self, [v.wff for v in vals])
        for match, pick in ((sugar.match_fst, 0), (sugar.match_snd, 1)):
            p = match(w)
            if p is not None:
                return self._project(p, pick)
        if isinstance(head, Abs):
            step = self._beta(w)
            if isinstance(step, PartialResult):
                return step
            return self.value(step)
        return UNKNOWN

    def _pair_parts(self, p: Wff) -> Optional[list[Wff]]:
        """Components of a pair literal, looking through projections of nested pairs."""
        h, parts = spine(p)
        if isinstance(h, Const) and h.name == "pair" and len(parts) == 2:
            return parts
        for match, pick in ((sugar.match_fst, 0), (sugar.match_snd, 1)):
            q = match(p)
            if q is not None:
                inner = self._pair_parts(q)
                return None if inner is None else self._pair_parts(inner[pick])
        return None

    def _project(self, p: Wff, pick: int) -> PartialResult:
        parts = self._pair_parts(p)
        if parts is None:
            return UNKNOWN
        other = parts[1 - pick]
        if _typed(other) == EPS:
            ov = self.value(other)
            if not ov.is_defined():
                return ov
        elif _typed(other) != O and not isinstance(other, (Var, Const, Quote, Abs)):
            return UNKNOWN
        return self.value(parts[pick])

    def _ground(self, a: Wff) -> Optional[Wff] | PartialResult:
        """A closed wff with the same value as ``a``, or a non-defined verdict."""
        ty = _typed(a)
        if ty == EPS:
            r = self.value(a)
            return encode(r.wff) if r.is_defined() else r
        if ty == O:
            t = self.decide(a)
            if t.is_unknown():
                return UNKNOWN
            return sugar.TRUE if t.is_true() else sugar.FALSE
        if isinstance(a, (Const, Abs)) and not free_vars(a) and is_evaluation_free(a):
            return a
        return UNKNOWN

    def _beta(self, w: App) -> Wff | PartialResult:
        """One head beta step with a ground argument."""
        head, args = spine(w)
        g = self._ground(args[0])
        if isinstance(g, PartialResult):
            if g.is_undefined():
                return UNDEFINED
            return UNKNOWN
        return app(instantiate(head.body, head.binder, g), *args[1:])

    # ------------- decision on formulas -------------
    @_tracked
    def decide(self, w: Wff) -> TriState:
        """Truth value of a closed type-o wff, when the syntax settles it."""
        if sugar.is_true(w):
            return TriState.TRUE
        if sugar.is_false(w):
            return TriState.FALSE
        n = sugar.match_not(w)
        if n is not None:
            return TriState.not_(self.decide(n))
        for match, combine in ((sugar.match_and, _and), (sugar.match_or, _or), (sugar.match_imp, _imp)):
            m = match(w)
            if m is not None:
                return combine(lambda: self.decide(m[0]), lambda: self.decide(m[1]))
        m = sugar.match_eq(w)
        if m is not None:
            return self._decide_eq(*m)
        if isinstance(w, Cond):
            t = self.decide(w.test)
            if t.is_unknown():
                return TriState.UNKNOWN
            return self.decide(w.then if t.is_true() else w.els)
        if isinstance(w, Eval):
            r = self.value(w.arg)
            if r.is_unknown():
                return TriState.UNKNOWN
            if r.is_undefined() or not is_evaluation_free(r.wff) or _typed(r.wff) != O:
                return TriState.FALSE
            return self.decide(r.wff)
        sc = sugar.match_syn_closed(w)
        if sc is not None:
            r = self.value(sc)
            if not r.is_defined():
                return TriState.UNKNOWN if r.is_unknown() else TriState.FALSE
            return self.syn_closed(r.wff)
        if isinstance(w, App):
            return self._decide_app(w)
        return TriState.UNKNOWN

    def _decide_eq(self, a: Wff, b: Wff, ty: TypeExpr) -> TriState:
        if ty == O:
            x = self.decide(a)
            if x.is_unknown():
                return x
            y = self.decide(b)
            return y if y.is_unknown() else TriState.from_bool(x == y)
        if ty == EPS:
            ra, rb = self.value(a), self.value(b)
            if ra.is_undefined() or rb.is_undefined():
                return TriState.FALSE
            if ra.is_defined() and rb.is_defined():
                return TriState.from_bool(ra.wff == rb.wff)
            return TriState.TRUE if a == b and isinstance(a, Var) else TriState.UNKNOWN
        if a == b and isinstance(a, (Var, Const, Abs)):
            return TriState.TRUE
        return TriState.UNKNOWN

    def _decide_app(self, w: App) -> TriState:
        head, args = spine(w)
        if isinstance(head, Const) and (head in _PREDICATES or head == NFI or head.name == WFF_NAME):
            arity = 2 if head == NFI else 1
            if len(args) != arity:
                return TriState.UNKNOWN
            vals = [self.value(a) for a in args]
            if any(v.is_undefined() for v in vals):
                return TriState.FALSE
            if any(v.is_unknown() for v in vals):
                return TriState.UNKNOWN
            ds = [v.wff for v in vals]
            if head.name == WFF_NAME:
                return TriState.from_bool(_typed(ds[0]) == head.index)
            if head == NFI:
                return self.nfi(ds[0], ds[1]) if isinstance(ds[0], Var) else TriState.TRUE
            return TriState.from_bool(_PREDICATES[head](ds[0]))
        if isinstance(head, Abs):
            step = self._beta(w)
            if isinstance(step, PartialResult):
                return TriState.FALSE if step.is_undefined() else TriState.UNKNOWN
            return self.decide(step)
        return TriState.UNKNOWN

    # ------------- not-free-in / syn-closed -------------
    @_tracked
    def nfi(self, x: Var, a: Wff) -> TriState:
        """Whether variable ``x`` is not free in wff ``a``."""
        if isinstance(a, Var):
            return TriState.from_bool(a != x)
        if isinstance(a, (Const, Quote)):
            return TriState.TRUE
        if isinstance(a, App):
            return TriState.all_lazy([lambda: self.nfi(x, a.fn), lambda: self.nfi(x, a.arg)])
        if isinstance(a, Abs):
            return TriState.TRUE if a.binder == x else self.nfi(x, a.body)
        if isinstance(a, Cond):
            return TriState.all_lazy([lambda p=p: self.nfi(x, p) for p in (a.test, a.then, a.els)])
        if isinstance(a, Eval):
            return self._nfi_eval(x, a)
        return TriState.UNKNOWN

    def _nfi_eval(self, x: Var, a: Eval) -> TriState:
        b = a.arg
        out: dict[str, Wff] = {}

        def value_ok() -> TriState:
            r = self.value(b)
            if r.is_unknown():
                log.debug("not-free-in: value of %r is not computable", b)
                return TriState.UNKNOWN
            if r.is_undefined():
                return TriState.FALSE
            out["d"] = r.wff
            return TriState.from_bool(is_evaluation_free(r.wff) and _typed(r.wff) == a.ty)

        pre = TriState.all_lazy([
            lambda: self.syn_closed(b),
            lambda: TriState.from_bool(is_evaluation_free(b)),
            value_ok,
        ])
        if pre.is_false() or "d" not in out:
            return pre
        return TriState.all([pre, self.nfi(x, out["d"])])

    @_tracked
    def syn_closed(self, a: Wff) -> TriState:
        if is_evaluation_free(a):
            return TriState.from_bool(not free_vars(a))
        seen = set(variables(a))
        n = 0
        while Var(f"%z{n}", EPS) in seen:
            n += 1
        candidates = list(seen) + [Var(f"%z{n}", EPS)]
        return TriState.all_lazy([lambda v=v: self.nfi(v, a) for v in candidates])

    # ------------- cleanse / sub -------------
    @_tracked
    def cleanse(self, a: Wff) -> PartialResult:
        if isinstance(a, (Var, Const, Quote)):
            return PartialResult.defined(a)
        if isinstance(a, App):
            parts = [self.cleanse(a.fn), self.cleanse(a.arg)]
            return _strict(parts) or PartialResult.defined(App(parts[0].wff, parts[1].wff))
        if isinstance(a, Abs):
            body = self.cleanse(a.body)
            return body if not body.is_defined() else PartialResult.defined(Abs(a.binder, body.wff))
        if isinstance(a, Cond):
            parts = [self.cleanse(p) for p in (a.test, a.then, a.els)]
            return _strict(parts) or PartialResult.defined(Cond(*(p.wff for p in parts)))
        if isinstance(a, Eval):
            e = self.cleanse(a.arg)
            if not e.is_defined():
                return e
            return self._if_evaluable(e.wff, a.ty, lambda d: PartialResult.defined(d))
        return UNKNOWN

    def _if_evaluable(self, e: Wff, ty: TypeExpr, then: Callable[[Wff], PartialResult]) -> PartialResult:
        """``if [syn-closed e & eval-free^ty [[e]]] then([[e]]) bottom``."""
        sc = self.syn_closed(e)
        if sc.is_false():
            return UNDEFINED
        r = self.value(e) if is_evaluation_free(e) else UNDEFINED
        if r.is_unknown():
            return UNKNOWN
        if r.is_undefined() or not is_evaluation_free(r.wff) or _typed(r.wff) != ty:
            return UNDEFINED
        if sc.is_unknown():
            return UNKNOWN
        return then(r.wff)

    def sub(self, a: Wff, x: Wff, b: Wff) -> PartialResult:
        """Substitute wff ``a`` for variable ``x`` in wff ``b``."""
        if not isinstance(x, Var) or _typed(a) != x.ty:
            return UNDEFINED
        return self._sub(a, x, b)

    @_tracked
    def _sub(self, a: Wff, x: Var, b: Wff) -> PartialResult:
        if isinstance(b, Var):
            return self.cleanse(a) if b == x else PartialResult.defined(b)
        if isinstance(b, (Const, Quote)):
            return PartialResult.defined(b)
        if isinstance(b, App):
            parts = [self._sub(a, x, b.fn), self._sub(a, x, b.arg)]
            return _strict(parts) or PartialResult.defined(App(parts[0].wff, parts[1].wff))
        if isinstance(b, Abs):
            if b.binder == x:
                body = self.cleanse(b.body)
            else:
                ok = TriState.any([self.nfi(x, b.body), self.nfi(b.binder, a)])
                if ok.is_false():
                    return UNDEFINED
                if ok.is_unknown():
                    return UNKNOWN
                body = self._sub(a, x, b.body)
            return body if not body.is_defined() else PartialResult.defined(Abs(b.binder, body.wff))
        if isinstance(b, Cond):
            parts = [self._sub(a, x, p) for p in (b.test, b.then, b.els)]
            return _strict(parts) or PartialResult.defined(Cond(*(p.wff for p in parts)))
        if isinstance(b, Eval):
            e1 = self._sub(a, x, b.arg)
            if not e1.is_defined():
                return e1
            return self._if_evaluable(e1.wff, b.ty, lambda d1: self._sub(a, x, d1))
        return UNKNOWN


def _and(p, q) -> TriState:
    return TriState.all_lazy([p, q])


def _or(p, q) -> TriState:
    return TriState.not_(TriState.all_lazy([lambda: TriState.not_(p()), lambda: TriState.not_(q())]))


def _imp(p, q) -> TriState:
    return TriState.not_(TriState.all_lazy([p, lambda: TriState.not_(q())]))


# ------------- constructor semantics -------------
def _build_app(alg: SyntaxAlgebra, ds: list[Wff]) -> PartialResult:
    w = App(ds[0], ds[1])
    return PartialResult.defined(w) if _typed(w) is not None else UNDEFINED


def _build_abs(alg: SyntaxAlgebra, ds: list[Wff]) -> PartialResult:
    return PartialResult.defined(Abs(ds[0], ds[1])) if isinstance(ds[0], Var) else UNDEFINED


def _build_cond(alg: SyntaxAlgebra, ds: list[Wff]) -> PartialResult:
    w = Cond(*ds)
    return PartialResult.defined(w) if _typed(w) is not None else UNDEFINED


def _build_quot(alg: SyntaxAlgebra, ds: list[Wff]) -> PartialResult:
    return PartialResult.defined(Quote(ds[0]))


def _build_eval(alg: SyntaxAlgebra, ds: list[Wff]) -> PartialResult:
    b, v = ds
    if _typed(b) != EPS or not isinstance(v, Var):
        return UNDEFINED
    # evaluations designated by another variable name have no decoded form
    if v.name != TY_VAR:
        return UNKNOWN
    return PartialResult.defined(Eval(b, v.ty))


_BUILDERS: dict[Const, tuple[int, Callable[[SyntaxAlgebra, list[Wff]], PartialResult]]] = {
    APP: (2, _build_app),
    ABS: (2, _build_abs),
    COND: (3, _build_cond),
    QUOT: (1, _build_quot),
    EVAL: (2, _build_eval),
    CLEANSE: (1, lambda alg, ds: alg.cleanse(ds[0])),
    SUB: (3, lambda alg, ds: alg.sub(ds[0], ds[1], ds[2])),
}

_PREDICATES: dict[Const, Callable[[Wff], bool]] = {
    VAR: lambda d: isinstance(d, Var),
    CON: lambda d: isinstance(d, Const),
    EVAL_FREE: is_evaluation_free,
}


# ==========================
# Public API (constructions in, verdicts out)
# ==========================
def _guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except RecursionError as e:
            raise RecursionDepthExceeded(f"{fn.__name__}: interpreter recursion limit") from e
    return wrapper


def represented(c: Wff) -> Optional[Wff]:
    """The well-typed wff a literal construction represents."""
    d = decode(canonical(c))
    return d if d is not None and _typed(d) is not None else None


def syn_var_p(c: Wff) -> bool:
    return isinstance(represented(c), Var)


def syn_con_p(c: Wff) -> bool:
    return isinstance(represented(c), Const)


def wff_type(c: Wff) -> Optional[TypeExpr]:
    d = represented(c)
    return None if d is None else _typed(d)


def eval_free_p(c: Wff) -> bool:
    d = represented(c)
    return d is not None and is_evaluation_free(d)


@_guarded
def epsilon_eval(w: Wff, max_depth: int | None = None) -> PartialResult:
    return SyntaxAlgebra(max_depth).value(w)


@_guarded
def decide(w: Wff, max_depth: int | None = None) -> TriState:
    return SyntaxAlgebra(max_depth).decide(w)


@_guarded
def not_free_in(v: Wff, c: Wff, max_depth: int | None = None) -> TriState:
    alg = SyntaxAlgebra(max_depth)
    rv, rc = alg.value(v), alg.value(c)
    if rv.is_undefined() or rc.is_undefined():
        return TriState.FALSE
    if rv.is_unknown() or rc.is_unknown():
        return TriState.UNKNOWN
    if not isinstance(rv.wff, Var):
        return TriState.TRUE
    return alg.nfi(rv.wff, rc.wff)


@_guarded
def syn_closed_p(c: Wff, max_depth: int | None = None) -> TriState:
    alg = SyntaxAlgebra(max_depth)
    r = alg.value(c)
    if not r.is_defined():
        return TriState.UNKNOWN if r.is_unknown() else TriState.FALSE
    return alg.syn_closed(r.wff)


@_guarded
def cleanse(c: Wff, max_depth: int | None = None) -> PartialResult:
    alg = SyntaxAlgebra(max_depth)
    r = alg.value(c)
    return alg.cleanse(r.wff) if r.is_defined() else r


@_guarded
def subst(a: Wff, v: Wff, c: Wff, max_depth: int | None = None) -> PartialResult:
    alg = SyntaxAlgebra(max_depth)
    vals = [alg.value(a), alg.value(v), alg.value(c)]
    bad = _strict(vals)
    if bad is not None:
        return bad
    return alg.sub(*(r.wff for r in vals))


def literal_equal(a: Wff, b: Wff) -> bool:
    """Equality of eps literals, compared through what they represent."""
    da, db = represented(a), represented(b)
    return da is not None and da == db
