# engine/normalizer.py
"""Leftmost-outermost rewriting with the catalogue in ``rules.yaml``."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Callable, Optional

from algebra.ops import SyntaxAlgebra, represented
from shared.config import CFG
from shared.errors import FuelExhausted, IllTyped, ScriptError, TypeCheckError
from shared.tristate import TriState
from shared.util import data_path, load_yaml
from syntax import sugar
from syntax.encoding import canonical, encode, is_literal
from syntax.signature import ABS, APP, CLEANSE, COND, CON, EVAL, EVAL_FREE, NFI, PAIR_NAME, QUOT, SUB, VAR, WFF_NAME
from syntax.types import EPS, O, TypeExpr
from syntax.wff import (
    ATOMS, Abs, App, Cond, Const, Eval, Quote, Var, Wff, free_vars, is_evaluation_free, spine, type_of,
)
from engine.definedness import defined_here

log = logging.getLogger(__name__)

RULES_FILE = data_path(__file__, "rules.yaml")


# ==========================
# Normal forms
# ==========================
class Outcome(Enum):
    VALUE = "value"
    BOTTOM = "bottom"
    STUCK = "stuck"


@dataclass(frozen=True)
class NormalForm:
    wff: Wff
    status: Outcome
    ty: TypeExpr
    steps: int = 0
    trace: tuple[str, ...] = field(default=(), compare=False)


@dataclass(frozen=True)
class RewriteRule:
    id: str
    anchor: str
    apply: Callable[[Wff], Optional[Wff]]


@lru_cache(maxsize=None)
def _catalogue(path: str) -> tuple[tuple[str, str], ...]:
    cfg = load_yaml(path)
    return tuple((r["id"], r.get("anchor", "")) for r in cfg.get("rules") or [])


def _result_type(w: App) -> TypeExpr:
    return type_of(w.fn).result


def _bot(ty: TypeExpr) -> Wff:
    return sugar.bottom(ty)


def _is_bottom(w: Wff) -> bool:
    b = sugar.match_bottom(w)
    return b is not None and b != O


_EPS_PRED_MATCHERS = (sugar.match_var_alpha, sugar.match_con_alpha, sugar.match_eval_free_alpha)
_PRED_ARITY = {VAR: 1, CON: 1, EVAL_FREE: 1, NFI: 2}
_OPERATOR_ARITY = {CLEANSE: 1, SUB: 3, APP: 2, ABS: 2, COND: 3, EVAL: 2, QUOT: 1}


def _constructor_pattern(p: Wff, holes: set[Var]) -> bool:
    """True when ``p`` is built from constructors, atom quotations and ``holes`` only."""
    if isinstance(p, Var):
        return p in holes
    if isinstance(p, Quote):
        return isinstance(p.body, ATOMS)
    head, args = spine(p)
    return isinstance(head, Const) and head not in (CLEANSE, SUB) and _OPERATOR_ARITY.get(head) == len(args) \
        and all(_constructor_pattern(a, holes) for a in args)


def _match_literal(p: Wff, lit: Wff, holes: set[Var], env: dict[Var, Wff]) -> bool:
    if isinstance(p, Var) and p in holes:
        if p in env:
            return env[p] == lit
        env[p] = lit
        return True
    if isinstance(p, App):
        return isinstance(lit, App) and _match_literal(p.fn, lit.fn, holes, env) \
            and _match_literal(p.arg, lit.arg, holes, env)
    return p == lit


# ==========================
# Normalizer
# ==========================
class Normalizer:
    """
    Rewrites to normal form, one rule firing per step, tried leftmost-outermost.

    Quotation bodies are inert. ``T``, ``F`` and canonical bottoms are not
    entered. Applications of the built-in defined operators (and, or, implies,
    the eps predicates, fst, snd) are never beta-unfolded.
    """

    def __init__(self, fuel: int | None = None, trace: bool = False, rules_file: str = RULES_FILE):
        self.fuel = fuel or CFG.fuel
        self.trace = trace
        self.rules: list[RewriteRule] = []
        for rid, anchor in _catalogue(rules_file):
            method = getattr(self, "_r_" + rid.replace(".", "_").replace("-", "_"), None)
            if method is None:
                raise ScriptError(f"unknown rewrite rule {rid}", rules_file)
            self.rules.append(RewriteRule(rid, anchor, method))
        self.alg = SyntaxAlgebra()
        self._fired: list[str] = []

    # ------------- public API -------------
    def normalize(self, w: Wff) -> NormalForm:
        try:
            ty = type_of(w)
        except TypeCheckError as e:
            raise IllTyped(str(e)) from e
        self._fired = []
        steps = 0
        while True:
            nxt = self._step(w)
            if nxt is None:
                break
            steps += 1
            if steps > self.fuel:
                raise FuelExhausted(f"no normal form within {self.fuel} steps")
            w = nxt
        return NormalForm(w, self._outcome(w), ty, steps, tuple(self._fired))

    def is_defined(self, w: Wff) -> TriState:
        """Definedness, falling back to the normal form when the syntax is silent."""
        v = defined_here(w, self.alg)
        if not v.is_unknown():
            return v
        try:
            nf = self.normalize(w)
        except FuelExhausted:
            return TriState.UNKNOWN
        if nf.status is Outcome.BOTTOM:
            return TriState.FALSE
        return defined_here(nf.wff, self.alg)

    # ------------- helpers -------------
    @staticmethod
    def _outcome(w: Wff) -> Outcome:
        if _is_bottom(w):
            return Outcome.BOTTOM
        if free_vars(w) or not is_evaluation_free(w):
            return Outcome.STUCK
        return Outcome.VALUE

    @staticmethod
    def _inert(w: Wff) -> bool:
        if sugar.is_true(w) or sugar.is_false(w) or _is_bottom(w):
            return True
        return isinstance(w, Abs) and sugar.is_defined_operator(w)

    def _step(self, w: Wff) -> Optional[Wff]:
        if self._inert(w):
            return None
        for rule in self.rules:
            out = rule.apply(w)
            if out is not None and out != w:
                if self.trace:
                    self._fired.append(rule.id)
                log.debug("rule %s fired", rule.id)
                return out
        if isinstance(w, App):
            f = self._step(w.fn)
            if f is not None:
                return App(f, w.arg)
            a = self._step(w.arg)
            return None if a is None else App(w.fn, a)
        if isinstance(w, Abs):
            b = self._step(w.body)
            return None if b is None else Abs(w.binder, b)
        if isinstance(w, Cond):
            parts = [w.test, w.then, w.els]
            for i, p in enumerate(parts):
                s = self._step(p)
                if s is not None:
                    parts[i] = s
                    return Cond(*parts)
            return None
        if isinstance(w, Eval):
            a = self._step(w.arg)
            return None if a is None else Eval(a, w.ty)
        return None

    def _defined(self, a: Wff) -> bool:
        return defined_here(a, self.alg).is_true()

    @staticmethod
    def _redex(w: Wff) -> Optional[tuple[Var, Wff, Wff]]:
        if isinstance(w, App) and isinstance(w.fn, Abs) and not sugar.is_defined_operator(w.fn):
            return w.fn.binder, w.fn.body, w.arg
        return None

    # ------------- conditionals and quotation -------------
    def _r_cond_true(self, w: Wff) -> Optional[Wff]:
        return w.then if isinstance(w, Cond) and sugar.is_true(w.test) else None

    def _r_cond_false(self, w: Wff) -> Optional[Wff]:
        return w.els if isinstance(w, Cond) and sugar.is_false(w.test) else None

    def _r_quote_canonical(self, w: Wff) -> Optional[Wff]:
        if isinstance(w, Quote) and not isinstance(w.body, ATOMS):
            return encode(w.body)
        return None

    def _r_eval_cond(self, w: Wff) -> Optional[Wff]:
        if isinstance(w, Eval) and isinstance(w.arg, Cond):
            c = w.arg
            return Cond(c.test, Eval(c.then, w.ty), Eval(c.els, w.ty))
        return None

    def _r_eval_literal(self, w: Wff) -> Optional[Wff]:
        if not isinstance(w, Eval):
            return None
        r = self.alg.value(w.arg)
        if r.is_unknown():
            return None
        if r.is_defined() and is_evaluation_free(r.wff) and _typed(r.wff) == w.ty:
            return r.wff
        return _bot(w.ty)

    # ------------- beta -------------
    def _r_beta_arg_var(self, w: Wff) -> Optional[Wff]:
        r = self._redex(w)
        return r[1] if r and r[2] == r[0] else None

    def _r_beta_identity(self, w: Wff) -> Optional[Wff]:
        r = self._redex(w)
        return r[2] if r and r[1] == r[0] else None

    def _r_beta_var(self, w: Wff) -> Optional[Wff]:
        r = self._redex(w)
        if r and isinstance(r[1], Var) and r[1] != r[0] and self._defined(r[2]):
            return r[1]
        return None

    def _r_beta_const(self, w: Wff) -> Optional[Wff]:
        r = self._redex(w)
        return r[1] if r and isinstance(r[1], Const) and self._defined(r[2]) else None

    def _r_beta_quote(self, w: Wff) -> Optional[Wff]:
        r = self._redex(w)
        return r[1] if r and isinstance(r[1], Quote) and self._defined(r[2]) else None

    def _r_beta_shadow(self, w: Wff) -> Optional[Wff]:
        r = self._redex(w)
        if r and isinstance(r[1], Abs) and r[1].binder == r[0] and self._defined(r[2]):
            return r[1]
        return None

    def _r_beta_subst(self, w: Wff) -> Optional[Wff]:
        r = self._redex(w)
        if not r or not self._defined(r[2]):
            return None
        out = self.alg.sub(r[2], r[0], r[1])
        return out.wff if out.is_defined() else None

    def _r_beta_app(self, w: Wff) -> Optional[Wff]:
        r = self._redex(w)
        if r and isinstance(r[1], App):
            x, b, a = r
            return App(App(Abs(x, b.fn), a), App(Abs(x, b.arg), a))
        return None

    def _r_beta_abs(self, w: Wff) -> Optional[Wff]:
        r = self._redex(w)
        if not r or not isinstance(r[1], Abs) or r[1].binder == r[0] or not self._defined(r[2]):
            return None
        x, b, a = r
        ok = TriState.any([self.alg.nfi(x, b.body), self.alg.nfi(b.binder, a)])
        return Abs(b.binder, App(Abs(x, b.body), a)) if ok.is_true() else None

    def _r_beta_cond(self, w: Wff) -> Optional[Wff]:
        r = self._redex(w)
        if r and isinstance(r[1], Cond):
            x, c, a = r
            return Cond(App(Abs(x, c.test), a), App(Abs(x, c.then), a), App(Abs(x, c.els), a))
        return None

    def _r_strict_app(self, w: Wff) -> Optional[Wff]:
        if isinstance(w, App) and (_is_bottom(w.fn) or _is_bottom(w.arg)):
            return _bot(_result_type(w))
        return None

    # ------------- connectives -------------
    def _r_conn_not(self, w: Wff) -> Optional[Wff]:
        a = sugar.match_not(w)
        if a is None:
            return None
        if sugar.is_true(a):
            return sugar.FALSE
        return sugar.TRUE if sugar.is_false(a) else None

    def _r_conn_and(self, w: Wff) -> Optional[Wff]:
        m = sugar.match_and(w)
        if m is None:
            return None
        a, b = m
        if sugar.is_false(a) or sugar.is_false(b):
            return sugar.FALSE
        if sugar.is_true(a):
            return b
        return a if sugar.is_true(b) else None

    def _r_conn_or(self, w: Wff) -> Optional[Wff]:
        m = sugar.match_or(w)
        if m is None:
            return None
        a, b = m
        if sugar.is_true(a) or sugar.is_true(b):
            return sugar.TRUE
        if sugar.is_false(a):
            return b
        return a if sugar.is_false(b) else None

    def _r_conn_imp(self, w: Wff) -> Optional[Wff]:
        m = sugar.match_imp(w)
        if m is None:
            return None
        a, b = m
        if sugar.is_true(a):
            return b
        if sugar.is_false(a) or sugar.is_true(b):
            return sugar.TRUE
        return sugar.not_(a) if sugar.is_false(b) else None

    def _r_conn_iff(self, w: Wff) -> Optional[Wff]:
        m = sugar.match_iff(w)
        if m is None:
            return None
        a, b = m
        if a == b:
            return sugar.TRUE
        if sugar.is_true(a):
            return b
        if sugar.is_true(b):
            return a
        if sugar.is_false(a) and sugar.is_false(b):
            return sugar.TRUE
        if sugar.is_false(b):
            return sugar.not_(a)
        return None

    # ------------- equality and predicates -------------
    def _r_eq_eps_literal(self, w: Wff) -> Optional[Wff]:
        m = sugar.match_eq(w)
        if m is None or m[2] != EPS or not (is_literal(m[0]) and is_literal(m[1])):
            return None
        da, db = represented(m[0]), represented(m[1])
        if da is None or db is None:
            return None
        return sugar.TRUE if da == db else sugar.FALSE

    def _r_eq_refl(self, w: Wff) -> Optional[Wff]:
        m = sugar.match_eq(w)
        if m and m[0] == m[1] and self._defined(m[0]):
            return sugar.TRUE
        return None

    def _r_pred_literal(self, w: Wff) -> Optional[Wff]:
        if not isinstance(w, App):
            return None
        head, args = spine(w)
        primitive = isinstance(head, Const) and (
            _PRED_ARITY.get(head) == len(args) or (head.name == WFF_NAME and len(args) == 1))
        if not primitive and sugar.match_syn_closed(w) is None and not any(m(w) for m in _EPS_PRED_MATCHERS):
            return None
        if not all(is_literal(a) for a in args):
            return None
        v = self.alg.decide(w)
        if v.is_unknown():
            return None
        return sugar.TRUE if v.is_true() else sugar.FALSE

    def _r_eps_operator(self, w: Wff) -> Optional[Wff]:
        head, args = spine(w)
        if not (isinstance(head, Const) and _OPERATOR_ARITY.get(head) == len(args)):
            return None
        if not all(is_literal(a) for a in args):
            return None
        r = self.alg.value(w)
        if r.is_undefined():
            return _bot(EPS)
        if r.is_defined() and head in (CLEANSE, SUB):
            return encode(r.wff)
        return None

    # ------------- pairs and descriptions -------------
    def _pair_parts(self, p: Wff) -> Optional[list[Wff]]:
        head, args = spine(p)
        if isinstance(head, Const) and head.name == PAIR_NAME and len(args) == 2:
            return args
        return None

    def _r_pair_fst(self, w: Wff) -> Optional[Wff]:
        p = sugar.match_fst(w)
        parts = self._pair_parts(p) if p is not None else None
        return parts[0] if parts and self._defined(parts[1]) else None

    def _r_pair_snd(self, w: Wff) -> Optional[Wff]:
        p = sugar.match_snd(w)
        parts = self._pair_parts(p) if p is not None else None
        return parts[1] if parts and self._defined(parts[0]) else None

    @staticmethod
    def _literal_equation(body: Wff, holes: set[Var]) -> Optional[tuple[Wff, Wff]]:
        """(pattern, literal) when ``body`` equates a literal with a constructor pattern."""
        m = sugar.match_eq(body)
        if m is None or m[2] != EPS:
            return None
        for lit, pat in ((m[0], m[1]), (m[1], m[0])):
            if is_literal(lit) and not (free_vars(lit) & holes):
                cp = canonical(pat)
                if _constructor_pattern(cp, holes):
                    return cp, canonical(lit)
        return None

    def _r_exists_literal_match(self, w: Wff) -> Optional[Wff]:
        holes: list[Var] = []
        body = w
        while (e := sugar.match_exists(body)) is not None and e[0].ty == EPS:
            holes.append(e[0])
            body = e[1]
        if not holes:
            return None
        eqn = self._literal_equation(body, set(holes))
        if eqn is None:
            return None
        ok = _match_literal(eqn[0], eqn[1], set(holes), {})
        return sugar.TRUE if ok else sugar.FALSE

    def _r_desc_literal_match(self, w: Wff) -> Optional[Wff]:
        d = sugar.match_desc(w)
        if d is None or d[0].ty != EPS:
            return None
        holes = [d[0]]
        body = d[1]
        while (e := sugar.match_exists(body)) is not None and e[0].ty == EPS:
            holes.append(e[0])
            body = e[1]
        eqn = self._literal_equation(body, set(holes))
        if eqn is None or d[0] not in free_vars(eqn[0]):
            return None
        env: dict[Var, Wff] = {}
        if not _match_literal(eqn[0], eqn[1], set(holes), env):
            return _bot(EPS)
        return env[d[0]]

    def _r_desc_empty(self, w: Wff) -> Optional[Wff]:
        d = sugar.match_desc(w)
        if d is not None and sugar.is_false(d[1]):
            return _bot(d[0].ty)
        return None


def _typed(w: Wff) -> Optional[TypeExpr]:
    try:
        return type_of(w)
    except TypeCheckError:
        return None


def normalize(w: Wff, fuel: int | None = None, trace: bool = False) -> NormalForm:
    return Normalizer(fuel=fuel, trace=trace).normalize(w)


def is_defined(w: Wff, fuel: int | None = None) -> TriState:
    return Normalizer(fuel=fuel).is_defined(w)
