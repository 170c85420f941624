# kernel/builder.py
"""Building primitive proofs.

A ``ProofBuilder`` appends lines that are derived by the same routine the
checker runs, so a built proof either checks or the builder raised while
building it. On top of the three primitive steps it carries the derived
procedures the macros and public derived rules use: tautological
consequence, equation bookkeeping, the syntactic facts about quotations
(definedness, wff^alpha, var^alpha, eval-free, not-free-in, cleanse, sub)
and beta reduction, universal generalization and instantiation.

Every derivation is memoised per builder.
"""
from __future__ import annotations

import logging
from typing import Iterable, Optional, Sequence

from algebra.ops import SyntaxAlgebra
from engine.taut import taut_check
from kernel import axioms as A
from kernel.axioms import Param
from kernel.proof import Justification, Proof, ProofLine, Theory, derive_line
from kernel.rules import AUTO, equation_sides
from shared.errors import (
    LineMismatch, NotAnEquation, NotFormula, PreconditionNotDischarged, SubstUndefined, SubstUnknown,
)
from shared.tristate import TriState
from syntax import sugar as S
from syntax.encoding import TY_VAR
from syntax.paths import Path, find_occurrences, legal_paths, subterm_at
from syntax.printer import print_wff
from syntax.signature import ABS, APP, COND, EVAL, QUOT
from syntax.types import EPS, O, TypeExpr
from syntax.wff import (
    ATOMS, Abs, App, Cond, Const, Eval, Quote, Var, Wff, app, is_evaluation_free, type_of,
)

log = logging.getLogger(__name__)

# Positions of the two sides in ``A = B`` and in the expansion of ``A ~~ B``.
EQ_L: Path = ("fn", "arg")
EQ_R: Path = ("arg",)
QEQ_L: tuple[Path, ...] = (("fn", "arg", "fn", "arg", "fn", "arg"), ("fn", "arg", "fn", "arg", "arg"), ("arg", "fn", "arg"))
QEQ_R: tuple[Path, ...] = (("fn", "arg", "arg", "fn", "arg"), ("fn", "arg", "arg", "arg"), ("arg", "arg"))


# ------------- helpers -------------
def shallow(a: Wff) -> Wff:
    """``a``'s construction one level deep: its constructor applied to the quotations of its parts."""
    if isinstance(a, App):
        return app(APP, Quote(a.fn), Quote(a.arg))
    if isinstance(a, Abs):
        return app(ABS, Quote(a.binder), Quote(a.body))
    if isinstance(a, Cond):
        return app(COND, Quote(a.test), Quote(a.then), Quote(a.els))
    if isinstance(a, Quote):
        return App(QUOT, Quote(a.body))
    if isinstance(a, Eval):
        return app(EVAL, Quote(a.arg), Quote(Var(TY_VAR, a.ty)))
    raise PreconditionNotDischarged(f"{print_wff(a)} has no parts")


def parts(a: Wff) -> tuple[Wff, ...]:
    """The parts of ``a`` that ``shallow`` quotes, binder and type variable excluded."""
    if isinstance(a, App):
        return (a.fn, a.arg)
    if isinstance(a, Abs):
        return (a.body,)
    if isinstance(a, Cond):
        return (a.test, a.then, a.els)
    if isinstance(a, (Quote, Eval)):
        return (a.body,) if isinstance(a, Quote) else (a.arg,)
    return ()


def _part_paths(a: Wff) -> tuple[Path, ...]:
    """Where each of ``parts(a)`` sits inside ``shallow(a)``."""
    if isinstance(a, App):
        return (("fn", "arg"), ("arg",))
    if isinstance(a, Abs):
        return (("arg",),)
    if isinstance(a, Cond):
        return (("fn", "fn", "arg"), ("fn", "arg"), ("arg",))
    if isinstance(a, Quote):
        return (("arg",),)
    return (("fn", "arg"),)


def rebuild(a: Wff, new: Sequence[Wff]) -> Wff:
    if isinstance(a, App):
        return App(new[0], new[1])
    if isinstance(a, Abs):
        return Abs(a.binder, new[0])
    if isinstance(a, Cond):
        return Cond(new[0], new[1], new[2])
    if isinstance(a, Quote):
        return Quote(new[0])
    return Eval(new[0], a.ty)


def _quoted(w: Wff) -> Wff:
    if not isinstance(w, Quote):
        raise PreconditionNotDischarged(f"{print_wff(w)} is not a quotation")
    return w.body


# ==========================
# Builder
# ==========================
class ProofBuilder:
    def __init__(self, theory: Optional[Theory] = None, lines: Iterable[ProofLine] = ()):
        self.theory = theory or Theory()
        self.sig = self.theory.sig
        self.lines: list[ProofLine] = list(lines)
        self.origin: Optional[int] = None
        self._memo: dict[tuple, int] = {}
        self._alg = SyntaxAlgebra()

    @classmethod
    def extending(cls, proof: Proof) -> "ProofBuilder":
        return cls(proof.theory, proof.lines)

    def proof(self, source_lines: Optional[int] = None) -> Proof:
        return Proof(self.theory, tuple(self.lines), source_lines)

    def wff(self, i: int) -> Wff:
        return self.lines[i - 1].wff

    # ---- primitive steps ----
    def add(self, just: Justification, expect: Optional[Wff] = None) -> int:
        w = derive_line(just, self.lines, self.theory)
        if expect is not None and w != expect:
            raise LineMismatch(f"justification yields {print_wff(w)}")
        self.lines.append(ProofLine(w, just, self.origin))
        return len(self.lines)

    def hyp(self, k: int) -> int:
        return self._once(("hyp", k), lambda: self.add(Justification.hyp(k)))

    def axiom(self, sid: str, **params: Param) -> int:
        key = ("axiom", sid, tuple(sorted(params.items())))
        return self._once(key, lambda: self.add(Justification.axiom(sid, params)))

    def rule1(self, eq: int, target: int, path: Path | str = AUTO) -> int:
        return self.add(Justification.rule1(eq, target, path))

    def rule2(self, impl: int, ante: int) -> int:
        return self.add(Justification.rule2(impl, ante))

    def _once(self, key: tuple, make) -> int:
        k = self._memo.get(key)
        if k is None:
            k = make()
            self._memo[key] = k
        return k

    # ---- tautologies ----
    def taut(self, goal: Wff) -> int:
        return self.axiom("5", A=goal)

    def tautcons(self, goal: Wff, *premises: int) -> int:
        """``goal`` from ``premises`` when the implication chain is a tautology."""
        chain = goal
        for i in reversed(premises):
            chain = S.imp(self.wff(i), chain)
        k = self.taut(chain)
        for i in premises:
            k = self.rule2(k, i)
        return k

    def mp(self, sid: str, *premises: int, **params: Param) -> int:
        """Instance of ``sid`` with its antecedent discharged by ``premises``."""
        inst = self.axiom(sid, **params)
        if not premises:
            return inst
        ante, goal = S.match_imp(self.wff(inst))
        if len(premises) == 1 and self.wff(premises[0]) == ante:
            return self.rule2(inst, premises[0])
        return self.tautcons(goal, inst, *premises)

    def conclude(self, k: int, goal: Wff) -> int:
        """A line stating ``goal`` from line ``k``."""
        w = self.wff(k)
        if w == goal:
            return k
        q = S.match_qeq(goal)
        e = S.match_eq(w)
        if q is not None and e is not None and (e[0], e[1]) == q:
            return self.to_qeq(k)
        e = S.match_eq(goal)
        if e is not None and S.match_qeq(w) == (e[0], e[1]):
            return self.to_eq(k)
        try:
            if taut_check(S.imp(w, goal)):
                return self.tautcons(goal, k)
        except NotFormula:
            pass
        raise LineMismatch(f"derived {print_wff(w)}")

    # ---- equations ----
    def side_paths(self, i: int, side: int) -> tuple[Path, ...]:
        w = self.wff(i)
        if S.match_qeq(w) is not None:
            return (QEQ_L, QEQ_R)[side]
        if S.match_eq(w) is not None:
            return ((EQ_L,), (EQ_R,))[side]
        raise NotAnEquation(f"line {i} is not an equation")

    def rewrite(self, i: int, eq: int, old: Wff, within: Optional[Sequence[Path]] = None,
                required: bool = True) -> int:
        """Rewrite every legal occurrence of ``old`` in line ``i`` by the other side of line ``eq``."""
        paths = find_occurrences(old, self.wff(i))
        if within is not None:
            paths = [p for p in paths if any(p[:len(b)] == b for b in within)]
        if not paths and required:
            raise PreconditionNotDischarged(f"{print_wff(old)} does not occur in line {i}")
        for p in paths:
            i = self.rule1(eq, i, p)
        return i

    def rhs(self, i: int) -> Wff:
        return equation_sides(self.wff(i))[1]

    def to_qeq(self, i: int) -> int:
        a, b, ty = S.match_eq(self.wff(i))
        return self.tautcons(S.qeq(a, b, ty), i)

    def to_eq(self, i: int) -> int:
        w = self.wff(i)
        m = S.match_qeq(w)
        if m is None:
            if S.match_eq(w) is not None:
                return i
            raise NotAnEquation(f"line {i} is not an equation")
        a, b = m
        ty = type_of(a, self.sig)
        goal = S.eq(a, b, ty)
        if ty == O:
            return self.tautcons(goal, i)
        for side in (b, a):
            try:
                d = self.defined(side)
            except PreconditionNotDischarged:
                continue
            return self.tautcons(goal, i, d)
        raise PreconditionNotDischarged(f"neither side of line {i} is known to be defined")

    def chain(self, i: int, j: int) -> int:
        """``A = C`` from ``A = B`` (line i) and ``B = C`` (line j)."""
        return self.rule1(j, i, self.side_paths(i, 1)[-1])

    # ---- quotations ----
    def unfold(self, a: Wff) -> int:
        """``quote(a) = shallow(a)``."""
        def make() -> int:
            k = self.axiom("12.1", A=a)
            for part, path in zip(parts(a), _part_paths(a)):
                if isinstance(part, ATOMS):
                    continue
                k = self.rule1(self.axiom("12.1", A=part), k, EQ_R + path)
            return k
        return self._once(("unfold", a), make)

    def fold(self, i: int, a: Wff, required: bool = False) -> int:
        return self.rewrite(i, self.unfold(a), shallow(a), required=required)

    def fold_all(self, i: int) -> int:
        """Fold every construction in line i back into a quotation, innermost first."""
        while True:
            w = self.wff(i)
            found = next((c for p in legal_paths(w) for c in self._shallow_sources(subterm_at(w, p))), None)
            if found is None:
                return i
            i = self.fold(i, found, required=True)

    def construction_def(self, a: Wff) -> int:
        """``shallow(a)`` is defined."""
        def make() -> int:
            return self.rewrite(self.axiom("6.7", A=a), self.unfold(a), Quote(a))
        return self._once(("cdef", a), make)

    def defined(self, a: Wff) -> int:
        """``a`` is defined, for the shapes the definedness axioms cover."""
        def make() -> int:
            if isinstance(a, Var):
                return self.axiom("6.1", x=a)
            if isinstance(a, Const):
                if not self.sig.is_primitive(a):
                    raise PreconditionNotDischarged(f"{a.name} is not a primitive constant")
                return self.axiom("6.2", c=a)
            if isinstance(a, Abs):
                return self.axiom("6.5", x=a.binder, B=a.body)
            if isinstance(a, Quote):
                return self.axiom("6.7", A=a.body)
            ty = type_of(a, self.sig)
            if ty == O:
                if isinstance(a, App):
                    return self.axiom("6.3", A=a.fn, B=a.arg)
                if isinstance(a, Cond):
                    return self.axiom("6.6", A=a.test, B=a.then, C=a.els)
                if isinstance(a, Eval):
                    return self.axiom("6.8", A=a.arg)
            if isinstance(a, Eval) and ty == EPS and isinstance(a.arg, Quote) and isinstance(a.arg.body, Quote):
                return self.axiom("6.9", A=a.arg.body.body)
            if ty == EPS:
                for b in self._shallow_sources(a):
                    return self.construction_def(b)
            raise PreconditionNotDischarged(f"cannot show {print_wff(a)} is defined")
        return self._once(("def", a), make)

    @staticmethod
    def _shallow_sources(a: Wff) -> list[Wff]:
        try:
            head, args = _spine(a)
        except ValueError:
            return []
        quoted = [x.body for x in args if isinstance(x, Quote)]
        if len(quoted) != len(args):
            return []
        candidates = []
        if head == APP and len(quoted) == 2:
            candidates.append(App(*quoted))
        elif head == ABS and len(quoted) == 2 and isinstance(quoted[0], Var):
            candidates.append(Abs(quoted[0], quoted[1]))
        elif head == COND and len(quoted) == 3:
            candidates.append(Cond(*quoted))
        elif head == QUOT and len(quoted) == 1:
            candidates.append(Quote(quoted[0]))
        elif head == EVAL and len(quoted) == 2 and isinstance(quoted[1], Var) and quoted[1].name == TY_VAR:
            candidates.append(Eval(quoted[0], quoted[1].ty))
        return [c for c in candidates if shallow(c) == a]

    # ---- wff^alpha, var^alpha, eval-free ----
    def wff_of(self, a: Wff) -> int:
        """``wff^alpha quote(a)`` with alpha the type of ``a``."""
        def make() -> int:
            if isinstance(a, Var):
                return self.axiom("12.6.1", x=a)
            if isinstance(a, Const):
                return self.axiom("12.6.2", c=a)
            if isinstance(a, App):
                k = self.mp("12.6.3", self.wff_of(a.fn), self.wff_of(a.arg), A=Quote(a.fn), B=Quote(a.arg),
                            alpha=type_of(a, self.sig), beta=type_of(a.arg, self.sig))
            elif isinstance(a, Abs):
                k = self.mp("12.6.6", self.var_alpha(a.binder), self.wff_of(a.body), A=Quote(a.binder),
                            B=Quote(a.body), alpha=a.binder.ty, beta=type_of(a.body, self.sig))
            elif isinstance(a, Cond):
                k = self.mp("12.6.8", *(self.wff_of(p) for p in parts(a)), A=Quote(a.test), B=Quote(a.then),
                            C=Quote(a.els), alpha=type_of(a, self.sig))
            elif isinstance(a, Quote):
                k = self.mp("12.6.10", self.axiom("6.7", A=a.body), A=Quote(a.body))
            else:
                tv = Var(TY_VAR, a.ty)
                k = self.mp("12.6.11", self.wff_of(a.arg), self.var_alpha(tv), A=Quote(a.arg), B=Quote(tv),
                            alpha=a.ty)
            return self.fold(k, a, required=True)
        return self._once(("wff", a), make)

    def _eps_predicate(self, const: Wff, a: Wff, *facts: int) -> int:
        """``const quote(a)`` for one of the var^alpha / eval-free^alpha predicates, from its two conjuncts."""
        x, body = const.binder, const.body
        conj = self.tautcons(S.and_(*(self.wff(f) for f in facts)), *facts)
        r = self.beta_struct(x, body, Quote(a))
        return self.tautcons(App(const, Quote(a)), r, conj)

    def var_alpha(self, x: Var) -> int:
        return self._once(("var", x), lambda: self._eps_predicate(
            S.var_alpha_c(x.ty), x, self.axiom("12.2.1", x=x), self.wff_of(x)))

    def eval_free_alpha(self, a: Wff) -> int:
        ty = type_of(a, self.sig)
        return self._once(("efa", a), lambda: self._eps_predicate(
            S.eval_free_alpha_c(ty), a, self.eval_free(a), self.wff_of(a)))

    def eval_free(self, a: Wff) -> int:
        """``eval-free quote(a)`` for evaluation-free ``a``."""
        def make() -> int:
            if isinstance(a, Var):
                return self.mp("12.5.1", self.axiom("12.2.1", x=a), A=Quote(a))
            if isinstance(a, Const):
                return self.mp("12.5.2", self.axiom("12.3.1", c=a), A=Quote(a))
            if isinstance(a, Eval):
                raise PreconditionNotDischarged(f"{print_wff(a)} is an evaluation")
            if isinstance(a, Quote):
                k = self.mp("12.5.6", self.axiom("6.7", A=a.body), A=Quote(a.body))
                return self.fold(k, a, required=True)
            goal = App(A.EVAL_FREE, shallow(a))
            facts = [self.construction_def(a)] + [self.eval_free(p) for p in parts(a)]
            if isinstance(a, App):
                inst = self.axiom("12.5.3", A=Quote(a.fn), B=Quote(a.arg))
            elif isinstance(a, Abs):
                inst = self.axiom("12.5.4", A=Quote(a.binder), B=Quote(a.body))
            else:
                inst = self.axiom("12.5.5", A=Quote(a.test), B=Quote(a.then), C=Quote(a.els))
            return self.fold(self.tautcons(goal, inst, *facts), a, required=True)
        return self._once(("ef", a), make)

    # ---- not-free-in ----
    def not_free_in(self, x: Var, a: Wff) -> int:
        """``not-free-in quote(x) quote(a)``."""
        def make() -> int:
            qx, vx = Quote(x), self.axiom("12.2.1", x=x)
            if isinstance(a, Var):
                if a == x:
                    raise PreconditionNotDischarged(f"{x.name} is free in itself")
                return self.mp("12.7.2", vx, self.axiom("12.2.1", x=a), self.axiom("12.4.22", x=x, y=a),
                               A=qx, B=Quote(a))
            if isinstance(a, Const):
                return self.mp("12.7.3", vx, self.axiom("12.3.1", c=a), A=qx, B=Quote(a))
            if isinstance(a, Eval):
                raise PreconditionNotDischarged(f"{print_wff(a)} is an evaluation")
            if isinstance(a, Quote):
                k = self.mp("12.7.8", vx, self.axiom("6.7", A=a.body), A=qx, B=Quote(a.body))
                return self.fold(k, a, required=True)
            cdef = self.construction_def(a)
            goal = A.nfi(qx, shallow(a))
            if isinstance(a, App):
                k = self.tautcons(goal, self.axiom("12.7.4", A=qx, B=Quote(a.fn), C=Quote(a.arg)), vx, cdef,
                                  self.not_free_in(x, a.fn), self.not_free_in(x, a.arg))
            elif isinstance(a, Abs) and a.binder == x:
                k = self.mp("12.7.5", vx, cdef, A=qx, B=Quote(a.body))
            elif isinstance(a, Abs):
                y = a.binder
                k = self.tautcons(goal, self.axiom("12.7.6", A=qx, B=Quote(y), C=Quote(a.body)), vx,
                                  self.axiom("12.2.1", x=y), self.axiom("12.4.22", x=x, y=y), cdef,
                                  self.not_free_in(x, a.body))
            else:
                k = self.tautcons(goal, self.axiom("12.7.7", A=qx, D=Quote(a.test), E=Quote(a.then),
                                                   F=Quote(a.els)),
                                  vx, cdef, *(self.not_free_in(x, p) for p in parts(a)))
            return self.fold(k, a, required=True)
        return self._once(("nfi", x, a), make)

    def _absent(self, x: Var, a: Wff) -> bool:
        return self._alg.nfi(x, a) is TriState.TRUE

    # ---- cleanse ----
    def cleanse(self, a: Wff) -> int:
        """``cleanse quote(a) = quote(c)`` where c is the cleansed form of ``a``."""
        def make() -> int:
            qa = Quote(a)
            if isinstance(a, Var):
                return self.mp("12.8.1", self.axiom("12.2.1", x=a), A=qa)
            if isinstance(a, Const):
                return self.mp("12.8.2", self.axiom("12.3.1", c=a), A=qa)
            if isinstance(a, Quote):
                k = self.axiom("12.8.6", A=Quote(a.body))
                return self.to_eq(self.fold(k, a, required=True))
            if isinstance(a, Eval):
                return self._cleanse_eval(a)
            cdef = self.construction_def(a)
            if isinstance(a, App):
                k = self.mp("12.8.3", cdef, A=Quote(a.fn), B=Quote(a.arg))
            elif isinstance(a, Abs):
                k = self.mp("12.8.4", cdef, A=Quote(a.binder), B=Quote(a.body))
            else:
                k = self.mp("12.8.5", cdef, A=Quote(a.test), B=Quote(a.then), C=Quote(a.els))
            new = []
            for p in parts(a):
                c = self.cleanse(p)
                k = self.rewrite(k, c, A.cleanse(Quote(p)), required=False)
                new.append(_quoted(self.rhs(c)))
            return self._close(k, a, rebuild(a, new))
        return self._once(("cleanse", a), make)

    def _close(self, k: int, a: Wff, r: Wff) -> int:
        """Fold ``shallow(r)`` and ``shallow(a)`` back into quotations and make the line an equation."""
        k = self.fold(k, r, required=True)
        if r != a:
            k = self.fold(k, a, required=True)
        return self.to_eq(k)

    def _cleanse_eval(self, a: Eval) -> int:
        tv = Var(TY_VAR, a.ty)
        k = self.mp("12.8.7", self.var_alpha(tv), self.construction_def(a), A=Quote(a.arg), B=Quote(tv),
                    alpha=a.ty)
        c = self.cleanse(a.arg)
        k = self.rewrite(k, c, A.cleanse(Quote(a.arg)))
        k = self._discharge_guard(k, _quoted(self.rhs(c)), a.ty)
        return self.to_eq(self.fold(k, a, required=True))

    # ---- evaluation guards ----
    def _discharge_guard(self, k: int, e: Wff, alpha: TypeExpr) -> int:
        """Reduce ``if (evaluable quote(e) alpha) X bottom`` in line k to X, for a quotation ``e``."""
        if not isinstance(e, Quote):
            raise PreconditionNotDischarged(
                f"evaluation of {print_wff(e)} is only handled when it is a quotation")
        g = e.body
        if type_of(g, self.sig) != alpha:
            raise PreconditionNotDischarged(f"{print_wff(g)} does not have type {alpha}")
        E = Quote(e)
        k = self.rewrite(k, self.disquote(g), Eval(E, EPS))
        test = S.and_(S.syn_closed(E), S.eval_free_alpha(alpha, Quote(g)))
        kt = self.tautcons(S.iff(test, S.TRUE), self.syn_closed(e), self.eval_free_alpha(g))
        k = self.rewrite(k, kt, test)
        cond = next(c for c in _conds(self.wff(k)) if c.test == S.TRUE)
        return self.rewrite(k, self.axiom("10.1", B=cond.then, C=cond.els), cond)

    def disquote(self, g: Wff) -> int:
        """``[[quote(quote(g))]]_eps = quote(g)``."""
        def make() -> int:
            u = self.unfold(Quote(g))
            d = self.rewrite(self.axiom("6.9", A=g), u, Quote(Quote(g)))
            k = self.rule2(self.axiom("11.6", A=Quote(g)), d)
            return self.fold(k, Quote(g), required=True)
        return self._once(("disquote", g), make)

    def syn_closed(self, h: Wff) -> int:
        """``syn-closed quote(h)`` for a quotation or a primitive constant ``h``."""
        def make() -> int:
            v = S.rv(1, EPS)
            qh = Quote(h)
            if isinstance(h, Quote):
                k = self.tautcons(S.imp(App(A.VAR, v), A.nfi(v, shallow(h))),
                                  self.axiom("12.7.8", A=v, B=Quote(h.body)), self.axiom("6.7", A=h.body))
                k = self.fold(k, h, required=True)
            elif isinstance(h, Const):
                k = self.tautcons(S.imp(App(A.VAR, v), A.nfi(v, qh)),
                                  self.axiom("12.7.3", A=v, B=qh), self.axiom("12.3.1", c=h))
            else:
                raise PreconditionNotDischarged(f"cannot show {print_wff(h)} is syntactically closed")
            k = self.ug(k, v)
            c = S.SYN_CLOSED_C
            r = self.beta_struct(c.binder, c.body, qh)
            return self.tautcons(S.syn_closed(qh), r, k)
        return self._once(("closed", h), make)

    # ---- substitution ----
    def sub(self, a: Wff, x: Var, b: Wff) -> int:
        """``sub quote(a) quote(x) quote(b) = quote(c)``."""
        def make() -> int:
            alpha = x.ty
            base = dict(A=Quote(a), B=Quote(x), alpha=alpha)
            prem = (self.wff_of(a), self.var_alpha(x))
            qa, qx = Quote(a), Quote(x)
            if isinstance(b, Var) and b == x:
                k = self.mp("12.9.1", *prem, **base)
                return self.chain(k, self.cleanse(a))
            if isinstance(b, Var):
                return self.mp("12.9.2", *prem, self.axiom("12.2.1", x=b), self.axiom("12.4.22", x=x, y=b),
                               C=Quote(b), **base)
            if isinstance(b, Const):
                return self.mp("12.9.3", *prem, self.axiom("12.3.1", c=b), C=Quote(b), **base)
            if isinstance(b, Quote):
                k = self.mp("12.9.8", *prem, self.axiom("6.7", A=b.body), C=Quote(b.body), **base)
                return self.fold(k, b, required=True)
            cdef = self.construction_def(b)
            if isinstance(b, Eval):
                return self._sub_eval(a, x, b, prem, cdef, base)
            if isinstance(b, Abs) and b.binder == x:
                k = self.mp("12.9.5", *prem, cdef, E=Quote(b.body), **base)
                c = self.cleanse(b.body)
                k = self.rewrite(k, c, A.cleanse(Quote(b.body)))
                return self._close(k, b, Abs(x, _quoted(self.rhs(c))))
            if isinstance(b, Abs):
                return self._sub_abs(a, x, b, prem, cdef, base)
            if isinstance(b, App):
                k = self.mp("12.9.4", *prem, cdef, D=Quote(b.fn), E=Quote(b.arg), **base)
            else:
                k = self.mp("12.9.7", *prem, cdef, D=Quote(b.test), E=Quote(b.then), F=Quote(b.els), **base)
            new = []
            for p in parts(b):
                s = self.sub(a, x, p)
                k = self.rewrite(k, s, A.sub(qa, qx, Quote(p)), required=False)
                new.append(_quoted(self.rhs(s)))
            return self._close(k, b, rebuild(b, new))
        return self._once(("sub", a, x, b), make)

    def _sub_abs(self, a: Wff, x: Var, b: Abs, prem, cdef: int, base: dict) -> int:
        y, e = b.binder, b.body
        qa, qx = Quote(a), Quote(x)
        k = self.mp("12.9.6", *prem, self.axiom("12.2.1", x=y), self.axiom("12.4.22", x=x, y=y), cdef,
                    D=Quote(y), E=Quote(e), **base)
        safe = S.or_(A.nfi(qx, Quote(e)), A.nfi(Quote(y), qa))
        if self._absent(x, e) and is_evaluation_free(e):
            fact = self.not_free_in(x, e)
        elif self._absent(y, a) and is_evaluation_free(a):
            fact = self.not_free_in(y, a)
        else:
            raise PreconditionNotDischarged(f"substituting for {x.name} would capture {y.name}")
        k = self.rewrite(k, self.tautcons(S.iff(safe, S.TRUE), fact), safe)
        cond = next(c for c in _conds(self.wff(k)) if c.test == S.TRUE)
        k = self.rewrite(k, self.axiom("10.1", B=cond.then, C=cond.els), cond)
        s = self.sub(a, x, e)
        k = self.rewrite(k, s, A.sub(qa, qx, Quote(e)))
        return self._close(k, b, Abs(y, _quoted(self.rhs(s))))

    def _sub_eval(self, a: Wff, x: Var, b: Eval, prem, cdef: int, base: dict) -> int:
        tv = Var(TY_VAR, b.ty)
        qa, qx = Quote(a), Quote(x)
        k = self.mp("12.9.9", *prem, self.var_alpha(tv), cdef, D=Quote(b.arg), E=Quote(tv), beta=b.ty, **base)
        s1 = self.sub(a, x, b.arg)
        k = self.rewrite(k, s1, A.sub(qa, qx, Quote(b.arg)))
        e1 = _quoted(self.rhs(s1))
        k = self._discharge_guard(k, e1, b.ty)
        g = _quoted(e1)
        s2 = self.sub(a, x, g)
        k = self.rewrite(k, s2, A.sub(qa, qx, Quote(g)))
        return self.to_eq(self.fold(k, b, required=True))

    # ---- beta ----
    def beta_struct(self, x: Var, body: Wff, arg: Wff) -> int:
        """``[lambda x body] arg`` equals ``body`` with ``arg`` for x, by the structural beta axioms."""
        def make() -> int:
            p = dict(A=arg, x=x)
            if body == x:
                return self.axiom("4.2", **p)
            if arg == x:
                return self.axiom("4.10", x=x, B=body)
            if isinstance(body, Var):
                return self.mp("4.3", self.defined(arg), y=body, **p)
            if isinstance(body, Const):
                if not self.sig.is_primitive(body):
                    raise PreconditionNotDischarged(f"{body.name} is not a primitive constant")
                return self.mp("4.4", self.defined(arg), c=body, **p)
            if isinstance(body, Quote):
                return self.mp("4.9", self.defined(arg), B=body.body, **p)
            if isinstance(body, Eval):
                raise PreconditionNotDischarged(f"cannot reduce into the evaluation {print_wff(body)}")
            if isinstance(body, Abs) and body.binder == x:
                return self.mp("4.6", self.defined(arg), B=body.body, **p)
            if isinstance(body, Abs):
                y, inner = body.binder, body.body
                if is_evaluation_free(arg) and self._absent(y, arg):
                    fact = self.not_free_in(y, arg)
                elif is_evaluation_free(inner) and self._absent(x, inner):
                    fact = self.not_free_in(x, inner)
                else:
                    raise PreconditionNotDischarged(f"cannot show reduction under {y.name} is capture-free")
                safe = self.tautcons(S.or_(A.nfi(Quote(x), Quote(inner)), A.nfi(Quote(y), Quote(arg))), fact)
                k = self.mp("4.7", self.defined(arg), safe, y=y, B=inner, **p)
                return self.rule1(self.beta_struct(x, inner, arg), k, EQ_R + ("body",))
            if isinstance(body, App):
                k = self.axiom("4.5", B=body.fn, C=body.arg, **p)
            else:
                k = self.axiom("4.8", B=body.test, C=body.then, D=body.els, **p)
            for part in parts(body):
                r = self.beta_struct(x, part, arg)
                k = self.rewrite(k, r, App(Abs(x, part), arg), within=self.side_paths(k, 1), required=False)
            return k
        return self._once(("beta", x, body, arg), make)

    def beta(self, redex: Wff) -> int:
        """A line ``redex ~~ result`` (or ``=``) for a beta-redex."""
        if not (isinstance(redex, App) and isinstance(redex.fn, Abs)):
            raise PreconditionNotDischarged(f"{print_wff(redex)} is not a beta-redex")
        x, body, arg = redex.fn.binder, redex.fn.body, redex.arg
        if isinstance(body, (Var, Const, Quote)) or arg == x or (isinstance(body, Abs) and body.binder == x):
            return self.beta_struct(x, body, arg)
        if is_evaluation_free(body) and is_evaluation_free(arg):
            try:
                return self.beta_by_sub(x, body, arg)
            except (PreconditionNotDischarged, SubstUndefined, SubstUnknown) as e:
                log.debug("beta by substitution failed, reducing structurally: %s", e)
        return self.beta_struct(x, body, arg)

    def beta_by_sub(self, x: Var, body: Wff, arg: Wff) -> int:
        s = self.sub_checked(arg, x, body)
        c = _quoted(self.rhs(s))
        return self.mp("4.1", self.defined(arg), s, A=arg, x=x, B=body, C=c)

    def sub_checked(self, a: Wff, x: Var, b: Wff) -> int:
        """``sub`` after checking the algebra says the substitution is defined."""
        r = self._alg.sub(a, x, b)
        if r.is_undefined():
            raise SubstUndefined(f"substituting {print_wff(a)} for {x.name} in {print_wff(b)} is undefined")
        if r.is_unknown():
            raise SubstUnknown(f"cannot decide substituting {print_wff(a)} for {x.name} in {print_wff(b)}")
        return self.sub(a, x, b)

    # ---- quantifiers ----
    def ug(self, i: int, x: Var) -> int:
        """``forall x A`` from line i stating A."""
        t = self.tautcons(S.iff(S.TRUE, self.wff(i)), i)
        return self.rule1(t, self.forall_lemma(x), EQ_R + ("body",))

    def forall_lemma(self, x: Var) -> int:
        """``[lambda z T] = [lambda x T]`` where z is the dummy of the universal quantifier."""
        def make() -> int:
            z = S.rv(0, x.ty)
            F, G = Abs(z, S.TRUE), Abs(x, S.TRUE)
            if x == z:
                return self.axiom("6.5", x=z, B=S.TRUE)
            k = self.axiom("7", A=App(F, z))
            for path in QEQ_R:
                k = self.rule1(self.axiom("4.10", x=z, B=S.TRUE), k, path)
            r = self.beta_struct(x, S.TRUE, z)
            for path in QEQ_R:
                k = self.rule1(r, k, path)
            kf = self.axiom("6.5", x=z, B=S.TRUE)
            gen = self.rule1(self.tautcons(S.iff(S.TRUE, self.wff(k)), k), kf, EQ_R + ("body",))
            ext = self.axiom("3", F=F, G=G, x=z)
            return self.tautcons(S.eq(F, G), ext, kf, self.axiom("6.5", x=x, B=S.TRUE), gen)
        return self._once(("forall", x), make)

    def ui(self, i: int, a: Wff, beta_line: Optional[int] = None) -> int:
        """``B[x := a]`` from line i stating ``forall x B``."""
        m = S.match_forall(self.wff(i))
        if m is None:
            raise PreconditionNotDischarged(f"line {i} is not a universal statement")
        x, body = m
        z = S.rv(0, x.ty)
        F, G = Abs(z, S.TRUE), Abs(x, body)
        k = self.axiom("7", A=App(F, a))
        for path in QEQ_R:
            k = self.rule1(i, k, path + ("fn",))
        r1 = self.beta_struct(z, S.TRUE, a)
        for path in QEQ_L:
            k = self.rule1(r1, k, path)
        r2 = beta_line if beta_line is not None else self.beta(App(G, a))
        lhs, c = equation_sides(self.wff(r2))
        if lhs != App(G, a):
            raise PreconditionNotDischarged(f"line {r2} does not reduce {print_wff(App(G, a))}")
        for path in QEQ_R:
            k = self.rule1(r2, k, path)
        return self.tautcons(c, k)


# ------------- helpers -------------
def _spine(w: Wff) -> tuple[Wff, list[Wff]]:
    args: list[Wff] = []
    while isinstance(w, App):
        args.append(w.arg)
        w = w.fn
    if not isinstance(w, Const):
        raise ValueError("not a constant application")
    return w, list(reversed(args))


def _conds(w: Wff):
    """Conditionals in ``w`` outside quotations, preorder."""
    if isinstance(w, Cond):
        yield w
    if isinstance(w, Quote):
        return
    if isinstance(w, App):
        yield from _conds(w.fn)
        yield from _conds(w.arg)
    elif isinstance(w, Abs):
        yield from _conds(w.body)
    elif isinstance(w, Cond):
        for p in (w.test, w.then, w.els):
            yield from _conds(p)
    elif isinstance(w, Eval):
        yield from _conds(w.arg)
