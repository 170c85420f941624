# kernel/macros.py
"""Derived rules: the macros scripts may call, and their library entry points.

Each macro elaborates to primitive lines through a ``ProofBuilder`` and
returns the line holding its conclusion; scripts then state that
conclusion (or its quasi-equation/equation counterpart).
"""
from __future__ import annotations

import logging
from typing import Callable, Optional, Sequence

from kernel import axioms as A
from kernel.builder import ProofBuilder
from kernel.proof import Proof, Theory
from kernel.rules import equation_sides
from shared.errors import NotAnEquation, PreconditionNotDischarged, ScriptError
from syntax import sugar as S
from syntax.grammar import parse_wff
from syntax.printer import print_wff
from syntax.wff import App, Quote, Var, Wff

log = logging.getLogger(__name__)

Ref = Callable[[int], int]
MacroFn = Callable[[ProofBuilder, Sequence[str], Wff, Ref], int]

MACROS: dict[str, MacroFn] = {}


def macro(name: str):
    def deco(fn: MacroFn) -> MacroFn:
        MACROS[name] = fn
        return fn
    return deco


# ------------- helpers -------------
def _wff(b: ProofBuilder, text: str) -> Wff:
    return parse_wff(text, b.sig)


def _var(b: ProofBuilder, text: str) -> Var:
    x = _wff(b, text)
    if not isinstance(x, Var):
        raise ScriptError(f"{text!r} is not a variable")
    return x


def _line(text: str, ref: Ref) -> int:
    if not text.isdigit():
        raise ScriptError(f"{text!r} is not a line number")
    return ref(int(text))


def _arity(name: str, args: Sequence[str], *allowed: int) -> None:
    if len(args) not in allowed:
        want = " or ".join(str(n) for n in allowed)
        raise ScriptError(f"macro {name} takes {want} arguments, got {len(args)}")


def _unquote(w: Wff) -> Wff:
    if not isinstance(w, Quote):
        raise PreconditionNotDischarged(f"{print_wff(w)} is not a quotation")
    return w.body


def _sub_parts(goal: Wff) -> tuple[Wff, Var, Wff]:
    """``a, x, b`` from a stated ``sub quote(a) quote(x) quote(b) = ...``."""
    lhs, _ = equation_sides(goal)
    head, args = lhs, []
    while isinstance(head, App):
        args.insert(0, head.arg)
        head = head.fn
    if head != A.SUB or len(args) != 3:
        raise NotAnEquation("stated line is not a substitution equation")
    a, x, b = (_unquote(w) for w in args)
    if not isinstance(x, Var):
        raise PreconditionNotDischarged(f"{print_wff(x)} is not a variable")
    return a, x, b


# ==========================
# Script macros
# ==========================
@macro("taut")
def _taut(b: ProofBuilder, args: Sequence[str], goal: Wff, ref: Ref) -> int:
    return b.tautcons(goal, *(_line(a, ref) for a in args))


@macro("beta")
def _beta(b: ProofBuilder, args: Sequence[str], goal: Wff, ref: Ref) -> int:
    _arity("beta", args, 0, 1)
    redex = _wff(b, args[0]) if args else equation_sides(goal)[0]
    return b.beta(redex)


@macro("ug")
def _ug(b: ProofBuilder, args: Sequence[str], goal: Wff, ref: Ref) -> int:
    _arity("ug", args, 2)
    return b.ug(_line(args[0], ref), _var(b, args[1]))


@macro("ui")
def _ui(b: ProofBuilder, args: Sequence[str], goal: Wff, ref: Ref) -> int:
    _arity("ui", args, 2)
    k = _line(args[0], ref)
    if args[1].isdigit():
        j = _line(args[1], ref)
        return b.ui(k, equation_sides(b.wff(j))[0].arg, beta_line=j)
    return b.ui(k, _wff(b, args[1]))


@macro("sub_eq")
def _sub_eq(b: ProofBuilder, args: Sequence[str], goal: Wff, ref: Ref) -> int:
    _arity("sub_eq", args, 0, 3)
    if args:
        a, x, c = _wff(b, args[0]), _var(b, args[1]), _wff(b, args[2])
    else:
        a, x, c = _sub_parts(goal)
    return b.sub_checked(a, x, c)


@macro("rewrite")
def _rewrite(b: ProofBuilder, args: Sequence[str], goal: Wff, ref: Ref) -> int:
    """Rewrite the right side of line i (all of it, if i is no equation) with equation j."""
    _arity("rewrite", args, 2)
    i, j = _line(args[0], ref), _line(args[1], ref)
    try:
        within = b.side_paths(i, 1)
    except NotAnEquation:
        within = None
    return b.rewrite(i, j, equation_sides(b.wff(j))[0], within=within)


@macro("fold")
def _fold(b: ProofBuilder, args: Sequence[str], goal: Wff, ref: Ref) -> int:
    _arity("fold", args, 1)
    return b.fold_all(_line(args[0], ref))


@macro("defined")
def _defined(b: ProofBuilder, args: Sequence[str], goal: Wff, ref: Ref) -> int:
    _arity("defined", args, 0, 1)
    a = _wff(b, args[0]) if args else S.match_defined(goal)
    if a is None:
        raise PreconditionNotDischarged("stated line is not a definedness statement")
    return b.defined(a)


def run_macro(b: ProofBuilder, name: str, args: Sequence[str], goal: Wff, ref: Ref) -> int:
    fn = MACROS.get(name)
    if fn is None:
        raise ScriptError(f"unknown macro {name!r}; known: {', '.join(sorted(MACROS))}")
    before = len(b.lines)
    k = b.conclude(fn(b, args, goal, ref), goal)
    log.debug("macro %s elaborated to %d lines", name, len(b.lines) - before)
    return k


# ==========================
# Library entry points
# ==========================
def _finish(b: ProofBuilder, k: int) -> Proof:
    if k != len(b.lines):
        k = b.tautcons(b.wff(k), k)
    return b.proof()


def derive_taut(goal: Wff, theory: Optional[Theory] = None) -> Proof:
    b = ProofBuilder(theory)
    return _finish(b, b.taut(goal))


def derive_beta(redex: Wff, theory: Optional[Theory] = None) -> Proof:
    """A proof of ``redex ~~ C`` (or ``redex = C``) with C the beta-reduct."""
    b = ProofBuilder(theory)
    return _finish(b, b.beta(redex))


def derive_universal_gen(proof: Proof, line: int, x: Var) -> Proof:
    b = ProofBuilder.extending(proof)
    return _finish(b, b.ug(line, x))


def derive_universal_inst(proof: Proof, line: int, a: Wff) -> Proof:
    b = ProofBuilder.extending(proof)
    return _finish(b, b.ui(line, a))


def derive_sub_equation(a: Wff, x: Var, c: Wff, theory: Optional[Theory] = None) -> Proof:
    """A proof of ``sub quote(a) quote(x) quote(c) = quote(d)``, d the substitution result."""
    b = ProofBuilder(theory)
    return _finish(b, b.sub_checked(a, x, c))


def derive_defined(a: Wff, theory: Optional[Theory] = None) -> Proof:
    b = ProofBuilder(theory)
    return _finish(b, b.defined(a))
