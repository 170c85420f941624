# syntax/wff.py
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator, Optional, Union

from shared.errors import EvalArgNotEpsilon, NotEvaluationFree, TypeCheckError, TypeMismatch, UnknownConstant
from syntax.types import EPS, O, Fun, TypeExpr

if TYPE_CHECKING:
    from syntax.signature import Signature


# ==========================
# Wff model
# ==========================
# Hashes are cached on the instance; equality rejects on a hash mismatch
# before descending.
def _node_hash(self) -> int:
    h = self.__dict__.get("_h")
    if h is None:
        h = hash((type(self).__name__,) + tuple(self.__dict__[n] for n in self.__dataclass_fields__))
        object.__setattr__(self, "_h", h)
    return h


def _node_eq(self, other) -> bool:
    if self is other:
        return True
    if type(other) is not type(self) or hash(self) != hash(other):
        return False
    return all(self.__dict__[n] == other.__dict__[n] for n in self.__dataclass_fields__)


@dataclass(frozen=True)
class Var:
    name: str
    ty: TypeExpr
    __hash__ = _node_hash
    __eq__ = _node_eq


@dataclass(frozen=True)
class Const:
    name: str
    ty: TypeExpr
    index: Optional[TypeExpr] = None    # the alpha of wff^alpha; None for every other family
    __hash__ = _node_hash
    __eq__ = _node_eq


@dataclass(frozen=True)
class App:
    fn: "Wff"
    arg: "Wff"
    __hash__ = _node_hash
    __eq__ = _node_eq


@dataclass(frozen=True)
class Abs:
    binder: Var
    body: "Wff"
    __hash__ = _node_hash
    __eq__ = _node_eq


@dataclass(frozen=True)
class Cond:
    test: "Wff"
    then: "Wff"
    els: "Wff"
    __hash__ = _node_hash
    __eq__ = _node_eq


@dataclass(frozen=True)
class Quote:
    body: "Wff"
    __hash__ = _node_hash
    __eq__ = _node_eq


@dataclass(frozen=True)
class Eval:
    arg: "Wff"
    ty: TypeExpr            # designated result type; printed with the dummy variable _ty
    __hash__ = _node_hash
    __eq__ = _node_eq


@dataclass(frozen=True)
class Hole:
    """Quasiquotation hole: stands for a wff of type ``ty`` whose construction is ``payload``."""
    payload: "Wff"
    ty: TypeExpr
    __hash__ = _node_hash
    __eq__ = _node_eq


Wff = Union[Var, Const, App, Abs, Cond, Quote, Eval, Hole]
ATOMS = (Var, Const)


def app(f: Wff, *args: Wff) -> Wff:
    """Left-associated application f a1 a2 ..."""
    out = f
    for a in args:
        out = App(out, a)
    return out


def spine(w: Wff) -> tuple[Wff, list[Wff]]:
    """Head and arguments of a left-nested application."""
    args: list[Wff] = []
    while isinstance(w, App):
        args.append(w.arg)
        w = w.fn
    args.reverse()
    return w, args


# ==========================
# Type checking
# ==========================
def type_of(w: Wff, sig: "Signature | None" = None, cache: dict | None = None) -> TypeExpr:
    """Type of ``w`` per the formation rules.

    With a signature, every constant must resolve in it. ``cache`` memoises by
    object identity; callers pass one dict per batch of related wffs.
    """
    return _type_of(w, sig, cache, "/")


def _join(path: str, step: str) -> str:
    return f"/{step}" if path == "/" else f"{path}/{step}"


def _type_of(w: Wff, sig, cache, path: str) -> TypeExpr:
    if cache is not None:
        hit = cache.get(id(w))
        if hit is not None and hit[0] is w:
            return hit[1]
    ty = _type_of_node(w, sig, cache, path)
    if cache is not None:
        cache[id(w)] = (w, ty)
    return ty


def _type_of_node(w: Wff, sig, cache, path: str) -> TypeExpr:
    if isinstance(w, Var):
        return w.ty
    if isinstance(w, Const):
        if sig is not None and not sig.resolves(w):
            raise UnknownConstant(f"unknown constant {w.name}:{w.ty}")
        return w.ty
    if isinstance(w, App):
        fty = _type_of(w.fn, sig, cache, _join(path, "fn"))
        aty = _type_of(w.arg, sig, cache, _join(path, "arg"))
        if not isinstance(fty, Fun):
            raise TypeMismatch(f"applying a non-function of type {fty}", path)
        if fty.arg != aty:
            raise TypeMismatch(f"function expects {fty.arg}, argument has {aty}", path)
        return fty.result
    if isinstance(w, Abs):
        bty = _type_of(w.body, sig, cache, _join(path, "body"))
        return Fun(bty, w.binder.ty)
    if isinstance(w, Cond):
        tty = _type_of(w.test, sig, cache, _join(path, "test"))
        if tty != O:
            raise TypeMismatch(f"conditional test has type {tty}, expected o", path)
        a = _type_of(w.then, sig, cache, _join(path, "then"))
        b = _type_of(w.els, sig, cache, _join(path, "els"))
        if a != b:
            raise TypeMismatch(f"conditional branches differ: {a} vs {b}", path)
        return a
    if isinstance(w, Quote):
        _type_of(w.body, sig, cache, _join(path, "body"))
        return EPS
    if isinstance(w, Eval):
        aty = _type_of(w.arg, sig, cache, _join(path, "eval-arg"))
        if aty != EPS:
            raise EvalArgNotEpsilon(f"evaluation argument has type {aty} at {path}")
        return w.ty
    if isinstance(w, Hole):
        pty = _type_of(w.payload, sig, cache, path)
        if pty != EPS:
            raise TypeMismatch(f"hole payload has type {pty}, expected eps", path)
        return w.ty
    raise TypeError(f"not a wff: {w!r}")


def is_formula(w: Wff, sig: "Signature | None" = None) -> bool:
    try:
        return type_of(w, sig) == O
    except TypeCheckError:
        return False


# ==========================
# Metrics
# ==========================
def children(w: Wff) -> tuple[Wff, ...]:
    if isinstance(w, App):
        return (w.fn, w.arg)
    if isinstance(w, Abs):
        return (w.binder, w.body)
    if isinstance(w, Cond):
        return (w.test, w.then, w.els)
    if isinstance(w, (Quote,)):
        return (w.body,)
    if isinstance(w, Eval):
        return (w.arg,)
    return ()


def size(w: Wff) -> int:
    """Number of variable and primitive-constant occurrences, quotation bodies included."""
    if isinstance(w, ATOMS):
        return 1
    return sum(size(c) for c in children(w))


def _evals_outside_quotes(w: Wff) -> int:
    if isinstance(w, Quote):
        return 0
    own = 1 if isinstance(w, Eval) else 0
    return own + sum(_evals_outside_quotes(c) for c in children(w))


def complexity(w: Wff) -> tuple[int, int]:
    return (_evals_outside_quotes(w), size(w))


def is_evaluation_free(w: Wff) -> bool:
    if isinstance(w, Quote):
        return True
    if isinstance(w, Eval):
        return False
    return all(is_evaluation_free(c) for c in children(w))


def free_vars_ef(w: Wff) -> set[Var]:
    if not is_evaluation_free(w):
        raise NotEvaluationFree("free_vars_ef needs an evaluation-free wff")
    return free_vars(w)


def free_vars(w: Wff) -> set[Var]:
    if isinstance(w, Var):
        return {w}
    if isinstance(w, (Const, Quote)):
        return set()
    if isinstance(w, Abs):
        return free_vars(w.body) - {w.binder}
    out: set[Var] = set()
    for c in children(w):
        out |= free_vars(c)
    return out


def variables(w: Wff) -> Iterator[Var]:
    """Every variable occurrence, including binders and quotation bodies."""
    if isinstance(w, Var):
        yield w
        return
    for c in children(w):
        yield from variables(c)


def occurs_free_ef(x: Var, w: Wff) -> bool:
    return x in free_vars(w)


def substitute_free(a: Wff, x: Var, b: Wff) -> Optional[Wff]:
    """Textbook substitution of ``a`` for free ``x`` in evaluation-free ``b``.

    No renaming: returns None when a free variable of ``a`` would be captured.
    Quotation bodies are left alone.
    """
    fa = free_vars(a)

    def go(w: Wff) -> Optional[Wff]:
        if isinstance(w, Var):
            return a if w == x else w
        if isinstance(w, (Const, Quote)):
            return w
        if isinstance(w, App):
            f, g = go(w.fn), go(w.arg)
            return None if f is None or g is None else App(f, g)
        if isinstance(w, Cond):
            parts = [go(w.test), go(w.then), go(w.els)]
            return None if any(p is None for p in parts) else Cond(*parts)
        if isinstance(w, Abs):
            if w.binder == x or x not in free_vars(w.body):
                return w
            if w.binder in fa:
                return None
            body = go(w.body)
            return None if body is None else Abs(w.binder, body)
        raise NotEvaluationFree("substitute_free needs evaluation-free wffs")

    return go(b)


