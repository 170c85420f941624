# kernel/axioms.py
"""Axiom schemas: catalogue loading, parameter checking and instance construction.

``axioms.yaml`` declares each schema's syntactic variables and side
conditions; this module holds one builder per schema id. Instances are
built from the sugar constructors, so they are the exact primitive
expansions the rest of the system produces.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Mapping, Union

from engine.taut import taut_check
from shared.errors import IllTypedParams, ScriptError, SideConditionViolated, TypeCheckError, UnknownSchema
from shared.util import data_path, load_yaml
from syntax import sugar as S
from syntax.encoding import encode
from syntax.grammar import parse_type_pattern
from syntax.signature import (
    ABS, APP, CLEANSE, COND, CON, EVAL, EVAL_FREE, NFI, QUOT, SUB, VAR, Signature, pair_c, wff_c,
)
from syntax.types import EPS, IOTA, O, Base, Fun, Pair, TypeExpr, resolve, unify
from syntax.wff import Abs, App, Cond, Const, Eval, Hole, Quote, Var, Wff, app, children, type_of

log = logging.getLogger(__name__)

CATALOGUE = data_path(__file__, "axioms.yaml")

Param = Union[Wff, TypeExpr]
_TYPES = (Base, Fun, Pair)


# ==========================
# Catalogue
# ==========================
@dataclass(frozen=True)
class ParamSpec:
    name: str
    kind: str               # "wff", "var" or "type"
    pattern: object = None  # type pattern for wff/var parameters


@dataclass(frozen=True)
class Schema:
    id: str
    title: str
    params: tuple[ParamSpec, ...]
    side: tuple[str, ...]

    def param(self, name: str) -> ParamSpec | None:
        return next((s for s in self.params if s.name == name), None)


@lru_cache(maxsize=None)
def catalogue(path: str = CATALOGUE) -> dict[str, Schema]:
    cfg = load_yaml(path)
    out: dict[str, Schema] = {}
    for entry in cfg.get("schemas") or []:
        sid = str(entry["id"])
        if sid not in _BUILDERS:
            raise ScriptError(f"schema {sid} has no builder", path)
        specs = []
        for name, decl in (entry.get("params") or {}).items():
            kind, _, pat = str(decl).partition(" ")
            if kind not in ("wff", "var", "type"):
                raise ScriptError(f"schema {sid}: unknown parameter kind {kind!r}", path)
            specs.append(ParamSpec(name, kind, parse_type_pattern(pat) if pat else None))
        for cond in entry.get("side") or ():
            if cond.split()[0] not in _SIDE:
                raise ScriptError(f"schema {sid}: unknown side condition {cond!r}", path)
        out[sid] = Schema(sid, str(entry.get("title", "")), tuple(specs), tuple(entry.get("side") or ()))
    log.debug("loaded %d axiom schemas from %s", len(out), path)
    return out


def get_schema(sid: str) -> Schema:
    s = catalogue().get(sid)
    if s is None:
        raise UnknownSchema(f"no axiom schema {sid}")
    return s


# ==========================
# Parameters
# ==========================
class Bound(dict):
    """Checked parameters. Type metavariables are reachable by name as well."""

    def __init__(self, values: dict, types: dict[str, TypeExpr]):
        super().__init__(values)
        self.types = types

    def __getattr__(self, name: str):
        if name in self:
            return self[name]
        if name in self.types:
            return self.types[name]
        raise AttributeError(name)


def _has_hole(w: Wff) -> bool:
    return isinstance(w, Hole) or any(_has_hole(c) for c in children(w))


def bind_params(schema: Schema, params: Mapping[str, Param], sig: Signature) -> Bound:
    extra = set(params) - {s.name for s in schema.params}
    if extra:
        raise IllTypedParams(f"axiom {schema.id} has no parameter {', '.join(sorted(extra))}")
    env: dict[str, TypeExpr] = {}
    for spec in schema.params:
        if spec.kind == "type" and spec.name in params:
            v = params[spec.name]
            if not isinstance(v, _TYPES):
                raise IllTypedParams(f"axiom {schema.id}: {spec.name} must be a type")
            env[spec.name] = v
    values: dict[str, Wff] = {}
    for spec in schema.params:
        if spec.kind == "type":
            continue
        if spec.name not in params:
            raise IllTypedParams(f"axiom {schema.id} needs parameter {spec.name}")
        v = params[spec.name]
        if isinstance(v, _TYPES):
            raise IllTypedParams(f"axiom {schema.id}: {spec.name} must be a wff, got type {v}")
        if spec.kind == "var" and not isinstance(v, Var):
            raise IllTypedParams(f"axiom {schema.id}: {spec.name} must be a variable")
        if _has_hole(v):
            raise IllTypedParams(f"axiom {schema.id}: {spec.name} contains an unquote hole")
        try:
            ty = type_of(v, sig)
        except TypeCheckError as e:
            raise IllTypedParams(f"axiom {schema.id}: {spec.name}: {e}") from e
        if not unify(spec.pattern, ty, env):
            raise IllTypedParams(f"axiom {schema.id}: {spec.name} has type {ty}, expected {spec.pattern}")
        values[spec.name] = v
    for spec in schema.params:
        if spec.kind == "type":
            if spec.name not in env:
                raise IllTypedParams(f"axiom {schema.id}: cannot determine type {spec.name}")
            values[spec.name] = env[spec.name]
    return Bound(values, env)


# ------------- side conditions -------------
_SIDE: dict[str, tuple[Callable[..., bool], str]] = {
    "distinct": (lambda sig, a, b: a != b, "{0} != {1}"),
    "distinct-consts": (lambda sig, a, b: a != b, "{0} != {1}"),
    "primitive": (lambda sig, c: sig.is_primitive(c), "{0} is a primitive constant"),
    "not-var": (lambda sig, a: not isinstance(a, Var), "{0} is not a variable"),
    "not-primitive": (lambda sig, a: not sig.is_primitive(a), "{0} is not a primitive constant"),
    "distinct-types": (lambda sig, a, b: a != b, "{0} != {1}"),
    "not-o": (lambda sig, a: a != O, "{0} is not o"),
    "tautology": (lambda sig, a: taut_check(a), "{0} is tautologous"),
}


def check_side(schema: Schema, p: Bound, sig: Signature) -> None:
    for cond in schema.side:
        kind, *names = cond.split()
        test, text = _SIDE[kind]
        if not test(sig, *(getattr(p, n) for n in names)):
            raise SideConditionViolated(text.format(*names))


# ==========================
# Public API
# ==========================
def instantiate_axiom(sid: str, params: Mapping[str, Param], sig: Signature | None = None) -> Wff:
    """The instance of schema ``sid`` at ``params``, with abbreviations expanded."""
    sig = sig or Signature()
    schema = get_schema(sid)
    p = bind_params(schema, params, sig)
    check_side(schema, p, sig)
    return _BUILDERS[sid](p)


def resolve_param_type(schema: Schema, name: str, env: dict[str, TypeExpr]) -> TypeExpr | None:
    """Concrete type a parameter must have once ``env`` fixes its metavariables."""
    spec = schema.param(name)
    if spec is None or spec.pattern is None:
        return None
    try:
        return resolve(spec.pattern, env)
    except KeyError:
        return None


# ==========================
# Builders
# ==========================
_BUILDERS: dict[str, Callable[[Bound], Wff]] = {}


def schema(*ids: str):
    def deco(fn):
        for i in ids:
            _BUILDERS[i] = fn
        return fn
    return deco


# ------------- helpers -------------
def _ty(w: Wff) -> TypeExpr:
    return type_of(w)


def is_var(a: Wff) -> Wff:
    return App(VAR, a)


def is_con(a: Wff) -> Wff:
    return App(CON, a)


def ef(a: Wff) -> Wff:
    return App(EVAL_FREE, a)


def nfi(a: Wff, b: Wff) -> Wff:
    return app(NFI, a, b)


def cleanse(a: Wff) -> Wff:
    return App(CLEANSE, a)


def sub(a: Wff, b: Wff, c: Wff) -> Wff:
    return app(SUB, a, b, c)


def wffa(alpha: TypeExpr, a: Wff) -> Wff:
    return App(wff_c(alpha), a)


def edef(a: Wff) -> Wff:
    return S.defined(a, EPS)


def eundef(a: Wff) -> Wff:
    return S.undefined(a, EPS)


def eeq(a: Wff, b: Wff) -> Wff:
    return S.eq(a, b, EPS)


def eqeq(a: Wff, b: Wff) -> Wff:
    return S.qeq(a, b, EPS)


def beta(x: Var, body: Wff, a: Wff) -> Wff:
    return App(Abs(x, body), a)


CONSTRUCTORS: dict[str, tuple[Const, int]] = {
    "app": (APP, 2), "abs": (ABS, 2), "cond": (COND, 3), "quot": (QUOT, 1), "eval": (EVAL, 2),
}
_ORDER = ("app", "abs", "cond", "quot", "eval")


def cons(kind: str, *args: Wff) -> Wff:
    return app(CONSTRUCTORS[kind][0], *args)


def _args(p: Bound, names: str, kind: str) -> list[Wff]:
    return [p[n] for n in names[:CONSTRUCTORS[kind][1]]]


# ------------- 1 to 3 -------------
@schema("1")
def _truth_values(p: Bound) -> Wff:
    return S.iff(S.and_(App(p.G, S.TRUE), App(p.G, S.FALSE)), S.forall(p.x, App(p.G, p.x)))


@schema("2")
def _leibniz(p: Bound) -> Wff:
    return S.imp(S.eq(p.A, p.B), S.iff(App(p.H, p.A), App(p.H, p.B)))


@schema("3")
def _extensionality(p: Bound) -> Wff:
    fx, gx = App(p.F, p.x), App(p.G, p.x)
    return S.imp(S.and_(S.defined(p.F), S.defined(p.G)),
                 S.iff(S.eq(p.F, p.G), S.forall(p.x, S.qeq(fx, gx))))


# ------------- 4: beta -------------
@schema("4.1")
def _beta_subst(p: Bound) -> Wff:
    premise = S.and_(S.defined(p.A), eeq(sub(Quote(p.A), Quote(p.x), Quote(p.B)), Quote(p.C)))
    return S.imp(premise, S.qeq(beta(p.x, p.B, p.A), p.C))


@schema("4.2")
def _beta_identity(p: Bound) -> Wff:
    return S.qeq(beta(p.x, p.x, p.A), p.A)


@schema("4.3")
def _beta_var(p: Bound) -> Wff:
    return S.imp(S.defined(p.A), S.qeq(beta(p.x, p.y, p.A), p.y))


@schema("4.4")
def _beta_const(p: Bound) -> Wff:
    return S.imp(S.defined(p.A), S.qeq(beta(p.x, p.c, p.A), p.c))


@schema("4.5")
def _beta_app(p: Bound) -> Wff:
    return S.qeq(beta(p.x, App(p.B, p.C), p.A), App(beta(p.x, p.B, p.A), beta(p.x, p.C, p.A)))


@schema("4.6")
def _beta_shadow(p: Bound) -> Wff:
    inner = Abs(p.x, p.B)
    return S.imp(S.defined(p.A), S.eq(beta(p.x, inner, p.A), inner))


@schema("4.7")
def _beta_abs(p: Bound) -> Wff:
    side = S.or_(nfi(Quote(p.x), Quote(p.B)), nfi(Quote(p.y), Quote(p.A)))
    return S.imp(S.and_(S.defined(p.A), side),
                 S.eq(beta(p.x, Abs(p.y, p.B), p.A), Abs(p.y, beta(p.x, p.B, p.A))))


@schema("4.8")
def _beta_cond(p: Bound) -> Wff:
    return S.qeq(beta(p.x, Cond(p.B, p.C, p.D), p.A),
                 Cond(beta(p.x, p.B, p.A), beta(p.x, p.C, p.A), beta(p.x, p.D, p.A)))


@schema("4.9")
def _beta_quote(p: Bound) -> Wff:
    return S.imp(S.defined(p.A), S.qeq(beta(p.x, Quote(p.B), p.A), Quote(p.B)))


@schema("4.10")
def _beta_self(p: Bound) -> Wff:
    return S.qeq(beta(p.x, p.B, p.x), p.B)


# ------------- 5: tautologies -------------
@schema("5")
def _tautology(p: Bound) -> Wff:
    return p.A


# ------------- 6: definedness -------------
@schema("6.1")
def _def_var(p: Bound) -> Wff:
    return S.defined(p.x)


@schema("6.2")
def _def_const(p: Bound) -> Wff:
    return S.defined(p.c)


@schema("6.3")
def _def_formula(p: Bound) -> Wff:
    return S.defined(App(p.A, p.B), O)


@schema("6.4")
def _strict_app(p: Bound) -> Wff:
    alpha = _ty(p.A).result
    return S.imp(S.or_(S.undefined(p.A), S.undefined(p.B)), S.qeq(App(p.A, p.B), S.bottom(alpha), alpha))


@schema("6.5")
def _def_abs(p: Bound) -> Wff:
    return S.defined(Abs(p.x, p.B))


@schema("6.6")
def _def_cond(p: Bound) -> Wff:
    return S.defined(Cond(p.A, p.B, p.C), O)


@schema("6.7")
def _def_quote(p: Bound) -> Wff:
    return edef(Quote(p.A))


@schema("6.8")
def _def_eval_formula(p: Bound) -> Wff:
    return S.defined(Eval(p.A, O), O)


@schema("6.9")
def _def_eval_double_quote(p: Bound) -> Wff:
    return edef(Eval(Quote(Quote(p.A)), EPS))


@schema("6.10")
def _undef_eval(p: Bound) -> Wff:
    return S.imp(S.not_(S.eval_free_alpha(p.alpha, p.A)), S.qeq(Eval(p.A, p.alpha), S.bottom(p.alpha), p.alpha))


@schema("6.11")
def _undef_bottom(p: Bound) -> Wff:
    return S.undefined(S.bottom(p.alpha), p.alpha)


# ------------- 7 to 9 -------------
@schema("7")
def _qeq_refl(p: Bound) -> Wff:
    return S.qeq(p.A, p.A)


@schema("8.1")
def _desc_defined(p: Bound) -> Wff:
    return S.iff(S.exists1(p.x, p.A), S.defined(S.desc(p.x, p.A)))


@schema("8.2")
def _desc_satisfies(p: Bound) -> Wff:
    d = S.desc(p.x, p.A)
    return S.imp(S.and_(S.exists1(p.x, p.A), eeq(sub(Quote(d), Quote(p.x), Quote(p.A)), Quote(p.B))), p.B)


@schema("9.1")
def _pair_eq(p: Bound) -> Wff:
    alpha, beta_ = _ty(p.A), _ty(p.B)
    pr = pair_c(alpha, beta_)
    return S.iff(S.eq(app(pr, p.A, p.B), app(pr, p.C, p.D), Pair(alpha, beta_)),
                 S.and_(S.eq(p.A, p.C), S.eq(p.B, p.D)))


@schema("9.2")
def _pair_values(p: Bound) -> Wff:
    ty = _ty(p.A)
    pr = app(pair_c(ty.first, ty.second), p.x, p.y)
    return S.imp(S.defined(p.A), S.exists(p.x, S.exists(p.y, S.eq(p.A, pr, ty))))


# ------------- 10: conditionals -------------
@schema("10.1")
def _cond_true(p: Bound) -> Wff:
    return S.qeq(Cond(S.TRUE, p.B, p.C), p.B)


@schema("10.2")
def _cond_false(p: Bound) -> Wff:
    return S.qeq(Cond(S.FALSE, p.B, p.C), p.C)


@schema("10.3")
def _eval_cond(p: Bound) -> Wff:
    return S.qeq(Eval(Cond(p.A, p.B, p.C), p.alpha), Cond(p.A, Eval(p.B, p.alpha), Eval(p.C, p.alpha)), p.alpha)


# ------------- 11: evaluation -------------
@schema("11.1")
def _eval_var(p: Bound) -> Wff:
    return S.eq(Eval(Quote(p.x), p.x.ty), p.x)


@schema("11.2")
def _eval_const(p: Bound) -> Wff:
    return S.eq(Eval(Quote(p.c), p.c.ty), p.c)


@schema("11.3")
def _eval_app(p: Bound) -> Wff:
    fty = Fun(p.alpha, p.beta)
    return S.imp(wffa(fty, p.A), S.qeq(Eval(cons("app", p.A, p.B), p.alpha),
                                        App(Eval(p.A, fty), Eval(p.B, p.beta)), p.alpha))


@schema("11.4")
def _eval_abs(p: Bound) -> Wff:
    fty = Fun(p.beta, p.x.ty)
    return S.imp(nfi(Quote(p.x), Quote(p.B)),
                 S.qeq(Eval(cons("abs", Quote(p.x), p.B), fty), Abs(p.x, Eval(p.B, p.beta)), fty))


@schema("11.5")
def _eval_cond_construction(p: Bound) -> Wff:
    return S.qeq(Eval(cons("cond", p.A, p.B, p.C), p.alpha),
                 Cond(Eval(p.A, O), Eval(p.B, p.alpha), Eval(p.C, p.alpha)), p.alpha)


@schema("11.6")
def _eval_quot(p: Bound) -> Wff:
    e = Eval(App(QUOT, p.A), EPS)
    return S.imp(edef(e), eeq(e, p.A))


# ------------- 12: specifying axioms -------------
@schema("12.1")
def _quote_encoding(p: Bound) -> Wff:
    return eeq(Quote(p.A), encode(p.A))


@schema("12.2.1")
def _var_var(p: Bound) -> Wff:
    return is_var(Quote(p.x))


@schema("12.2.2")
def _var_other(p: Bound) -> Wff:
    return S.not_(is_var(Quote(p.A)))


@schema("12.3.1")
def _con_const(p: Bound) -> Wff:
    return is_con(Quote(p.c))


@schema("12.3.2")
def _con_other(p: Bound) -> Wff:
    return S.not_(is_con(Quote(p.A)))


@schema("12.4.1")
def _var_not_con(p: Bound) -> Wff:
    return S.not_(S.and_(is_var(p.A), is_con(p.A)))


def _atom_not(pred: Const, kind: str) -> Callable[[Bound], Wff]:
    def build(p: Bound) -> Wff:
        return S.not_(S.and_(App(pred, p.A), eeq(p.A, cons(kind, *_args(p, "DEF", kind)))))
    return build


def _distinct_kinds(left: str, right: str) -> Callable[[Bound], Wff]:
    def build(p: Bound) -> Wff:
        return S.neq(cons(left, *_args(p, "ABC", left)), cons(right, *_args(p, "DEF", right)), EPS)
    return build


def _injective(kind: str) -> Callable[[Bound], Wff]:
    def build(p: Bound) -> Wff:
        ls, rs = _args(p, "ABC", kind), _args(p, "DEF", kind)
        return S.imp(eeq(cons(kind, *ls), cons(kind, *rs)), S.conj(*(eeq(a, b) for a, b in zip(ls, rs))))
    return build


for _i, _kind in enumerate(_ORDER):
    _BUILDERS[f"12.4.{2 + _i}"] = _atom_not(VAR, _kind)
    _BUILDERS[f"12.4.{7 + _i}"] = _atom_not(CON, _kind)
    _BUILDERS[f"12.4.{24 + _i}"] = _injective(_kind)
for _i, (_l, _r) in enumerate(itertools.combinations(_ORDER, 2)):
    _BUILDERS[f"12.4.{12 + _i}"] = _distinct_kinds(_l, _r)


@schema("12.4.22")
def _distinct_var_quotes(p: Bound) -> Wff:
    return S.neq(Quote(p.x), Quote(p.y), EPS)


@schema("12.4.23")
def _distinct_const_quotes(p: Bound) -> Wff:
    return S.neq(Quote(p.c), Quote(p.d), EPS)


@schema("12.4.29")
def _induction(p: Bound) -> Wff:
    P = Var("p", Fun(O, EPS))
    x, y, z = (Var(n, EPS) for n in "xyz")

    def holds(a: Wff) -> Wff:
        return App(P, a)

    def closed_under(kind: str) -> Wff:
        vs = (x, y, z)[:CONSTRUCTORS[kind][1]]
        c = cons(kind, *vs)
        body = S.imp(S.conj(*(holds(v) for v in vs), edef(c)), holds(c))
        for v in reversed(vs):
            body = S.forall(v, body)
        return body

    cases = [
        S.forall(x, S.imp(is_var(x), holds(x))),
        S.forall(x, S.imp(is_con(x), holds(x))),
        closed_under("app"),
        closed_under("abs"),
        closed_under("cond"),
        S.forall(x, S.imp(holds(x), holds(App(QUOT, x)))),
        closed_under("eval"),
    ]
    return S.imp(S.conj(*cases), S.forall(x, holds(x)))


# eval-free
@schema("12.5.1")
def _ef_var(p: Bound) -> Wff:
    return S.imp(is_var(p.A), ef(p.A))


@schema("12.5.2")
def _ef_con(p: Bound) -> Wff:
    return S.imp(is_con(p.A), ef(p.A))


@schema("12.5.3")
def _ef_app(p: Bound) -> Wff:
    c = cons("app", p.A, p.B)
    return S.imp(edef(c), S.iff(ef(c), S.and_(ef(p.A), ef(p.B))))


@schema("12.5.4")
def _ef_abs(p: Bound) -> Wff:
    c = cons("abs", p.A, p.B)
    return S.imp(edef(c), S.iff(ef(c), ef(p.B)))


@schema("12.5.5")
def _ef_cond(p: Bound) -> Wff:
    c = cons("cond", p.A, p.B, p.C)
    return S.imp(edef(c), S.iff(ef(c), S.conj(ef(p.A), ef(p.B), ef(p.C))))


@schema("12.5.6")
def _ef_quot(p: Bound) -> Wff:
    return S.imp(edef(p.A), ef(cons("quot", p.A)))


@schema("12.5.7")
def _ef_eval(p: Bound) -> Wff:
    return S.not_(ef(cons("eval", p.A, p.B)))


# wff^alpha
@schema("12.6.1")
def _wff_var(p: Bound) -> Wff:
    return wffa(p.x.ty, Quote(p.x))


@schema("12.6.2")
def _wff_const(p: Bound) -> Wff:
    return wffa(p.c.ty, Quote(p.c))


@schema("12.6.3")
def _wff_app(p: Bound) -> Wff:
    return S.imp(S.and_(wffa(Fun(p.alpha, p.beta), p.A), wffa(p.beta, p.B)), wffa(p.alpha, cons("app", p.A, p.B)))


@schema("12.6.4")
def _wff_app_nonfunction(p: Bound) -> Wff:
    kinds = S.or_(S.or_(S.or_(wffa(IOTA, p.A), wffa(O, p.A)), wffa(EPS, p.A)), wffa(Pair(p.alpha, p.beta), p.A))
    return S.imp(kinds, eundef(cons("app", p.A, p.B)))


@schema("12.6.5")
def _wff_app_mismatch(p: Bound) -> Wff:
    return S.imp(S.and_(wffa(Fun(p.alpha, p.beta), p.A), S.not_(wffa(p.beta, p.B))), eundef(cons("app", p.A, p.B)))


@schema("12.6.6")
def _wff_abs(p: Bound) -> Wff:
    return S.imp(S.and_(S.var_alpha(p.alpha, p.A), wffa(p.beta, p.B)),
                 wffa(Fun(p.beta, p.alpha), cons("abs", p.A, p.B)))


@schema("12.6.7")
def _wff_abs_nonvar(p: Bound) -> Wff:
    return S.imp(S.not_(is_var(p.A)), eundef(cons("abs", p.A, p.B)))


@schema("12.6.8")
def _wff_cond(p: Bound) -> Wff:
    return S.imp(S.conj(wffa(O, p.A), wffa(p.alpha, p.B), wffa(p.alpha, p.C)),
                 wffa(p.alpha, cons("cond", p.A, p.B, p.C)))


@schema("12.6.9")
def _wff_cond_mismatch(p: Bound) -> Wff:
    bad = S.or_(S.not_(wffa(O, p.A)), S.and_(wffa(p.alpha, p.B), wffa(p.beta, p.C)))
    return S.imp(bad, eundef(cons("cond", p.A, p.B, p.C)))


@schema("12.6.10")
def _wff_quot(p: Bound) -> Wff:
    return S.imp(edef(p.A), wffa(EPS, cons("quot", p.A)))


@schema("12.6.11")
def _wff_eval(p: Bound) -> Wff:
    return S.imp(S.and_(wffa(EPS, p.A), S.var_alpha(p.alpha, p.B)), wffa(p.alpha, cons("eval", p.A, p.B)))


@schema("12.6.12")
def _wff_eval_bad(p: Bound) -> Wff:
    return S.imp(S.or_(S.not_(wffa(EPS, p.A)), S.not_(is_var(p.B))), eundef(cons("eval", p.A, p.B)))


@schema("12.6.13")
def _wff_unique(p: Bound) -> Wff:
    return S.not_(S.and_(wffa(p.alpha, p.A), wffa(p.beta, p.A)))


# not-free-in
@schema("12.7.1")
def _nfi_self(p: Bound) -> Wff:
    return S.imp(is_var(p.A), S.not_(nfi(p.A, p.A)))


@schema("12.7.2")
def _nfi_other_var(p: Bound) -> Wff:
    return S.imp(S.conj(is_var(p.A), is_var(p.B), S.neq(p.A, p.B, EPS)), nfi(p.A, p.B))


@schema("12.7.3")
def _nfi_const(p: Bound) -> Wff:
    return S.imp(S.and_(is_var(p.A), is_con(p.B)), nfi(p.A, p.B))


@schema("12.7.4")
def _nfi_app(p: Bound) -> Wff:
    c = cons("app", p.B, p.C)
    return S.imp(S.and_(is_var(p.A), edef(c)), S.iff(nfi(p.A, c), S.and_(nfi(p.A, p.B), nfi(p.A, p.C))))


@schema("12.7.5")
def _nfi_own_binder(p: Bound) -> Wff:
    c = cons("abs", p.A, p.B)
    return S.imp(S.and_(is_var(p.A), edef(c)), nfi(p.A, c))


@schema("12.7.6")
def _nfi_abs(p: Bound) -> Wff:
    c = cons("abs", p.B, p.C)
    return S.imp(S.conj(is_var(p.A), is_var(p.B), S.neq(p.A, p.B, EPS), edef(c)), S.iff(nfi(p.A, c), nfi(p.A, p.C)))


@schema("12.7.7")
def _nfi_cond(p: Bound) -> Wff:
    c = cons("cond", p.D, p.E, p.F)
    return S.imp(S.and_(is_var(p.A), edef(c)),
                 S.iff(nfi(p.A, c), S.conj(nfi(p.A, p.D), nfi(p.A, p.E), nfi(p.A, p.F))))


@schema("12.7.8")
def _nfi_quot(p: Bound) -> Wff:
    return S.imp(S.and_(is_var(p.A), edef(p.B)), nfi(p.A, cons("quot", p.B)))


@schema("12.7.9")
def _nfi_eval(p: Bound) -> Wff:
    c = cons("eval", p.B, p.C)
    value = Eval(p.B, EPS)
    rhs = S.conj(S.syn_closed(p.B), S.eval_free_alpha(EPS, p.B), S.eval_free_alpha(p.alpha, value), nfi(p.A, value))
    return S.imp(S.conj(is_var(p.A), S.var_alpha(p.alpha, p.C), edef(c)), S.iff(nfi(p.A, c), rhs))


@schema("12.7.10")
def _nfi_nonvar(p: Bound) -> Wff:
    return S.imp(S.not_(is_var(p.A)), nfi(p.A, p.B))


# cleanse
@schema("12.8.1")
def _cleanse_var(p: Bound) -> Wff:
    return S.imp(is_var(p.A), eeq(cleanse(p.A), p.A))


@schema("12.8.2")
def _cleanse_con(p: Bound) -> Wff:
    return S.imp(is_con(p.A), eeq(cleanse(p.A), p.A))


@schema("12.8.3")
def _cleanse_app(p: Bound) -> Wff:
    c = cons("app", p.A, p.B)
    return S.imp(edef(c), eqeq(cleanse(c), cons("app", cleanse(p.A), cleanse(p.B))))


@schema("12.8.4")
def _cleanse_abs(p: Bound) -> Wff:
    c = cons("abs", p.A, p.B)
    return S.imp(edef(c), eqeq(cleanse(c), cons("abs", p.A, cleanse(p.B))))


@schema("12.8.5")
def _cleanse_cond(p: Bound) -> Wff:
    c = cons("cond", p.A, p.B, p.C)
    return S.imp(edef(c), eqeq(cleanse(c), cons("cond", cleanse(p.A), cleanse(p.B), cleanse(p.C))))


@schema("12.8.6")
def _cleanse_quot(p: Bound) -> Wff:
    c = cons("quot", p.A)
    return eqeq(cleanse(c), c)


def evaluable(e: Wff, alpha: TypeExpr) -> Wff:
    """``syn-closed e & eval-free^alpha [[e]]``, the test guarding an evaluation."""
    return S.and_(S.syn_closed(e), S.eval_free_alpha(alpha, Eval(e, EPS)))


@schema("12.8.7")
def _cleanse_eval(p: Bound) -> Wff:
    c = cons("eval", p.A, p.B)
    e = cleanse(p.A)
    return S.imp(S.and_(S.var_alpha(p.alpha, p.B), edef(c)),
                 eqeq(cleanse(c), Cond(evaluable(e, p.alpha), Eval(e, EPS), S.bottom(EPS))))


# sub
def _sub_premise(p: Bound, *more: Wff) -> Wff:
    return S.conj(wffa(p.alpha, p.A), S.var_alpha(p.alpha, p.B), *more)


@schema("12.9.1")
def _sub_same_var(p: Bound) -> Wff:
    return S.imp(_sub_premise(p), eeq(sub(p.A, p.B, p.B), cleanse(p.A)))


@schema("12.9.2")
def _sub_other_var(p: Bound) -> Wff:
    return S.imp(_sub_premise(p, is_var(p.C), S.neq(p.B, p.C, EPS)), eeq(sub(p.A, p.B, p.C), p.C))


@schema("12.9.3")
def _sub_const(p: Bound) -> Wff:
    return S.imp(_sub_premise(p, is_con(p.C)), eeq(sub(p.A, p.B, p.C), p.C))


@schema("12.9.4")
def _sub_app(p: Bound) -> Wff:
    c = cons("app", p.D, p.E)
    return S.imp(_sub_premise(p, edef(c)),
                 eqeq(sub(p.A, p.B, c), cons("app", sub(p.A, p.B, p.D), sub(p.A, p.B, p.E))))


@schema("12.9.5")
def _sub_shadow(p: Bound) -> Wff:
    c = cons("abs", p.B, p.E)
    return S.imp(_sub_premise(p, edef(c)), eqeq(sub(p.A, p.B, c), cons("abs", p.B, cleanse(p.E))))


@schema("12.9.6")
def _sub_abs(p: Bound) -> Wff:
    c = cons("abs", p.D, p.E)
    safe = S.or_(nfi(p.B, p.E), nfi(p.D, p.A))
    return S.imp(_sub_premise(p, is_var(p.D), S.neq(p.B, p.D, EPS), edef(c)),
                 eqeq(sub(p.A, p.B, c), Cond(safe, cons("abs", p.D, sub(p.A, p.B, p.E)), S.bottom(EPS))))


@schema("12.9.7")
def _sub_cond(p: Bound) -> Wff:
    c = cons("cond", p.D, p.E, p.F)
    return S.imp(_sub_premise(p, edef(c)),
                 eqeq(sub(p.A, p.B, c), cons("cond", *(sub(p.A, p.B, q) for q in (p.D, p.E, p.F)))))


@schema("12.9.8")
def _sub_quot(p: Bound) -> Wff:
    c = cons("quot", p.C)
    return S.imp(_sub_premise(p, edef(p.C)), eeq(sub(p.A, p.B, c), c))


@schema("12.9.9")
def _sub_eval(p: Bound) -> Wff:
    c = cons("eval", p.D, p.E)
    e1 = sub(p.A, p.B, p.D)
    e2 = sub(p.A, p.B, Eval(e1, EPS))
    return S.imp(_sub_premise(p, S.var_alpha(p.beta, p.E), edef(c)),
                 eqeq(sub(p.A, p.B, c), Cond(evaluable(e1, p.beta), e2, S.bottom(EPS))))


@schema("12.9.10")
def _sub_nonvar(p: Bound) -> Wff:
    return S.imp(S.and_(wffa(p.alpha, p.A), S.not_(S.var_alpha(p.alpha, p.B))), eundef(sub(p.A, p.B, p.C)))
