# stdlib/theories.py
"""The library theory: syntax operators on quotations, and-simp and the schema checks.

``stdlib.quqe`` holds the operator definitions. The statements about them
(CompBehavior, MathMeaning, LEM and the beta-reduction schemas) are built
here from the sugar constructors and installed next to them.
"""
from __future__ import annotations

import glob
import logging
import os
from typing import Optional

from pydantic import BaseModel

from algebra.ops import SyntaxAlgebra, represented, wff_type
from engine.normalizer import normalize
from kernel.builder import ProofBuilder
from kernel.checker import check_file, check_proof
from kernel.proof import Report, Theory
from kernel.scripts import load_theory
from shared.config import CFG
from shared.errors import (
    FuelExhausted, NotFormulaLiteral, QuqeError, ScriptFailed, SubstUndefined,
    SubstUnknown, UnknownConstant,
)
from syntax import sugar as S
from syntax.signature import ABS, APP, SUB, Signature, pair_c, wff_c
from syntax.types import EPS, O, Pair, TypeExpr
from syntax.wff import App, Eval, Quote, Var, Wff, app, free_vars, type_of

log = logging.getLogger(__name__)

GROUP = Pair(Pair(EPS, EPS), Pair(EPS, EPS))
SCHEMA_TYPES: tuple[TypeExpr, ...] = (O, EPS)

# (A, x, B, C): (lambda x B) A reduces to C
GROUPED_SAMPLE = (S.TRUE, Var("x", O), Var("x", O), S.TRUE)


def proofs_dir() -> str:
    return os.path.join(os.path.dirname(os.path.abspath(CFG.stdlib_path)), "proofs")


def _lookup(sig: Signature, name: str) -> Wff:
    body = sig.lookup_def(name)
    if body is None:
        raise UnknownConstant(f"no definition named ${name}")
    return body


# ==========================
# Statements
# ==========================
def comp_behavior(sig: Signature) -> Wff:
    """The four clauses pinning down what and-simp computes on formulas."""
    and_c, simp_c = _lookup(sig, "and"), _lookup(sig, "and-simp")
    x, y = Var("x", EPS), Var("y", EPS)
    qt, qf = Quote(S.TRUE), Quote(S.FALSE)
    simp = app(simp_c, x, y)
    clauses = S.conj(
        S.imp(S.eq(x, qt), S.eq(simp, y, EPS)),
        S.imp(S.eq(y, qt), S.eq(simp, x, EPS)),
        S.imp(S.or_(S.eq(x, qf), S.eq(y, qf)), S.eq(simp, qf, EPS)),
        S.imp(S.conj(S.neq(x, qt), S.neq(y, qt), S.neq(x, qf), S.neq(y, qf)),
              S.eq(simp, app(and_c, x, y), EPS)),
    )
    both = S.and_(App(wff_c(O), x), App(wff_c(O), y))
    return S.forall(x, S.forall(y, S.imp(both, clauses)))


def math_meaning(sig: Signature) -> Wff:
    """and-simp of two formulas evaluates to their conjunction."""
    simp_c = _lookup(sig, "and-simp")
    x = Var("x", Pair(EPS, EPS))
    first, second = S.fst(x), S.snd(x)
    simplified = Eval(app(simp_c, first, second), O)
    meant = S.and_(Eval(first, O), Eval(second, O))
    both = S.and_(App(wff_c(O), first), App(wff_c(O), second))
    return S.forall(x, S.imp(both, S.iff(simplified, meant)))


def lem() -> Wff:
    """Excluded middle over every evaluation-free formula."""
    x = Var("x", EPS)
    v = Eval(x, O)
    return S.forall(x, S.imp(S.eval_free_alpha(O, x), S.or_(v, S.not_(v))))


def _beta_body(a: Wff, y: Wff, z: Wff, z2: Wff, alpha: TypeExpr, beta: TypeExpr) -> Wff:
    premise = S.conj(
        S.defined(Eval(a, alpha), alpha),
        S.var_alpha(alpha, y),
        App(wff_c(beta), z),
        App(wff_c(beta), z2),
        S.eq(app(SUB, a, y, z), z2, EPS),
    )
    redex = Eval(app(APP, app(ABS, y, z), a), beta)
    return S.imp(premise, S.qeq(redex, Eval(z2, beta), beta))


def beta_schema(alpha: TypeExpr, beta: TypeExpr, grouped: bool = False) -> Wff:
    """Beta-reduction stated once for all wffs of the given types.

    The ungrouped form quantifies four eps variables separately. The
    grouped form packs them into one variable of type <<eps, eps>, <eps, eps>>.
    """
    if not grouped:
        x, y, z, z2 = (Var(n, EPS) for n in ("x", "y", "z", "z'"))
        body = _beta_body(x, y, z, z2, alpha, beta)
        for v in (z2, z, y, x):
            body = S.forall(v, body)
        return body
    g = Var("x", GROUP)
    left, right = S.fst(g), S.snd(g)
    return S.forall(g, _beta_body(S.fst(left), S.snd(left), S.fst(right), S.snd(right), alpha, beta))


def statements(sig: Signature) -> dict[str, Wff]:
    out = {
        "comp-behavior": comp_behavior(sig),
        "math-meaning": math_meaning(sig),
        "lem": lem(),
    }
    for alpha in SCHEMA_TYPES:
        for beta in SCHEMA_TYPES:
            out[f"beta-schema-{alpha}-{beta}"] = beta_schema(alpha, beta)
            out[f"beta-schema-grouped-{alpha}-{beta}"] = beta_schema(alpha, beta, grouped=True)
    return out


# ==========================
# Loading
# ==========================
def shipped_scripts() -> list[str]:
    return sorted(glob.glob(os.path.join(proofs_dir(), "*.qpf")))


def check_shipped(theory: Theory) -> list[Report]:
    return [check_file(path, theory) for path in shipped_scripts()]


def load_stdlib(theory: Optional[Theory] = None, path: Optional[str] = None, recheck: bool = True) -> Theory:
    """``theory`` extended by the library definitions and statements.

    With ``recheck`` every shipped proof script is checked against the result
    and the first failure raises ScriptFailed.
    """
    lib = load_theory(path or CFG.stdlib_path, base=theory)
    for name, w in statements(lib.sig).items():
        if type_of(w, lib.sig) != O or free_vars(w):
            raise UnknownConstant(f"library statement {name} is not a sentence")
        lib.sig.define(name, w)
    log.debug("stdlib: %d definitions", len(lib.sig.defs))
    if recheck:
        for report in check_shipped(lib):
            if not report.ok:
                d = report.diagnostics[0] if report.diagnostics else None
                raise ScriptFailed(report.name, d.line if d else None, d.message if d else "")
            log.info("%s: %s", report.name, report.summary())
    return lib


# ==========================
# and-simp
# ==========================
def _formula(c: Wff) -> Wff:
    d = represented(c)
    if d is None or wff_type(c) != O:
        raise NotFormulaLiteral("and-simp takes quotations of formulas")
    return d


def and_simp(a: Wff, b: Wff) -> Wff:
    """The quotation and-simp builds from two formula literals."""
    x, y = _formula(a), _formula(b)
    if S.is_true(x):
        out = y
    elif S.is_true(y):
        out = x
    elif S.is_false(x) or S.is_false(y):
        out = S.FALSE
    else:
        out = S.and_(x, y)
    return Quote(out)


# ==========================
# Schema checks
# ==========================
class SchemaCheck(BaseModel):
    name: str
    expect: str                     # proved | refused
    ok: bool
    detail: str = ""
    report: Optional[Report] = None


class SchemaReport(BaseModel):
    ok: bool
    checks: list[SchemaCheck]

    def summary(self) -> str:
        bad = [c.name for c in self.checks if not c.ok]
        return "ok" if not bad else "failed: " + ", ".join(bad)


def _lem_check(theory: Theory) -> SchemaCheck:
    path = os.path.join(proofs_dir(), "lem.qpf")
    report = check_file(path, theory)
    proved = report.ok and report.conclusion is not None
    return SchemaCheck(name="lem", expect="proved", ok=proved, detail=report.summary(), report=report)


def _grouped_check(theory: Theory) -> SchemaCheck:
    """Instantiate the grouped schema at the sample and re-check the beta step it licenses."""
    a, x, body, c = GROUPED_SAMPLE
    schema = beta_schema(O, O, grouped=True)
    literal = app(pair_c(Pair(EPS, EPS), Pair(EPS, EPS)),
                  app(pair_c(EPS, EPS), Quote(a), Quote(x)),
                  app(pair_c(EPS, EPS), Quote(body), Quote(c)))
    m = S.match_forall(schema)
    inst = SyntaxAlgebra().sub(literal, m[0], m[1])
    if not inst.is_defined():
        return SchemaCheck(name="beta-grouped", expect="proved", ok=False,
                           detail=f"instantiation is {inst}")
    try:
        nf = normalize(inst.wff)
    except FuelExhausted:
        nf = None
    if nf is not None and S.is_false(nf.wff):
        return SchemaCheck(name="beta-grouped", expect="proved", ok=False,
                           detail="instance normalizes to F")
    b = ProofBuilder(theory)
    try:
        b.beta_by_sub(x, body, a)
    except QuqeError as e:
        return SchemaCheck(name="beta-grouped", expect="proved", ok=False, detail=f"{e.kind}: {e}")
    report = check_proof(b.proof(), "beta-grouped")
    return SchemaCheck(name="beta-grouped", expect="proved", ok=report.ok, detail=report.summary(), report=report)


def _ungrouped_check(theory: Theory) -> SchemaCheck:
    """The ungrouped schema admits no instantiation: its evaluation keeps free variables."""
    x, body = S.match_forall(beta_schema(O, O))
    try:
        ProofBuilder(theory).sub_checked(Quote(S.TRUE), x, body)
    except (SubstUndefined, SubstUnknown) as e:
        return SchemaCheck(name="beta-ungrouped", expect="refused", ok=True, detail=e.kind)
    return SchemaCheck(name="beta-ungrouped", expect="refused", ok=False, detail="instantiation derived")


def check_schemas(theory: Optional[Theory] = None) -> SchemaReport:
    theory = theory or load_stdlib(recheck=False)
    checks = [_lem_check(theory), _grouped_check(theory), _ungrouped_check(theory)]
    for c in checks:
        log.info("schema %s (%s): %s", c.name, c.expect, c.detail)
    return SchemaReport(ok=all(c.ok for c in checks), checks=checks)
