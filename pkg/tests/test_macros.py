import pytest

from kernel.builder import ProofBuilder
from kernel.checker import check_proof, check_script
from kernel.macros import (
    MACROS, derive_beta, derive_defined, derive_sub_equation, derive_taut, derive_universal_gen, run_macro,
)
from kernel.rules import equation_sides
from kernel.scripts import reader
from shared.errors import PreconditionNotDischarged, ScriptError, SubstUndefined
from syntax import sugar as S
from syntax.grammar import parse_wff
from syntax.signature import Q_OOO
from syntax.types import O
from syntax.wff import Abs, App, Quote, Var

p, x, y = Var("p", O), Var("x", O), Var("y", O)
LEM_P = S.or_(p, S.not_(p))


def test_registered_macros():
    for name in ("taut", "beta", "ug", "ui", "sub_eq", "rewrite", "fold", "defined"):
        assert name in MACROS


def test_builder_memoises_axiom_instances():
    b = ProofBuilder()
    first = b.taut(LEM_P)
    assert b.taut(LEM_P) == first
    assert len(b.lines) == 1


def test_derived_taut():
    proof = derive_taut(LEM_P)
    assert proof.conclusion == LEM_P
    assert check_proof(proof).ok


def test_derived_beta_on_identity():
    redex = App(Abs(x, x), S.TRUE)
    proof = derive_beta(redex)
    assert proof.conclusion == S.qeq(redex, S.TRUE)
    assert check_proof(proof).ok


def test_beta_needs_a_redex():
    with pytest.raises(PreconditionNotDischarged):
        derive_beta(S.TRUE)


def test_universal_generalization():
    proof = derive_universal_gen(derive_taut(LEM_P), 1, p)
    assert proof.conclusion == S.forall(p, LEM_P)
    assert check_proof(proof).ok


def test_derived_definedness():
    proof = derive_defined(Q_OOO)
    assert proof.conclusion == S.TRUE
    assert derive_defined(p).conclusion == S.defined(p)


def test_sub_equation():
    proof = derive_sub_equation(y, x, S.iff(x, x))
    assert check_proof(proof).ok
    assert equation_sides(proof.conclusion)[1] == Quote(S.iff(y, y))


def test_sub_equation_refuses_capture():
    with pytest.raises(SubstUndefined):
        ProofBuilder().sub_checked(y, x, Abs(y, S.and_(x, y)))


def test_unknown_macro():
    with pytest.raises(ScriptError):
        run_macro(ProofBuilder(), "frob", [], S.TRUE, lambda n: n)


def test_wrong_arity():
    with pytest.raises(ScriptError):
        run_macro(ProofBuilder(), "ug", ["1"], S.TRUE, lambda n: n)


def test_macros_in_scripts():
    text = "\n".join([
        "line 1: (p:o | (~ p:o)) ; macro taut()",
        "line 2: (forall p:o . (p:o | (~ p:o))) ; macro ug(1, p:o)",
        "line 3: (p:o !) ; macro defined()",
    ])
    report = check_script(reader().read_proof(text))
    assert report.ok, report.summary()
    assert report.lines == 3
    assert report.steps > 3


def test_macro_conclusion_must_follow():
    report = check_script(reader().read_proof("line 1: (p:o & (~ p:o)) ; macro taut()"))
    assert not report.ok
    assert report.diagnostics[0].kind == "SideConditionViolated"


def test_parsed_goal_drives_the_beta_macro():
    goal = parse_wff("(((\\x:o. x:o) T) ~~ T)")
    b = ProofBuilder()
    k = run_macro(b, "beta", [], goal, lambda n: n)
    assert b.wff(k) == goal
