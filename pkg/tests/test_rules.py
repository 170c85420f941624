import pytest

from kernel.rules import AUTO, apply_rule1, apply_rule2, equation_sides
from shared.errors import IllegalPath, MismatchAtPath, NotAnEquation, NotModusPonens
from syntax import sugar as S
from syntax.types import IOTA, O, fn
from syntax.wff import App, Const, Quote, Var

p, q, r = Var("p", O), Var("q", O), Var("r", O)
a, b = Var("a", IOTA), Var("b", IOTA)
f = Const("f", fn(O, IOTA))


def test_equation_sides():
    assert equation_sides(S.eq(a, b)) == (a, b)
    assert equation_sides(S.qeq(a, b)) == (a, b)
    with pytest.raises(NotAnEquation):
        equation_sides(S.or_(p, q))


def test_rule1_direction_follows_the_occurrence():
    eq = S.eq(a, b)
    assert apply_rule1(eq, App(f, a), ("arg",)) == App(f, b)
    assert apply_rule1(eq, App(f, b), ("arg",)) == App(f, a)


def test_rule1_auto_path_prefers_the_left_side():
    eq = S.eq(a, b)
    target = S.and_(App(f, b), App(f, a))
    assert apply_rule1(eq, target, AUTO) == S.and_(App(f, b), App(f, b))


def test_rule1_on_quasi_equations():
    assert apply_rule1(S.qeq(a, b), App(f, a), ("arg",)) == App(f, b)


def test_rule1_never_enters_quotations():
    eq = S.eq(a, b)
    with pytest.raises(IllegalPath):
        apply_rule1(eq, Quote(App(f, a)), ("body", "arg"))
    with pytest.raises(MismatchAtPath):
        apply_rule1(eq, Quote(App(f, a)), AUTO)


def test_rule1_mismatch():
    with pytest.raises(MismatchAtPath):
        apply_rule1(S.eq(a, b), App(f, a), ())


def test_rule1_needs_an_equation():
    with pytest.raises(NotAnEquation):
        apply_rule1(S.or_(p, q), p, ())


def test_modus_ponens():
    assert apply_rule2(S.imp(p, q), p) == q
    with pytest.raises(NotModusPonens):
        apply_rule2(S.imp(p, q), r)
    with pytest.raises(NotModusPonens):
        apply_rule2(S.or_(p, q), p)
