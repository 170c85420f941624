import pytest

from algebra.ops import (
    UNDEFINED, UNKNOWN, PartialResult, cleanse, decide, epsilon_eval, literal_equal, not_free_in,
    represented, subst, syn_closed_p, syn_var_p, wff_type,
)
from conftest import scaled
from shared.errors import RecursionDepthExceeded
from shared.tristate import TriState
from stdlib.fixtures import expected, load_double_subst, run_double_subst
from syntax import sugar as S
from syntax.encoding import encode
from syntax.grammar import parse_wff
from syntax.types import EPS, IOTA, O, Fun
from syntax.wff import Abs, App, Const, Eval, Quote, Var, free_vars, substitute_free

x, y = Var("x", O), Var("y", O)
xi = Var("x", IOTA)
q = Var("q", EPS)


# ------------- tri-state logic -------------
def test_tristate_connectives():
    T, F, U = TriState.TRUE, TriState.FALSE, TriState.UNKNOWN
    assert TriState.all([T, U, F]) is F
    assert TriState.all([T, U]) is U
    assert TriState.any([F, U, T]) is T
    assert TriState.any([F, U]) is U
    assert TriState.not_(U) is U
    assert TriState.from_bool(False) is F
    assert str(U) == "unknown"
    with pytest.raises(ValueError):
        U.to_bool()


def test_all_lazy_stops_at_false():
    calls = []

    def pending(v):
        def f():
            calls.append(v)
            return v
        return f

    assert TriState.all_lazy([pending(TriState.FALSE), pending(TriState.TRUE)]) is TriState.FALSE
    assert calls == [TriState.FALSE]


# ------------- reading constructions -------------
def test_represented_and_predicates():
    assert represented(Quote(x)) == x
    assert represented(encode(S.and_(x, y))) == S.and_(x, y)
    assert represented(q) is None
    assert syn_var_p(Quote(x))
    assert not syn_var_p(Quote(S.TRUE))
    assert wff_type(Quote(S.and_(x, y))) == O
    assert wff_type(q) is None


def test_literal_equal_compares_represented_wffs():
    assert literal_equal(Quote(S.TRUE), encode(S.TRUE))
    assert not literal_equal(Quote(x), Quote(y))
    assert not literal_equal(q, q)


def test_partial_result_construction():
    r = PartialResult.defined(S.TRUE)
    assert r.construction == encode(S.TRUE)
    assert str(r) == "defined"
    assert str(UNDEFINED) == "undefined"
    with pytest.raises(ValueError):
        UNKNOWN.construction


# ------------- epsilon evaluation and decisions -------------
def test_epsilon_eval():
    assert epsilon_eval(Quote(x)).wff == x
    assert epsilon_eval(q).is_unknown()
    assert epsilon_eval(App(Abs(q, q), Quote(x))).wff == x
    assert epsilon_eval(Eval(Quote(Quote(x)), EPS)).wff == x
    assert epsilon_eval(Eval(Quote(x), EPS)).is_undefined()


def test_decide():
    assert decide(parse_wff("(T & F)")) is TriState.FALSE
    assert decide(parse_wff("(F => p:o)")) is TriState.TRUE
    assert decide(parse_wff("((quote p:o) == (quote q:o))")) is TriState.FALSE
    assert decide(parse_wff("((quote p:o) == (quote p:o))")) is TriState.TRUE
    assert decide(parse_wff("p:o")) is TriState.UNKNOWN


# ------------- not-free-in -------------
def test_not_free_in():
    assert not_free_in(Quote(xi), Quote(Abs(xi, xi))) is TriState.TRUE
    f = Const("f", Fun(IOTA, IOTA))
    assert not_free_in(Quote(xi), Quote(App(f, xi))) is TriState.FALSE
    assert not_free_in(Quote(xi), Quote(Quote(xi))) is TriState.TRUE
    assert not_free_in(Quote(S.TRUE), Quote(xi)) is TriState.TRUE


def test_not_free_in_with_unknown_value():
    assert not_free_in(q, Quote(x)) is TriState.UNKNOWN


def test_not_free_in_matches_free_vars(gen):
    for _ in range(scaled(2_000, 200)):
        a = gen.any(ef=True)
        v = gen.var(gen.ty())
        got = not_free_in(Quote(v), Quote(a))
        assert got is TriState.from_bool(v not in free_vars(a))


# ------------- syn-closed -------------
def test_syn_closed():
    assert syn_closed_p(Quote(S.forall(x, x))) is TriState.TRUE
    assert syn_closed_p(Quote(x)) is TriState.FALSE
    assert syn_closed_p(Quote(Eval(q, O))) is TriState.FALSE
    assert syn_closed_p(Quote(Eval(Const("k", EPS), O))) is TriState.UNKNOWN


# ------------- cleanse and sub -------------
def test_cleanse_is_identity_on_evaluation_free_wffs(gen):
    for _ in range(scaled(2_000, 200)):
        a = gen.any(ef=True)
        assert cleanse(Quote(a)).wff == a


def test_cleanse_removes_closed_evaluations():
    assert cleanse(Quote(Eval(Quote(S.TRUE), O))).wff == S.TRUE
    assert cleanse(Quote(Eval(Quote(S.TRUE), IOTA))).is_undefined()


def test_sub_capture_is_undefined():
    body = Abs(y, S.and_(x, y))
    assert subst(Quote(y), Quote(x), Quote(body)) == UNDEFINED


def test_sub_capture_is_undefined_on_generated_bodies(gen):
    for _ in range(scaled(2_000, 200)):
        body = Abs(y, S.and_(gen.wff(O, depth=3, ef=True), S.eq(x, y)))
        assert subst(Quote(y), Quote(x), Quote(body)).is_undefined()


def test_sub_type_mismatch_is_undefined():
    assert subst(Quote(xi), Quote(x), Quote(x)) == UNDEFINED
    assert subst(Quote(S.TRUE), Quote(S.FALSE), Quote(x)) == UNDEFINED


def test_sub_under_shadowing_binder():
    body = Abs(x, S.and_(x, y))
    assert subst(Quote(S.TRUE), Quote(x), Quote(body)).wff == body


def test_sub_agrees_with_textbook_substitution(gen):
    for _ in range(scaled(2_000, 200)):
        v = gen.var(gen.ty())
        a = gen.wff(v.ty, depth=3, ef=True)
        b = gen.any(ef=True)
        got = subst(Quote(a), Quote(v), Quote(b))
        want = substitute_free(a, v, b)
        if want is None:
            assert got.is_undefined()
        else:
            assert got.wff == want


def test_sub_of_closed_wffs_is_always_defined(gen):
    for _ in range(scaled(2_000, 200)):
        v = gen.var(gen.ty())
        a = gen.wff(v.ty, depth=3, closed=True, ef=True)
        b = gen.any(ef=True)
        got = subst(Quote(a), Quote(v), Quote(b))
        assert got.is_defined()
        assert got.wff == substitute_free(a, v, b)


def test_evaluation_free_inputs_never_give_unknown(gen):
    for _ in range(scaled(2_000, 200)):
        a = gen.any(ef=True)
        v = gen.var(gen.ty())
        assert not syn_closed_p(Quote(a)).is_unknown()
        assert not not_free_in(Quote(v), Quote(a)).is_unknown()
        assert not cleanse(Quote(a)).is_unknown()
        assert not subst(Quote(gen.wff(v.ty, depth=2, ef=True)), Quote(v), Quote(a)).is_unknown()


@pytest.mark.parametrize("case", load_double_subst(), ids=lambda c: c.name)
def test_double_substitution_table(case):
    r = run_double_subst(case)
    want = expected(case)
    if want is None:
        assert str(r) == case.expect
    else:
        assert r.is_defined()
        assert r.wff == want


def test_recursion_depth_guard():
    p, r = Var("p", O), Var("r", O)
    deep = S.and_(S.and_(p, r), S.and_(r, p))
    with pytest.raises(RecursionDepthExceeded):
        cleanse(Quote(deep), max_depth=2)
