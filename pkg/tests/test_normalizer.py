import pytest

from conftest import scaled
from engine.normalizer import Normalizer, Outcome, is_defined, normalize
from shared.errors import FuelExhausted, IllTyped
from shared.tristate import TriState
from syntax import sugar as S
from syntax.grammar import parse_wff
from syntax.types import EPS, IOTA, O
from syntax.wff import Abs, App, Eval, Quote, Var

x, y = Var("x", O), Var("y", O)


def test_identity_redex():
    nf = Normalizer(trace=True).normalize(parse_wff("((\\x:o. x:o) T)"))
    assert nf.wff == S.TRUE
    assert nf.status is Outcome.VALUE
    assert nf.ty == O
    assert nf.steps == 1
    assert nf.trace == ("beta.identity",)


def test_evaluation_at_the_wrong_type_is_bottom():
    nf = normalize(Eval(Quote(x), IOTA))
    assert nf.wff == S.bottom(IOTA)
    assert nf.status is Outcome.BOTTOM


def test_connectives_fold():
    assert normalize(parse_wff("(T & F)")).wff == S.FALSE
    assert normalize(parse_wff("(~ F)")).wff == S.TRUE
    assert normalize(parse_wff("(F => x:o)")).wff == S.TRUE


def test_distinct_literals_are_unequal():
    nf = normalize(parse_wff("((quote p:o) == (quote q:o))"))
    assert nf.wff == S.FALSE
    assert nf.status is Outcome.VALUE


def test_pair_projection():
    nf = normalize(parse_wff("(fst (#pair:((<i, i> i) i) a:i b:i))"))
    assert nf.wff == Var("a", IOTA)
    assert nf.status is Outcome.STUCK


def test_fuel_limit():
    w = parse_wff("((\\x:o. x:o) ((\\y:o. y:o) T))")
    assert normalize(w).wff == S.TRUE
    with pytest.raises(FuelExhausted):
        normalize(w, fuel=1)


def test_ill_typed_input():
    with pytest.raises(IllTyped):
        normalize(App(x, y))


def test_definedness():
    assert is_defined(S.bottom(IOTA)) is TriState.FALSE
    assert is_defined(Quote(x)) is TriState.TRUE


def test_evaluation_of_a_variable_is_stuck():
    w = Abs(Var("x", EPS), Eval(Var("x", EPS), O))
    nf = normalize(w)
    assert nf.wff == w
    assert nf.status is Outcome.STUCK


def test_disquotation(gen):
    for _ in range(scaled(1_000, 100)):
        ty = gen.ty()
        d = gen.wff(ty, depth=3, closed=True, ef=True)
        nf = Normalizer(trace=True).normalize(Eval(Quote(d), ty))
        assert nf.trace[0] == "eval.literal"
        assert nf.wff == normalize(d).wff


def test_renaming_bound_variables_changes_normal_forms():
    xe, ye = Var("x", EPS), Var("y", EPS)
    f = Abs(xe, Eval(xe, O))
    g = Abs(ye, Eval(ye, O))
    assert normalize(f).wff != normalize(g).wff


def test_renamed_abstractions_agree_on_closed_arguments(gen):
    for _ in range(scaled(500, 50)):
        body = gen.wff(O, depth=3, closed=True, ef=True, bound=(x,))
        renamed = Abs(y, App(Abs(x, body), y))
        for arg in (S.TRUE, S.FALSE):
            left = normalize(App(Abs(x, body), arg)).wff
            right = normalize(App(renamed, arg)).wff
            assert left == right
