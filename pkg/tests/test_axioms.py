import pytest

from kernel.axioms import catalogue, instantiate_axiom
from shared.errors import IllTypedParams, SideConditionViolated, UnknownSchema
from syntax import sugar as S
from syntax.encoding import encode
from syntax.grammar import parse_wff
from syntax.signature import Q_OOO, Signature
from syntax.types import EPS, IOTA, O
from syntax.wff import Abs, App, Const, Quote, Var

x = Var("x", O)


def test_catalogue_is_loaded():
    schemas = catalogue()
    for sid in ("1", "4.1", "5", "6.1", "7", "12.1"):
        assert sid in schemas


def test_variables_are_defined():
    assert instantiate_axiom("6.1", {"x": x}) == S.defined(x)


def test_q_is_defined_gives_truth():
    assert instantiate_axiom("6.2", {"c": Q_OOO}) == S.TRUE


def test_definedness_of_constants_needs_a_primitive():
    with pytest.raises(SideConditionViolated):
        instantiate_axiom("6.2", {"c": Var("a", IOTA)})
    with pytest.raises(IllTypedParams):
        instantiate_axiom("6.2", {"c": Const("k", IOTA)})
    sig = Signature()
    sig.declare("k", IOTA)
    assert instantiate_axiom("6.2", {"c": Const("k", IOTA)}, sig) == S.defined(Const("k", IOTA))


def test_quotations_are_defined():
    assert instantiate_axiom("6.7", {"A": x}) == S.defined(Quote(x), EPS)


def test_tautology_schema():
    w = parse_wff("(p:o | (~ p:o))")
    assert instantiate_axiom("5", {"A": w}) == w
    with pytest.raises(SideConditionViolated):
        instantiate_axiom("5", {"A": parse_wff("(p:o => q:o)")})


def test_quasi_equality_is_reflexive():
    a = Var("a", IOTA)
    assert instantiate_axiom("7", {"A": a}) == S.qeq(a, a)


def test_quotation_is_the_encoding():
    w = S.and_(x, Var("y", O))
    assert instantiate_axiom("12.1", {"A": w}) == S.eq(Quote(w), encode(w), EPS)


def test_beta_on_the_bound_variable():
    a = Var("a", IOTA)
    xi = Var("x", IOTA)
    assert instantiate_axiom("4.2", {"A": a, "x": xi}) == S.qeq(App(Abs(xi, xi), a), a)


def test_unknown_schema():
    with pytest.raises(UnknownSchema):
        instantiate_axiom("99", {})


@pytest.mark.parametrize("sid, params", [
    ("6.1", {"x": S.TRUE}),
    ("6.1", {}),
    ("6.1", {"x": x, "y": x}),
    ("4.2", {"A": Var("a", IOTA), "x": x}),
    ("5", {"A": Var("a", IOTA)}),
])
def test_ill_typed_parameters(sid, params):
    with pytest.raises(IllTypedParams):
        instantiate_axiom(sid, params)
