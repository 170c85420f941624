import pytest

from conftest import scaled
from shared.errors import HoleTypeMismatch
from syntax import sugar as S
from syntax.encoding import Construction, canonical, decode, encode, fill_holes, is_literal, quasiquote
from syntax.grammar import parse_wff
from syntax.signature import APP, QUOT
from syntax.types import EPS, IOTA, O, Fun
from syntax.wff import App, Eval, Hole, Quote, Var, app, is_evaluation_free, type_of

x, y = Var("x", O), Var("y", O)


def test_atoms_encode_to_their_quotation():
    assert encode(x) == Quote(x)
    assert decode(Quote(x)) == x


def test_compound_encoding_uses_constructors():
    assert encode(App(Var("f", Fun(O, O)), x)) == app(APP, Quote(Var("f", Fun(O, O))), Quote(x))
    assert encode(Quote(x)) == App(QUOT, Quote(x))


def test_evaluation_type_is_carried_by_a_variable():
    e = encode(Eval(Var("q", EPS), IOTA))
    assert Quote(Var("_ty", IOTA)) == e.arg
    assert decode(e) == Eval(Var("q", EPS), IOTA)


def test_encodings_are_eps_and_evaluation_free(gen):
    for _ in range(scaled(2_000, 200)):
        e = encode(gen.any())
        assert type_of(e) == EPS
        assert is_evaluation_free(e)


def test_decode_inverts_encode(gen):
    for _ in range(scaled(10_000, 300)):
        w = gen.any()
        assert decode(encode(w)) == w


def test_encoding_is_injective(gen):
    seen: dict = {}
    for _ in range(scaled(10_000, 300)):
        w = gen.any(depth=3)
        e = encode(w)
        assert seen.setdefault(e, w) == w


def test_decode_rejects_non_constructions():
    assert decode(Quote(S.and_(x, y))) is None
    assert decode(Var("q", EPS)) is None
    assert decode(app(APP, Quote(x))) is None


def test_canonical_and_literals():
    w = Quote(S.and_(x, y))
    assert canonical(w) == encode(S.and_(x, y))
    assert is_literal(w)
    assert is_literal(app(APP, Quote(S.and_(x, y).fn), Quote(y)))
    assert not is_literal(Var("q", EPS))


def test_construction_of():
    c = Construction.of(S.TRUE)
    assert c.decoded == S.TRUE
    assert decode(c.wff) == S.TRUE
    lit = Construction.from_literal(Quote(S.TRUE))
    assert lit is not None and lit.decoded == S.TRUE
    assert Construction.from_literal(Var("q", EPS)) is None


def test_quasiquote_splices_holes():
    q = Var("q", EPS)
    template = S.and_(Hole(q, O), y)
    e = quasiquote(template)
    assert e == app(APP, app(APP, encode(S.AND_C), q), Quote(y))
    assert fill_holes(template, [x]) == S.and_(x, y)


def test_quasiquote_needs_eps_payloads():
    with pytest.raises(HoleTypeMismatch):
        quasiquote(S.not_(Hole(Var("p", O), O)))


def test_parsed_unquote_is_a_hole():
    w = parse_wff("(quote (unquote q:eps : o))", check=False)
    assert w == Quote(Hole(Var("q", EPS), O))
