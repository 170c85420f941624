import pytest

from conftest import scaled
from shared.errors import (
    EvalArgNotEpsilon, IllegalPath, IllegalTypeParameter, MismatchAtPath, NotEvaluationFree,
    TypeMismatch, UnknownConstant, WffSyntaxError,
)
from kernel.scripts import load_theory
from shared.config import CFG
from syntax import sugar as S
from syntax.grammar import parse_type, parse_wff
from syntax.paths import format_path, illegal_reason, legal_paths, parse_path, replace_checked, subterm_at
from syntax.printer import print_wff
from syntax.signature import Q_OOO, Signature
from syntax.types import EPS, IOTA, O, Fun, Pair, fn
from syntax.wff import (
    Abs, App, Const, Eval, Quote, Var, complexity, free_vars, free_vars_ef, is_evaluation_free,
    size, substitute_free, type_of,
)

x, y = Var("x", O), Var("y", O)
q = Var("q", EPS)


# ------------- types -------------
def test_type_printing():
    assert str(fn(O, O, O)) == "((o o) o)"
    assert str(Pair(IOTA, EPS)) == "<i, eps>"
    assert parse_type("((o o) o)") == fn(O, O, O)
    assert parse_type("<i, (o i)>") == Pair(IOTA, Fun(O, IOTA))


@pytest.mark.parametrize("text", ["o", "(o o)", "((o o) o)", "(eps i)", "<(o i), eps>", "((o ((o o) o)) ((o o) o))"])
def test_type_text_round_trip(text):
    assert str(parse_type(text)) == text


def test_function_typed_constants_parse():
    assert parse_wff("#Q:((o o) o)") == Q_OOO
    assert print_wff(parse_wff("#Q:((o o) o)"), sugar=False) == "#Q:((o o) o)"
    assert parse_wff("(quote (#Q:((o o) o) T F))") == Quote(S.eq(S.TRUE, S.FALSE))
    assert parse_wff("(\\f:(o o). (f:(o o) x:o))") == Abs(Var("f", Fun(O, O)), App(Var("f", Fun(O, O)), x))


# ------------- parsing -------------
def test_parse_atoms_and_binders():
    assert parse_wff("x:o") == x
    assert parse_wff("(\\x:o. x:o)") == Abs(x, x)
    assert parse_wff("(eval q:eps : i)") == Eval(q, IOTA)
    assert parse_wff("T") == S.TRUE
    assert parse_wff("F") == S.FALSE


def test_parse_expands_sugar():
    assert parse_wff("(x:o & y:o)") == S.and_(x, y)
    assert parse_wff("(x:o => y:o)") == S.imp(x, y)
    assert parse_wff("(~ x:o)") == S.not_(x)
    assert parse_wff("(forall x:o . x:o)") == S.forall(x, x)
    assert parse_wff("(x:o <=> y:o)") == S.iff(x, y)
    assert parse_wff("bot:i") == S.bottom(IOTA)
    assert parse_wff("bot:o") == S.FALSE


def test_quotation_has_type_eps():
    w = parse_wff("(quote (#Q:((o o) o) T F))")
    assert isinstance(w, Quote)
    assert type_of(w) == EPS


def test_syntax_error_has_position():
    with pytest.raises(WffSyntaxError) as info:
        parse_wff("(x:o")
    assert "cannot parse" in str(info.value)


def test_description_at_type_o_is_refused():
    with pytest.raises(IllegalTypeParameter):
        parse_wff("(desc x:o . T)")


def test_definition_references_need_a_signature():
    with pytest.raises(UnknownConstant):
        parse_wff("$imp-ooo")


def test_library_operators_match_the_builtin_connectives():
    sig = load_theory(CFG.stdlib_path).sig
    assert parse_wff("$imp-ooo", sig) == S.IMP_C
    assert parse_wff("$and-ooo", sig) == S.AND_C


# ------------- type checking -------------
def test_type_mismatch_reports_path():
    with pytest.raises(TypeMismatch) as info:
        type_of(App(x, y))
    assert info.value.path == "/"
    with pytest.raises(TypeMismatch) as info:
        type_of(Abs(x, App(x, y)))
    assert info.value.path == "/body"


def test_evaluation_needs_an_eps_argument():
    assert type_of(Eval(q, IOTA)) == IOTA
    with pytest.raises(EvalArgNotEpsilon):
        type_of(Eval(x, IOTA))


def test_signature_resolves_constants():
    sig = Signature()
    with pytest.raises(UnknownConstant):
        type_of(Const("k", O), sig)
    sig.declare("k", O)
    assert type_of(Const("k", O), sig) == O
    assert type_of(S.TRUE, sig) == O
    with pytest.raises(UnknownConstant):
        type_of(Const("k", IOTA), sig)


# ------------- metrics -------------
def test_size_counts_atoms_inside_quotations():
    assert size(x) == 1
    assert size(Quote(App(Const("f", Fun(O, IOTA)), Var("x", IOTA)))) == 2
    assert size(Abs(x, x)) == 2


def test_complexity_ignores_quoted_evaluations():
    assert complexity(Eval(Quote(x), O)) == (1, 1)
    assert complexity(Quote(Eval(q, O))) == (0, 1)


def test_evaluation_free():
    assert is_evaluation_free(S.and_(x, y))
    assert is_evaluation_free(Quote(Eval(q, O)))
    assert not is_evaluation_free(S.not_(Eval(q, O)))


def test_free_vars_ef():
    assert free_vars_ef(Abs(x, S.and_(x, y))) == {y}
    assert free_vars_ef(Quote(x)) == set()
    with pytest.raises(NotEvaluationFree):
        free_vars_ef(Eval(q, O))


def test_substitute_free_refuses_capture():
    body = Abs(y, S.and_(x, y))
    assert substitute_free(y, x, body) is None
    assert substitute_free(S.TRUE, x, body) == Abs(y, S.and_(S.TRUE, y))
    assert substitute_free(y, x, Quote(x)) == Quote(x)


# ------------- printing -------------
@pytest.mark.parametrize("text", [
    "(\\x:o. x:o)",
    "(forall x:o . x:o)",
    "(x:o & y:o)",
    "(x:o => (y:o | (~ x:o)))",
    "(x:o <=> y:o)",
    "(a:i == b:i)",
    "(eval q:eps : i)",
    "(quote (eval q:eps : o))",
    "(if x:o a:i b:i)",
    "bot:i",
    "T",
    "F",
])
def test_print_round_trip_examples(text):
    assert print_wff(parse_wff(text)) == text


def test_print_without_sugar():
    assert print_wff(S.TRUE, sugar=False) == "(#Q:((o ((o o) o)) ((o o) o)) #Q:((o o) o) #Q:((o o) o))"
    assert print_wff(Q_OOO, sugar=False) == "#Q:((o o) o)"


def test_display_mode_requotes_constructions():
    from syntax.encoding import encode
    w = S.and_(Var("p", O), Var("q", O))
    assert print_wff(encode(w), display=True) == "(quote (p:o & q:o))"
    assert print_wff(encode(w)).startswith("(#app:")


def test_printer_uses_definition_names():
    sig = load_theory(CFG.stdlib_path).sig
    assert print_wff(S.IMP_C, sig=sig) == "$imp-ooo"


def test_print_parse_round_trip(gen):
    for _ in range(scaled(10_000, 300)):
        w = gen.any()
        assert parse_wff(print_wff(w)) == w
        assert parse_wff(print_wff(w, sugar=False)) == w


# ------------- paths -------------
def test_path_text():
    assert parse_path("/fn/arg") == ("fn", "arg")
    assert parse_path("/") == ()
    assert format_path(()) == "/"
    assert format_path(("arg", "body")) == "/arg/body"


def test_legal_paths_stop_at_quotations():
    w = App(Abs(x, x), Quote(y))
    paths = list(legal_paths(w))
    assert ("arg",) in paths
    assert ("arg", "body") not in paths
    assert ("fn", "binder") not in paths
    assert illegal_reason(w, ("arg", "body")) == "occurrence is within a quotation"
    assert illegal_reason(w, ("fn", "binder")) is not None


def test_replace_checked():
    w = S.and_(x, y)
    assert subterm_at(w, ("arg",)) == y
    assert replace_checked(w, ("arg",), y, x) == S.and_(x, x)
    with pytest.raises(MismatchAtPath):
        replace_checked(w, ("arg",), x, y)
    with pytest.raises(IllegalPath):
        replace_checked(Quote(x), ("body",), x, y)
