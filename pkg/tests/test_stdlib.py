import pytest

from engine.normalizer import normalize
from kernel.proof import Theory
from kernel.scripts import reader
from shared.errors import NotFormulaLiteral, RedefinedName, UnknownConstant
from stdlib import demo
from stdlib.fixtures import load_and_simp, load_double_subst
from stdlib.theories import (
    and_simp, beta_schema, check_schemas, lem, load_stdlib, shipped_scripts, statements,
)
from syntax import sugar as S
from syntax.encoding import canonical
from syntax.grammar import parse_wff
from syntax.types import EPS, IOTA, O
from syntax.wff import Quote, Var, free_vars, type_of

p, q = Var("p", O), Var("q", O)


def quantifiers(w) -> int:
    n = 0
    while (m := S.match_forall(w)) is not None:
        n, w = n + 1, m[1]
    return n


@pytest.fixture(scope="module")
def lib() -> Theory:
    return load_stdlib(recheck=False)


@pytest.mark.parametrize("case", load_and_simp(), ids=lambda c: f"{c.a}/{c.b}")
def test_and_simp_table(case):
    got = and_simp(Quote(parse_wff(case.a)), Quote(parse_wff(case.b)))
    assert got == Quote(parse_wff(case.expect))


def test_and_simp_needs_formulas():
    assert and_simp(Quote(S.TRUE), Quote(p)) == Quote(p)
    with pytest.raises(NotFormulaLiteral):
        and_simp(Quote(Var("x", IOTA)), Quote(p))
    with pytest.raises(NotFormulaLiteral):
        and_simp(p, Quote(p))


def test_fixture_tables_load():
    assert len(load_and_simp()) == 25
    assert load_double_subst()


def test_library_definitions(lib):
    for name in ("imp-ooo", "and-ooo", "implies", "is-implication", "antecedent",
                 "succedent", "converse", "and", "and-simp"):
        assert lib.sig.lookup_def(name) is not None
    assert lib.sig.lookup_def("imp-ooo") == S.IMP_C
    assert lib.sig.lookup_def("lem") == lem()




@pytest.mark.parametrize("text, expect", [
    ("($implies (quote p:o) (quote q:o))", Quote(S.imp(p, q))),
    ("($antecedent (quote (p:o => q:o)))", Quote(p)),
    ("($succedent (quote (p:o => q:o)))", Quote(q)),
    ("($converse (quote (p:o => q:o)))", Quote(S.imp(q, p))),
    ("($is-implication (quote (p:o => q:o)))", S.TRUE),
    ("($is-implication (quote p:o))", S.FALSE),
])
def test_library_operators_normalize(lib, text, expect):
    assert normalize(parse_wff(text, lib.sig)).wff == canonical(expect)


@pytest.mark.parametrize("case", load_and_simp(), ids=lambda c: f"{c.a}/{c.b}")
def test_and_simp_definition_agrees_with_table(lib, case):
    a, b = parse_wff(case.a), parse_wff(case.b)
    got = normalize(parse_wff(f"($and-simp (quote {case.a}) (quote {case.b}))", lib.sig)).wff
    assert got == canonical(and_simp(Quote(a), Quote(b)))


def test_statements_are_sentences(lib):
    found = statements(lib.sig)
    assert "comp-behavior" in found and "math-meaning" in found
    for w in found.values():
        assert type_of(w, lib.sig) == O
        assert not free_vars(w)


def test_grouped_schema_has_one_quantifier():
    m = S.match_forall(beta_schema(O, O, grouped=True))
    assert m is not None
    assert S.match_forall(m[1]) is None
    assert quantifiers(beta_schema(O, EPS)) == 4


def test_stdlib_extends_a_theory():
    base = reader().read_theory("const k : i")
    lib = load_stdlib(base, recheck=False)
    assert lib.sig.consts["k"] == IOTA
    assert lib.sig.lookup_def("and-simp") is not None


def test_stdlib_cannot_be_loaded_twice(lib):
    with pytest.raises(RedefinedName):
        load_stdlib(lib, recheck=False)


def test_recheck_runs_the_shipped_proofs():
    assert len(shipped_scripts()) == 4
    assert load_stdlib().sig.lookup_def("lem") is not None


def test_incomplete_library(tmp_path):
    path = tmp_path / "lib.quqe"
    path.write_text("def imp-ooo : ((o o) o) := (\\a:o. (\\b:o. b:o))\n")
    with pytest.raises(UnknownConstant):
        load_stdlib(path=str(path), recheck=False)


def test_schema_checks(lib):
    report = check_schemas(lib)
    assert report.ok, report.summary()
    assert [c.expect for c in report.checks] == ["proved", "proved", "refused"]


def test_demo_passes():
    items = demo.run()
    assert items
    assert all(item.ok for item in items), [i for i in items if not i.ok]
