import pytest

from kernel.proof import Theory
from kernel.rules import AUTO
from kernel.scripts import load_script, load_theory, parse_params, reader, split_top
from shared.errors import HypothesisNotAdmissible, RedefinedName, ScriptError, UsageError
from syntax import sugar as S
from syntax.grammar import parse_wff
from syntax.signature import Signature
from syntax.types import IOTA, O
from syntax.wff import Abs, Const, Var

x = Var("x", O)


@pytest.mark.parametrize("text, parts", [
    ("a, (b, c), <x, y>, p => q", ["a", "(b, c)", "<x, y>", "p => q"]),
    ("(p:o <=> q:o), x:o", ["(p:o <=> q:o)", "x:o"]),
    ("A={x, y}", ["A={x, y}"]),
    ("", []),
    ("  3 ", ["3"]),
])
def test_split_top(text, parts):
    assert split_top(text) == parts


def test_read_proof_lines():
    text = "\n".join([
        "-- a comment",
        "",
        "line 1: T ; axiom 6.2 {c=#Q:((o o) o)}",
        "line 2: T ; rule1 1, 1 at /fn/arg",
        "line 3: T ; rule1 1 2 at ?",
        "line 4: T ; rule2 1, 3",
        "line 5: T ; hyp 2",
        "line 6: T ; macro ug(1, x:o)",
    ])
    lines = reader().read_proof(text)
    assert [sl.kind for sl in lines] == ["AXIOM", "RULE1", "RULE1", "RULE2", "HYP", "MACRO"]
    assert lines[0].at == 3
    assert lines[0].fields == {"id": "6.2", "params": "c=#Q:((o o) o)"}
    assert lines[1].refs() == (1, 1)
    assert lines[1].path() == ("fn", "arg")
    assert lines[2].path() == AUTO
    assert lines[4].fields["k"] == "2"
    assert lines[5].fields == {"name": "ug", "args": "1, x:o"}


@pytest.mark.parametrize("text", [
    "line 2: T ; axiom 6.2",
    "line 1: T ; frobnicate",
    "T ; axiom 5 {A=T}",
    "line 1: T",
])
def test_read_proof_rejects(text):
    with pytest.raises(ScriptError):
        reader().read_proof(text)


def test_read_errors_carry_the_line():
    with pytest.raises(ScriptError) as e:
        reader().read_proof("line 1: T ; hyp 1\n\nline 3: T ; hyp 1", "p.qpf")
    assert e.value.line == 3
    assert str(e.value).startswith("p.qpf:3:")


def test_read_theory():
    theory = reader().read_theory("\n".join([
        "const k : i",
        "def twice : (o o) := (\\x:o. (x:o & x:o))",
        "hyp (#k:i == #k:i)",
        "mode ef",
    ]))
    assert theory.sig.consts["k"] == IOTA
    assert theory.sig.lookup_def("twice") == Abs(x, S.and_(x, x))
    assert theory.hypotheses == (S.eq(Const("k", IOTA), Const("k", IOTA)),)
    assert theory.mode == "ef"
    assert parse_wff("($twice T)", theory.sig) == parse_wff("((\\x:o. (x:o & x:o)) T)")


def test_theories_extend_a_base():
    base = reader().read_theory("const k : i")
    ext = reader().read_theory("hyp (#k:i == #k:i)", base=base)
    assert "k" in ext.sig.consts
    assert len(ext.hypotheses) == 1
    assert not base.hypotheses


@pytest.mark.parametrize("text", [
    "def bad : o := p:o",
    "def bad : i := T",
    "hyp a:i",
    "hyp (",
    "const k i",
    "mode sometimes",
])
def test_read_theory_rejects(text):
    with pytest.raises(ScriptError):
        reader().read_theory(text)


@pytest.mark.parametrize("text", [
    "const k : i\nconst k : o",
    "const Q : o",
    "def wff : o := T",
])
def test_names_cannot_be_redefined(text):
    with pytest.raises(RedefinedName):
        reader().read_theory(text)


def test_free_hypotheses_are_not_admissible():
    with pytest.raises(HypothesisNotAdmissible):
        reader().read_theory("hyp (p:o | q:o)")
    with pytest.raises(HypothesisNotAdmissible):
        reader().read_theory("mode general\nhyp (p:o | q:o)")
    with pytest.raises(HypothesisNotAdmissible):
        Theory(hypotheses=(parse_wff("(eval x:eps : o)"),))


def test_unknown_mode():
    with pytest.raises(UsageError):
        Theory(mode="sometimes")


def test_parse_params():
    sig = Signature()
    got = parse_params("4.2", "A=a:i, x=x:i", sig)
    assert got == {"A": Var("a", IOTA), "x": Var("x", IOTA)}
    assert parse_params("6.7", None, sig) == {}
    with pytest.raises(ScriptError):
        parse_params("6.7", "A", sig)


def test_loading_missing_files(tmp_path):
    with pytest.raises(ScriptError):
        load_script(str(tmp_path / "none.qpf"))
    with pytest.raises(ScriptError):
        load_theory(str(tmp_path / "none.quqe"))


def test_loading_files(tmp_path):
    path = tmp_path / "t.qpf"
    path.write_text("line 1: T ; axiom 6.2 {c=#Q:((o o) o)}\n")
    assert len(load_script(str(path))) == 1
