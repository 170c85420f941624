import pytest

from kernel.checker import check_file, check_proof, check_script
from kernel.proof import Justification, Proof, ProofLine, Theory
from kernel.scripts import reader
from stdlib.theories import check_shipped, load_stdlib, proofs_dir
from syntax import sugar as S
from syntax.grammar import parse_wff
from syntax.signature import Q_OOO

T_TRUE = "line 1: T ; axiom 6.2 {c=#Q:((o o) o)}"
LEM = "(p:o | (~ p:o))"


def check_text(text: str, theory: Theory | None = None):
    return check_script(reader().read_proof(text), theory)


def test_truth_from_definedness_of_q():
    report = check_text(T_TRUE)
    assert report.ok
    assert report.lines == 1
    assert report.evaluation_free
    assert report.conclusion == "T"
    assert report.summary() == "ok (1 lines)"


def test_primitive_proof():
    line = ProofLine(S.TRUE, Justification.axiom("6.2", c=Q_OOO))
    assert check_proof(Proof(Theory(), (line,))).ok
    bad = ProofLine(S.FALSE, Justification.axiom("6.2", c=Q_OOO))
    report = check_proof(Proof(Theory(), (bad,)))
    assert not report.ok
    assert report.diagnostics[0].kind == "LineMismatch"


def test_empty_proof_is_rejected():
    report = check_proof(Proof(Theory(), ()))
    assert not report.ok
    assert report.diagnostics[0].kind == "EmptyProof"


def test_hypotheses():
    h = parse_wff("(forall x:o . (x:o | (~ x:o)))")
    theory = Theory(hypotheses=(h,))
    assert check_text("line 1: (forall x:o . (x:o | (~ x:o))) ; hyp 1", theory).ok


def test_tautology_and_modus_ponens():
    text = "\n".join([
        "line 1: (p:o => (p:o | q:o)) ; axiom 5 {A=(p:o => (p:o | q:o))}",
        "line 2: T ; axiom 6.2 {c=#Q:((o o) o)}",
        "line 3: (T => (T | q:o)) ; axiom 5 {A=(T => (T | q:o))}",
        "line 4: (T | q:o) ; rule2 3, 2",
    ])
    assert check_text(text).ok


MUTATIONS = [
    ("forward-reference", [T_TRUE, "line 2: T ; rule2 1, 3"], "BadReference", 2),
    ("missing-hypothesis", ["line 1: T ; hyp 1"], "BadReference", 1),
    ("into-quotation", [
        "line 1: ((quote p:o) !) ; axiom 6.7 {A=p:o}",
        "line 2: T ; axiom 6.2 {c=#Q:((o o) o)}",
        "line 3: T ; rule1 2, 1 at /fn/arg/body",
    ], "IllegalPath", 3),
    ("path-mismatch", [
        T_TRUE,
        "line 2: ((quote p:o) !) ; axiom 6.7 {A=p:o}",
        "line 3: T ; rule1 1, 2 at /arg",
    ], "MismatchAtPath", 3),
    ("not-an-equation", [
        f"line 1: {LEM} ; axiom 5 {{A={LEM}}}",
        "line 2: T ; axiom 6.2 {c=#Q:((o o) o)}",
        "line 3: T ; rule1 1, 2 at /",
    ], "NotAnEquation", 3),
    ("not-modus-ponens", [
        f"line 1: {LEM} ; axiom 5 {{A={LEM}}}",
        "line 2: T ; axiom 6.2 {c=#Q:((o o) o)}",
        "line 3: T ; rule2 1, 2",
    ], "NotModusPonens", 3),
    ("not-a-tautology", ["line 1: (p:o => q:o) ; axiom 5 {A=(p:o => q:o)}"], "SideConditionViolated", 1),
    ("wrong-statement", ["line 1: F ; axiom 6.2 {c=#Q:((o o) o)}"], "LineMismatch", 1),
    ("unknown-schema", ["line 1: T ; axiom 99"], "UnknownSchema", 1),
    ("ill-typed-parameter", ["line 1: T ; axiom 6.1 {x=T}"], "IllTypedParams", 1),
    ("unknown-macro", ["line 1: T ; macro frob()"], "ScriptError", 1),
]


@pytest.mark.parametrize("name, lines, kind, at", MUTATIONS, ids=[m[0] for m in MUTATIONS])
def test_corrupted_scripts_are_rejected(name, lines, kind, at):
    report = check_text("\n".join(lines))
    assert not report.ok
    assert report.diagnostics[0].kind == kind
    assert report.diagnostics[0].line == at


def test_check_file_reports_read_errors(tmp_path):
    path = tmp_path / "bad.qpf"
    path.write_text(T_TRUE + "\nline 3: T ; axiom 6.2 {c=#Q:((o o) o)}\n")
    report = check_file(str(path))
    assert not report.ok
    assert report.diagnostics[0].kind == "ScriptError"
    assert report.diagnostics[0].line == 2


def test_check_file_missing(tmp_path):
    report = check_file(str(tmp_path / "nope.qpf"))
    assert not report.ok
    assert report.diagnostics[0].kind == "ScriptError"


def test_shipped_proofs_check():
    reports = check_shipped(load_stdlib(recheck=False))
    assert len(reports) == 4
    for report in reports:
        assert report.ok, report.summary()


def test_excluded_middle_script():
    report = check_file(f"{proofs_dir()}/lem.qpf", load_stdlib(recheck=False))
    assert report.ok
    assert report.lines == 6
    assert not report.evaluation_free
