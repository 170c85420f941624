import json
import os

import pytest

from cli.main import FAILED, OK, UNKNOWN, USAGE, run
from shared.config import CFG
from stdlib.theories import proofs_dir


def out(capsys) -> str:
    return capsys.readouterr().out.strip()


@pytest.mark.parametrize("argv, code, printed", [
    (["normalize", "((\\x:o. x:o) T)"], OK, "T"),
    (["normalize", "(eval (quote x:o) : i)"], FAILED, "bot:i"),
    (["normalize", "--expand-sugar", "T"], OK, "(#Q:((o ((o o) o)) ((o o) o)) #Q:((o o) o) #Q:((o o) o))"),
    (["typecheck", "(\\x:o. x:o)"], OK, "(o o)"),
    (["typecheck", "(quote x:i)"], OK, "eps"),
    (["taut", "(p:o | (~ p:o))"], OK, "true"),
    (["taut", "(p:o => q:o)"], FAILED, "false"),
    (["eval", "(quote T)"], OK, "T"),
    (["sub", "--a", "(quote T)", "--x", "x:eps", "--b", "(quote (eval x:eps : o))"], OK, "(quote T)"),
    (["sub", "--a", "y:o", "--x", "x:o", "--c", "(quote (\\y:o. x:o))"], FAILED, "undefined"),
    (["cleanse", "--c", "(quote (eval x:eps : o))"], FAILED, "undefined"),
    (["not-free-in", "--v", "x:i", "--c", "(quote (\\x:i. x:i))"], OK, "true"),
    (["not-free-in", "--v", "x:i", "--c", "(quote x:i)"], FAILED, "false"),
    (["check-wff", "(p:o & q:o)"], OK, "(p:o & q:o)"),
])
def test_commands(capsys, argv, code, printed):
    assert run(argv) == code
    assert out(capsys) == printed


def test_invalid_input(capsys):
    assert run(["typecheck", "(x:o y:o)"]) == FAILED
    assert out(capsys).startswith("invalid: TypeMismatch")
    assert run(["typecheck", "(("]) == FAILED
    assert out(capsys).startswith("invalid:")


def test_usage_errors(capsys):
    assert run([]) == USAGE
    assert run(["normalize"]) == USAGE
    assert run(["prove", "no/such/file.qpf"]) == USAGE
    assert run(["eval", "T"]) == USAGE
    assert run(["taut", "T", "--mode", "sometimes"]) == USAGE


def test_fuel_runs_out(capsys):
    assert run(["normalize", "--fuel", "1", "((\\x:o. x:o) ((\\y:o. y:o) T))"]) == UNKNOWN
    assert out(capsys) == "unknown"


def test_trace(capsys):
    assert run(["normalize", "--trace", "((\\x:o. x:o) T)"]) == OK
    assert out(capsys).splitlines() == ["beta.identity", "T"]


def test_json_records(capsys):
    assert run(["normalize", "--json", "((\\x:o. x:o) T)"]) == OK
    rec = json.loads(out(capsys))
    assert rec["command"] == "normalize"
    assert rec["verdict"] == "value"
    assert rec["wff"] == "T"
    assert rec["type"] == "o"
    assert "trace" not in rec


def test_prove(capsys):
    lem = os.path.join(proofs_dir(), "lem.qpf")
    assert run(["prove", lem, "--theory", CFG.stdlib_path]) == OK
    assert out(capsys) == "ok (6 lines)"


def test_prove_many(capsys):
    files = [os.path.join(proofs_dir(), n) for n in ("implies_eq.qpf", "t_true.qpf")]
    assert run(["prove", *files, "--theory", CFG.stdlib_path, "--jobs", "2"]) == OK
    lines = out(capsys).splitlines()
    assert lines == [f"{files[0]}: ok (7 lines)", f"{files[1]}: ok (1 lines)"]


def test_prove_reports_failures(capsys, tmp_path):
    bad = tmp_path / "bad.qpf"
    bad.write_text("line 1: F ; axiom 6.2 {c=#Q:((o o) o)}\n")
    assert run(["prove", str(bad), "--json"]) == FAILED
    rec = json.loads(out(capsys))
    assert not rec["ok"]
    assert rec["diagnostics"][0]["kind"] == "LineMismatch"


def test_demo(capsys):
    assert run(["demo"]) == OK
    assert "FAIL" not in out(capsys)


def test_demo_extends_the_given_theory(capsys, tmp_path):
    base = tmp_path / "base.quqe"
    base.write_text("const k : i\n")
    assert run(["demo", "--theory", str(base), "--json"]) == OK
    assert all(json.loads(line)["ok"] for line in out(capsys).splitlines())


def test_demo_reports_a_clashing_theory(capsys, tmp_path):
    base = tmp_path / "base.quqe"
    base.write_text("const implies : o\n")
    assert run(["demo", "--theory", str(base)]) == FAILED
    assert out(capsys).startswith("invalid: RedefinedName")
