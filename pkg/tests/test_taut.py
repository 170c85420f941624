import logging

import pytest

from engine import taut
from engine.taut import skeleton, taut_check
from shared.errors import NotFormula
from syntax.grammar import parse_wff


@pytest.mark.parametrize("text", [
    "T",
    "(p:o | (~ p:o))",
    "((p:o & q:o) => p:o)",
    "((p:o => q:o) <=> ((~ q:o) => (~ p:o)))",
    "((eval x:eps : o) | (~ (eval x:eps : o)))",
    "(((quote p:o) == (quote q:o)) => ((quote p:o) == (quote q:o)))",
])
def test_tautologies(text):
    assert taut_check(parse_wff(text))


@pytest.mark.parametrize("text", [
    "F",
    "p:o",
    "(p:o => q:o)",
    "((p:o | q:o) => p:o)",
])
def test_non_tautologies(text):
    assert not taut_check(parse_wff(text))


def test_equations_are_atoms():
    atoms: dict = {}
    skeleton(parse_wff("((a:i == b:i) & (~ (a:i == b:i)))"), atoms)
    assert len(atoms) == 1


def test_not_a_formula():
    with pytest.raises(NotFormula):
        taut_check(parse_wff("a:i"))


def test_too_many_atoms_is_refused(monkeypatch, caplog):
    caplog.set_level(logging.WARNING, logger="engine.taut")
    monkeypatch.setattr(taut, "MAX_ATOMS", 1)
    assert taut_check(parse_wff("(p:o | (~ p:o))"))
    assert not taut_check(parse_wff("((p:o | q:o) | (~ p:o))"))
    assert "refused" in caplog.text
