# engine/taut.py
"""Propositional tautology check over the connective skeleton of a formula."""
from __future__ import annotations

import itertools
import logging

from shared.errors import NotFormula, TypeCheckError
from syntax import sugar
from syntax.types import O
from syntax.wff import Wff, type_of

log = logging.getLogger(__name__)

MAX_ATOMS = 20


def skeleton(w: Wff, atoms: dict[Wff, int]) -> tuple:
    """Connective tree with maximal non-connective subformulas as numbered atoms."""
    if sugar.is_true(w):
        return ("T",)
    if sugar.is_false(w):
        return ("F",)
    n = sugar.match_not(w)
    if n is not None:
        return ("not", skeleton(n, atoms))
    for tag, match in (("and", sugar.match_and), ("or", sugar.match_or), ("imp", sugar.match_imp),
                       ("iff", sugar.match_iff)):
        m = match(w)
        if m is not None:
            return (tag, skeleton(m[0], atoms), skeleton(m[1], atoms))
    if w not in atoms:
        atoms[w] = len(atoms)
    return ("atom", atoms[w])


def _value(t: tuple, env: tuple[bool, ...]) -> bool:
    tag = t[0]
    if tag == "T":
        return True
    if tag == "F":
        return False
    if tag == "atom":
        return env[t[1]]
    if tag == "not":
        return not _value(t[1], env)
    a, b = _value(t[1], env), _value(t[2], env)
    if tag == "and":
        return a and b
    if tag == "or":
        return a or b
    if tag == "imp":
        return (not a) or b
    return a == b


def taut_check(w: Wff) -> bool:
    try:
        ty = type_of(w)
    except TypeCheckError as e:
        raise NotFormula(f"not a formula: {e}") from e
    if ty != O:
        raise NotFormula(f"expected a formula, got type {ty}")
    atoms: dict[Wff, int] = {}
    tree = skeleton(w, atoms)
    if len(atoms) > MAX_ATOMS:
        log.warning("tautology check refused: %d atoms, limit %d", len(atoms), MAX_ATOMS)
        return False
    return all(_value(tree, env) for env in itertools.product((False, True), repeat=len(atoms)))
