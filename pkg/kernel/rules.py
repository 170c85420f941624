# kernel/rules.py
"""The two rules of inference."""
from __future__ import annotations

from typing import Optional

from shared.errors import IllegalPath, MismatchAtPath, NotAnEquation, NotModusPonens
from syntax import sugar as S
from syntax.paths import Path, find_occurrences, format_path, illegal_reason, replace_checked, subterm_at
from syntax.wff import Wff

AUTO = "?"


def equation_sides(eq: Wff) -> tuple[Wff, Wff]:
    """Sides of ``A ~~ B`` or ``A = B``; quasi-equality is tried first."""
    m = S.match_qeq(eq)
    if m is not None:
        return m
    e = S.match_eq(eq)
    if e is not None:
        return e[0], e[1]
    raise NotAnEquation("rule 1 needs an equation or a quasi-equation")


def _auto_path(target: Wff, sides: tuple[Wff, Wff]) -> Path:
    for side in sides:
        for p in find_occurrences(side, target):
            if illegal_reason(target, p) is None:
                return p
    raise MismatchAtPath("neither side of the equation occurs in the target")


def apply_rule1(eq: Wff, target: Wff, path: Path | str) -> Wff:
    """Replace the occurrence at ``path`` by the other side of ``eq``.

    The occurrence decides the direction: an occurrence of A becomes B and
    an occurrence of B becomes A. ``?`` picks the leftmost legal occurrence
    of A, else of B.
    """
    a, b = equation_sides(eq)
    if path == AUTO:
        path = _auto_path(target, (a, b))
    reason = illegal_reason(target, path)
    if reason:
        raise IllegalPath(f"{format_path(path)}: {reason}")
    here = subterm_at(target, path)
    if here == a:
        return replace_checked(target, path, a, b)
    if here == b:
        return replace_checked(target, path, b, a)
    raise MismatchAtPath(f"subterm at {format_path(path)} matches neither side of the equation")


def apply_rule2(impl: Wff, ante: Wff) -> Wff:
    m: Optional[tuple[Wff, Wff]] = S.match_imp(impl)
    if m is None:
        raise NotModusPonens("major premise is not an implication")
    if m[0] != ante:
        raise NotModusPonens("antecedent differs from the minor premise")
    return m[1]
