# syntax/paths.py
"""Occurrence paths: sequences of child selectors from the root of a wff."""
from __future__ import annotations

from typing import Iterator

from shared.errors import IllegalPath, MismatchAtPath
from syntax.wff import Abs, App, Cond, Eval, Quote, Var, Wff

Path = tuple[str, ...]

SELECTORS = {
    App: ("fn", "arg"),
    Abs: ("binder", "body"),
    Cond: ("test", "then", "els"),
    Quote: ("body",),
    Eval: ("eval-arg", "eval-type"),
}


def parse_path(text: str) -> Path:
    text = text.strip()
    if text in ("", "/", "."):
        return ()
    return tuple(s for s in text.strip("/").split("/") if s)


def format_path(path: Path) -> str:
    return "/" + "/".join(path) if path else "/"


def _step(w: Wff, sel: str) -> Wff:
    allowed = SELECTORS.get(type(w), ())
    if sel not in allowed:
        raise IllegalPath(f"selector {sel!r} does not apply to {type(w).__name__}")
    if sel == "fn":
        return w.fn
    if sel == "arg":
        return w.arg
    if sel == "binder":
        return w.binder
    if sel == "body":
        return w.body
    if sel in ("test", "then", "els"):
        return getattr(w, sel)
    if sel == "eval-arg":
        return w.arg
    return Var("_ty", w.ty)     # eval-type: the designating variable


def subterm_at(w: Wff, path: Path) -> Wff:
    for sel in path:
        w = _step(w, sel)
    return w


def illegal_reason(w: Wff, path: Path) -> str | None:
    """Why a replacement at ``path`` is not allowed, or None when it is."""
    for sel in path:
        if isinstance(w, Quote):
            return "occurrence is within a quotation"
        if sel == "binder":
            return "occurrence is the bound variable of an abstraction"
        if sel == "eval-type":
            return "occurrence is the type argument of an evaluation"
        w = _step(w, sel)
    return None


def is_rule1_legal(w: Wff, path: Path) -> bool:
    return illegal_reason(w, path) is None


def replace_at(w: Wff, path: Path, new: Wff) -> Wff:
    if not path:
        return new
    sel, rest = path[0], path[1:]
    if isinstance(w, App) and sel == "fn":
        return App(replace_at(w.fn, rest, new), w.arg)
    if isinstance(w, App) and sel == "arg":
        return App(w.fn, replace_at(w.arg, rest, new))
    if isinstance(w, Abs) and sel == "body":
        return Abs(w.binder, replace_at(w.body, rest, new))
    if isinstance(w, Cond) and sel in ("test", "then", "els"):
        parts = {"test": w.test, "then": w.then, "els": w.els}
        parts[sel] = replace_at(parts[sel], rest, new)
        return Cond(parts["test"], parts["then"], parts["els"])
    if isinstance(w, Quote) and sel == "body":
        return Quote(replace_at(w.body, rest, new))
    if isinstance(w, Eval) and sel == "eval-arg":
        return Eval(replace_at(w.arg, rest, new), w.ty)
    raise IllegalPath(f"cannot replace through {sel!r} of {type(w).__name__}")


def replace_checked(w: Wff, path: Path, expected: Wff, new: Wff) -> Wff:
    """Replace the occurrence at ``path``, which must be exactly ``expected``."""
    reason = illegal_reason(w, path)
    if reason:
        raise IllegalPath(f"{format_path(path)}: {reason}")
    if subterm_at(w, path) != expected:
        raise MismatchAtPath(f"subterm at {format_path(path)} differs from the equation side")
    return replace_at(w, path, new)


# ------------- searching -------------
def legal_paths(w: Wff, prefix: Path = ()) -> Iterator[Path]:
    """Rule-1 legal paths in preorder, leftmost first."""
    yield prefix
    if isinstance(w, Quote):
        return
    for sel in SELECTORS.get(type(w), ()):
        if sel in ("binder", "eval-type"):
            continue
        yield from legal_paths(_step(w, sel), prefix + (sel,))


def find_occurrences(target: Wff, w: Wff) -> list[Path]:
    out: list[Path] = []

    def go(node: Wff, prefix: Path) -> None:
        if node == target:
            out.append(prefix)
            return
        if isinstance(node, Quote):
            return
        for sel in SELECTORS.get(type(node), ()):
            if sel in ("binder", "eval-type"):
                continue
            go(_step(node, sel), prefix + (sel,))

    go(w, ())
    return out
