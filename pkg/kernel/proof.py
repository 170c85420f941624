# kernel/proof.py
"""Proofs, theories and the per-line derivation shared by the checker and the builder."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Mapping, Optional, Sequence

from pydantic import BaseModel

from algebra.ops import syn_closed_p
from kernel.axioms import Param, instantiate_axiom
from kernel.rules import AUTO, apply_rule1, apply_rule2
from shared.errors import BadReference, HypothesisNotAdmissible, KernelError, TypeCheckError, UsageError
from shared.tristate import TriState
from syntax.paths import Path, format_path
from syntax.printer import print_type, print_wff
from syntax.signature import Signature
from syntax.types import O, Base, Fun, Pair, TVar
from syntax.wff import Quote, Wff, free_vars_ef, is_evaluation_free, type_of

log = logging.getLogger(__name__)

MODES = ("ef", "general")
TYPES = (Base, Fun, Pair, TVar)


# ==========================
# Theories
# ==========================
def admit(h: Wff, sig: Signature, mode: str) -> None:
    """Raise HypothesisNotAdmissible unless ``h`` may be a hypothesis in ``mode``."""
    try:
        ty = type_of(h, sig)
    except TypeCheckError as e:
        raise HypothesisNotAdmissible(f"hypothesis does not type-check: {e}") from e
    if ty != O:
        raise HypothesisNotAdmissible(f"hypothesis has type {print_type(ty)}, not o")
    if mode == "ef":
        if not is_evaluation_free(h):
            raise HypothesisNotAdmissible("hypothesis contains an evaluation")
        if free_vars_ef(h):
            names = ", ".join(sorted(v.name for v in free_vars_ef(h)))
            raise HypothesisNotAdmissible(f"hypothesis has free variables: {names}")
    elif syn_closed_p(Quote(h)) is not TriState.TRUE:
        raise HypothesisNotAdmissible("hypothesis is not semantically closed")


@dataclass(frozen=True, eq=False)
class Theory:
    sig: Signature = field(default_factory=Signature)
    hypotheses: tuple[Wff, ...] = ()
    mode: str = "ef"

    def __post_init__(self):
        if self.mode not in MODES:
            raise UsageError(f"unknown mode {self.mode!r}; expected one of {', '.join(MODES)}")
        for h in self.hypotheses:
            admit(h, self.sig, self.mode)

    def with_hypotheses(self, *hs: Wff) -> "Theory":
        return replace(self, hypotheses=self.hypotheses + hs)


# ==========================
# Lines
# ==========================
@dataclass(frozen=True)
class Justification:
    kind: str                                   # hyp | axiom | rule1 | rule2
    refs: tuple[int, ...] = ()                  # rule1: (eq, target); rule2: (impl, ante)
    index: Optional[int] = None                 # hypothesis number, from 1
    schema: Optional[str] = None
    params: tuple[tuple[str, Param], ...] = ()
    path: Path | str | None = None

    @classmethod
    def hyp(cls, k: int) -> "Justification":
        return cls("hyp", index=k)

    @classmethod
    def axiom(cls, sid: str, params: Mapping[str, Param] | None = None, **kw: Param) -> "Justification":
        merged = dict(params or {}, **kw)
        return cls("axiom", schema=sid, params=tuple(sorted(merged.items())))

    @classmethod
    def rule1(cls, eq: int, target: int, path: Path | str = AUTO) -> "Justification":
        return cls("rule1", refs=(eq, target), path=path)

    @classmethod
    def rule2(cls, impl: int, ante: int) -> "Justification":
        return cls("rule2", refs=(impl, ante))

    def describe(self) -> str:
        if self.kind == "hyp":
            return f"hyp {self.index}"
        if self.kind == "axiom":
            if not self.params:
                return f"axiom {self.schema}"
            parts = [f"{name}={print_type(v) if isinstance(v, TYPES) else print_wff(v)}" for name, v in self.params]
            return f"axiom {self.schema} {{{', '.join(parts)}}}"
        if self.kind == "rule1":
            path = self.path if self.path == AUTO else format_path(self.path)
            return f"rule1 {self.refs[0]}, {self.refs[1]} at {path}"
        return f"rule2 {self.refs[0]}, {self.refs[1]}"


@dataclass(frozen=True)
class ProofLine:
    wff: Wff
    just: Justification
    origin: Optional[int] = None    # script line this line was elaborated from


@dataclass(frozen=True, eq=False)
class Proof:
    theory: Theory
    lines: tuple[ProofLine, ...]
    source_lines: Optional[int] = None

    @property
    def conclusion(self) -> Optional[Wff]:
        return self.lines[-1].wff if self.lines else None


# ==========================
# Derivation of one line
# ==========================
def _ref(n: int, upto: int, valid: Optional[Sequence[bool]]) -> int:
    if not 1 <= n < upto:
        raise BadReference(f"line {n} is not an earlier line")
    if valid is not None and not valid[n - 1]:
        raise BadReference(f"line {n} did not check")
    return n - 1


def derive_line(just: Justification, lines: Sequence[ProofLine], theory: Theory,
                valid: Optional[Sequence[bool]] = None, at: Optional[int] = None) -> Wff:
    """The wff ``just`` yields as line ``at`` (default: after the last line)."""
    at = at or len(lines) + 1
    if just.kind == "hyp":
        k = just.index or 0
        if not 1 <= k <= len(theory.hypotheses):
            raise BadReference(f"hypothesis {k} does not exist")
        return theory.hypotheses[k - 1]
    if just.kind == "axiom":
        return instantiate_axiom(just.schema or "", dict(just.params), theory.sig)
    if just.kind in ("rule1", "rule2"):
        if len(just.refs) != 2:
            raise BadReference(f"{just.kind} takes two line references")
        i, j = (_ref(n, at, valid) for n in just.refs)
        if just.kind == "rule1":
            return apply_rule1(lines[i].wff, lines[j].wff, just.path if just.path is not None else AUTO)
        return apply_rule2(lines[i].wff, lines[j].wff)
    raise KernelError(f"unknown justification {just.kind!r}")


# ==========================
# Reports
# ==========================
class LineDiagnostic(BaseModel):
    line: int
    kind: str
    message: str


class Report(BaseModel):
    name: str = ""
    ok: bool
    evaluation_free: bool
    lines: int
    steps: int
    conclusion: Optional[str] = None
    diagnostics: list[LineDiagnostic] = []

    def summary(self) -> str:
        if self.ok:
            return f"ok ({self.lines} lines)"
        if not self.diagnostics:
            return "failed"
        d = self.diagnostics[0]
        return f"failed at line {d.line}: {d.kind}: {d.message}"
