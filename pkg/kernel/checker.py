# kernel/checker.py
"""Proof checking: primitive proofs and proof scripts."""
from __future__ import annotations

import logging
import os
from typing import Optional, Sequence

from kernel.builder import ProofBuilder
from kernel.macros import run_macro
from kernel.proof import Justification, LineDiagnostic, Proof, Report, Theory, derive_line
from kernel.scripts import ScriptLine, load_script, parse_params, split_top
from shared.errors import BadReference, LineMismatch, QuqeError, RecursionDepthExceeded
from syntax.grammar import parse_wff
from syntax.printer import print_wff
from syntax.wff import is_evaluation_free

log = logging.getLogger(__name__)


# ==========================
# Primitive proofs
# ==========================
def check_proof(proof: Proof, name: str = "") -> Report:
    """Re-derive every line. Never raises; failures become diagnostics."""
    valid: list[bool] = []
    diags: list[LineDiagnostic] = []
    for n, line in enumerate(proof.lines, start=1):
        try:
            got = derive_line(line.just, proof.lines, proof.theory, valid, n)
            if got != line.wff:
                raise LineMismatch(f"{line.just.describe()} yields a different wff")
            valid.append(True)
        except QuqeError as e:
            valid.append(False)
            diags.append(LineDiagnostic(line=line.origin or n, kind=e.kind, message=str(e)))
            log.debug("line %d rejected: %s: %s", n, e.kind, e)
        except RecursionError:
            valid.append(False)
            diags.append(LineDiagnostic(line=line.origin or n, kind=RecursionDepthExceeded.__name__,
                                        message="wff nesting too deep"))
    if not proof.lines:
        diags.append(LineDiagnostic(line=0, kind="EmptyProof", message="a proof needs at least one line"))
    conclusion = print_wff(proof.conclusion, sig=proof.theory.sig) if proof.lines else None
    return Report(
        name=name,
        ok=not diags,
        evaluation_free=all(is_evaluation_free(line.wff) for line in proof.lines),
        lines=proof.source_lines or len(proof.lines),
        steps=len(proof.lines),
        conclusion=conclusion,
        diagnostics=diags,
    )


# ==========================
# Scripts
# ==========================
def _elaborate(b: ProofBuilder, sl: ScriptLine, where: dict[int, int]) -> int:
    goal = parse_wff(sl.wff, b.sig)

    def ref(n: int) -> int:
        if n not in where:
            raise BadReference(f"line {n} is not an earlier checked line")
        return where[n]

    if sl.kind == "HYP":
        return b.add(Justification.hyp(int(sl.fields["k"])), expect=goal)
    if sl.kind == "AXIOM":
        sid = sl.fields["id"]
        params = parse_params(sid, sl.fields.get("params"), b.sig)
        return b.add(Justification.axiom(sid, params), expect=goal)
    if sl.kind == "RULE1":
        i, j = sl.refs()
        return b.add(Justification.rule1(ref(i), ref(j), sl.path()), expect=goal)
    if sl.kind == "RULE2":
        i, j = sl.refs()
        return b.add(Justification.rule2(ref(i), ref(j)), expect=goal)
    return run_macro(b, sl.fields["name"], split_top(sl.fields.get("args", "")), goal, ref)


def check_script(script: Sequence[ScriptLine], theory: Optional[Theory] = None, name: str = "") -> Report:
    """Elaborate a script line by line, then re-check the primitive proof it produced."""
    b = ProofBuilder(theory)
    where: dict[int, int] = {}
    diags: list[LineDiagnostic] = []
    last: Optional[int] = None
    for sl in script:
        b.origin = sl.n
        try:
            last = where[sl.n] = _elaborate(b, sl, where)
        except QuqeError as e:
            diags.append(LineDiagnostic(line=sl.n, kind=e.kind, message=str(e)))
            log.debug("%s line %d: %s: %s", name or "script", sl.n, e.kind, e)
        except RecursionError:
            diags.append(LineDiagnostic(line=sl.n, kind=RecursionDepthExceeded.__name__,
                                        message="wff nesting too deep"))
    if last is not None and last != len(b.lines) and not diags:
        b.origin = script[-1].n
        b.tautcons(b.wff(last), last)
    report = check_proof(b.proof(source_lines=len(script)), name)
    if not script:
        return report
    diags.extend(report.diagnostics)
    return report.model_copy(update={"ok": not diags, "diagnostics": diags})


def check_file(path: str, theory: Optional[Theory] = None) -> Report:
    name = os.path.basename(path)
    try:
        script = load_script(path)
    except QuqeError as e:
        return Report(name=name, ok=False, evaluation_free=False, lines=0, steps=0,
                      diagnostics=[LineDiagnostic(line=getattr(e, "line", None) or 0, kind=e.kind, message=str(e))])
    return check_script(script, theory, name)
