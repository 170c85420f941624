# kernel/scripts.py
"""Readers for proof scripts (.qpf) and theory files (.quqe)."""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from kernel.axioms import Param, get_schema
from kernel.proof import Theory
from kernel.rules import AUTO
from shared.errors import QuqeError, RedefinedName, ScriptError
from shared.util import data_path, load_yaml
from syntax.grammar import parse_type, parse_wff
from syntax.paths import Path, parse_path
from syntax.signature import Signature
from syntax.types import O
from syntax.wff import free_vars, type_of

log = logging.getLogger(__name__)

SCRIPTS_FILE = data_path(__file__, "scripts.yaml")


# ==========================
# Script model
# ==========================
@dataclass
class ScriptLine:
    n: int                  # the number stated after "line"
    at: int                 # physical line in the file
    wff: str
    kind: str               # HYP | AXIOM | RULE1 | RULE2 | MACRO
    fields: Dict[str, str] = field(default_factory=dict)

    def refs(self) -> tuple[int, int]:
        return int(self.fields["i"]), int(self.fields["j"])

    def path(self) -> Path | str:
        p = self.fields["path"]
        return AUTO if p == AUTO else parse_path(p)


def split_top(text: str) -> List[str]:
    """Split at commas outside (), [], {} and <> pairs; ``=>`` and ``<=>`` are not brackets."""
    out, depth, cur = [], 0, []
    for i, ch in enumerate(text):
        nxt = text[i + 1] if i + 1 < len(text) else ""
        prev = text[i - 1] if i else ""
        if ch in "([{" or (ch == "<" and nxt != "="):
            depth += 1
        elif ch in ")]}" or (ch == ">" and prev != "="):
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
            continue
        cur.append(ch)
    tail = "".join(cur).strip()
    if tail or out:
        out.append(tail)
    return [p for p in out if p]


# ==========================
# Reader
# ==========================
class ScriptReader:
    """Compiles the line shapes in ``scripts.yaml`` and reads files with them."""

    def __init__(self, rules_file: str = SCRIPTS_FILE):
        self.cfg = load_yaml(rules_file)
        self.comment: str = self.cfg.get("comment") or "--"
        self.patterns: Dict[str, Dict[str, re.Pattern]] = {
            group: {k.upper(): re.compile(v) for k, v in (self.cfg.get(group) or {}).items()}
            for group in ("proof", "justification", "theory")
        }

    # ------------- helpers -------------
    def _lines(self, text: str):
        for at, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith(self.comment):
                continue
            yield at, line

    def _match(self, group: str, line: str) -> Optional[tuple[str, re.Match]]:
        for kind, pat in self.patterns[group].items():
            m = pat.match(line)
            if m:
                return kind, m
        return None

    # ------------- proofs -------------
    def read_proof(self, text: str, source: str = "<script>") -> List[ScriptLine]:
        out: List[ScriptLine] = []
        for at, line in self._lines(text):
            m = self.patterns["proof"]["LINE"].match(line)
            if not m:
                raise ScriptError("expected 'line <n>: <wff> ; <justification>'", source, at)
            n = int(m.group("n"))
            if n != len(out) + 1:
                raise ScriptError(f"line {n} out of order; expected line {len(out) + 1}", source, at)
            just = self._match("justification", m.group("just"))
            if just is None:
                raise ScriptError(f"unrecognized justification {m.group('just')!r}", source, at)
            kind, jm = just
            fields = {k: v for k, v in jm.groupdict().items() if v is not None}
            out.append(ScriptLine(n, at, m.group("wff"), kind, fields))
        log.debug("read %d proof lines from %s", len(out), source)
        return out

    # ------------- theories -------------
    def read_theory(self, text: str, source: str = "<theory>", base: Optional[Theory] = None) -> Theory:
        sig = base.sig.copy() if base else Signature()
        hyps = list(base.hypotheses) if base else []
        mode = base.mode if base else "ef"
        for at, line in self._lines(text):
            found = self._match("theory", line)
            if found is None:
                raise ScriptError(f"unrecognized theory line {line!r}", source, at)
            kind, m = found
            try:
                if kind == "CONST":
                    sig.declare(m.group("name"), parse_type(m.group("type")))
                elif kind == "DEF":
                    self._define(sig, m.group("name"), m.group("type"), m.group("wff"), source, at)
                elif kind == "HYP":
                    h = parse_wff(m.group("wff"), sig)
                    if type_of(h, sig) != O:
                        raise ScriptError("hypothesis is not a formula", source, at)
                    hyps.append(h)
                else:
                    mode = m.group("mode")
            except (ScriptError, RedefinedName):
                raise
            except QuqeError as e:
                raise ScriptError(f"{e.kind}: {e}", source, at) from e
        log.debug("theory %s: %d constants, %d definitions, %d hypotheses, mode %s",
                  source, len(sig.consts), len(sig.defs), len(hyps), mode)
        return Theory(sig, tuple(hyps), mode)

    @staticmethod
    def _define(sig: Signature, name: str, ty_text: str, wff_text: str, source: str, at: int) -> None:
        ty = parse_type(ty_text)
        body = parse_wff(wff_text, sig)
        got = type_of(body, sig)
        if got != ty:
            raise ScriptError(f"definition of {name} has type {got}, declared {ty}", source, at)
        if free_vars(body):
            raise ScriptError(f"definition of {name} has free variables", source, at)
        sig.define(name, body)


# ==========================
# Argument parsing
# ==========================
def parse_params(sid: str, text: Optional[str], sig: Signature) -> Dict[str, Param]:
    """``name=value, ...`` of an axiom line, each value read by its parameter kind."""
    schema = get_schema(sid)
    out: Dict[str, Param] = {}
    for item in split_top(text or ""):
        name, eq, value = item.partition("=")
        name = name.strip()
        if not eq:
            raise ScriptError(f"parameter {item!r} is not name=value")
        spec = schema.param(name)
        if spec is not None and spec.kind == "type":
            out[name] = parse_type(value.strip())
        else:
            out[name] = parse_wff(value.strip(), sig)
    return out


_reader: Optional[ScriptReader] = None


def reader() -> ScriptReader:
    global _reader
    if _reader is None:
        _reader = ScriptReader()
    return _reader


def load_theory(path: str, base: Optional[Theory] = None) -> Theory:
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise ScriptError(f"cannot read: {e.strerror}", path) from e
    return reader().read_theory(text, path, base)


def load_script(path: str) -> List[ScriptLine]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise ScriptError(f"cannot read: {e.strerror}", path) from e
    return reader().read_proof(text, path)
