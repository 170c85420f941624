# cli/main.py
"""quqe: batch command line over the parser, the engine and the proof kernel.

    python -m cli.main normalize '((\\x:o. x:o) T)'
    python -m cli.main prove proofs/lem.qpf --theory stdlib.quqe

Exit codes: 0 success or true, 1 checked failure or false or undefined,
2 unknown, 3 usage or I/O error.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import Callable, Optional, Sequence

from pydantic import BaseModel

from algebra.ops import PartialResult, cleanse, not_free_in, subst
from engine.normalizer import Outcome, normalize
from engine.taut import taut_check
from kernel.checker import check_file
from kernel.proof import MODES, Report, Theory
from kernel.scripts import load_theory
from shared.config import CFG
from shared.errors import (
    FuelExhausted, QuqeError, RecursionDepthExceeded, ScriptError, UsageError,
)
from shared.tristate import TriState
from stdlib import demo
from syntax.encoding import encode
from syntax.grammar import parse_type, parse_wff
from syntax.printer import print_type, print_wff
from syntax.types import EPS
from syntax.wff import Eval, Quote, Wff, type_of

log = logging.getLogger("quqe")

OK, FAILED, UNKNOWN, USAGE = 0, 1, 2, 3

TRI_EXIT = {TriState.TRUE: OK, TriState.FALSE: FAILED, TriState.UNKNOWN: UNKNOWN}


class Record(BaseModel):
    """One ``--json`` line."""
    command: str
    verdict: str
    wff: Optional[str] = None
    type: Optional[str] = None
    steps: Optional[int] = None
    trace: Optional[list[str]] = None
    message: Optional[str] = None


class Ctx:
    """Per-call settings; CFG stays untouched."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.json: bool = args.json
        self.sugar: bool = not args.expand_sugar
        self.fuel: int = args.fuel or CFG.fuel
        self._theory: Optional[Theory] = None

    @property
    def theory(self) -> Theory:
        if self._theory is None:
            if self.args.theory:
                t = load_theory(self.args.theory)
                self._theory = replace(t, mode=self.args.mode) if self.args.mode else t
            else:
                self._theory = Theory(mode=self.args.mode or CFG.mode)
        return self._theory

    def wff(self, text: str) -> Wff:
        return parse_wff(text, self.theory.sig)

    def show(self, w: Wff) -> str:
        return print_wff(w, sugar=self.sugar, display=True, sig=self.theory.sig)

    def emit(self, rec: Record, text: Optional[str] = None) -> None:
        print(rec.model_dump_json(exclude_none=True) if self.json else (text or rec.verdict))


# ------------- helpers -------------
def _partial(ctx: Ctx, command: str, r: PartialResult) -> int:
    if r.is_defined():
        shown = ctx.show(Quote(r.wff))
        ctx.emit(Record(command=command, verdict="defined", wff=shown), shown)
        return OK
    ctx.emit(Record(command=command, verdict=str(r)))
    return FAILED if r.is_undefined() else UNKNOWN


def _tri(ctx: Ctx, command: str, t: TriState) -> int:
    ctx.emit(Record(command=command, verdict=t.name.lower()))
    return TRI_EXIT[t]


# ==========================
# Commands
# ==========================
def cmd_check_wff(ctx: Ctx) -> int:
    w = parse_wff(ctx.args.wff, ctx.theory.sig, check=False)
    shown = ctx.show(w)
    ctx.emit(Record(command="check-wff", verdict="ok", wff=shown), shown)
    return OK


def cmd_typecheck(ctx: Ctx) -> int:
    w = ctx.wff(ctx.args.wff)
    ty = print_type(type_of(w, ctx.theory.sig))
    ctx.emit(Record(command="typecheck", verdict="ok", wff=ctx.show(w), type=ty), ty)
    return OK


def cmd_normalize(ctx: Ctx) -> int:
    nf = normalize(ctx.wff(ctx.args.wff), fuel=ctx.fuel, trace=ctx.args.trace)
    shown = ctx.show(nf.wff)
    rec = Record(command="normalize", verdict=nf.status.value, wff=shown, type=print_type(nf.ty),
                 steps=nf.steps, trace=list(nf.trace) if ctx.args.trace else None)
    text = shown if not ctx.args.trace else "\n".join([*nf.trace, shown])
    ctx.emit(rec, text)
    return FAILED if nf.status is Outcome.BOTTOM else OK


def cmd_sub(ctx: Ctx) -> int:
    a, x = ctx.wff(ctx.args.a), ctx.wff(ctx.args.x)
    return _partial(ctx, "sub", subst(Quote(a), Quote(x), ctx.wff(ctx.args.b)))


def cmd_cleanse(ctx: Ctx) -> int:
    return _partial(ctx, "cleanse", cleanse(ctx.wff(ctx.args.c)))


def cmd_not_free_in(ctx: Ctx) -> int:
    v = ctx.wff(ctx.args.v)
    return _tri(ctx, "not-free-in", not_free_in(Quote(v), ctx.wff(ctx.args.c)))


def cmd_quote(ctx: Ctx) -> int:
    e = encode(ctx.wff(ctx.args.wff))
    shown = print_wff(e, sugar=ctx.sugar, sig=ctx.theory.sig)
    ctx.emit(Record(command="quote", verdict="ok", wff=shown), shown)
    return OK


def cmd_eval(ctx: Ctx) -> int:
    c = ctx.wff(ctx.args.c)
    if type_of(c, ctx.theory.sig) != EPS:
        raise UsageError("eval takes a wff of type eps")
    nf = normalize(Eval(c, parse_type(ctx.args.type)), fuel=ctx.fuel)
    shown = ctx.show(nf.wff)
    ctx.emit(Record(command="eval", verdict=nf.status.value, wff=shown, steps=nf.steps), shown)
    return FAILED if nf.status is Outcome.BOTTOM else OK


def cmd_taut(ctx: Ctx) -> int:
    return _tri(ctx, "taut", TriState.from_bool(taut_check(ctx.wff(ctx.args.wff))))


def cmd_prove(ctx: Ctx) -> int:
    missing = [p for p in ctx.args.files if not os.path.isfile(p)]
    if missing:
        raise UsageError(f"no such file: {', '.join(missing)}")
    theory = ctx.theory
    with ThreadPoolExecutor(max_workers=max(1, ctx.args.jobs)) as pool:
        reports: list[Report] = list(pool.map(lambda p: check_file(p, theory), ctx.args.files))
    for path, report in zip(ctx.args.files, reports):
        if ctx.json:
            print(report.model_dump_json())
        else:
            prefix = f"{path}: " if len(reports) > 1 else ""
            print(prefix + report.summary())
    return OK if all(r.ok for r in reports) else FAILED


def cmd_demo(ctx: Ctx) -> int:
    items = demo.run(ctx.theory if ctx.args.theory or ctx.args.mode else None)
    for item in items:
        print(item.model_dump_json() if ctx.json else f"{'ok  ' if item.ok else 'FAIL'} {item.name}: {item.detail}")
    return OK if all(i.ok for i in items) else FAILED


COMMANDS: dict[str, Callable[[Ctx], int]] = {
    "check-wff": cmd_check_wff,
    "typecheck": cmd_typecheck,
    "normalize": cmd_normalize,
    "sub": cmd_sub,
    "cleanse": cmd_cleanse,
    "not-free-in": cmd_not_free_in,
    "quote": cmd_quote,
    "eval": cmd_eval,
    "taut": cmd_taut,
    "prove": cmd_prove,
    "demo": cmd_demo,
}


# ==========================
# Entry point
# ==========================
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--theory", help="theory file (.quqe) to load")
    common.add_argument("--json", action="store_true", help="print machine-readable records")
    common.add_argument("--fuel", type=int, help=f"normalizer step limit (default {CFG.fuel})")
    common.add_argument("--mode", choices=MODES, help=f"proof mode (default {CFG.mode})")
    common.add_argument("--expand-sugar", action="store_true", help="print primitive forms only")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")

    p = argparse.ArgumentParser(prog="quqe", description="Type theory with quotation and evaluation.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("check-wff", "typecheck", "quote", "taut"):
        sub.add_parser(name, parents=[common]).add_argument("wff")
    n = sub.add_parser("normalize", parents=[common])
    n.add_argument("wff")
    n.add_argument("--trace", action="store_true", help="list the rules that fired")
    s = sub.add_parser("sub", parents=[common], help="substitute A for x in the wff a construction represents")
    s.add_argument("--a", required=True, help="wff substituted")
    s.add_argument("--x", required=True, help="variable replaced")
    s.add_argument("--b", "--c", dest="b", required=True, help="construction operated on")
    sub.add_parser("cleanse", parents=[common]).add_argument("--c", required=True)
    f = sub.add_parser("not-free-in", parents=[common])
    f.add_argument("--v", required=True, help="variable")
    f.add_argument("--c", required=True, help="construction")
    e = sub.add_parser("eval", parents=[common])
    e.add_argument("c", help="construction")
    e.add_argument("--type", default="o")
    pr = sub.add_parser("prove", parents=[common])
    pr.add_argument("files", nargs="+")
    pr.add_argument("--jobs", type=int, default=1, help="files checked concurrently")
    sub.add_parser("demo", parents=[common])
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return OK if e.code == 0 else USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else CFG.log_level.upper(),
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    log.debug("command %s", args.command)
    ctx = Ctx(args)
    try:
        return COMMANDS[args.command](ctx)
    except (FuelExhausted, RecursionDepthExceeded) as e:
        ctx.emit(Record(command=args.command, verdict="unknown", message=f"{e.kind}: {e}"))
        return UNKNOWN
    except (ScriptError, UsageError) as e:
        print(f"{e.kind}: {e}", file=sys.stderr)
        return USAGE
    except QuqeError as e:
        ctx.emit(Record(command=args.command, verdict="invalid", message=f"{e.kind}: {e}"),
                 f"invalid: {e.kind}: {e}")
        return FAILED
    except OSError as e:
        print(f"{e.strerror}: {e.filename}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
