# syntax/grammar.py
"""Text grammar for types and wffs (lark, LALR) and the tree builder."""
from __future__ import annotations

import logging

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from shared.errors import QuqeError, UnknownConstant, WffSyntaxError
from syntax import sugar as S
from syntax.signature import WFF_NAME, Signature
from syntax.types import EPS, O, Base, Fun, Pair, TVar, TypeExpr
from syntax.wff import Abs, Cond, Const, Eval, Hole, Quote, Var, Wff, app, type_of

log = logging.getLogger(__name__)

GRAMMAR = r"""
    type: BASE                                  -> t_base
        | "(" type type ")"                     -> t_fun
        | "<" type "," type ">"                 -> t_pair

    type_pattern: BASE                          -> t_base
        | TVAR                                  -> t_var
        | "(" type_pattern type_pattern ")"     -> t_fun
        | "<" type_pattern "," type_pattern ">" -> t_pair

    wff: NAME ":" type                          -> var
       | "#" NAME ":" type                      -> const
       | "#" NAME "[" type "]" ":" type         -> indexed_const
       | "T"                                    -> true
       | "F"                                    -> false
       | "bot" ":" type                         -> bot
       | DEFREF                                 -> defref
       | "(" wff wff+ ")"                       -> app
       | "(" "\\" NAME ":" type "." wff ")"     -> lam
       | "(" "if" wff wff wff ")"               -> cond
       | "(" "quote" wff ")"                    -> quote
       | "(" "eval" wff ":" type ")"            -> eval
       | "(" "unquote" wff ":" type ")"         -> hole
       | "(" wff "==" wff ")"                   -> eq
       | "(" wff "<=>" wff ")"                  -> iff
       | "(" wff "&" wff ")"                    -> conj
       | "(" wff "|" wff ")"                    -> disj
       | "(" wff "=>" wff ")"                   -> imp
       | "(" wff "~~" wff ")"                   -> qeq
       | "(" wff "!=" wff ")"                   -> neq
       | "(" "~" wff ")"                        -> neg
       | "(" wff "!" ")"                        -> defined
       | "(" wff "?" ")"                        -> undefined
       | "(" "forall" NAME ":" type "." wff ")" -> forall
       | "(" "exists" NAME ":" type "." wff ")" -> exists
       | "(" "exists1" NAME ":" type "." wff ")" -> exists1
       | "(" "desc" NAME ":" type "." wff ")"   -> desc
       | "(" "fst" wff ")"                      -> fst
       | "(" "snd" wff ")"                      -> snd
       | "(" "var-a" type wff ")"               -> var_alpha
       | "(" "con-a" type wff ")"               -> con_alpha
       | "(" "eval-free-a" type wff ")"         -> eval_free_alpha
       | "(" "syn-closed" wff ")"               -> syn_closed

    BASE.2: "i" | "o" | "eps"
    TVAR: /'[a-z][a-z0-9]*/
    NAME: /%[0-9A-Za-z_]+|[A-Za-z_][A-Za-z0-9_'\-]*/
    DEFREF: /\$[A-Za-z_][A-Za-z0-9_\-]*/
    COMMENT: /--[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
"""

_parser = Lark(GRAMMAR, parser="lalr", start=["type", "type_pattern", "wff"], maybe_placeholders=False)

BASES = {"i": Base("i"), "o": O, "eps": EPS}


# ==========================
# Tree builder
# ==========================
@v_args(inline=True)
class WffBuilder(Transformer):
    def __init__(self, sig: Signature | None = None):
        super().__init__()
        self.sig = sig
        self._cache: dict = {}

    def _ty(self, w: Wff) -> TypeExpr:
        return type_of(w, None, self._cache)

    # ------------- types -------------
    def t_base(self, tok):
        return BASES[str(tok)]

    def t_var(self, tok):
        return TVar(str(tok)[1:])

    def t_fun(self, result, arg):
        return Fun(result, arg)

    def t_pair(self, first, second):
        return Pair(first, second)

    # ------------- atoms -------------
    def var(self, name, ty):
        return Var(str(name), ty)

    def const(self, name, ty):
        return Const(str(name), ty)

    def indexed_const(self, name, index, ty):
        if str(name) != WFF_NAME:
            raise WffSyntaxError(f"only #{WFF_NAME} takes a type index, not #{name}")
        return Const(WFF_NAME, ty, index)

    def true(self):
        return S.TRUE

    def false(self):
        return S.FALSE

    def bot(self, ty):
        return S.bottom(ty)

    def defref(self, tok):
        name = str(tok)[1:]
        body = self.sig.lookup_def(name) if self.sig else None
        if body is None:
            raise UnknownConstant(f"no definition named ${name}")
        return body

    # ------------- compounds -------------
    def app(self, f, *args):
        return app(f, *args)

    def lam(self, name, ty, body):
        return Abs(Var(str(name), ty), body)

    def cond(self, a, b, c):
        return Cond(a, b, c)

    def quote(self, a):
        return Quote(a)

    def eval(self, a, ty):
        return Eval(a, ty)

    def hole(self, payload, ty):
        return Hole(payload, ty)

    def eq(self, a, b):
        return S.eq(a, b, self._ty(a))

    def iff(self, a, b):
        return S.iff(a, b)

    def conj(self, a, b):
        return S.and_(a, b)

    def disj(self, a, b):
        return S.or_(a, b)

    def imp(self, a, b):
        return S.imp(a, b)

    def qeq(self, a, b):
        return S.qeq(a, b, self._ty(a))

    def neq(self, a, b):
        return S.neq(a, b, self._ty(a))

    def neg(self, a):
        return S.not_(a)

    def defined(self, a):
        return S.defined(a, self._ty(a))

    def undefined(self, a):
        return S.undefined(a, self._ty(a))

    def forall(self, name, ty, body):
        return S.forall(Var(str(name), ty), body)

    def exists(self, name, ty, body):
        return S.exists(Var(str(name), ty), body)

    def exists1(self, name, ty, body):
        return S.exists1(Var(str(name), ty), body)

    def desc(self, name, ty, body):
        return S.desc(Var(str(name), ty), body)

    def fst(self, a):
        return S.fst(a, self._ty(a))

    def snd(self, a):
        return S.snd(a, self._ty(a))

    def var_alpha(self, ty, a):
        return S.var_alpha(ty, a)

    def con_alpha(self, ty, a):
        return S.con_alpha(ty, a)

    def eval_free_alpha(self, ty, a):
        return S.eval_free_alpha(ty, a)

    def syn_closed(self, a):
        return S.syn_closed(a)


# ==========================
# Public API
# ==========================
def _run(text: str, start: str, sig: Signature | None):
    try:
        tree = _parser.parse(text, start=start)
    except UnexpectedInput as e:
        line = getattr(e, "line", None)
        column = getattr(e, "column", None)
        if line is not None and line < 0:
            line = column = None
        raise WffSyntaxError(f"cannot parse {start}: {type(e).__name__}", line, column) from None
    try:
        return WffBuilder(sig).transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, QuqeError):
            raise e.orig_exc from None
        raise


def parse_type(text: str) -> TypeExpr:
    return _run(text, "type", None)


def parse_type_pattern(text: str):
    return _run(text, "type_pattern", None)


def parse_wff(text: str, sig: Signature | None = None, check: bool = True) -> Wff:
    """Parse and (by default) type-check ``text``; sugar is expanded on the way in."""
    w = _run(text, "wff", sig)
    if check:
        type_of(w, sig)
    return w
