"""Concrete syntax: tokenizer, recursive-descent parsers and printers.

Grammar (LL(1); whitespace is insignificant)::

    term     ::= summand ("+" summand)*
    summand  ::= "0" | NUM | "W" | "G" "[" NUM "]"
               | "phi" "(" term "," term ")" | "psi" "(" term ")"
               | "w" ["^" summand] | "(" term ")"

    hf       ::= "{" [hf ("," hf)*] "}"

    operand  ::= "ubar" hf | "L" "[" term "]" | "V" "[" term "]"
               | "fv" "[" term "," NUM "]"
               | "sep" "(" stage "," IDENT "," formula ("," IDENT "=" operand)* ")"
               | IDENT                                   (a variable)
    formula  ::= ("in" | "notin") "(" operand "," operand ")"
               | ("and" | "or") "(" formula "," formula ")"
               | ("ball" | "bex" | "pball" | "pbex") "(" IDENT "," operand "," formula ")"
               | ("all" | "ex") "(" IDENT "," formula ")"

A numeral n stands for the n-fold sum of phi(0,0); ``w^a`` is phi(0,a).
The words ubar, L, V, fv and sep are reserved in operand position.
In ``sep`` the trailing ``y=t`` bindings substitute parameter terms for
variables of the body before the comprehension is built.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Optional

from .errors import ParseError
from .hf import EMPTY, HFSet
from .rsyntax import (All, And, BAll, BEx, Ex, FreeVar, In, LStage, NotIn, Or, PAll, PEx,
                      UBar, Var, VStage, substitute)
from .terms import (OMEGA, ONE, ZERO, BaseOrder, Gamma, Phi, Psi, Sum, Term,
                    format_term, from_parts)

__all__ = ["tokenize", "parse_term", "parse_hf", "parse_operand", "parse_formula",
           "format_term", "format_hf", "format_rs"]

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[()\[\]{},+^=]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "ident", "punct" or "eof"
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    out = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(Token("eof", "", n))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.base = BaseOrder()

    # -- token helpers
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str):
        raise ParseError(msg, self.text, self.tok.pos)

    def next(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.kind != "eof" and self.tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            shown = self.tok.text or "end of input"
            self.error(f"expected {text!r}, found {shown!r}")
        return self.next()

    def number(self) -> int:
        if self.tok.kind != "num":
            self.error("expected a natural number")
        return int(self.next().text)

    def ident(self) -> str:
        if self.tok.kind != "ident":
            self.error("expected an identifier")
        return self.next().text

    def end(self):
        if self.tok.kind != "eof":
            self.error(f"trailing input {self.tok.text!r}")

    # -- ordinal terms
    def term(self) -> Term:
        ps = []
        self._add_summand(ps, self.summand())
        while self.at("+"):
            self.next()
            self._add_summand(ps, self.summand())
        return from_parts(ps) if len(ps) != 1 else ps[0]

    @staticmethod
    def _add_summand(ps: list, s: Term):
        if isinstance(s, Sum):
            ps.extend(s.parts)
        else:
            ps.append(s)

    def summand(self) -> Term:
        t = self.tok
        if t.kind == "num":
            n = int(self.next().text)
            return ZERO if n == 0 else from_parts([ONE] * n)
        if t.kind == "punct" and t.text == "(":
            self.next()
            x = self.term()
            self.expect(")")
            return x
        if t.kind != "ident":
            self.error(f"expected an ordinal term, found {t.text or 'end of input'!r}")
        word = self.next().text
        if word == "W":
            return OMEGA
        if word == "G":
            self.expect("[")
            k = self.number()
            self.expect("]")
            return Gamma(k)
        if word == "phi":
            self.expect("(")
            a = self.term()
            self.expect(",")
            b = self.term()
            self.expect(")")
            return Phi(a, b)
        if word == "psi":
            self.expect("(")
            a = self.term()
            self.expect(")")
            return Psi(a)
        if word == "w":
            if self.at("^"):
                self.next()
                return Phi(ZERO, self.summand())
            return Phi(ZERO, ONE)
        self.i -= 1
        self.error(f"unknown ordinal symbol {word!r}")

    # -- hereditarily finite sets
    def hf(self) -> HFSet:
        self.expect("{")
        els = []
        if not self.at("}"):
            els.append(self.hf())
            while self.at(","):
                self.next()
                els.append(self.hf())
        self.expect("}")
        return HFSet(els) if els else EMPTY

    # -- RS terms and formulas
    def operand(self):
        if self.tok.kind != "ident":
            self.error("expected an RS term or variable")
        word = self.next().text
        if word == "ubar":
            return UBar(self.hf())
        if word in ("L", "V"):
            self.expect("[")
            a = self.term()
            self.expect("]")
            return LStage(a) if word == "L" else VStage(a)
        if word == "fv":
            self.expect("[")
            a = self.term()
            self.expect(",")
            k = self.number()
            self.expect("]")
            return FreeVar(a, k)
        if word == "sep":
            return self.sep()
        return Var(word)

    def sep(self):
        from .rsrank import make_sep
        self.expect("(")
        start = self.tok.pos
        stage = self.operand()
        if not isinstance(stage, (LStage, VStage)):
            raise ParseError("sep needs an L[...] or V[...] stage", self.text, start)
        self.expect(",")
        var = self.ident()
        self.expect(",")
        body = self.formula()
        while self.at(","):
            self.next()
            name = self.ident()
            self.expect("=")
            body = substitute(body, name, self.operand())
        self.expect(")")
        return make_sep(stage, var, body, self.base, check=False)

    _BIN = {"in": In, "notin": NotIn}
    _CONN = {"and": And, "or": Or}
    _BQ = {"ball": BAll, "bex": BEx, "pball": PAll, "pbex": PEx}
    _UQ = {"all": All, "ex": Ex}

    def formula(self):
        if self.tok.kind != "ident":
            self.error("expected a formula")
        word = self.next().text
        if word in self._BIN:
            self.expect("(")
            s = self.operand()
            self.expect(",")
            t = self.operand()
            self.expect(")")
            return self._BIN[word](s, t)
        if word in self._CONN:
            self.expect("(")
            a = self.formula()
            self.expect(",")
            b = self.formula()
            self.expect(")")
            return self._CONN[word](a, b)
        if word in self._BQ:
            self.expect("(")
            v = self.ident()
            self.expect(",")
            t = self.operand()
            self.expect(",")
            a = self.formula()
            self.expect(")")
            return self._BQ[word](v, t, a)
        if word in self._UQ:
            self.expect("(")
            v = self.ident()
            self.expect(",")
            a = self.formula()
            self.expect(")")
            return self._UQ[word](v, a)
        self.i -= 1
        self.error(f"unknown formula constructor {word!r}")


def _run(text: str, rule: str, base: Optional[BaseOrder] = None):
    p = _Parser(text)
    if base is not None:
        p.base = base
    out = getattr(p, rule)()
    p.end()
    return out


def parse_term(text: str) -> Term:
    """Parse an ordinal term.  The result is raw: call ``validate`` on it."""
    return _run(text, "term")


def parse_hf(text: str) -> HFSet:
    return _run(text, "hf")


def parse_operand(text: str, base: Optional[BaseOrder] = None):
    """Parse an RS term (or a bare variable)."""
    return _run(text, "operand", base)


def parse_formula(text: str, base: Optional[BaseOrder] = None):
    return _run(text, "formula", base)


def format_hf(x: HFSet) -> str:
    return str(x)


def format_rs(x) -> str:
    """Print an RS term or formula in the concrete syntax accepted above."""
    return str(x)
