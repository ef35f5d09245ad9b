"""Recursive-descent parser for torus expressions.

Grammar (ASCII, whitespace insignificant, implicit multiplication forbidden):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' ('-'|'+')? INT)?
    atom   := NAME | INT | '(' expr ')'
    NAME   := [a-zA-Z][a-zA-Z0-9_]*
    INT    := [0-9]+

Rational literals like ``3/4`` are handled by the division operator, which is
exact, so they need no dedicated token.  ``^`` binds tighter than ``*`` and
``/``; its exponent must be a (possibly signed) integer literal.
"""

from __future__ import annotations

from typing import Sequence

from .errors import ExprSyntaxError, UnknownVariableError
from .laurent import LaurentPoly, RationalExpr, laurent_normalize

_NAME_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ")
_NAME_BODY = _NAME_START | set("0123456789_")
_DIGITS = set("0123456789")
_PUNCT = set("+-*/^()")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _DIGITS:
            j = i
            while j < n and text[j] in _DIGITS:
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
        elif ch in _NAME_START:
            j = i
            while j < n and text[j] in _NAME_BODY:
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
        elif ch in _PUNCT:
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise ExprSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, varnames: Sequence[str]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.varnames = tuple(varnames)
        self.rank = len(self.varnames)
        if self.rank == 0:
            raise ValueError("at least one variable name is required")
        if len(set(self.varnames)) != self.rank:
            raise ValueError(f"duplicate variable names in {self.varnames}")
        self.index = {name: i for i, name in enumerate(self.varnames)}

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self, kind: str | None = None) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ExprSyntaxError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        self.pos += 1
        return tok

    def parse(self) -> RationalExpr:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExprSyntaxError(f"unexpected token {tok[1]!r}", tok[2])
        return value

    def expr(self) -> RationalExpr:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RationalExpr:
        value = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self) -> RationalExpr:
        if self.peek()[0] == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> RationalExpr:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            sign = 1
            if self.peek()[0] in ("-", "+"):
                sign = -1 if self.take()[0] == "-" else 1
            tok = self.take("int")
            return base ** (sign * int(tok[1]))
        return base

    def atom(self) -> RationalExpr:
        kind, text, pos = self.peek()
        if kind == "int":
            self.take()
            return RationalExpr.from_poly(
                LaurentPoly.constant(self.rank, int(text), self.varnames))
        if kind == "name":
            self.take()
            idx = self.index.get(text)
            if idx is None:
                raise UnknownVariableError(text, pos)
            return RationalExpr.from_poly(
                LaurentPoly.variable(self.rank, idx, self.varnames))
        if kind == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        raise ExprSyntaxError(f"expected a value, found {text!r}" if text else "unexpected end of input", pos)


def parse(text: str, varnames: Sequence[str]) -> RationalExpr:
    """Parse ``text`` into a rational expression over the named variables."""
    return _Parser(text, varnames).parse()


def parse_poly(text: str, varnames: Sequence[str]) -> LaurentPoly:
    """Parse and normalise; raises NotLaurentError for genuine rational functions."""
    return laurent_normalize(parse(text, varnames))
