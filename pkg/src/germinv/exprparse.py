"""Recursive-descent parser for polynomial expressions.

Grammar (no implicit multiplication; '^' binds tighter than '*', which binds
tighter than '+'/'-'; '/' only forms rational literals):

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := ('+'|'-')* power
    power  := atom ('^' INT)?
    atom   := INT ('/' INT)? | NAME | '(' expr ')'

Errors carry 1-based line/column positions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from .errors import ParseError
from .poly import Polynomial, VariableContext

_OPS = set("+-*^()/")


class _Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind: str, text: str, line: int, col: int):
        self.kind = kind      # 'int' | 'name' | one of + - * ^ ( ) / | 'end'
        self.text = text
        self.line = line
        self.col = col


def _tokenize(text: str) -> List[_Token]:
    toks: List[_Token] = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(_Token("int", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Token("name", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in _OPS:
            toks.append(_Token(ch, ch, line, start_col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, start_col)
    end_line, end_col = (toks[-1].line, toks[-1].col + len(toks[-1].text)) if toks else (1, 1)
    toks.append(_Token("end", "", end_line, end_col))
    return toks


class _Parser:
    def __init__(self, tokens: List[_Token], ctx: VariableContext):
        self.toks = tokens
        self.pos = 0
        self.ctx = ctx

    def peek(self) -> _Token:
        return self.toks[self.pos]

    def take(self) -> _Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def fail(self, message: str, tok: _Token = None):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.col)

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.peek().kind != "end":
            self.fail(f"unexpected {self.peek().text!r} after expression")
        return p

    def expr(self) -> Polynomial:
        if self.peek().kind == "end":
            self.fail("empty expression")
        p = self.term()
        while self.peek().kind in "+-":
            op = self.take().kind
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.peek().kind == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self) -> Polynomial:
        sign = 1
        while self.peek().kind in "+-":
            if self.take().kind == "-":
                sign = -sign
        p = self.power()
        return p if sign > 0 else -p

    def power(self) -> Polynomial:
        p = self.atom()
        if self.peek().kind == "^":
            caret = self.take()
            t = self.peek()
            if t.kind != "int":
                self.fail("expected integer exponent after '^'", t if t.kind != "end" else caret)
            self.take()
            p = p ** int(t.text)
        return p

    def atom(self) -> Polynomial:
        t = self.take()
        if t.kind == "int":
            num = int(t.text)
            if self.peek().kind == "/":
                self.take()
                d = self.peek()
                if d.kind != "int":
                    self.fail("expected integer denominator after '/'")
                self.take()
                if int(d.text) == 0:
                    self.fail("zero denominator", d)
                return Polynomial.constant(self.ctx, Fraction(num, int(d.text)))
            return Polynomial.constant(self.ctx, num)
        if t.kind == "name":
            if t.text not in self.ctx.names:
                self.fail(f"unknown variable {t.text!r}", t)
            return Polynomial.variable(self.ctx, t.text)
        if t.kind == "(":
            p = self.expr()
            if self.peek().kind != ")":
                self.fail("expected ')'")
            self.take()
            return p
        if t.kind == "end":
            self.fail("unexpected end of expression", t)
        self.fail(f"unexpected {t.text!r}", t)


def parse_polynomial(text: str, ctx: VariableContext) -> Polynomial:
    """Parse `text` into a Polynomial over `ctx`; raises ParseError on bad input."""
    return _Parser(_tokenize(text), ctx).parse()
