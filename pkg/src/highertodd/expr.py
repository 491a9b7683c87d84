"""Polynomial expressions over named classes, e.g. ``"c1^2 - 2*c2"`` or ``"x1*x2"``.

Grammar::

    sum    := ["+" | "-"] term { ("+" | "-") term }
    term   := factor { "*" factor }
    factor := atom [ "^" int ]
    atom   := int [ "/" int ] | name | "(" sum ")"

Names are resolved by a caller-supplied function, so the same parser serves
characteristic-number expressions and pi-class labels.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import ExprError

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9']*)")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m:
            kind = "int" if m.group(1) is not None else "name"
            tokens.append(Token(kind, m.group(0), pos))
            pos = m.end()
            continue
        if ch not in "+-*/^()":
            raise ExprError(f"unexpected character {ch!r} at position {pos + 1}")
        tokens.append(Token("op", ch, pos))
        pos += 1
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, resolve: Callable, one):
        self.toks = tokenize(text)
        self.i = 0
        self.resolve = resolve
        self.one = one

    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self) -> Token:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> None:
        tok = self.take()
        if tok.text != text:
            raise ExprError(f"expected {text!r} at position {tok.pos + 1}")

    def parse(self):
        if self.peek().kind == "end":
            raise ExprError("empty expression")
        value = self.sum()
        tok = self.peek()
        if tok.kind != "end":
            raise ExprError(f"unexpected {tok.text!r} at position {tok.pos + 1}")
        return value

    def sum(self):
        sign = 1
        if self.peek().text in "+-" and self.peek().kind == "op":
            sign = -1 if self.take().text == "-" else 1
        value = self.term() * sign
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.take().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek().kind == "op" and self.peek().text == "*":
            self.take()
            value = value * self.factor()
        return value

    def factor(self):
        value = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.take()
            tok = self.take()
            if tok.kind != "int":
                raise ExprError(f"expected an integer exponent at position {tok.pos + 1}")
            e = int(tok.text)
            result = self.one()
            for _ in range(e):
                result = result * value
            value = result
        return value

    def atom(self):
        tok = self.take()
        if tok.kind == "int":
            value = Fraction(int(tok.text))
            if self.peek().kind == "op" and self.peek().text == "/":
                self.take()
                den = self.take()
                if den.kind != "int" or int(den.text) == 0:
                    raise ExprError(f"expected a nonzero integer denominator at position {den.pos + 1}")
                value /= int(den.text)
            return self.one() * value
        if tok.kind == "name":
            return self.resolve(tok.text)
        if tok.text == "(":
            value = self.sum()
            self.expect(")")
            return value
        if tok.kind == "end":
            raise ExprError("unexpected end of expression")
        raise ExprError(f"unexpected {tok.text!r} at position {tok.pos + 1}")


def evaluate(text: str, resolve: Callable, one: Callable):
    """Evaluate ``text`` with names looked up by ``resolve``.

    ``one`` returns the multiplicative unit of the target ring; integer
    literals are scaled copies of it.
    """
    return _Parser(text, resolve, one).parse()


def names_in(text: str) -> list:
    return [t.text for t in tokenize(text) if t.kind == "name"]
