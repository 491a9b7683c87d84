"""The variety description language.

::

    expr := term { "x" term }
    term := "P(" int ")" | "A(" int ")" | "E" | "blowup(" expr ")" | "(" expr ")"

``E`` is sugar for ``A(1)``.  Whitespace is ignored everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Union

from . import varieties
from .errors import ParseError

MAX_INT = 2**31 - 1


@dataclass(frozen=True)
class Proj:
    n: int


@dataclass(frozen=True)
class Abelian:
    g: int


@dataclass(frozen=True)
class Product:
    left: "VarietyExpr"
    right: "VarietyExpr"


@dataclass(frozen=True)
class Blowup:
    inner: "VarietyExpr"


VarietyExpr = Union[Proj, Abelian, Product, Blowup]


@dataclass(frozen=True)
class _Tok:
    kind: str
    value: object
    line: int
    col: int


_KEYWORDS = ("blowup", "P", "A", "E", "x", "(", ")")


def _lex(source: str) -> list:
    toks = []
    i, line, col = 0, 1, 1
    while i < len(source):
        ch = source[i]
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if ch.isspace():
            i, col = i + 1, col + 1
            continue
        if ch.isdigit():
            j = i
            while j < len(source) and source[j].isdigit():
                j += 1
            value = int(source[i:j])
            if value > MAX_INT:
                raise ParseError("integer overflow", line, col)
            toks.append(_Tok("int", value, line, col))
            col += j - i
            i = j
            continue
        for kw in _KEYWORDS:
            if source.startswith(kw, i):
                toks.append(_Tok(kw, kw, line, col))
                i += len(kw)
                col += len(kw)
                break
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col)
    toks.append(_Tok("end", None, line, col))
    return toks


class _Parser:
    def __init__(self, source: str):
        self.toks = _lex(source)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind: str | None = None):
        tok = self.toks[self.i]
        if kind is not None and tok.kind != kind:
            found = "end of input" if tok.kind == "end" else repr(tok.value)
            raise ParseError(f"expected {kind!r}, found {found}", tok.line, tok.col)
        self.i += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek().kind == "x":
            self.take()
            node = Product(node, self.term())
        return node

    def term(self):
        tok = self.peek()
        if tok.kind in ("P", "A"):
            self.take()
            self.take("(")
            n = self.take("int").value
            self.take(")")
            return Proj(n) if tok.kind == "P" else Abelian(n)
        if tok.kind == "E":
            self.take()
            return Abelian(1)
        if tok.kind == "blowup":
            self.take()
            self.take("(")
            inner = self.expr()
            self.take(")")
            return Blowup(inner)
        if tok.kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        found = "end of input" if tok.kind == "end" else repr(tok.value)
        raise ParseError(f"expected a variety, found {found}", tok.line, tok.col)


def parse(source: str) -> VarietyExpr:
    p = _Parser(source)
    node = p.expr()
    tok = p.peek()
    if tok.kind != "end":
        raise ParseError(f"unexpected {tok.value!r}", tok.line, tok.col)
    return node


def to_source(node: VarietyExpr) -> str:
    """Canonical text; ``parse(to_source(e)) == e``."""
    if isinstance(node, Proj):
        return f"P({node.n})"
    if isinstance(node, Abelian):
        return f"A({node.g})"
    if isinstance(node, Blowup):
        return f"blowup({to_source(node.inner)})"
    right = to_source(node.right)
    if isinstance(node.right, Product):
        right = f"({right})"
    return f"{to_source(node.left)} x {right}"


class _Elaborator:
    def __init__(self):
        self.x_count = 0
        self.used: dict = {}

    def fresh(self, base: str) -> str:
        k = self.used.get(base, 0) + 1
        self.used[base] = k
        return base if k == 1 else f"{base}{k}"

    def run(self, node, in_product: bool = False):
        if isinstance(node, Proj):
            base = "y" if in_product and node.n == 1 else "h"
            name = self.fresh(base) if node.n > 0 else base
            return varieties.projective_space(node.n, name=name)
        if isinstance(node, Abelian):
            if node.g < 1:
                return varieties.abelian_variety(node.g)
            names = [f"x{self.x_count + i}" for i in range(1, 2 * node.g + 1)]
            self.x_count += 2 * node.g
            return varieties.abelian_variety(node.g, names)
        if isinstance(node, Product):
            return varieties.product(self.run(node.left, True), self.run(node.right, True))
        if isinstance(node, Blowup):
            return varieties.blow_up_point(self.run(node.inner, in_product)).blown
        raise TypeError(f"not a variety expression: {node!r}")


def elaborate(node: VarietyExpr) -> varieties.VarietyModel:
    """Build the model; generators are named x1.. per abelian factor, h/y per
    projective factor and z1.. per blow-up, in left-to-right order."""
    V = _Elaborator().run(node)
    return replace(V, name=to_source(node))


def elaborate_pair(node: Blowup) -> varieties.BlowupPair:
    """Base and blow-up for a ``blowup(...)`` node, with consistent naming."""
    if not isinstance(node, Blowup):
        raise TypeError("expected a blowup node")
    base = replace(_Elaborator().run(node.inner), name=to_source(node.inner))
    pair = varieties.blow_up_point(base)
    blown = replace(pair.blown, name=to_source(node))
    return varieties.BlowupPair(base, blown, pair.pi_transport)
