"""Text grammars: algebra expressions and ascent pair lists.

Expression grammar (products are the algebra product; a bare integer is a
multiple of the unit a0; adjacency like ``2a1`` multiplies implicitly):

    expression := term (('+'|'-') term)*
    term       := factor (('*')? factor)*
    factor     := ('-')* (scalar | 'a' digits | '(' expression ')')
    scalar     := digits ('/' digits)?      # fractions only over Q

Ascent pair grammar: ``s:omega[,s:omega...]`` with integer entries.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import RBAlgebra, RBElement
from .ideals import AscentSet
from .rings import CoeffRing

__all__ = ["ParseError", "parse_expression", "parse_ascent_pairs"]


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"parse error at position {position}: {message}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|a(\d+)|([+\-*/()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        number, monomial, op = m.groups()
        where = m.start(1) if number else m.start(2) if monomial else m.start(3)
        if number is not None:
            tokens.append(("int", int(number), where))
        elif monomial is not None:
            tokens.append(("mono", int(monomial), where))
        else:
            tokens.append((op, None, where))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, algebra: RBAlgebra, text: str):
        self.algebra = algebra
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expression(self) -> RBElement:
        value = self.term()
        while True:
            kind, _, _ = self.peek()
            if kind == "+":
                self.take()
                value = value + self.term()
            elif kind == "-":
                self.take()
                value = value - self.term()
            else:
                return value

    def term(self) -> RBElement:
        value = self.factor()
        while True:
            kind, _, _ = self.peek()
            if kind == "*":
                self.take()
                value = value * self.factor()
            elif kind in ("int", "mono", "("):
                value = value * self.factor()
            else:
                return value

    def factor(self) -> RBElement:
        kind, payload, pos = self.take()
        if kind == "-":
            return -self.factor()
        if kind == "int":
            scalar = self._maybe_fraction(payload, pos)
            return self.algebra.monomial(0, scalar)
        if kind == "mono":
            return self.algebra.monomial(payload)
        if kind == "(":
            value = self.expression()
            kind, _, pos = self.take()
            if kind != ")":
                raise ParseError("expected ')'", pos)
            return value
        raise ParseError(f"expected a term, found {kind!r}", pos)

    def _maybe_fraction(self, numerator: int, pos: int):
        kind, _, _ = self.peek()
        if kind != "/":
            return numerator
        self.take()
        kind, denominator, dpos = self.take()
        if kind != "int":
            raise ParseError("expected a denominator", dpos)
        if not self.algebra.ring.is_rational:
            raise ParseError("fractions need the rational coefficient ring", pos)
        if denominator == 0:
            raise ParseError("zero denominator", dpos)
        return Fraction(numerator, denominator)


def parse_expression(algebra: RBAlgebra, text: str) -> RBElement:
    parser = _Parser(algebra, text)
    value = parser.expression()
    kind, _, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"trailing input {kind!r}", pos)
    return value


def parse_ascent_pairs(ring: CoeffRing, text: str) -> AscentSet:
    pairs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            point, gen = chunk.split(":")
            pairs.append((int(point), int(gen)))
        except ValueError:
            raise ParseError(f"expected s:omega, found {chunk!r}", text.find(chunk)) from None
    if not pairs:
        raise ParseError("no ascent pairs given", 0)
    return AscentSet.from_gen_pairs(ring, pairs)
