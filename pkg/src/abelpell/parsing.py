"""Recursive-descent parser for exact polynomial expressions.

Grammar: integer and rational literals (``3``, ``5/2``), one variable name
(``x`` unless the expression introduces another), ``+``, ``-``, ``*``, ``^``
with nonnegative integer exponents, and parentheses.  Anything else is
rejected with a position-annotated :class:`ParseError`.  The printer
:func:`abelpell.unipoly.format_poly` emits this grammar, so parse/print is a
round trip.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .unipoly import UniPoly

MAX_EXPONENT = 100_000


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (column {position + 1})")
        self.position = position


@dataclass(frozen=True)
class _Token:
    kind: str  # number | name | op | end
    text: str
    position: int
    value: Fraction | None = None


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            numerator = int(text[start:i])
            value = Fraction(numerator)
            # A slash glues two integers into one rational literal.
            if i < n and text[i] == "/":
                j = i + 1
                if j >= n or not text[j].isdigit():
                    raise ParseError("expected digits after '/' in rational literal", i)
                while j < n and text[j].isdigit():
                    j += 1
                denominator = int(text[i + 1 : j])
                if denominator == 0:
                    raise ParseError("zero denominator in rational literal", i + 1)
                value = Fraction(numerator, denominator)
                i = j
            tokens.append(_Token("number", text[start:i], start, value))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(_Token("name", text[start:i], start))
            continue
        if ch in "+-*^()":
            tokens.append(_Token("op", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], var: str | None):
        self.tokens = tokens
        self.pos = 0
        self.var = var

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, text: str) -> _Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != text:
            raise ParseError(f"expected {text!r}", tok.position)
        return self.take()

    def parse(self) -> UniPoly:
        result = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.position)
        return result

    def expr(self) -> UniPoly:
        acc = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.take()
            term = self.term()
            acc = acc + term if op.text == "+" else acc - term
        return acc

    def term(self) -> UniPoly:
        acc = self.signed()
        while self.peek().kind == "op" and self.peek().text == "*":
            self.take()
            acc = acc * self.signed()
        return acc

    def signed(self) -> UniPoly:
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.take()
            inner = self.signed()
            return inner if tok.text == "+" else -inner
        return self.power()

    def power(self) -> UniPoly:
        base = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.take()
            tok = self.peek()
            if tok.kind != "number" or tok.value is None or tok.value.denominator != 1:
                raise ParseError("exponent must be a nonnegative integer", tok.position)
            self.take()
            exponent = tok.value.numerator
            if exponent > MAX_EXPONENT:
                raise ParseError(f"exponent exceeds {MAX_EXPONENT}", tok.position)
            return base**exponent
        return base

    def atom(self) -> UniPoly:
        tok = self.peek()
        if tok.kind == "number":
            self.take()
            assert tok.value is not None
            return UniPoly((tok.value,))
        if tok.kind == "name":
            self.take()
            if self.var is None:
                self.var = tok.text
            elif tok.text != self.var:
                raise ParseError(
                    f"unknown identifier {tok.text!r} (the variable is {self.var!r})",
                    tok.position,
                )
            return UniPoly((0, 1))
        if tok.kind == "op" and tok.text == "(":
            self.take()
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(
            "expected a number, the variable, or a parenthesised expression",
            tok.position,
        )


def parse_poly(text: str, var: str | None = None) -> UniPoly:
    """Parse an exact polynomial expression.

    >>> parse_poly("x^2-2").coeffs
    (Fraction(-2, 1), Fraction(0, 1), Fraction(1, 1))
    >>> parse_poly("(x^2+1)*(x^2-1)")
    UniPoly('x^4 - 1')
    """
    return _Parser(_tokenize(text), var).parse()
