"""A small parser and renderer for one-variable integer polynomials.

Accepted grammar: integer literals, a single variable name, ``+ - * ^``,
parentheses, and implicit multiplication before a variable or an opening
parenthesis, so ``x^9-15x^6+75x^3-130`` and ``3(x+1)^2`` both parse.
A bare comma-separated list like ``-5,0,0,1`` is read as ascending
coefficients instead.

``parse_poly(render_poly(f)) == f`` for every integer polynomial.
"""

from __future__ import annotations

import re

from .intpoly import IntPoly, _format

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)|([()+\-*^]))")


class PolyParseError(ValueError):
    pass


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolyParseError(f"unexpected character {text[pos]!r} in {text!r}")
        if m.group(1) is not None:
            out.append(("int", m.group(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2)))
        else:
            out.append(("op", m.group(3)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens: list[tuple[str, str]]):
        self.tokens = tokens
        self.pos = 0
        self.variable: str | None = None

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        kind, text = self.take()
        if kind != "op" or text != op:
            raise PolyParseError(f"expected {op!r}, found {text!r}")

    def parse(self) -> IntPoly:
        poly = self.expr()
        if self.pos != len(self.tokens):
            raise PolyParseError(f"trailing input from {self.peek()[1]!r}")
        return poly

    def expr(self) -> IntPoly:
        acc = self.term()
        while True:
            kind, text = self.peek()
            if kind == "op" and text in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if text == "+" else acc - rhs
            else:
                return acc

    def term(self) -> IntPoly:
        acc = self.unary()
        while True:
            kind, text = self.peek()
            if kind == "op" and text == "*":
                self.take()
                acc = acc * self.unary()
            elif kind == "name" or (kind == "op" and text == "("):
                acc = acc * self.unary()  # implicit multiplication
            else:
                return acc

    def unary(self) -> IntPoly:
        kind, text = self.peek()
        if kind == "op" and text in "+-":
            self.take()
            inner = self.unary()
            return inner if text == "+" else -inner
        return self.power()

    def power(self) -> IntPoly:
        base = self.atom()
        kind, text = self.peek()
        if kind == "op" and text == "^":
            self.take()
            ekind, etext = self.take()
            if ekind != "int":
                raise PolyParseError("exponent must be a nonnegative integer literal")
            return base ** int(etext)
        return base

    def atom(self) -> IntPoly:
        kind, text = self.take()
        if kind == "int":
            return IntPoly((int(text),))
        if kind == "name":
            if self.variable is None:
                self.variable = text
            elif self.variable != text:
                raise PolyParseError(
                    f"one variable only: saw both {self.variable!r} and {text!r}"
                )
            return IntPoly((0, 1))
        if kind == "op" and text == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise PolyParseError(f"unexpected token {text!r}")


_COEFF_LIST = re.compile(r"^\s*-?\d+\s*(,\s*-?\d+\s*)+$")


def parse_poly(text: str) -> IntPoly:
    """Parse an expression, or a comma-separated ascending coefficient list.

    >>> parse_poly("x^3 - 5")
    IntPoly('x^3 - 5')
    >>> parse_poly("-5,0,0,1")
    IntPoly('x^3 - 5')
    """
    if _COEFF_LIST.match(text):
        return IntPoly(tuple(int(part) for part in text.split(",")))
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty polynomial expression")
    return _Parser(tokens).parse()


def render_poly(f: IntPoly, var: str = "x") -> str:
    """Conventional descending-order rendering, inverse to ``parse_poly``."""
    return _format(f.coeffs, var)
