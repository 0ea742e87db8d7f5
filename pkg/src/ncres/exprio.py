"""Plain-text expression grammar for rational-function fixtures.

Grammar: integers, `i`, `h`, `xi`, operators + - * / ^, parentheses.
Expressions are evaluated exactly as fractions of polynomials in xi (with
Q(i)[h] coefficients); the final denominator must expand to a Gaussian
rational times powers of (xi - i) and (xi + i).  The canonical printer
emits pole form and round-trips through the parser.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .rational import (
    CP_ONE,
    CP_ZERO,
    CoeffPoly,
    GaussianRational,
    RationalFn,
    XiPoly,
)


class ExprError(ValueError):
    """Malformed or unsupported fixture expression."""


_TOKEN = re.compile(r"\s*(\d+|xi|i|h|\*|/|\+|-|\^|\(|\))")


def _tokenize(text: str) -> list[str]:
    out = []
    text = text.rstrip()
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExprError(f"bad token at: {text[pos:pos+12]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


class _Frac:
    """Exact fraction of XiPoly during evaluation."""

    __slots__ = ("num", "den")

    def __init__(self, num: XiPoly, den: XiPoly | None = None):
        self.num = num
        self.den = den if den is not None else XiPoly.const(CP_ONE)

    def __add__(self, o):
        return _Frac(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o):
        return _Frac(self.num * o.den - o.num * self.den, self.den * o.den)

    def __mul__(self, o):
        return _Frac(self.num * o.num, self.den * o.den)

    def __truediv__(self, o):
        if not o.num:
            raise ExprError("division by zero expression")
        return _Frac(self.num * o.den, self.den * o.num)

    def __neg__(self):
        return _Frac(-self.num, self.den)

    def pow(self, k: int):
        out = _Frac(XiPoly.const(CP_ONE))
        for _ in range(k):
            out = out * self
        return out


class _Parser:
    def __init__(self, tokens: list[str]):
        self.toks = tokens
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def advance(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, tok: str):
        got = self.advance()
        if got != tok:
            raise ExprError(f"expected {tok!r}, got {got!r}")

    def parse(self) -> _Frac:
        value = self.expr()
        if self.peek() is not None:
            raise ExprError(f"trailing input at {self.peek()!r}")
        return value

    def expr(self) -> _Frac:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> _Frac:
        value = self.unary()
        while self.peek() in ("*", "/"):
            op = self.advance()
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self) -> _Frac:
        if self.peek() == "-":
            self.advance()
            return -self.unary()
        if self.peek() == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> _Frac:
        base = self.atom()
        if self.peek() == "^":
            self.advance()
            tok = self.advance()
            if tok is None or not tok.isdigit():
                raise ExprError("exponent must be a non-negative integer")
            return base.pow(int(tok))
        return base

    def atom(self) -> _Frac:
        tok = self.advance()
        if tok is None:
            raise ExprError("unexpected end of input")
        if tok.isdigit():
            return _Frac(XiPoly.const(CoeffPoly.const(int(tok))))
        if tok == "i":
            return _Frac(XiPoly.const(CoeffPoly.const(GaussianRational.i())))
        if tok == "h":
            return _Frac(XiPoly.const(CoeffPoly.h()))
        if tok == "xi":
            return _Frac(XiPoly.xi())
        if tok == "(":
            value = self.expr()
            self.expect(")")
            return value
        raise ExprError(f"unexpected token {tok!r}")


def _div_linear(p: XiPoly, root: GaussianRational) -> tuple[XiPoly, CoeffPoly]:
    """Synthetic division of p by (xi - root): (quotient, remainder)."""
    deg = p.degree()
    if deg < 0:
        return XiPoly(), CP_ZERO
    acc = CP_ZERO
    q: dict[int, CoeffPoly] = {}
    for d in range(deg, -1, -1):
        acc = p.c.get(d, CP_ZERO) + acc * CoeffPoly.const(root)
        if d > 0:
            q[d - 1] = acc
    return XiPoly(q), acc


def parse_rationalfn(text: str) -> RationalFn:
    """Parse a fixture expression into canonical pole form."""
    frac = _Parser(_tokenize(text)).parse()
    num, den = frac.num, frac.den
    plus_i = GaussianRational.i()
    a = b = 0
    while True:
        q, r = _div_linear(den, plus_i)
        if r or den.degree() < 1:
            break
        den, a = q, a + 1
    while True:
        q, r = _div_linear(den, -plus_i)
        if r or den.degree() < 1:
            break
        den, b = q, b + 1
    if den.degree() != 0:
        raise ExprError(
            "denominator has a pole away from +-i: only (xi-i)/(xi+i) factors are supported")
    const = den.c.get(0, CP_ZERO)
    if const.degrees() not in (set(), {0}):
        raise ExprError("denominator must not contain h")
    g = const.coefficient(0)
    if not g:
        raise ExprError("zero denominator")
    scaled = num.scale(CoeffPoly.const(GaussianRational.of(1) / g))
    return RationalFn.from_fraction(scaled, a, b)


def print_rationalfn(f: RationalFn) -> str:
    """Canonical printer; parse_rationalfn(print_rationalfn(f)) == f."""
    parts = []
    for d in sorted(f.poly):
        cp = f.poly[d].to_str("h")
        if d == 0:
            parts.append(f"({cp})")
        elif d == 1:
            parts.append(f"({cp})*xi")
        else:
            parts.append(f"({cp})*xi^{d}")
    for k in sorted(f.upper):
        cp = f.upper[k].to_str("h")
        suffix = "" if k == 1 else f"^{k}"
        parts.append(f"({cp})/(xi - i){suffix}")
    for k in sorted(f.lower):
        cp = f.lower[k].to_str("h")
        suffix = "" if k == 1 else f"^{k}"
        parts.append(f"({cp})/(xi + i){suffix}")
    return " + ".join(parts) if parts else "0"
