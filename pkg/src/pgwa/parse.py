"""Recursive-descent parser for Laurent polynomials with cyclotomic coefficients.

Grammar (whitespace ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := [rational] ('*'? factor)*        (at least one item)
    factor := VAR ['^' int] | 'z' N ['^' int] | '(' expr ')' ['^' int]
    rational := INT ['/' INT]

``zN`` is a primitive N-th root of unity.  Output of ``str(poly)`` parses
back to the same polynomial.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .poly import LaurentPoly, PolyError
from .scalar import Scalar

__all__ = ["ParseError", "parse_poly", "parse_scalar", "DEFAULT_MAX_CONDUCTOR"]

DEFAULT_MAX_CONDUCTOR = 1000

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<zeta>z\d+)|(?P<var>[A-Za-z])|(?P<op>[-+*/^()]))"
)


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            ch = text[pos:].lstrip()[:1]
            raise ParseError(f"unexpected character {ch!r}", len(text) - len(text[pos:].lstrip()))
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, vars: tuple[str, ...], max_conductor: int):
        self.toks = _tokenize(text)
        self.i = 0
        self.vars = vars
        self.max_conductor = max_conductor

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def accept(self, op: str) -> bool:
        if self.cur.kind == "op" and self.cur.text == op:
            self.i += 1
            return True
        return False

    def expect(self, op: str) -> None:
        if not self.accept(op):
            raise ParseError(f"expected {op!r}, found {self.cur.text or 'end of input'!r}", self.cur.pos)

    def one(self) -> LaurentPoly:
        return LaurentPoly.constant(self.vars, 1)

    def parse(self) -> LaurentPoly:
        if self.cur.kind == "end":
            raise ParseError("empty expression", 0)
        e = self.expr()
        if self.cur.kind != "end":
            raise ParseError(f"unexpected {self.cur.text!r}", self.cur.pos)
        return e

    def expr(self) -> LaurentPoly:
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        total = self.term().scale(sign)
        while self.cur.kind == "op" and self.cur.text in "+-":
            sign = -1 if self.advance().text == "-" else 1
            total = total + self.term().scale(sign)
        return total

    def starts_factor(self) -> bool:
        t = self.cur
        return t.kind in ("var", "zeta") or (t.kind == "op" and t.text == "(")

    def term(self) -> LaurentPoly:
        start = self.cur.pos
        acc = self.one()
        seen = False
        if self.cur.kind == "num":
            acc = acc.scale(self.rational())
            seen = True
        while True:
            if seen and self.accept("*"):
                if not self.starts_factor():
                    raise ParseError(f"expected a factor after '*', found {self.cur.text or 'end of input'!r}",
                                     self.cur.pos)
            elif not self.starts_factor():
                break
            acc = acc * self.factor()
            seen = True
        if not seen:
            raise ParseError(f"expected a term, found {self.cur.text or 'end of input'!r}", start)
        return acc

    def rational(self) -> Fraction:
        num = int(self.advance().text)
        if self.accept("/"):
            if self.cur.kind != "num":
                raise ParseError("expected denominator", self.cur.pos)
            den = int(self.advance().text)
            if den == 0:
                raise ParseError("zero denominator", self.toks[self.i - 1].pos)
            return Fraction(num, den)
        return Fraction(num)

    def exponent(self) -> int:
        if not self.accept("^"):
            return 1
        sign = -1 if self.accept("-") else 1
        if sign == 1:
            self.accept("+")
        if self.cur.kind != "num":
            raise ParseError("expected integer exponent", self.cur.pos)
        return sign * int(self.advance().text)

    def factor(self) -> LaurentPoly:
        t = self.cur
        if t.kind == "var":
            if t.text not in self.vars:
                raise ParseError(f"unknown variable {t.text!r} (allowed: {', '.join(self.vars) or 'none'})", t.pos)
            self.advance()
            return LaurentPoly.gen(self.vars, t.text, self.exponent())
        if t.kind == "zeta":
            self.advance()
            n = int(t.text[1:])
            if n < 1:
                raise ParseError("root-of-unity order must be positive", t.pos)
            if n > self.max_conductor:
                raise ParseError(f"conductor {n} exceeds the limit {self.max_conductor}", t.pos)
            return LaurentPoly.constant(self.vars, Scalar.root_of_unity(n, self.exponent()))
        if t.kind == "op" and t.text == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            pos = self.cur.pos
            e = self.exponent()
            try:
                return inner ** e
            except PolyError as exc:
                raise ParseError(str(exc), pos) from None
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.pos)


def parse_poly(
    text: str, vars: tuple[str, ...] = ("t", "h"), max_conductor: int = DEFAULT_MAX_CONDUCTOR
) -> LaurentPoly:
    """Parse text into a LaurentPoly over ``vars``.

    >>> str(parse_poly("h^-1 + 3/2 h^3", vars=("h",)))
    '3/2*h^3 + h^-1'
    """
    return _Parser(text, tuple(vars), max_conductor).parse()


def parse_scalar(text: str, max_conductor: int = DEFAULT_MAX_CONDUCTOR) -> Scalar:
    p = parse_poly(text, (), max_conductor)
    return p.constant_term()
