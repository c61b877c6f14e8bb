"""
Expression grammar shared by the library and the CLI:

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' INT)?
    base   := INT | VAR | '(' expr ')'
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List

from algebra.errors import ExponentOverflowError, ParseError
from algebra.polyring import PolyRing, Polynomial, poly_pow
from utils.config import EXPONENT_CAP

TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*^()]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int" | "var" | "op" | "end"
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = TOKEN_RE.match(text, pos)
        if not m:
            offset = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[offset]!r}", position=offset)
        kind = m.lastgroup or "op"
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing) -> None:
        self.ring = ring
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> None:
        tok = self.current
        if tok.kind != "op" or tok.text != text:
            found = tok.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", position=tok.pos)
        self.advance()

    def parse(self) -> Polynomial:
        result = self.expr()
        if self.current.kind != "end":
            raise ParseError(f"unexpected {self.current.text!r}", position=self.current.pos)
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while self.current.kind == "op" and self.current.text in "+-":
            op = self.advance().text
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.current.kind == "op" and self.current.text == "*":
            self.advance()
            result = result * self.factor()
        return result

    def factor(self) -> Polynomial:
        base = self.base()
        if self.current.kind == "op" and self.current.text == "^":
            self.advance()
            tok = self.current
            if tok.kind != "int":
                found = tok.text or "end of input"
                raise ParseError(f"expected an integer exponent, found {found!r}", position=tok.pos)
            self.advance()
            n = int(tok.text)
            if n > EXPONENT_CAP and not base.is_constant():
                raise ExponentOverflowError(f"exponent {n} at position {tok.pos} exceeds the cap 2^20")
            return poly_pow(base, n)
        return base

    def base(self) -> Polynomial:
        tok = self.current
        if tok.kind == "int":
            self.advance()
            return self.ring.constant(int(tok.text))
        if tok.kind == "var":
            self.advance()
            if tok.text not in self.ring.variables:
                raise ParseError(f"unknown variable {tok.text!r}", position=tok.pos)
            return self.ring.gen(tok.text)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        found = tok.text or "end of input"
        raise ParseError(f"unexpected {found!r}", position=tok.pos)


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    """Parse `text` into the canonical polynomial of `ring`; integers reduce mod p."""
    return _Parser(text, ring).parse()


def split_generators(text: str) -> List[str]:
    """
    Split "f1, f2, ..." (optionally wrapped in one pair of parentheses) at
    top-level commas.
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")") and _outer_parens_match(body):
        body = body[1:-1]
    parts: List[str] = []
    depth = 0
    start = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(body[start:i])
            start = i + 1
    parts.append(body[start:])
    parts = [part.strip() for part in parts]
    if parts == [""]:
        return []
    for part in parts:
        if not part:
            raise ParseError("empty generator in list", position=text.find(",,"))
    return parts


def _outer_parens_match(body: str) -> bool:
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0 and i != len(body) - 1:
                return False
    return depth == 0


def format_monomial(ring: PolyRing, exponents) -> str:
    factors = []
    for name, e in zip(ring.variables, exponents):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def format_poly(f: Polynomial) -> str:
    """Canonical text: terms in descending order, coefficients in [1, p)."""
    if f.is_zero():
        return "0"
    parts = []
    for coeff, monom in f.terms:
        mono = format_monomial(f.ring, monom)
        if not mono:
            parts.append(str(coeff.value))
        elif coeff.value == 1:
            parts.append(mono)
        else:
            parts.append(f"{coeff.value}*{mono}")
    return " + ".join(parts)
