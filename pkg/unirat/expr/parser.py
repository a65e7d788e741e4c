"""
Recursive-descent parser for polynomial expressions.

Grammar::

    integer  ::= [0-9]+
    rational ::= integer "/" integer
    atom     ::= variable | integer | rational | "(" expr ")"
    power    ::= atom ["^" integer]
    term     ::= power ("*" power)*
    expr     ::= ["-"] term (("+" | "-") term)*

Juxtaposition ("2x") is rejected; every error reports the character offset.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Union

from .poly import ExprError, MultiPoly, PolyMap, Ring, as_ring

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class ParseError(ExprError):
    """Malformed expression text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariableError(ParseError):
    pass


class NegativeExponentError(ParseError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op" or "end"
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while True:
        match = _TOKEN.match(text, pos)
        if match is None:
            break
        integer, name, op = match.groups()
        if integer is not None:
            tokens.append(Token("int", integer, match.start(1)))
        elif name is not None:
            tokens.append(Token("name", name, match.start(2)))
        else:
            if op not in "+-*^/()":
                raise ParseError(f"unexpected character {op!r}", match.start(3))
            tokens.append(Token("op", op, match.start(3)))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.ring = ring
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _accept(self, op: str) -> bool:
        token = self.current
        if token.kind == "op" and token.text == op:
            self.index += 1
            return True
        return False

    def _expect_int(self, what: str) -> Token:
        token = self.current
        if token.kind != "int":
            found = token.text or "end of input"
            raise ParseError(f"expected {what}, found {found!r}", token.position)
        self.index += 1
        return token

    def parse(self) -> MultiPoly:
        result = self.expr()
        token = self.current
        if token.kind != "end":
            raise ParseError(f"unexpected {token.text!r}", token.position)
        return result

    def expr(self) -> MultiPoly:
        negate = self._accept("-")
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            if self._accept("+"):
                acc = acc + self.term()
            elif self._accept("-"):
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> MultiPoly:
        acc = self.power()
        while self._accept("*"):
            acc = acc * self.power()
        return acc

    def power(self) -> MultiPoly:
        base = self.atom()
        if self._accept("^"):
            token = self.current
            if token.kind == "op" and token.text == "-":
                raise NegativeExponentError("negative exponent", token.position)
            exponent = self._expect_int("an integer exponent")
            base = base ** int(exponent.text)
        return base

    def atom(self) -> MultiPoly:
        token = self.current
        if token.kind == "int":
            self.index += 1
            value = Fraction(int(token.text))
            if self._accept("/"):
                denominator = self._expect_int("an integer denominator")
                if int(denominator.text) == 0:
                    raise ParseError("zero denominator", denominator.position)
                value = value / int(denominator.text)
            return MultiPoly.constant(self.ring, value)
        if token.kind == "name":
            self.index += 1
            if token.text not in self.ring.names:
                raise UnknownVariableError(f"unknown variable {token.text!r}", token.position)
            return self.ring.gen(token.text)
        if self._accept("("):
            inner = self.expr()
            if not self._accept(")"):
                found = self.current.text or "end of input"
                raise ParseError(f"expected ')', found {found!r}", self.current.position)
            return inner
        found = token.text or "end of input"
        raise ParseError(f"unexpected {found!r}", token.position)


def parse_poly(text: str, ring: Union[Ring, Sequence[str]]) -> MultiPoly:
    """Parse ``text`` into its canonical expanded form in ``ring``."""
    return _Parser(text, as_ring(ring)).parse()


def parse_map(
    source: Union[Ring, Sequence[str]],
    target: Union[Ring, Sequence[str]],
    images: Sequence[str],
) -> PolyMap:
    """Build a substitution from one image expression per source variable."""
    target = as_ring(target)
    return PolyMap(as_ring(source), target, tuple(parse_poly(text, target) for text in images))
