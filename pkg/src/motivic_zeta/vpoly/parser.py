"""Recursive-descent parser for class expressions in u and L.

Grammar:

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' ['+' | '-'] INT)?
    atom   := INT | 'u' | 'L' | '(' expr ')'

L expands to u^2. Negative exponents are allowed on unit monomials only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from motivic_zeta.vpoly.laurent import ClassError, LaurentPoly, MotClass


class ClassParseError(ClassError):
    """Raised on malformed class expressions.

    Args:
        message: description of the problem
        position: zero-based character offset in the input
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"syntax error at position {position}: {message}")
        self.position = position


_TOKEN_RE = re.compile(r"\s*(?:(\d+(?:\.\d*)?)|([uL])|(\S))")


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "sym", "op", "end"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            break
        number, symbol, other = match.groups()
        start = match.start(match.lastindex) if match.lastindex else match.end()
        if number is not None:
            if "." in number:
                raise ClassParseError(f"non-integer coefficient '{number}'", start)
            tokens.append(_Token("int", number, start))
        elif symbol is not None:
            tokens.append(_Token("sym", symbol, start))
        elif other is not None:
            if other == "/":
                raise ClassParseError("non-integer coefficient (division)", start)
            if other not in "+-*^()":
                raise ClassParseError(f"unexpected character '{other}'", start)
            tokens.append(_Token("op", other, start))
        pos = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def _advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _accept(self, op: str) -> bool:
        if self.current.kind == "op" and self.current.text == op:
            self.index += 1
            return True
        return False

    def parse(self) -> LaurentPoly:
        if self.current.kind == "end":
            raise ClassParseError("empty expression", self.current.pos)
        value = self._expr()
        if self.current.kind != "end":
            raise ClassParseError(f"unexpected '{self.current.text}'", self.current.pos)
        return value

    def _expr(self) -> LaurentPoly:
        value = self._term()
        while True:
            if self._accept("+"):
                value = value + self._term()
            elif self._accept("-"):
                value = value - self._term()
            else:
                return value

    def _term(self) -> LaurentPoly:
        value = self._unary()
        while self._accept("*"):
            value = value * self._unary()
        return value

    def _unary(self) -> LaurentPoly:
        if self._accept("-"):
            return -self._unary()
        if self._accept("+"):
            return self._unary()
        return self._power()

    def _power(self) -> LaurentPoly:
        base = self._atom()
        if not self._accept("^"):
            return base
        sign = 1
        if self._accept("-"):
            sign = -1
        else:
            self._accept("+")
        token = self.current
        if token.kind != "int":
            raise ClassParseError("expected integer exponent", token.pos)
        self._advance()
        exponent = sign * int(token.text)
        if exponent < 0:
            try:
                return base**exponent
            except ValueError:
                raise ClassParseError(
                    "negative exponent on a non-monomial", token.pos
                ) from None
        return base**exponent

    def _atom(self) -> LaurentPoly:
        token = self.current
        if token.kind == "int":
            self._advance()
            return LaurentPoly.constant(int(token.text))
        if token.kind == "sym":
            self._advance()
            return LaurentPoly.monomial(2 if token.text == "L" else 1)
        if self._accept("("):
            value = self._expr()
            if not self._accept(")"):
                raise ClassParseError("expected ')'", self.current.pos)
            return value
        if token.kind == "end":
            raise ClassParseError("unexpected end of input", token.pos)
        raise ClassParseError(f"unexpected '{token.text}'", token.pos)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse a class expression into a canonical Laurent polynomial."""
    return _Parser(text).parse()


def parse_class(text: str) -> MotClass:
    """
    Parse a class expression such as "L-1" or "1-2*u+u^2".

    Raises:
        ClassParseError: On syntax errors or non-integer coefficients
    """
    return MotClass(parse_laurent(text))
