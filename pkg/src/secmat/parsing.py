"""Parsing of polynomial expressions and ideal description files.

Grammar of a description file (whitespace insignificant, `#` starts a line
comment)::

    document  := ring-stmt ideal-stmt
    ring-stmt := "ring" ident ("," ident)* ";"
    ideal-stmt:= "ideal" poly ("," poly)* ";"
    poly      := ["+"|"-"] term (("+"|"-") term)*
    term      := factor ("*" factor)*
    factor    := base ("^" natural)?
    base      := number | ident | "(" poly ")"
    number    := digits ("/" digits)?

`*` is mandatory between factors and `^` binds tighter than `*`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError
from .polynomials import Ideal, Polynomial
from .rings import Ring

_KEYWORDS = ("ring", "ideal")
_PUNCT = "+-*^(),;/"


@dataclass(frozen=True)
class Token:
    kind: str  # 'ident', 'number', or one of the punctuation characters
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
        elif c.isspace():
            col += 1
            i += 1
        elif c == "#":
            while i < n and text[i] != "\n":
                i += 1
        elif c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("number", text[i:j], line, col))
            col += j - i
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("ident", text[i:j], line, col))
            col += j - i
            i = j
        elif c in _PUNCT:
            tokens.append(Token(c, c, line, col))
            col += 1
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r}", line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token], ring: Ring | None = None):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring

    # -- plumbing ------------------------------------------------------------

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            shown = tok.text or "end of input"
            raise ParseError(
                f"expected {what or kind!r}, found {shown!r}", tok.line, tok.column
            )
        return self.advance()

    def fail(self, message: str):
        tok = self.peek()
        raise ParseError(message, tok.line, tok.column)

    # -- polynomial expressions ----------------------------------------------

    def parse_poly(self) -> Polynomial:
        sign = 1
        if self.peek().kind in "+-":
            if self.advance().kind == "-":
                sign = -1
        poly = self.parse_term().scale(sign)
        while self.peek().kind in "+-":
            op = self.advance().kind
            term = self.parse_term()
            poly = poly + term if op == "+" else poly - term
        return poly

    def parse_term(self) -> Polynomial:
        poly = self.parse_factor()
        while self.peek().kind == "*":
            self.advance()
            poly = poly * self.parse_factor()
        return poly

    def parse_factor(self) -> Polynomial:
        base = self.parse_base()
        if self.peek().kind == "^":
            self.advance()
            tok = self.expect("number", "an exponent")
            base = base ** int(tok.text)
        return base

    def parse_base(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "number":
            return Polynomial.constant(self.ring, self.parse_number())
        if tok.kind == "ident":
            self.advance()
            try:
                return Polynomial.variable(self.ring, tok.text)
            except KeyError:
                raise ParseError(
                    f"unknown variable {tok.text!r}", tok.line, tok.column
                ) from None
        if tok.kind == "-":
            self.advance()
            return -self.parse_factor()
        if tok.kind == "(":
            self.advance()
            poly = self.parse_poly()
            self.expect(")")
            return poly
        self.fail(f"expected a polynomial, found {tok.text or 'end of input'!r}")

    def parse_number(self) -> Fraction:
        tok = self.expect("number")
        value = Fraction(int(tok.text))
        if self.peek().kind == "/":
            self.advance()
            den_tok = self.expect("number", "a denominator")
            den = int(den_tok.text)
            if den == 0:
                raise ParseError(
                    "zero denominator in rational literal", den_tok.line, den_tok.column
                )
            value /= den
        return value

    # -- document ------------------------------------------------------------

    def parse_document(self) -> "InputDocument":
        kw = self.expect("ident", "the keyword 'ring'")
        if kw.text != "ring":
            raise ParseError("a document starts with 'ring'", kw.line, kw.column)
        names = [self.expect("ident", "a variable name").text]
        while self.peek().kind == ",":
            self.advance()
            names.append(self.expect("ident", "a variable name").text)
        self.expect(";")
        seen = set()
        for name in names:
            if name in _KEYWORDS:
                self.fail(f"{name!r} cannot be used as a variable name")
            if name in seen:
                self.fail(f"duplicate variable {name!r}")
            seen.add(name)
        self.ring = Ring(tuple(names))

        kw = self.expect("ident", "the keyword 'ideal'")
        if kw.text != "ideal":
            raise ParseError("expected 'ideal'", kw.line, kw.column)
        gens = [self.parse_poly()]
        while self.peek().kind == ",":
            self.advance()
            gens.append(self.parse_poly())
        self.expect(";")
        self.expect("eof", "end of input")
        return InputDocument(ring=self.ring, generators=tuple(gens))


@dataclass(frozen=True)
class InputDocument:
    """A parsed description file plus optional run directives.

    The directives are not part of the file grammar; the CLI fills them in
    from command-line flags.
    """

    ring: Ring
    generators: tuple[Polynomial, ...]
    order: str | None = None
    seed: int | None = None
    max_degree: int | None = None
    truncate: int | None = None

    def ideal(self) -> Ideal:
        """The presented ideal; literal zero generators are dropped."""
        return Ideal(self.ring, self.generators)


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse a single polynomial expression over the given ring."""
    parser = _Parser(tokenize(text), ring)
    poly = parser.parse_poly()
    parser.expect("eof", "end of input")
    return poly


def parse_document(text: str) -> InputDocument:
    """Parse a full ideal description file."""
    return _Parser(tokenize(text)).parse_document()
