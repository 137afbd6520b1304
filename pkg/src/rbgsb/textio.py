"""Parsing and canonical printing of polynomials and rules files.

Grammar (whitespace insensitive)::

    expr     := [sign] term (('+' | '-') term)*
    term     := [rational '*'] factor ('*' factor)*
    factor   := ident | 'P' '(' expr ')' | '(' expr ')'
    rational := integer ['/' positive-integer]
    ident    := letter (letter | digit)*

A bare ``0`` term denotes zero, so printed output always parses back.
``P`` is reserved.  Products are evaluated in the free Rota-Baxter algebra,
so ``P(x)*P(y)`` expands.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraContext, ContextError, Polynomial, apply_P, multiply, scale
from .terms import Word


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, col: int = 1):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<id>[A-Za-z][A-Za-z0-9]*)|(?P<op>[-+*/()=]))")


@dataclass
class _Tok:
    kind: str   # "num", "id", "op" or "end"
    text: str
    col: int


def _tokenize(text: str, line: int, offset: int = 0) -> list[_Tok]:
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, offset + pos + 1)
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), offset + m.start(kind) + 1))
        pos = m.end()
    toks.append(_Tok("end", "", offset + n + 1))
    return toks


class _Parser:
    def __init__(self, text: str, ctx: AlgebraContext, line: int = 1, offset: int = 0):
        self.toks = _tokenize(text, line, offset)
        self.i = 0
        self.ctx = ctx
        self.line = line

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str) -> ParseError:
        return ParseError(msg, self.line, self.tok.col)

    def eat(self, text: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.eat(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return p

    def expr(self) -> Polynomial:
        negate = self.eat("-")
        if not negate:
            self.eat("+")
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            if self.eat("+"):
                acc = acc + self.term()
            elif self.eat("-"):
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> Polynomial:
        coeff = Fraction(1)
        if self.tok.kind == "num":
            coeff = self.rational()
            if not self.eat("*"):
                if coeff == 0:
                    return Polynomial()   # printed form of the zero polynomial
                raise self.error("a coefficient must multiply a word (no constant terms)")
        acc = self.factor()
        while self.eat("*"):
            acc = multiply(acc, self.factor(), self.ctx)
        return scale(acc, coeff)

    def rational(self) -> Fraction:
        num = int(self.tok.text)
        self.i += 1
        if self.eat("/"):
            if self.tok.kind != "num":
                raise self.error("malformed rational: expected a denominator")
            den = int(self.tok.text)
            if den == 0:
                raise self.error("malformed rational: zero denominator")
            self.i += 1
            return Fraction(num, den)
        return Fraction(num)

    def factor(self) -> Polynomial:
        tok = self.tok
        if tok.kind == "id":
            self.i += 1
            if tok.text == "P":
                self.expect("(")
                inner = self.expr()
                self.expect(")")
                return apply_P(inner)
            try:
                r = self.ctx.rank(tok.text)
            except ContextError:
                raise ParseError(f"unknown identifier {tok.text!r}", self.line, tok.col) from None
            return Polynomial.monomial(Word((r,)))
        if self.eat("("):
            inner = self.expr()
            self.expect(")")
            return inner
        if tok.kind == "num":
            raise self.error("unexpected number; coefficients go at the start of a term")
        raise self.error(f"expected a factor, found {tok.text or 'end of input'!r}")


def parse_expr(text: str, ctx: AlgebraContext, line: int = 1, offset: int = 0) -> Polynomial:
    """Evaluate an expression into a canonical polynomial."""
    return _Parser(text, ctx, line, offset).parse()


def parse_word(text: str, ctx: AlgebraContext) -> Word:
    """Parse text that must denote a single word with coefficient one."""
    p = parse_expr(text, ctx)
    if len(p) != 1 or next(iter(p.terms.values())) != 1:
        raise ParseError(f"{text!r} is not a single word", 1, 1)
    return next(iter(p.terms))


def parse_rational(text: str, line: int = 1) -> Fraction:
    m = re.fullmatch(r"([+-]?\d+)(?:/(\d+))?", text.strip())
    if not m or (m.group(2) is not None and int(m.group(2)) == 0):
        raise ParseError(f"malformed rational {text!r}", line, 1)
    return Fraction(int(m.group(1)), int(m.group(2) or 1))


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def print_word(w: Word, ctx: AlgebraContext) -> str:
    return w.format(ctx.names)


def print_poly(p: Polynomial, ctx: AlgebraContext) -> str:
    """Canonical text: terms in descending order, unit coefficients omitted."""
    if not p:
        return "0"
    parts = []
    for k, (w, c) in enumerate(p.terms.items()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = print_word(w, ctx) if mag == 1 else f"{format_rational(mag)}*{print_word(w, ctx)}"
        if k == 0:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


@dataclass
class RulesFile:
    ctx: AlgebraContext
    relations: list[Polynomial]
    lines: list[int]


def parse_rules(text: str) -> RulesFile:
    """Parse a rules file: ``lambda`` and ``generators`` headers, then one
    relation per line (``expr`` or ``lhs = rhs``); ``#`` starts a comment."""
    lam: Fraction | None = None
    names: list[str] | None = None
    ctx: AlgebraContext | None = None
    rels: list[Polynomial] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        head, _, rest = line.strip().partition(" ")
        if head == "lambda":
            if ctx is not None or lam is not None:
                raise ParseError("'lambda' must appear once, before any relation", lineno, 1)
            lam = parse_rational(rest, lineno)
            continue
        if head == "generators":
            if ctx is not None or names is not None:
                raise ParseError("'generators' must appear once, before any relation", lineno, 1)
            names = rest.split()
            for n in names:
                if not re.fullmatch(r"[A-Za-z][A-Za-z0-9]*", n) or n == "P":
                    raise ParseError(f"invalid generator name {n!r}", lineno, 1)
            if not names:
                raise ParseError("'generators' needs at least one name", lineno, 1)
            continue
        if ctx is None:
            if names is None:
                raise ParseError("relation before 'generators' header", lineno, 1)
            try:
                ctx = AlgebraContext.from_names(names, lam or 0)
            except ValueError as e:
                raise ParseError(str(e), lineno, 1) from None
        if line.count("=") > 1:
            raise ParseError("more than one '='", lineno, line.index("=", line.index("=") + 1) + 1)
        if "=" in line:
            lhs, rhs = line.split("=")
            p = parse_expr(lhs, ctx, lineno) - parse_expr(rhs, ctx, lineno, len(lhs) + 1)
        else:
            p = parse_expr(line, ctx, lineno)
        if not p:
            raise ParseError("relation is identically zero", lineno, 1)
        rels.append(p)
        lines.append(lineno)
    if ctx is None:
        if names is None:
            raise ParseError("missing 'generators' header", 1, 1)
        ctx = AlgebraContext.from_names(names, lam or 0)
    return RulesFile(ctx, rels, lines)


def format_rules(relations, ctx: AlgebraContext, header: str | None = None) -> str:
    """Rules-file text for ``relations`` (each printed as ``poly`` = 0)."""
    out = []
    if header:
        out.extend(f"# {h}" for h in header.splitlines())
    out.append(f"lambda {format_rational(ctx.lam)}")
    out.append("generators " + " ".join(ctx.names))
    out.extend(print_poly(r, ctx) for r in relations)
    return "\n".join(out) + "\n"
