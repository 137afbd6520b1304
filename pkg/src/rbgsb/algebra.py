"""Exact linear combinations of words and the Rota-Baxter product."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .terms import Generator, Word, P, p_power_split

Rational = Fraction


class ContextError(ValueError):
    """Raised when objects from different algebra contexts are mixed."""


@dataclass(frozen=True)
class AlgebraContext:
    """Weight of the Rota-Baxter operator and the ordered generator set."""

    generators: tuple[Generator, ...]
    lam: Fraction = Fraction(0)
    _index: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if not self.generators:
            raise ValueError("a context needs at least one generator")
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        if [g.rank for g in self.generators] != list(range(len(names))):
            raise ValueError("generator ranks must follow declaration order")
        object.__setattr__(self, "lam", Fraction(self.lam))
        object.__setattr__(self, "_index", {g.name: g.rank for g in self.generators})

    @classmethod
    def from_names(cls, names: Iterable[str], lam=0) -> "AlgebraContext":
        return cls(tuple(Generator(n, i) for i, n in enumerate(names)), Fraction(lam))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(range(len(self.generators)))

    def rank(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ContextError(f"unknown generator {name!r}") from None

    def word(self, *names: str) -> Word:
        """Convenience: a plain generator word from names."""
        return Word(self.rank(n) for n in names)


class Polynomial:
    """A finite combination of words with nonzero rational coefficients.

    Terms are stored in descending monomial order, so the first term is the
    leading one.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, Fraction] | Iterable[tuple[Word, Fraction]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, Fraction] = {}
        for w, c in items:
            acc[w] = acc.get(w, 0) + c
        self.terms = {
            w: Fraction(c)
            for w, c in sorted(acc.items(), key=lambda kv: kv[0].key, reverse=True)
            if c != 0
        }

    @classmethod
    def _from_sorted(cls, terms: dict) -> "Polynomial":
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def monomial(cls, w: Word, c=1) -> "Polynomial":
        return cls._from_sorted({w: Fraction(c)} if c else {})

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._from_sorted({})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Word, Fraction]]:
        return iter(self.terms.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return add(self, other)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return add(self, other, -1)

    def __neg__(self) -> "Polynomial":
        return scale(self, -1)

    def coeff(self, w: Word) -> Fraction:
        return self.terms.get(w, Fraction(0))

    def words(self) -> list[Word]:
        return list(self.terms)

    def leading(self) -> tuple[Word, Fraction]:
        return leading(self)

    def __repr__(self) -> str:
        if not self.terms:
            return "Polynomial(0)"
        return "Polynomial(" + " + ".join(f"{c}*{w.format()}" for w, c in self.terms.items()) + ")"


def add(p: Polynomial, q: Polynomial, c=1) -> Polynomial:
    """``p + c*q``."""
    acc = dict(p.terms)
    for w, a in q.terms.items():
        acc[w] = acc.get(w, 0) + c * a
    return Polynomial(acc)


def scale(p: Polynomial, c) -> Polynomial:
    c = Fraction(c)
    if c == 0:
        return Polynomial.zero()
    return Polynomial._from_sorted({w: c * a for w, a in p.terms.items()})


def apply_P(p: Polynomial) -> Polynomial:
    # wrapping preserves relative order
    return Polynomial._from_sorted({P(w): a for w, a in p.terms.items()})


@lru_cache(maxsize=1 << 17)
def _prime_product(a: Word, b: Word, lam: Fraction) -> tuple[tuple[Word, Fraction], ...]:
    """Payloads (with coefficients) of ``P(a) * P(b)`` expanded into P-primes."""
    acc: dict[Word, Fraction] = {}
    for w, c in _word_product(P(a), b, lam):
        acc[w] = acc.get(w, 0) + c
    for w, c in _word_product(a, P(b), lam):
        acc[w] = acc.get(w, 0) + c
    if lam:
        for w, c in _word_product(a, b, lam):
            acc[w] = acc.get(w, 0) + lam * c
    return tuple((w, c) for w, c in acc.items() if c)


@lru_cache(maxsize=1 << 17)
def _word_product(u: Word, v: Word, lam: Fraction) -> tuple[tuple[Word, Fraction], ...]:
    uf, vf = u.factors, v.factors
    last, first = uf[-1], vf[0]
    if isinstance(last, Word) and isinstance(first, Word):
        head, tail = uf[:-1], vf[1:]
        return tuple(
            (Word(head + (payload,) + tail), c)
            for payload, c in _prime_product(last, first, lam)
        )
    return ((Word(uf + vf), Fraction(1)),)


def word_product(u: Word, v: Word, ctx: AlgebraContext) -> Polynomial:
    return Polynomial(_word_product(u, v, ctx.lam))


def multiply(p: Polynomial, q: Polynomial, ctx: AlgebraContext) -> Polynomial:
    """Bilinear extension of the word product at weight ``ctx.lam``."""
    lam = ctx.lam
    acc: dict[Word, Fraction] = {}
    for u, a in p.terms.items():
        for v, b in q.terms.items():
            ab = a * b
            for w, c in _word_product(u, v, lam):
                acc[w] = acc.get(w, 0) + ab * c
    return Polynomial(acc)


def multiply_words(ctx: AlgebraContext, *words: Word) -> Polynomial:
    out = Polynomial.monomial(words[0])
    for w in words[1:]:
        out = multiply(out, Polynomial.monomial(w), ctx)
    return out


class ZeroPolynomialError(ValueError):
    pass


def leading(p: Polynomial) -> tuple[Word, Fraction]:
    if not p.terms:
        raise ZeroPolynomialError("zero polynomial has no leading term")
    return next(iter(p.terms.items()))


def make_monic(p: Polynomial) -> Polynomial:
    _, c = leading(p)
    return p if c == 1 else scale(p, 1 / c)


@lru_cache(maxsize=None)
def _alpha(n: int, m: int, s: int) -> int:
    if m == 0:
        return 0
    if s == n:
        return 1
    return _alpha(n - 1, m, s) + _alpha(n, m - 1, s)


def pnm_coefficients(n: int, m: int) -> tuple[dict[int, int], dict[int, int]]:
    """Coefficients of ``P^n(u) * P^m(v)`` on ``P^{n+m-s}(P^s(u) v)`` (alpha,
    indexed by ``s``) and on ``P^{n+m-l}(u P^l(v))`` (beta, indexed by ``l``)."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    alpha = {s: _alpha(n, m, s) for s in range(1, n + 1)}
    # beta is alpha with the roles of the two factors exchanged
    beta = {l: _alpha(m, n, l) for l in range(1, m + 1)}
    return alpha, beta


def predict_product_leading(u: Word, v: Word, ctx: AlgebraContext) -> Word:
    """Leading word of ``u * v`` without expanding the product."""
    uf, vf = u.factors, v.factors
    if isinstance(uf[-1], Word) and isinstance(vf[0], Word):
        mid = _predict_prime(Word((uf[-1],)), Word((vf[0],)))
        return Word(uf[:-1] + mid.factors + vf[1:])
    return Word(uf + vf)


def _predict_prime(a: Word, b: Word) -> Word:
    # a = P^n(a'), b = P^m(b') with n, m >= 1: the leading word is
    # P^{n+m-1} of the leading word of P(a') * b'
    n, a_core = p_power_split(a)
    m, b_core = p_power_split(b)
    bf = b_core.factors
    if isinstance(bf[0], Word):
        head = _predict_prime(P(a_core), Word((bf[0],)))
        inner = Word(head.factors + bf[1:])
    else:
        inner = Word((a_core,) + bf)
    return P(inner, n + m - 1)


def polynomial_from_words(pairs: Sequence[tuple[Word, object]]) -> Polynomial:
    return Polynomial((w, Fraction(c)) for w, c in pairs)
