"""Star words: words with a single placeholder, and occurrence search.

A star word is an ordinary :class:`~rbgsb.terms.Word` over the generators
plus the reserved rank ``STAR``; the placeholder behaves like a generator
for the adjacency rule.  Substituting a polynomial evaluates the frame
through the product, so P-adjacency created by the substitution is expanded.
"""

from __future__ import annotations

from typing import Iterator

from .algebra import (
    AlgebraContext,
    Polynomial,
    apply_P,
    leading,
    multiply,
)
from .terms import STAR, Word

#: The identity frame.
HOLE = Word((STAR,))


def star_word(factors) -> Word:
    w = Word(factors)
    if w.stars != 1:
        raise ValueError(f"star word needs exactly one placeholder, got {w.stars}")
    return w


def _star_index(fs: tuple) -> int:
    for i, f in enumerate(fs):
        if type(f) is int:
            if f == STAR:
                return i
        elif f.stars:
            return i
    raise ValueError("no placeholder in frame")


def substitute(c: Word, p: Polynomial, ctx: AlgebraContext) -> Polynomial:
    """Evaluate the frame ``c`` with the placeholder replaced by ``p``."""
    fs = c.factors
    i = _star_index(fs)
    inner = p if fs[i] == STAR else apply_P(substitute(fs[i], p, ctx))
    if i:
        inner = multiply(Polynomial.monomial(Word(fs[:i])), inner, ctx)
    if i + 1 < len(fs):
        inner = multiply(inner, Polynomial.monomial(Word(fs[i + 1:])), ctx)
    return inner


def substitute_word_strict(c: Word, w: Word) -> Word | None:
    """Textual replacement of the placeholder by ``w``; ``None`` if the
    result has adjacent P-primes."""
    fs = c.factors
    i = _star_index(fs)
    if fs[i] == STAR:
        left, right = fs[:i], fs[i + 1:]
        if left and isinstance(left[-1], Word) and w.first_is_p:
            return None
        if right and isinstance(right[0], Word) and w.last_is_p:
            return None
        return Word(left + w.factors + right)
    inner = substitute_word_strict(fs[i], w)
    if inner is None:
        return None
    return Word(fs[:i] + (inner,) + fs[i + 1:])


def is_normal_s_word(c: Word, s: Polynomial, ctx: AlgebraContext, verify: bool = False) -> bool:
    """Whether ``c|_s`` is a normal s-word.

    The fast path only asks whether substituting the leading word stays a
    plain word; ``verify=True`` also expands ``c|_s`` and compares leaders.
    """
    top, _ = leading(s)
    strict = substitute_word_strict(c, top)
    if strict is None:
        return False
    if verify:
        return leading(substitute(c, s, ctx))[0] is strict
    return True


def _occurrences(fs: tuple, pat: tuple) -> Iterator[tuple]:
    k = len(pat)
    n = len(fs)
    for i in range(n):
        if i + k <= n and fs[i:i + k] == pat:
            yield fs[:i] + (STAR,) + fs[i + k:]
        f = fs[i]
        if type(f) is not int:
            for inner in _occurrences(f.factors, pat):
                yield fs[:i] + (Word(inner),) + fs[i + 1:]


def find_occurrences(host: Word, pattern: Word) -> list[Word]:
    """All frames ``c`` with ``substitute_word_strict(c, pattern) == host``,
    leftmost-outermost first."""
    return [Word(fs) for fs in _occurrences(host.factors, pattern.factors)]


def proper_overlaps(w1: Word, w2: Word) -> list[tuple[Word, Word, Word]]:
    """Triples ``(a, b, w)`` with ``w = w1 a = b w2`` where a nonempty suffix
    of ``w1`` is a prefix of ``w2`` and neither ``a`` nor ``b`` is empty."""
    f1, f2 = w1.factors, w2.factors
    out = []
    for k in range(min(len(f1), len(f2)) - 1, 0, -1):
        if f1[-k:] == f2[:k]:
            a = Word(f2[k:])
            b = Word(f1[:-k])
            out.append((a, b, Word(f1 + f2[k:])))
    return out
