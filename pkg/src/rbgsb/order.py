"""The monomial well-order on Rota-Baxter words.

Words are compared first by ``(symbol count, P count)`` lexicographically.
At equal degree two P-primes compare by their payloads, two generators by
rank, and anything else lexicographically on the prime sequences.

``compare`` follows that definition literally.  ``Word.key`` (built in
:mod:`rbgsb.terms`) encodes the same order as a nested tuple and is what the
rest of the package sorts by; the test-suite checks the two agree.
"""

from __future__ import annotations

from enum import IntEnum
from typing import TYPE_CHECKING

from .terms import STAR, Word

if TYPE_CHECKING:
    from .algebra import AlgebraContext

LT, EQ, GT = -1, 0, 1


class Cmp(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


class UnknownGenerator(ValueError):
    pass


def _check(w: Word, n: int) -> None:
    for f in w.factors:
        if isinstance(f, Word):
            _check(f, n)
        elif not (0 <= f < n or f == STAR):
            raise UnknownGenerator(f"generator rank {f} not in context")


def _prime_as_word(f) -> Word:
    return Word((f,))


def _cmp(u: Word, v: Word) -> int:
    if u is v:
        return EQ
    du, dv = (u.total, u.pdeg), (v.total, v.pdeg)
    if du != dv:
        return GT if du > dv else LT
    if du == (1, 0):
        a, b = u.factors[0], v.factors[0]
        return GT if a > b else LT
    if u.is_p_prime and v.is_p_prime:
        return _cmp(u.factors[0], v.factors[0])
    for a, b in zip(u.factors, v.factors):
        if a is b:
            continue
        return _cmp(_prime_as_word(a), _prime_as_word(b))
    # equal degree rules out one prime sequence being a proper prefix of the other
    raise AssertionError(f"prefix case at equal degree: {u!r} vs {v!r}")


def compare(u: Word, v: Word, ctx: "AlgebraContext | None" = None) -> Cmp:
    """Three-way comparison of two words under the monomial order."""
    if ctx is not None:
        n = len(ctx.generators)
        _check(u, n)
        _check(v, n)
    return Cmp(_cmp(u, v))


def max_word(words) -> Word:
    return max(words, key=lambda w: w.key)
