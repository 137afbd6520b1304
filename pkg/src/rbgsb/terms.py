"""Rota-Baxter words: primes, degrees and bounded enumeration.

A word is a nonempty sequence of primes.  A prime is either a generator,
stored as its integer rank in the generator ordering, or ``P`` applied to a
word, stored as the payload ``Word`` itself.  Two ``P``-primes are never
adjacent.

Words are hash-consed: structurally equal words are the same object, so
equality is identity and hashing is cheap.  Every word carries a sort key
that realises the monomial order (see :mod:`rbgsb.order`).
"""

from __future__ import annotations

import weakref
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

#: Rank reserved for the placeholder symbol of star words.
STAR = -1

Factor = Union[int, "Word"]


class Generator(NamedTuple):
    name: str
    rank: int


class InvalidWord(ValueError):
    pass


class Word:
    """An element of the free monomial set, or a star word when it contains
    the placeholder rank ``STAR``."""

    __slots__ = ("factors", "total", "pdeg", "stars", "key", "_hash", "__weakref__")

    _table: "weakref.WeakValueDictionary[tuple, Word]" = weakref.WeakValueDictionary()

    factors: tuple
    total: int
    pdeg: int
    stars: int
    key: tuple

    def __new__(cls, factors: Iterable[Factor]) -> "Word":
        factors = tuple(factors)
        found = cls._table.get(factors)
        if found is not None:
            return found
        if not factors:
            raise InvalidWord("empty word")
        total = pdeg = stars = 0
        fkeys = []
        prev_p = False
        for f in factors:
            if type(f) is int:
                total += 1
                if f == STAR:
                    stars += 1
                fkeys.append((1, 0, f))
                prev_p = False
            elif isinstance(f, Word):
                if prev_p:
                    raise InvalidWord("adjacent P-primes")
                total += f.total + 1
                pdeg += f.pdeg + 1
                stars += f.stars
                fkeys.append((f.total + 1, f.pdeg + 1, f.key))
                prev_p = True
            else:
                raise TypeError(f"bad factor {f!r}")
        self = object.__new__(cls)
        self.factors = factors
        self.total = total
        self.pdeg = pdeg
        self.stars = stars
        self.key = (total, pdeg, tuple(fkeys))
        self._hash = hash(factors)
        return cls._table.setdefault(factors, self)

    def __reduce__(self):
        return (Word, (self.factors,))

    def __hash__(self) -> int:
        return self._hash

    # Equality is identity (interning); ordering follows the monomial order.
    def __lt__(self, other: "Word") -> bool:
        return self.key < other.key

    def __le__(self, other: "Word") -> bool:
        return self.key <= other.key

    def __gt__(self, other: "Word") -> bool:
        return self.key > other.key

    def __ge__(self, other: "Word") -> bool:
        return self.key >= other.key

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def breadth(self) -> int:
        return len(self.factors)

    @property
    def is_p_prime(self) -> bool:
        return len(self.factors) == 1 and isinstance(self.factors[0], Word)

    @property
    def first_is_p(self) -> bool:
        return isinstance(self.factors[0], Word)

    @property
    def last_is_p(self) -> bool:
        return isinstance(self.factors[-1], Word)

    def format(self, names: Sequence[str] | None = None) -> str:
        parts = []
        for f in self.factors:
            if isinstance(f, Word):
                parts.append(f"P({f.format(names)})")
            elif f == STAR:
                parts.append("★")
            elif names is None:
                parts.append(f"x{f}")
            else:
                parts.append(names[f])
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Word({self.format()})"


def gen(rank: int) -> Word:
    return Word((rank,))


def P(w: Word, n: int = 1) -> Word:
    """Wrap ``w`` in ``n`` applications of ``P``."""
    for _ in range(n):
        w = Word((w,))
    return w


def concat(*words: Word) -> Word | None:
    """Juxtapose words; ``None`` when a ``P``-prime would touch another."""
    factors: list = []
    for w in words:
        if factors and isinstance(factors[-1], Word) and w.first_is_p:
            return None
        factors.extend(w.factors)
    return Word(factors)


def deg_count(w: Word, symbols: Iterable[int | str]) -> int:
    """Occurrences of the given generator ranks and/or ``"P"`` in ``w``."""
    symbols = set(symbols)
    count_p = "P" in symbols

    def walk(word: Word) -> int:
        n = 0
        for f in word.factors:
            if isinstance(f, Word):
                n += count_p + walk(f)
            elif f in symbols:
                n += 1
        return n

    return walk(w)


def deg_profile(w: Word) -> tuple[int, int]:
    return (w.total, w.pdeg)


def p_power_split(w: Word) -> tuple[int, Word]:
    """Return ``(n, core)`` with ``w == P^n(core)`` and core not a P-prime."""
    n = 0
    while w.is_p_prime:
        w = w.factors[0]
        n += 1
    return n, w


def generator_ranks(gens: Iterable[Generator | int]) -> tuple[int, ...]:
    ranks = tuple(g.rank if isinstance(g, Generator) else int(g) for g in gens)
    if not ranks:
        raise ValueError("generator list is empty")
    return ranks


@lru_cache(maxsize=256)
def _primes(letters: tuple[int, ...], d: int) -> tuple[Word, ...]:
    # payloads of P-primes of total degree d (the P itself counts one)
    if d < 2:
        return ()
    return _words(letters, d - 1)


@lru_cache(maxsize=1024)
def _sequences(letters: tuple[int, ...], d: int, allow_p: bool) -> tuple[tuple, ...]:
    out = []
    if d == 1:
        return tuple((x,) for x in letters)
    for k in range(1, d + 1):
        heads: list = list(letters) if k == 1 else []
        if allow_p:
            heads.extend(_primes(letters, k))
        for head in heads:
            if k == d:
                out.append((head,))
            else:
                for rest in _sequences(letters, d - k, not isinstance(head, Word)):
                    out.append((head,) + rest)
    return tuple(out)


@lru_cache(maxsize=256)
def _words(letters: tuple[int, ...], d: int) -> tuple[Word, ...]:
    return tuple(Word(fs) for fs in _sequences(letters, d, True))


def words_of_degree(gens: Iterable[Generator | int], d: int) -> list[Word]:
    """All words of total degree exactly ``d``, ascending."""
    letters = generator_ranks(gens)
    return sorted(_words(letters, d), key=_key)


def enumerate_words(gens: Iterable[Generator | int], max_total: int) -> list[Word]:
    """All words with at most ``max_total`` symbols, ascending in the order."""
    letters = generator_ranks(gens)
    if max_total < 1:
        raise ValueError("max_total must be at least 1")
    out: list[Word] = []
    for d in range(1, max_total + 1):
        out.extend(_words(letters, d))
    out.sort(key=_key)
    return out


def iter_star_words(gens: Iterable[Generator | int], max_total: int) -> Iterator[Word]:
    """Words over the generators and ``STAR`` with exactly one ``STAR``."""
    letters = generator_ranks(gens) + (STAR,)
    for d in range(1, max_total + 1):
        for w in _words(letters, d):
            if w.stars == 1:
                yield w


def _key(w: Word) -> tuple:
    return w.key
