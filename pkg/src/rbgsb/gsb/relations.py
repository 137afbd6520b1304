"""Relation sets and reduction to normal form."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from ..algebra import AlgebraContext, ContextError, Polynomial, leading, make_monic
from ..starwords import substitute
from ..terms import STAR, Word


class ReductionError(RuntimeError):
    pass


@dataclass(frozen=True)
class ReductionStep:
    word: Word          # the word that was rewritten
    rule: int           # index of the relation used
    frame: Word         # star word with frame|_{leading(rule)} == word
    coeff: Fraction     # multiple of frame|_rule that was subtracted


@dataclass
class Reduction:
    normal_form: Polynomial
    trace: list[ReductionStep] = field(default_factory=list)


def _blocks(fs: tuple, path: tuple = ()) -> Iterator[tuple[tuple, tuple, int, int]]:
    # contiguous prime blocks at every nesting level, leftmost-outermost first
    n = len(fs)
    for i in range(n):
        for j in range(i + 1, n + 1):
            yield fs[i:j], path, i, j
        f = fs[i]
        if type(f) is not int:
            yield from _blocks(f.factors, path + (i,))


def _frame_at(fs: tuple, path: tuple, i: int, j: int) -> tuple:
    if not path:
        return fs[:i] + (STAR,) + fs[j:]
    k = path[0]
    inner = _frame_at(fs[k].factors, path[1:], i, j)
    return fs[:k] + (Word(inner),) + fs[k + 1:]


class RelationSet:
    """An ordered collection of monic relations over one context.

    Relations are normalised to be monic on construction.  Occurrence
    lookups and substituted frames are memoised per instance.
    """

    def __init__(self, relations: Iterable[Polynomial], ctx: AlgebraContext):
        rels = []
        for r in relations:
            if not r:
                raise ValueError("zero relation")
            rels.append(make_monic(r))
        self.relations: tuple[Polynomial, ...] = tuple(rels)
        self.ctx = ctx
        self.leads: tuple[Word, ...] = tuple(leading(r)[0] for r in rels)
        self._by_factors: dict[tuple, list[int]] = {}
        for idx, w in enumerate(self.leads):
            self._by_factors.setdefault(w.factors, []).append(idx)
        self._breadths = frozenset(len(w) for w in self.leads)
        self._matches: dict[Word, dict[int, Word]] = {}
        self._subst: dict[tuple[int, Word], Polynomial] = {}

    def __len__(self) -> int:
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)

    def __getitem__(self, i: int) -> Polynomial:
        return self.relations[i]

    def __getstate__(self):
        return {"relations": self.relations, "ctx": self.ctx}

    def __setstate__(self, state):
        self.__init__(state["relations"], state["ctx"])

    def matches(self, u: Word) -> dict[int, Word]:
        """Map from rule index to its leftmost-outermost frame in ``u``, for
        every rule whose leading word occurs in ``u``."""
        found = self._matches.get(u)
        if found is not None:
            return found
        found = {}
        if self._by_factors:
            lookup = self._by_factors.get
            breadths = self._breadths
            for block, path, i, j in _blocks(u.factors):
                if j - i not in breadths:
                    continue
                idxs = lookup(block)
                if idxs:
                    frame = None
                    for idx in idxs:
                        if idx not in found:
                            if frame is None:
                                frame = Word(_frame_at(u.factors, path, i, j))
                            found[idx] = frame
        self._matches[u] = found
        return found

    def find_redex(self, u: Word) -> tuple[int, Word] | None:
        """Lowest-index rule occurring in ``u`` with its leftmost-outermost frame."""
        m = self.matches(u)
        if not m:
            return None
        idx = min(m)
        return idx, m[idx]

    def is_reducible(self, u: Word) -> bool:
        return bool(self.matches(u))

    def substituted(self, idx: int, frame: Word) -> Polynomial:
        key = (idx, frame)
        p = self._subst.get(key)
        if p is None:
            p = substitute(frame, self.relations[idx], self.ctx)
            self._subst[key] = p
        return p


def _check_context(p: Polynomial, S: RelationSet, ctx: AlgebraContext | None) -> None:
    if ctx is not None and ctx != S.ctx:
        raise ContextError("polynomial and relation set come from different contexts")
    n = len(S.ctx.generators)

    def ok(w: Word) -> bool:
        for f in w.factors:
            if type(f) is int:
                if not 0 <= f < n:
                    return False
            elif not ok(f):
                return False
        return True

    for w in p.terms:
        if not ok(w):
            raise ContextError(f"word {w!r} uses generators outside the context")


def _subtract(work: dict, sub: Polynomial, a: Fraction) -> None:
    for w, c in sub.terms.items():
        v = work.get(w, 0) - a * c
        if v:
            work[w] = v
        else:
            work.pop(w, None)


def reduce(
    p: Polynomial,
    S: RelationSet,
    *,
    strategy: str = "greatest",
    max_steps: int | None = None,
    ctx: AlgebraContext | None = None,
) -> Reduction:
    """Normal form of ``p`` modulo ``S`` together with the rewriting trace.

    ``strategy="greatest"`` rewrites the greatest reducible word, using the
    lowest-index applicable rule at its leftmost-outermost occurrence.
    ``strategy="rule-index"`` instead picks the lowest-index rule occurring
    anywhere and rewrites the greatest word containing it.
    """
    _check_context(p, S, ctx)
    if strategy == "greatest":
        return _reduce_greatest(p, S, max_steps)
    if strategy == "rule-index":
        return _reduce_rule_index(p, S, max_steps)
    raise ValueError(f"unknown strategy {strategy!r}")


def _reduce_greatest(p: Polynomial, S: RelationSet, max_steps: int | None) -> Reduction:
    work = dict(p.terms)
    done: dict[Word, Fraction] = {}
    trace: list[ReductionStep] = []
    prev: tuple | None = None
    while work:
        u = max(work, key=lambda w: w.key)
        # leading word strictly decreases: this is the termination measure
        if prev is not None and not u.key < prev:
            raise ReductionError(f"leading word did not decrease at {u!r}")
        prev = u.key
        a = work[u]
        red = S.find_redex(u)
        if red is None:
            done[u] = a
            del work[u]
            continue
        idx, frame = red
        _subtract(work, S.substituted(idx, frame), a)
        if u in work:
            raise ReductionError(f"rewriting {u!r} by rule {idx} did not cancel it")
        trace.append(ReductionStep(u, idx, frame, a))
        if max_steps is not None and len(trace) > max_steps:
            raise ReductionError(f"no normal form within {max_steps} steps")
    return Reduction(Polynomial(done), trace)


def _reduce_rule_index(p: Polynomial, S: RelationSet, max_steps: int | None) -> Reduction:
    work = dict(p.terms)
    trace: list[ReductionStep] = []
    while True:
        best = None
        for u in work:
            m = S.matches(u)
            if m:
                idx = min(m)
                if best is None or idx < best[0] or (idx == best[0] and u.key > best[1].key):
                    best = (idx, u, m[idx])
        if best is None:
            break
        idx, u, frame = best
        a = work[u]
        _subtract(work, S.substituted(idx, frame), a)
        if u in work:
            raise ReductionError(f"rewriting {u!r} by rule {idx} did not cancel it")
        trace.append(ReductionStep(u, idx, frame, a))
        if max_steps is not None and len(trace) > max_steps:
            raise ReductionError(f"no normal form within {max_steps} steps")
    return Reduction(Polynomial(work), trace)


def normal_form(p: Polynomial, S: RelationSet) -> Polynomial:
    return reduce(p, S).normal_form
