"""Normal-form basis enumeration and the truncated ideal-dimension oracle."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..algebra import Polynomial
from ..starwords import substitute
from ..terms import Word, enumerate_words, iter_star_words
from .relations import RelationSet


def irr_enumerate(S: RelationSet, max_deg: int) -> list[Word]:
    """Words of degree at most ``max_deg`` containing no leading word of S,
    ascending."""
    if max_deg < 1:
        raise ValueError("max_deg must be at least 1")
    return [u for u in enumerate_words(S.ctx.ranks, max_deg) if not S.is_reducible(u)]


class EchelonBasis:
    """Incremental exact row reduction of sparse rational vectors keyed by words.

    Each stored row is normalised so its greatest word has coefficient one.
    """

    def __init__(self):
        self.pivots: dict[Word, dict[Word, Fraction]] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    def add(self, row: dict[Word, Fraction]) -> bool:
        """Insert ``row``; return True if it increased the rank."""
        row = {w: Fraction(c) for w, c in row.items() if c}
        while row:
            lead = max(row, key=lambda w: w.key)
            piv = self.pivots.get(lead)
            if piv is None:
                c = row[lead]
                self.pivots[lead] = {w: a / c for w, a in row.items()}
                return True
            c = row[lead]
            for w, a in piv.items():
                v = row.get(w, 0) - c * a
                if v:
                    row[w] = v
                else:
                    row.pop(w, None)
        return False


@dataclass
class OracleSummary:
    max_deg: int
    ideal_dim: int
    irr_count: int
    word_count: int

    @property
    def balanced(self) -> bool:
        return self.ideal_dim + self.irr_count == self.word_count


def ideal_span_dim(S: RelationSet, max_deg: int) -> int:
    """Dimension of the span of all ``c|_s`` whose leading word ``c|_{lead s}``
    has at most ``max_deg`` symbols.

    Equals the dimension of the degree-``max_deg`` truncation of the ideal
    when S is a Groebner-Shirshov basis up to that degree; otherwise it is a
    lower bound.
    """
    if max_deg < 1:
        raise ValueError("max_deg must be at least 1")
    basis = EchelonBasis()
    ctx = S.ctx
    frames_by_room: dict[int, list[Word]] = {}
    for s, lead in zip(S.relations, S.leads):
        room = max_deg - lead.total + 1
        if room < 1:
            continue
        if room not in frames_by_room:
            frames_by_room[room] = list(iter_star_words(ctx.ranks, room))
        for c in frames_by_room[room]:
            basis.add(substitute(c, s, ctx).terms)
    return len(basis)


def oracle_summary(S: RelationSet, max_deg: int) -> OracleSummary:
    return OracleSummary(
        max_deg,
        ideal_span_dim(S, max_deg),
        len(irr_enumerate(S, max_deg)),
        len(enumerate_words(S.ctx.ranks, max_deg)),
    )
