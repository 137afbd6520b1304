"""Bounded Shirshov completion."""

from __future__ import annotations

import logging

from ..algebra import Polynomial, leading, make_monic
from ..starwords import find_occurrences
from .compositions import ALL_KINDS, enumerate_compositions
from .relations import RelationSet, reduce

log = logging.getLogger(__name__)


class CompletionLimitError(RuntimeError):
    """Raised when completion hits its round limit before quiescence."""

    def __init__(self, message: str, partial: RelationSet, rounds: int):
        super().__init__(message)
        self.partial = partial
        self.rounds = rounds


def _insert(rules: list[Polynomial], new: Polynomial, ctx) -> list[Polynomial]:
    """Add ``new`` and re-reduce every rule whose leading word it divides."""
    pending = [new]
    while pending:
        r = pending.pop(0)
        r = reduce(r, RelationSet(rules, ctx)).normal_form if rules else r
        if not r:
            continue
        r = make_monic(r)
        lead = leading(r)[0]
        keep, redo = [], []
        for s in rules:
            (redo if find_occurrences(leading(s)[0], lead) else keep).append(s)
        rules = keep + [r]
        pending.extend(redo)
    return rules


def complete(
    S: RelationSet,
    max_deg: int,
    mult_deg: int,
    max_rounds: int,
    kinds=ALL_KINDS,
) -> RelationSet:
    """Adjoin reduced nontrivial compositions until none remain within bounds.

    Compositions are processed in increasing order of their ambiguity word.
    Returns the completed set on quiescence; raises
    :class:`CompletionLimitError` if ``max_rounds`` rounds all added rules.
    """
    if max_deg < 1 or max_rounds < 1:
        raise ValueError("bounds and max_rounds must be positive")
    ctx = S.ctx
    rules = list(S.relations)
    for rnd in range(1, max_rounds + 1):
        current = RelationSet(rules, ctx)
        added = 0
        for comp in enumerate_compositions(current, max_deg, mult_deg, kinds):
            r = reduce(comp.difference, current).normal_form
            if r:
                rules = _insert(rules, r, ctx)
                current = RelationSet(rules, ctx)
                added += 1
        log.info("completion round %d: %d rule(s) added, %d total", rnd, added, len(rules))
        if not added:
            return current
    raise CompletionLimitError(
        f"completion did not settle within {max_rounds} rounds",
        RelationSet(rules, ctx),
        max_rounds,
    )
