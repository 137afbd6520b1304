"""Composition (critical pair) enumeration and triviality checking."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..algebra import Polynomial, leading, multiply
from ..starwords import HOLE, proper_overlaps, substitute
from ..terms import P, Word, enumerate_words
from .relations import RelationSet, ReductionStep, _blocks, _frame_at, reduce

INTERSECTION = "intersection"
INCLUSION = "inclusion"
LEFT_MULT = "left_mult"
RIGHT_MULT = "right_mult"
ALL_KINDS = (INTERSECTION, INCLUSION, LEFT_MULT, RIGHT_MULT)
AMBIGUITY_KINDS = (INTERSECTION, INCLUSION)

_KIND_RANK = {k: i for i, k in enumerate(ALL_KINDS)}


@dataclass
class Composition:
    """One critical pair.

    For intersection and inclusion compositions ``w`` is the ambiguity and
    ``g_index`` the second relation.  Multiplication compositions have no
    ambiguity; they carry the P-prime ``multiplier`` instead and ``top`` is
    the leading word of the unreduced product.
    """

    kind: str
    f_index: int
    g_index: int | None
    difference: Polynomial
    top: Word
    w: Word | None = None
    frame: Word | None = None          # inclusion: w == frame|_{lead(g)}
    a: Word | None = None              # intersection: w == lead(f) a == b lead(g)
    b: Word | None = None
    multiplier: Word | None = None
    remainder: Polynomial | None = None
    trace: list[ReductionStep] | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.w is not None and self.difference:
            if not leading(self.difference)[0] < self.w:
                raise AssertionError(f"composition difference does not drop below {self.w!r}")

    @property
    def sort_key(self):
        return (self.top.key, _KIND_RANK[self.kind], self.f_index,
                -1 if self.g_index is None else self.g_index)

    @property
    def checked(self) -> bool:
        return self.remainder is not None

    @property
    def trivial(self) -> bool:
        if self.remainder is None:
            raise ValueError("composition has not been checked")
        return not self.remainder


def _intersections(S: RelationSet, max_deg: int) -> list[Composition]:
    ctx = S.ctx
    by_first: dict = {}
    for j, lead in enumerate(S.leads):
        by_first.setdefault(lead.factors[0], []).append(j)
    out = []
    for i, li in enumerate(S.leads):
        fi = li.factors
        for k in range(1, len(fi)):
            suffix = fi[-k:]
            for j in by_first.get(suffix[0], ()):
                fj = S.leads[j].factors
                if len(fj) <= k or fj[:k] != suffix:
                    continue
                a = Word(fj[k:])
                if li.total + a.total > max_deg:
                    continue
                b = Word(fi[:-k])
                w = Word(fi + fj[k:])
                diff = multiply(S[i], Polynomial.monomial(a), ctx) - multiply(
                    Polynomial.monomial(b), S[j], ctx
                )
                out.append(Composition(INTERSECTION, i, j, diff, w, w=w, a=a, b=b))
    return out


def _inclusions(S: RelationSet, max_deg: int) -> list[Composition]:
    ctx = S.ctx
    out = []
    for i, li in enumerate(S.leads):
        if li.total > max_deg:
            continue
        for block, path, s, e in _blocks(li.factors):
            for j in S._by_factors.get(block, ()):
                frame = Word(_frame_at(li.factors, path, s, e))
                if frame is HOLE and j <= i:
                    # self-inclusion is vacuous; equal leaders are taken once
                    continue
                diff = S[i] - substitute(frame, S[j], ctx)
                out.append(Composition(INCLUSION, i, j, diff, li, w=li, frame=frame))
    return out


def _multiplications(S: RelationSet, max_deg: int, mult_deg: int, kinds) -> list[Composition]:
    ctx = S.ctx
    out = []
    if mult_deg < 1:
        return out
    multipliers = [P(v) for v in enumerate_words(ctx.ranks, mult_deg)]
    for i, li in enumerate(S.leads):
        for u in multipliers:
            if li.total + u.total > max_deg:
                continue
            mono = Polynomial.monomial(u)
            if RIGHT_MULT in kinds and li.last_is_p:
                prod = multiply(S[i], mono, ctx)
                out.append(Composition(RIGHT_MULT, i, None, prod, leading(prod)[0], multiplier=u))
            if LEFT_MULT in kinds and li.first_is_p:
                prod = multiply(mono, S[i], ctx)
                out.append(Composition(LEFT_MULT, i, None, prod, leading(prod)[0], multiplier=u))
    return out


def enumerate_compositions(
    S: RelationSet,
    max_deg: int,
    mult_deg: int,
    kinds: Sequence[str] = ALL_KINDS,
) -> list[Composition]:
    """All compositions of ``S`` whose ambiguity (or product) has at most
    ``max_deg`` symbols, multipliers ``P(v)`` ranging over ``|v| <= mult_deg``.
    Sorted ascending by ambiguity word."""
    if max_deg < 1:
        raise ValueError("max_deg must be positive")
    unknown = set(kinds) - set(ALL_KINDS)
    if unknown:
        raise ValueError(f"unknown composition kinds {sorted(unknown)}")
    comps: list[Composition] = []
    if INTERSECTION in kinds:
        comps.extend(_intersections(S, max_deg))
    if INCLUSION in kinds:
        comps.extend(_inclusions(S, max_deg))
    if LEFT_MULT in kinds or RIGHT_MULT in kinds:
        comps.extend(_multiplications(S, max_deg, mult_deg, kinds))
    comps.sort(key=lambda c: c.sort_key)
    return comps


def certify(comp: Composition, S: RelationSet) -> Composition:
    """Reduce the composition's difference and record remainder and trace."""
    r = reduce(comp.difference, S)
    comp.remainder = r.normal_form
    comp.trace = r.trace
    return comp


def is_trivial(comp: Composition, S: RelationSet) -> bool:
    return not certify(comp, S).remainder


@dataclass
class GSBReport:
    passed: bool
    max_deg: int
    mult_deg: int
    kinds: tuple[str, ...]
    compositions: list[Composition]

    @property
    def failures(self) -> list[Composition]:
        return [c for c in self.compositions if not c.trivial]

    @property
    def counts(self) -> dict[str, dict[str, int]]:
        out = {k: {"total": 0, "nontrivial": 0} for k in self.kinds}
        for c in self.compositions:
            out[c.kind]["total"] += 1
            out[c.kind]["nontrivial"] += not c.trivial
        return out

    @property
    def verdict(self) -> str:
        state = "GSB certified" if self.passed else "not a GSB"
        return f"{state} up to degree {self.max_deg} (multipliers up to degree {self.mult_deg})"


def _remainder_job(args):
    S, diff = args
    r = reduce(diff, S)
    return r.normal_form, r.trace


def check_compositions(comps: list[Composition], S: RelationSet, jobs: int = 1) -> list[Composition]:
    if jobs > 1 and len(comps) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_remainder_job, ((S, c.difference) for c in comps), chunksize=16)
            for c, (rem, trace) in zip(comps, results):
                c.remainder, c.trace = rem, trace
    else:
        for c in comps:
            certify(c, S)
    return comps


def check_gsb(
    S: RelationSet,
    max_deg: int,
    mult_deg: int,
    kinds: Iterable[str] = ALL_KINDS,
    jobs: int = 1,
) -> GSBReport:
    """Check every composition within the bounds for triviality."""
    kinds = tuple(k for k in ALL_KINDS if k in set(kinds))
    comps = check_compositions(enumerate_compositions(S, max_deg, mult_deg, kinds), S, jobs)
    passed = all(c.trivial for c in comps)
    return GSBReport(passed, max_deg, mult_deg, kinds, comps)
