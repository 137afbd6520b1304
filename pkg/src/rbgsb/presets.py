"""Relation generators for the commutative and dendriform presentations."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from pathlib import Path
from typing import Iterable, Sequence

from .algebra import AlgebraContext, Polynomial
from .gsb import RelationSet
from .terms import P, Word, enumerate_words, gen

Vector = tuple[Fraction, ...]
Table = tuple[tuple[Vector, ...], ...]

OPS = ("prec", "succ", "circ")


class PresetError(ValueError):
    pass


@dataclass(frozen=True)
class DendriformData:
    """Structure constants of a dendriform di- or trialgebra on a basis.

    ``prec[i][j]`` is the coordinate vector of ``x_i < x_j`` (and similarly
    for ``succ`` and ``circ``).  ``circ`` is ``None`` for a dialgebra.
    """

    basis: tuple[str, ...]
    prec: Table
    succ: Table
    circ: Table | None = None

    def __post_init__(self):
        n = len(self.basis)
        for name in OPS:
            table = getattr(self, name)
            if table is None:
                continue
            if len(table) != n or any(len(row) != n for row in table):
                raise PresetError(f"{name} table is not {n}x{n}")
            if any(len(v) != n for row in table for v in row):
                raise PresetError(f"{name} table has entries of the wrong dimension")

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @classmethod
    def from_rows(cls, basis: Sequence[str], rows: dict[str, dict[tuple[int, int], Sequence]],
                  trialgebra: bool = False) -> "DendriformData":
        """Build from sparse ``{op: {(i, j): coords}}`` with 0-based indices;
        missing products are zero."""
        n = len(basis)
        zero = tuple(Fraction(0) for _ in range(n))

        def table(op: str) -> Table:
            entries = rows.get(op, {})
            return tuple(
                tuple(tuple(Fraction(c) for c in entries.get((i, j), zero)) for j in range(n))
                for i in range(n)
            )

        return cls(tuple(basis), table("prec"), table("succ"),
                   table("circ") if trialgebra or "circ" in rows else None)

    def context(self, lam) -> AlgebraContext:
        return AlgebraContext.from_names(self.basis, lam)


def _bilinear(table: Table, x: Vector, y: Vector) -> Vector:
    n = len(x)
    out = [Fraction(0)] * n
    for i, a in enumerate(x):
        if not a:
            continue
        for j, b in enumerate(y):
            if not b:
                continue
            ab = a * b
            for k, c in enumerate(table[i][j]):
                if c:
                    out[k] += ab * c
    return tuple(out)


def _vadd(*vs: Vector) -> Vector:
    return tuple(sum(cs, Fraction(0)) for cs in zip(*vs))


@dataclass
class AxiomReport:
    kind: str
    violations: list[tuple[int, tuple[int, int, int]]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def violated_axioms(self) -> list[int]:
        return sorted({a for a, _ in self.violations})


def dendriform_axiom_check(data: DendriformData, kind: str = "di") -> AxiomReport:
    """Evaluate every dendriform axiom on every triple of basis vectors."""
    if kind not in ("di", "tri"):
        raise ValueError("kind must be 'di' or 'tri'")
    if kind == "tri" and data.circ is None:
        raise PresetError("trialgebra check needs a circ table")
    n = data.dimension
    basis = [tuple(Fraction(int(i == k)) for k in range(n)) for i in range(n)]

    def lt(a, b):
        return _bilinear(data.prec, a, b)

    def gt(a, b):
        return _bilinear(data.succ, a, b)

    def o(a, b):
        return _bilinear(data.circ, a, b)

    if kind == "di":
        axioms = [
            lambda x, y, z: (lt(lt(x, y), z), lt(x, _vadd(lt(y, z), gt(y, z)))),
            lambda x, y, z: (lt(gt(x, y), z), gt(x, lt(y, z))),
            lambda x, y, z: (gt(_vadd(lt(x, y), gt(x, y)), z), gt(x, gt(y, z))),
        ]
    else:
        def star(a, b):
            return _vadd(lt(a, b), gt(a, b), o(a, b))

        axioms = [
            lambda x, y, z: (lt(lt(x, y), z), lt(x, star(y, z))),
            lambda x, y, z: (lt(gt(x, y), z), gt(x, lt(y, z))),
            lambda x, y, z: (gt(star(x, y), z), gt(x, gt(y, z))),
            lambda x, y, z: (o(gt(x, y), z), gt(x, o(y, z))),
            lambda x, y, z: (o(lt(x, y), z), o(x, gt(y, z))),
            lambda x, y, z: (lt(o(x, y), z), o(x, lt(y, z))),
            lambda x, y, z: (o(o(x, y), z), o(x, o(y, z))),
        ]
    report = AxiomReport(kind)
    for number, axiom in enumerate(axioms, start=1):
        for i, j, k in product(range(n), repeat=3):
            lhs, rhs = axiom(basis[i], basis[j], basis[k])
            if lhs != rhs:
                report.violations.append((number, (i, j, k)))
    return report


def _lin(v: Vector) -> Polynomial:
    return Polynomial((gen(k), c) for k, c in enumerate(v) if c)


def _times(*parts) -> Polynomial:
    # parts: Words or coordinate vectors; no P-primes meet, so juxtapose
    out = [(tuple(), Fraction(1))]
    for part in parts:
        if isinstance(part, Word):
            out = [(fs + part.factors, c) for fs, c in out]
        else:
            out = [(fs + (k,), c * a) for fs, c in out for k, a in enumerate(part) if a]
    return Polynomial((Word(fs), c) for fs, c in out)


def commutative_relations(ctx: AlgebraContext, instantiation_deg: int) -> RelationSet:
    """``x_i x_j - x_j x_i`` for ``i > j`` and ``P(u) x_i - x_i P(u)`` for
    every word ``u`` with at most ``instantiation_deg`` symbols."""
    if instantiation_deg < 1:
        raise ValueError("instantiation_deg must be at least 1")
    ranks = ctx.ranks
    rels = []
    for i in ranks:
        for j in ranks:
            if i > j:
                rels.append(Polynomial({Word((i, j)): 1, Word((j, i)): -1}))
    for u in enumerate_words(ranks, instantiation_deg):
        for i in ranks:
            rels.append(Polynomial({Word((u, i)): 1, Word((i, u)): -1}))
    return RelationSet(rels, ctx)


def _y1(ranks: tuple[int, ...], d: int) -> list[tuple]:
    # nondecreasing generator sequences of length d
    if d == 0:
        return [()]
    return [(r,) + rest for r in ranks for rest in _y1(ranks, d - 1) if not rest or r <= rest[0]]


def _y2(ranks: tuple[int, ...], d: int) -> list[Word]:
    out = []
    for l in range(1, d):
        inner_deg = d - l
        inner = [Word(fs) for fs in _y1(ranks, inner_deg)]
        for a in range(1, inner_deg - 1):
            for head in _y1(ranks, a):
                for tail in _y2(ranks, inner_deg - a):
                    inner.append(Word(head + tail.factors))
        out.extend(P(w, l) for w in inner)
    return out


def commutative_basis_closed_form(ctx_or_gens, max_deg: int) -> list[Word]:
    """Sorted generator words, nested ``P^{l_1}(u_1 P^{l_2}(... u_t))`` shapes
    with sorted ``u_j``, and their products, up to ``max_deg`` symbols."""
    ranks = ctx_or_gens.ranks if isinstance(ctx_or_gens, AlgebraContext) else tuple(ctx_or_gens)
    out: list[Word] = []
    for d in range(1, max_deg + 1):
        out.extend(Word(fs) for fs in _y1(ranks, d))
        out.extend(_y2(ranks, d))
        for a in range(1, d - 1):
            for head in _y1(ranks, a):
                for tail in _y2(ranks, d - a):
                    out.append(Word(head + tail.factors))
    return sorted(set(out), key=lambda w: w.key)


def closed_form_parts(ctx: AlgebraContext, max_deg: int) -> dict[str, list[Word]]:
    ranks = ctx.ranks
    y1, y2, y3 = [], [], []
    for d in range(1, max_deg + 1):
        y1.extend(Word(fs) for fs in _y1(ranks, d))
        y2.extend(_y2(ranks, d))
        for a in range(1, d - 1):
            for head in _y1(ranks, a):
                y3.extend(Word(head + t.factors) for t in _y2(ranks, d - a))
    return {"Y1": y1, "Y2": y2, "Y3": y3}


def _require_lambda(lam) -> Fraction:
    lam = Fraction(lam)
    if lam == 0:
        raise PresetError("the dendriform presets need a nonzero weight")
    return lam


DI_FAMILIES = ("f1", "f2", "f3")
TRI_FAMILIES = ("f4", "f5", "f6")


def dialgebra_enveloping_relations(
    data: DendriformData,
    lam,
    families: Iterable[str] = DI_FAMILIES,
    check_axioms: bool = True,
) -> RelationSet:
    """Relations of the enveloping Rota-Baxter algebra of a dendriform
    dialgebra, over all basis index tuples."""
    lam = _require_lambda(lam)
    families = set(families)
    if families - set(DI_FAMILIES):
        raise PresetError(f"unknown families {sorted(families - set(DI_FAMILIES))}")
    if check_axioms:
        report = dendriform_axiom_check(data, "di")
        if not report.passed:
            raise PresetError(f"dialgebra axioms {report.violated_axioms()} fail")
    ctx = data.context(lam)
    n = data.dimension
    x = [gen(i) for i in range(n)]
    rels = []
    if "f1" in families:
        for i, j in product(range(n), repeat=2):
            rels.append(Polynomial({Word((i, x[j])): 1, Word((i, j)): lam})
                        - _lin(data.prec[i][j]))
    if "f2" in families:
        for i, j in product(range(n), repeat=2):
            rels.append(Polynomial({Word((x[i], j)): 1}) - _lin(data.succ[i][j]))
    if "f3" in families:
        inv = 1 / lam
        for i, j, l in product(range(n), repeat=3):
            p = Polynomial({Word((i, j, l)): 1})
            p = p - _scaled(_times(data.prec[i][j], x[l]), inv)
            p = p + _scaled(_times(x[i], data.succ[j][l]), inv)
            rels.append(p)
    return RelationSet(rels, ctx)


def trialgebra_enveloping_relations(
    data: DendriformData,
    lam,
    families: Iterable[str] = TRI_FAMILIES,
    check_axioms: bool = True,
) -> RelationSet:
    """Relations of the enveloping Rota-Baxter algebra of a dendriform
    trialgebra; the third family is scaled to be monic."""
    lam = _require_lambda(lam)
    if data.circ is None:
        raise PresetError("trialgebra preset needs a circ table")
    families = set(families)
    if families - set(TRI_FAMILIES):
        raise PresetError(f"unknown families {sorted(families - set(TRI_FAMILIES))}")
    if check_axioms:
        report = dendriform_axiom_check(data, "tri")
        if not report.passed:
            raise PresetError(f"trialgebra axioms {report.violated_axioms()} fail")
    ctx = data.context(lam)
    n = data.dimension
    x = [gen(i) for i in range(n)]
    rels = []
    if "f4" in families:
        for i, j in product(range(n), repeat=2):
            rels.append(Polynomial({Word((i, x[j])): 1}) - _lin(data.prec[i][j]))
    if "f5" in families:
        for i, j in product(range(n), repeat=2):
            rels.append(Polynomial({Word((x[i], j)): 1}) - _lin(data.succ[i][j]))
    if "f6" in families:
        for i, j in product(range(n), repeat=2):
            rels.append(Polynomial({Word((i, j)): lam}) - _lin(data.circ[i][j]))
    return RelationSet(rels, ctx)


def _scaled(p: Polynomial, c: Fraction) -> Polynomial:
    return Polynomial((w, a * c) for w, a in p)


def parse_dendriform(text: str) -> DendriformData:
    """Read structure constants from the line format::

        dimension 2
        basis e1 e2
        prec 1 1 -> 0 1
        succ 1 1 -> 0 1/2
        circ 2 1 -> 1 0

    Indices are 1-based; products without a row are zero.  A ``circ`` row
    (or a ``kind tri`` line) makes the data a trialgebra.
    """
    from .textio import ParseError, parse_rational

    dim = None
    basis: list[str] | None = None
    rows: dict[str, dict[tuple[int, int], list[Fraction]]] = {}
    trialgebra = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "dimension":
            if len(rest) != 1 or not rest[0].isdigit():
                raise ParseError("expected 'dimension <n>'", lineno, 1)
            dim = int(rest[0])
        elif head == "basis":
            basis = rest
        elif head == "kind":
            if rest not in (["di"], ["tri"]):
                raise ParseError("expected 'kind di' or 'kind tri'", lineno, 1)
            trialgebra = rest == ["tri"]
        elif head in OPS:
            if dim is None:
                raise ParseError("product row before 'dimension'", lineno, 1)
            if len(rest) < 3 or rest[2] != "->":
                raise ParseError(f"expected '{head} i j -> c_1 ... c_n'", lineno, 1)
            try:
                i, j = int(rest[0]), int(rest[1])
            except ValueError:
                raise ParseError("indices must be integers", lineno, 1) from None
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise ParseError(f"index out of range 1..{dim}", lineno, 1)
            coeffs = rest[3:]
            if len(coeffs) != dim:
                raise ParseError(f"expected {dim} coefficients, got {len(coeffs)}", lineno, 1)
            rows.setdefault(head, {})[(i - 1, j - 1)] = [
                parse_rational(c, lineno) for c in coeffs
            ]
            trialgebra |= head == "circ"
        else:
            raise ParseError(f"unknown directive {head!r}", lineno, 1)
    if dim is None:
        raise ParseError("missing 'dimension'", 1, 1)
    if basis is None:
        basis = [f"x{i}" for i in range(1, dim + 1)]
    if len(basis) != dim:
        raise PresetError(f"basis has {len(basis)} names but dimension is {dim}")
    return DendriformData.from_rows(basis, rows, trialgebra)


def load_dendriform(path: str | Path) -> DendriformData:
    return parse_dendriform(Path(path).read_text())
