"""Independent reference computations used by the tests."""

from __future__ import annotations

import random
from fractions import Fraction

from rbgsb.algebra import AlgebraContext, Polynomial, multiply
from rbgsb.presets import DendriformData
from rbgsb.terms import P, Word, concat, enumerate_words


def random_word(rng: random.Random, ranks, depth: int = 3, max_breadth: int = 3) -> Word:
    """A random word with P-nesting at most ``depth``."""
    out = []
    for _ in range(rng.randint(1, max_breadth)):
        want_p = depth > 0 and rng.random() < 0.4 and not (out and isinstance(out[-1], Word))
        if want_p:
            out.append(random_word(rng, ranks, depth - 1, max(1, max_breadth - 1)))
        else:
            out.append(rng.choice(ranks))
    return Word(out)


def random_poly(rng: random.Random, ranks, terms: int = 4, depth: int = 2) -> Polynomial:
    coeffs = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(terms)]
    return Polynomial((random_word(rng, ranks, depth), c) for c in coeffs)


# -- a deliberately naive product on dicts, written from the definition


def _naive_words(u: tuple, v: tuple, lam: Fraction) -> dict:
    """Product of two factor tuples as {factor tuple: coeff}."""
    a, b = u[-1], v[0]
    if not (isinstance(a, Word) and isinstance(b, Word)):
        return {u + v: Fraction(1)}
    out: dict = {}
    # P(a) P(b) = P(P(a) b) + P(a P(b)) + lam P(a b)
    for inner, c in (
        (_naive_words((a,), b.factors, lam), 1),
        (_naive_words(a.factors, (b,), lam), 1),
        (_naive_words(a.factors, b.factors, lam), lam),
    ):
        if not c:
            continue
        for fs, k in inner.items():
            key = u[:-1] + (Word(fs),) + v[1:]
            out[key] = out.get(key, 0) + c * k
    return {k: c for k, c in out.items() if c}


def naive_product(u: Word, v: Word, lam) -> dict:
    return {Word(fs): c for fs, c in _naive_words(u.factors, v.factors, Fraction(lam)).items()}


# -- coefficient extraction for P^n(u) P^m(v)


def pnm_split(n: int, m: int, u: Word, v: Word, ctx: AlgebraContext):
    """Expand P^n(u) * P^m(v) and split it into the coefficients on
    P^{n+m-s}(P^s(u) v), on P^{n+m-l}(u P^l(v)), and the remainder.

    ``u`` must end and ``v`` begin with a generator, so the target words
    are plain juxtapositions.
    """
    assert not u.last_is_p and not v.first_is_p
    full = multiply(Polynomial.monomial(P(u, n)), Polynomial.monomial(P(v, m)), ctx)
    alpha, beta = {}, {}
    rest = dict(full.terms)
    for s in range(1, n + 1):
        w = P(concat(P(u, s), v), n + m - s)
        alpha[s] = rest.pop(w, Fraction(0))
    for l in range(1, m + 1):
        w = P(concat(u, P(v, l)), n + m - l)
        beta[l] = rest.pop(w, Fraction(0))
    return alpha, beta, Polynomial(rest)


def generator_edged_words(ranks, max_total: int) -> list[Word]:
    return [w for w in enumerate_words(ranks, max_total) if not w.first_is_p and not w.last_is_p]




# -- dendriform data sets


def di_one() -> DendriformData:
    # x < x = x, x > x = 0
    return DendriformData.from_rows(["x"], {"prec": {(0, 0): [1]}})


def di_trunc() -> DendriformData:
    # k[t]/(t^3), x < y = x R(y), x > y = R(x) y with R(t^k) = t^(k+1)/(k+1)
    half = Fraction(1, 2)
    return DendriformData.from_rows(
        ["e", "t", "u"],
        {
            "prec": {(0, 0): [0, 1, 0], (0, 1): [0, 0, half], (1, 0): [0, 0, 1]},
            "succ": {(0, 0): [0, 1, 0], (0, 1): [0, 0, 1], (1, 0): [0, 0, half]},
        },
    )


def tri_zero() -> DendriformData:
    return DendriformData.from_rows(["x"], {}, trialgebra=True)


def tri_circ() -> DendriformData:
    return DendriformData.from_rows(["x"], {"circ": {(0, 0): [1]}}, trialgebra=True)
