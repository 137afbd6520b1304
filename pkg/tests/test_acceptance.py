"""The twelve acceptance criteria, each reported as one PASS/FAIL line."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from oracles import (
    di_one,
    di_trunc,
    generator_edged_words,
    pnm_split,
    random_poly,
    random_word,
    tri_circ,
    tri_zero,
)
from rbgsb.algebra import (
    AlgebraContext,
    Polynomial,
    apply_P,
    leading,
    multiply,
    pnm_coefficients,
    predict_product_leading,
    scale,
    word_product,
)
from rbgsb.gsb import (
    ALL_KINDS,
    AMBIGUITY_KINDS,
    INTERSECTION,
    check_gsb,
    complete,
    enumerate_compositions,
    irr_enumerate,
    oracle_summary,
    reduce,
)
from rbgsb.order import Cmp, compare
from rbgsb.presets import (
    commutative_basis_closed_form,
    commutative_relations,
    dialgebra_enveloping_relations,
    trialgebra_enveloping_relations,
)
from rbgsb.starwords import substitute, substitute_word_strict
from rbgsb.terms import P, Word, concat, deg_count, enumerate_words, gen, iter_star_words
from rbgsb.textio import parse_expr, print_poly
from test_cli import CASES, GOLDEN, run

LAMBDAS = (0, 1, Fraction(-1, 2))


def M(w, c=1):
    return Polynomial.monomial(w, c)


def ctx_n(n, lam):
    return AlgebraContext.from_names([f"x{i}" for i in range(1, n + 1)], lam)


def test_criterion_01_rota_baxter_identity(criterion):
    rng = random.Random(101)
    with criterion(1, "Rota-Baxter identity, 500 pairs x 3 weights", 10):
        for lam in LAMBDAS:
            ctx = ctx_n(2, lam)
            for _ in range(500):
                u, v = M(random_word(rng, [0, 1])), M(random_word(rng, [0, 1]))
                lhs = multiply(apply_P(u), apply_P(v), ctx)
                rhs = (apply_P(multiply(apply_P(u), v, ctx)) + apply_P(multiply(u, apply_P(v), ctx))
                       + scale(apply_P(multiply(u, v, ctx)), lam))
                assert lhs == rhs


def test_criterion_02_associativity(criterion):
    rng = random.Random(102)
    with criterion(2, "associativity, 300 triples of depth <= 3", 30):
        for k in range(300):
            ctx = ctx_n(2, LAMBDAS[k % 3])
            a, b, c = (M(random_word(rng, [0, 1], 3, 2)) for _ in range(3))
            assert multiply(multiply(a, b, ctx), c, ctx) == multiply(a, multiply(b, c, ctx), ctx)


def test_criterion_03_ordering(criterion):
    rng = random.Random(103)
    ctx = ctx_n(2, 1)
    with criterion(3, "ordering: totality, transitivity, monomiality, P-monotonicity", 60):
        words = enumerate_words([0, 1], 4)
        table = {}
        for u, v in product(words, repeat=2):
            c = compare(u, v)
            table[u, v] = c
            assert (c is Cmp.EQ) == (u is v)
        for u, v in product(words, repeat=2):
            assert int(table[u, v]) == -int(table[v, u])
        # transitivity over every triple: v < u implies everything below v is below u
        below = {u: {v for v in words if table[v, u] is Cmp.LT} for u in words}
        for u in words:
            for v in below[u]:
                assert below[v] <= below[u]
        for u, v in product(words, repeat=2):
            if table[u, v] is Cmp.GT:
                assert compare(P(u), P(v)) is Cmp.GT
        frames = list(iter_star_words([0, 1], 4))
        small = enumerate_words([0, 1], 3)
        for _ in range(1000):
            u, v = rng.sample(small, 2)
            if u < v:
                u, v = v, u
            c = rng.choice(frames)
            lu = leading(substitute(c, M(u), ctx))[0]
            lv = leading(substitute(c, M(v), ctx))[0]
            assert lu > lv
            strict = substitute_word_strict(c, u)
            if strict is not None:
                assert lu is strict


def test_criterion_04_pnm_coefficients(criterion):
    rng = random.Random(104)
    pool = generator_edged_words([0, 1], 3)
    with criterion(4, "P^n(u) P^m(v) expansion coefficients, n, m <= 4", 60):
        assert pnm_coefficients(2, 2)[0][1] == 2
        for n in range(1, 5):
            assert all(pnm_coefficients(n, 1)[0][s] == 1 for s in range(1, n + 1))
            for m in range(1, 5):
                assert pnm_coefficients(n, m)[0][n] == 1
        for n, m in product(range(1, 5), repeat=2):
            want_a, want_b = pnm_coefficients(n, m)
            for k in range(20):
                lam = LAMBDAS[k % 3]
                ctx = ctx_n(2, lam)
                u, v = rng.choice(pool), rng.choice(pool)
                alpha, beta, eps = pnm_split(n, m, u, v, ctx)
                assert alpha == want_a and beta == want_b
                if lam == 0:
                    assert not eps
                    continue
                top = leading(eps)[0]
                assert top.pdeg == n + m - 1 + u.pdeg + v.pdeg
                for t in eps.words():
                    assert t.is_p_prime
                    assert deg_count(t, {0, 1}) == deg_count(u, {0, 1}) + deg_count(v, {0, 1})


def test_criterion_05_leading_prediction(criterion):
    rng = random.Random(105)
    with criterion(5, "predicted leading word of products, 200 pairs"):
        for k in range(200):
            ctx = ctx_n(2, LAMBDAS[k % 3])
            u, v = random_word(rng, [0, 1]), random_word(rng, [0, 1])
            assert predict_product_leading(u, v, ctx) is leading(word_product(u, v, ctx))[0]


def test_criterion_06_commutative_gsb(criterion):
    with criterion(6, "commutative preset, |X| = 3, bounds (5, 3), all kinds", 300):
        S = commutative_relations(ctx_n(3, 1), 3)
        report = check_gsb(S, 5, 3, ALL_KINDS)
        assert report.passed
        assert all(report.counts[k]["total"] > 0 for k in ("intersection", "inclusion", "left_mult"))


def test_criterion_07_commutative_basis(criterion):
    with criterion(7, "irreducible words match the closed form; rank-nullity"):
        for n in (1, 2):
            for d in range(1, 5):
                S = commutative_relations(ctx_n(n, 1), max(1, d - 2))
                assert set(irr_enumerate(S, d)) == set(commutative_basis_closed_form(S.ctx, d))
                s = oracle_summary(S, d)
                assert s.irr_count + s.ideal_dim == s.word_count
        s = oracle_summary(commutative_relations(ctx_n(1, 1), 1), 3)
        assert (s.word_count, s.irr_count, s.ideal_dim) == (8, 7, 1)


def _bil(table, a, b):
    n = len(a)
    out = [Fraction(0)] * n
    for i, j in product(range(n), repeat=2):
        for k in range(n):
            out[k] += a[i] * b[j] * table[i][j][k]
    return out


def _pxp_chain(data, lam):
    """Replay the reduction of the P(x_i) x_j P(x_l) compositions.

    Rewriting with f1, f2 alone must leave exactly
    [[x_i, [x_j, x_l]]] - [[[x_i, x_j]], x_l], which the full set then kills.
    """
    S = dialgebra_enveloping_relations(data, lam)
    S12 = dialgebra_enveloping_relations(data, lam, families=("f1", "f2"))
    comps = {c.w: c for c in enumerate_compositions(S, 5, 1, (INTERSECTION,))}
    n = data.dimension
    e = [[Fraction(int(i == k)) for k in range(n)] for i in range(n)]
    for i, j, l in product(range(n), repeat=3):
        c = comps[concat(P(gen(i)), gen(j), P(gen(l)))]
        assert (c.f_index, c.g_index) == (n * n + i * n + j, j * n + l)
        mid = reduce(c.difference, S12).normal_form
        lhs = _bil(data.succ, e[i], _bil(data.prec, e[j], e[l]))
        rhs = _bil(data.prec, _bil(data.succ, e[i], e[j]), e[l])
        assert mid == Polynomial((gen(k), a - b) for k, (a, b) in enumerate(zip(lhs, rhs)))
        assert not reduce(c.difference, S).normal_form


def test_criterion_08_dialgebra(criterion):
    with criterion(8, "dialgebra preset over x<x = x, bound 5; P(x)xP(x) chain"):
        S = dialgebra_enveloping_relations(di_one(), 1)
        report = check_gsb(S, 5, 1, AMBIGUITY_KINDS)
        assert report.passed and len(report.compositions) > 0
        _pxp_chain(di_one(), 1)
        _pxp_chain(di_trunc(), 1)


def test_criterion_09_trialgebra(criterion):
    with criterion(9, "trialgebra presets: zero and x.x = x at weight 2, bound 5"):
        for data, lam in ((tri_zero(), 1), (tri_circ(), 2)):
            S = trialgebra_enveloping_relations(data, lam)
            report = check_gsb(S, 5, 1, AMBIGUITY_KINDS)
            assert report.passed and len(report.compositions) > 0


def test_criterion_10_completion(criterion):
    with criterion(10, "completion of {f1, f2} recovers f3 and certifies", 60):
        S12 = dialgebra_enveloping_relations(di_one(), 1, families=("f1", "f2"))
        C = complete(S12, 5, 2, 10)
        full = dialgebra_enveloping_relations(di_one(), 1)
        assert [print_poly(r, C.ctx) for r in C] == [print_poly(r, full.ctx) for r in full]
        assert print_poly(C[2], C.ctx) == "x*x*x - x*x"
        assert check_gsb(C, 5, 2, ALL_KINDS).passed


def _bounded_poly(rng, ranks, D):
    while True:
        p = random_poly(rng, ranks, terms=rng.randint(1, 4), depth=2)
        if p and max(w.total for w in p.words()) <= D:
            return p


def test_criterion_11_confluence(criterion):
    rng = random.Random(111)
    certified = [
        (commutative_relations(ctx_n(1, 1), 3), 5),
        (commutative_relations(ctx_n(3, 1), 3), 5),
        (dialgebra_enveloping_relations(di_one(), 1), 5),
        (dialgebra_enveloping_relations(di_trunc(), 1), 5),
        (trialgebra_enveloping_relations(tri_zero(), 1), 5),
        (trialgebra_enveloping_relations(tri_circ(), 2), 5),
    ]
    with criterion(11, "two reduction strategies agree, 200 polynomials per preset"):
        for S, D in certified:
            for _ in range(200):
                p = _bounded_poly(rng, S.ctx.ranks, D)
                assert reduce(p, S).normal_form == reduce(p, S, strategy="rule-index").normal_form


def test_criterion_12_parser_and_cli(criterion):
    rng = random.Random(112)
    with criterion(12, "parse/print round trip x 1000; CLI goldens byte-identical"):
        for k in range(1000):
            ctx = ctx_n(3, LAMBDAS[k % 3])
            p = random_poly(rng, range(3), terms=rng.randint(0, 5), depth=3)
            assert parse_expr(print_poly(p, ctx), ctx) == p
        for name, (argv, code) in sorted(CASES.items()):
            a, b = run(argv, "11"), run(argv, "12")
            assert a.returncode == b.returncode == code
            assert a.stdout == b.stdout == (GOLDEN / f"{name}.txt").read_text()
