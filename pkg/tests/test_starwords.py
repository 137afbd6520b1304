from __future__ import annotations

from itertools import product

import pytest

from rbgsb.algebra import AlgebraContext, Polynomial, leading, multiply
from rbgsb.starwords import (
    HOLE,
    find_occurrences,
    is_normal_s_word,
    proper_overlaps,
    star_word,
    substitute,
    substitute_word_strict,
)
from rbgsb.terms import P, STAR, Word, concat, enumerate_words, gen, iter_star_words

x1, x2, x3 = gen(0), gen(1), gen(2)
x, y = x1, x2
CTX = AlgebraContext.from_names(["x1", "x2", "x3"], 1)
J = concat


def M(w, c=1):
    return Polynomial.monomial(w, c)


def F(*fs):
    return star_word(fs)


def test_star_word_validation():
    with pytest.raises(ValueError):
        star_word((0, 1))
    with pytest.raises(ValueError):
        star_word((STAR, STAR))
    assert F(STAR) is HOLE


def test_substitute_examples():
    assert substitute(F(HOLE, 1), M(x1), CTX) == M(J(P(x1), x2))
    c = F(STAR, y)  # ★ P(y)
    p = M(P(x))
    expanded = multiply(p, M(P(y)), CTX)
    assert substitute(c, p, CTX) == expanded
    assert len(expanded) == 3
    # x3 P(★ P(y)) x3: the expansion sits inside the frame
    got = substitute(F(2, Word((STAR, y)), 2), p, CTX)
    inner = multiply(p, M(P(y)), CTX)
    outer = Polynomial((J(x3, P(w), x3), c) for w, c in inner)
    assert got == outer
    q = M(x1, 2) - M(P(x2))
    assert substitute(HOLE, q, CTX) == q


def test_substitute_linear():
    c = F(0, Word((STAR, 1)))
    p, q = M(P(x1)), M(J(x2, P(x3)), 3)
    assert substitute(c, p + q, CTX) == substitute(c, p, CTX) + substitute(c, q, CTX)


def test_strict_examples():
    assert substitute_word_strict(F(Word((STAR, 1))), P(x1)) is P(J(P(x1), x2))
    assert substitute_word_strict(F(STAR, y), P(x)) is None
    assert substitute_word_strict(F(0, STAR), Word((1, 2))) is Word((0, 1, 2))
    assert substitute_word_strict(F(y, STAR), P(x)) is None


def test_normal_s_word_examples():
    s = M(J(P(x1), x2)) - M(J(x2, P(x1)))
    c = F(HOLE, 0)  # P(★) x
    assert is_normal_s_word(c, s, CTX)
    assert is_normal_s_word(c, s, CTX, verify=True)
    assert not is_normal_s_word(F(STAR, y), M(P(x)), CTX)
    assert is_normal_s_word(HOLE, s, CTX)


def test_normal_shortcut_equals_verification():
    ctx = AlgebraContext.from_names(["x1", "x2"], 1)
    frames = list(iter_star_words([0, 1], 3))
    rels = [
        M(J(P(x1), x2)) - M(J(x2, P(x1))),
        M(P(x1)) + M(Word((0, 1))),
        M(J(x1, P(x2))) + M(x1),
        M(P(P(x1))) - M(P(Word((0, 0)))),
    ]
    for c, s in product(frames, rels):
        assert is_normal_s_word(c, s, ctx) == is_normal_s_word(c, s, ctx, verify=True)


def test_strict_is_leading_of_substitution():
    ctx = AlgebraContext.from_names(["x1", "x2"], 1)
    frames = list(iter_star_words([0, 1], 3))
    for c in frames:
        for w in enumerate_words([0, 1], 3):
            strict = substitute_word_strict(c, w)
            if strict is not None:
                assert leading(substitute(c, M(w), ctx))[0] is strict


def test_find_occurrences_examples():
    host = J(P(Word((0, 1))), x1)
    occ = find_occurrences(host, x1)
    assert occ == [J(P(F(STAR, 1)), x1), F(Word((0, 1)), STAR)]
    assert find_occurrences(P(J(P(x1), x2)), J(P(x1), x2)) == [Word((HOLE,))]
    assert find_occurrences(Word((0, 1)), Word((1, 0))) == []


def test_find_occurrences_roundtrip():
    words = enumerate_words([0, 1], 4)
    pats = enumerate_words([0, 1], 2)
    for host in words:
        assert find_occurrences(host, host) == [HOLE]
        for pat in pats:
            occ = find_occurrences(host, pat)
            assert len(occ) == len(set(occ))
            for c in occ:
                assert c.stars == 1
                assert substitute_word_strict(c, pat) is host


def test_find_occurrences_complete():
    # every frame of degree <= 3 that rebuilds the host is found
    frames = list(iter_star_words([0, 1], 3))
    for pat in enumerate_words([0, 1], 2):
        for c in frames:
            host = substitute_word_strict(c, pat)
            if host is not None:
                assert c in find_occurrences(host, pat)


def test_proper_overlaps_examples():
    assert proper_overlaps(Word((0, 1)), Word((1, 2))) == [(x3, x1, Word((0, 1, 2)))]
    u = Word((0, 1))
    w1, w2 = J(P(u), x1), Word((0, 1))
    assert proper_overlaps(w1, w2) == [(x2, P(u), J(P(u), x1, x2))]
    assert proper_overlaps(Word((0, 0)), Word((1, 1))) == []
    # self overlap, two lengths
    assert [t[2] for t in proper_overlaps(Word((0, 0, 0)), Word((0, 0, 0)))] == [
        Word((0,) * 4), Word((0,) * 5)
    ]


def test_proper_overlaps_equations():
    words = enumerate_words([0, 1], 3)
    for w1, w2 in product(words, repeat=2):
        for a, b, w in proper_overlaps(w1, w2):
            assert J(w1, a) is w and J(b, w2) is w
            assert w.total < w1.total + w2.total
