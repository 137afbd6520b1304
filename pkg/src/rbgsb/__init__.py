"""Groebner-Shirshov bases for free Rota-Baxter algebras of weight lambda."""

__version__ = "0.1.0"

from .algebra import (
    AlgebraContext,
    ContextError,
    Polynomial,
    ZeroPolynomialError,
    apply_P,
    leading,
    make_monic,
    multiply,
    pnm_coefficients,
    predict_product_leading,
)
from .gsb import (
    Composition,
    CompletionLimitError,
    GSBReport,
    RelationSet,
    check_gsb,
    complete,
    enumerate_compositions,
    ideal_span_dim,
    irr_enumerate,
    is_trivial,
    reduce,
)
from .order import Cmp, compare
from .starwords import find_occurrences, is_normal_s_word, proper_overlaps, substitute
from .terms import STAR, Generator, InvalidWord, P, Word, concat, enumerate_words, gen
from .textio import ParseError, parse_expr, parse_rules, print_poly, print_word

__all__ = [
    "AlgebraContext",
    "Cmp",
    "Composition",
    "CompletionLimitError",
    "ContextError",
    "GSBReport",
    "Generator",
    "InvalidWord",
    "P",
    "ParseError",
    "Polynomial",
    "RelationSet",
    "STAR",
    "Word",
    "ZeroPolynomialError",
    "apply_P",
    "check_gsb",
    "compare",
    "complete",
    "concat",
    "enumerate_compositions",
    "enumerate_words",
    "find_occurrences",
    "gen",
    "ideal_span_dim",
    "irr_enumerate",
    "is_normal_s_word",
    "is_trivial",
    "leading",
    "make_monic",
    "multiply",
    "parse_expr",
    "parse_rules",
    "pnm_coefficients",
    "predict_product_leading",
    "print_poly",
    "print_word",
    "proper_overlaps",
    "reduce",
    "substitute",
]
