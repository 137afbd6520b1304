"""Groebner-Shirshov machinery: reduction, compositions, completion, bases."""

from .completion import CompletionLimitError, complete
from .compositions import (
    ALL_KINDS,
    AMBIGUITY_KINDS,
    INCLUSION,
    INTERSECTION,
    LEFT_MULT,
    RIGHT_MULT,
    Composition,
    GSBReport,
    certify,
    check_compositions,
    check_gsb,
    enumerate_compositions,
    is_trivial,
)
from .oracle import EchelonBasis, OracleSummary, ideal_span_dim, irr_enumerate, oracle_summary
from .relations import Reduction, ReductionError, ReductionStep, RelationSet, normal_form, reduce

__all__ = [
    "ALL_KINDS",
    "AMBIGUITY_KINDS",
    "INCLUSION",
    "INTERSECTION",
    "LEFT_MULT",
    "RIGHT_MULT",
    "Composition",
    "CompletionLimitError",
    "EchelonBasis",
    "GSBReport",
    "OracleSummary",
    "Reduction",
    "ReductionError",
    "ReductionStep",
    "RelationSet",
    "certify",
    "check_compositions",
    "check_gsb",
    "complete",
    "enumerate_compositions",
    "ideal_span_dim",
    "irr_enumerate",
    "is_trivial",
    "normal_form",
    "oracle_summary",
    "reduce",
]
