"""Command-line front end.

Exit codes: 0 success (and a passing ``check-gsb``), 1 a failing
``check-gsb``, 2 usage or input errors, 3 computation failures.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import __version__
from .algebra import AlgebraContext, ContextError
from .gsb import (
    ALL_KINDS,
    CompletionLimitError,
    GSBReport,
    ReductionError,
    RelationSet,
    check_compositions,
    complete,
    enumerate_compositions,
    irr_enumerate,
    oracle_summary,
    reduce,
)
from .order import compare
from .presets import (
    DI_FAMILIES,
    TRI_FAMILIES,
    PresetError,
    commutative_relations,
    dialgebra_enveloping_relations,
    load_dendriform,
    trialgebra_enveloping_relations,
)
from .terms import STAR, Word
from .textio import (
    ParseError,
    format_rational,
    format_rules,
    parse_expr,
    parse_rational,
    parse_rules,
    parse_word,
    print_poly,
    print_word,
)

REPORT_VERSION = 1
HOLE_TEXT = "_"


class UsageError(Exception):
    pass


class ComputationError(Exception):
    pass


# ---------------------------------------------------------------- helpers


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ParseError:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {text!r}")
    return v


def _context(names: Sequence[str], lam: Fraction) -> AlgebraContext:
    for n in names:
        if n == "P" or not re.fullmatch(r"[A-Za-z][A-Za-z0-9]*", n):
            raise UsageError(f"invalid generator name {n!r}")
    try:
        return AlgebraContext.from_names(names, lam)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _load_rules(path: str) -> RelationSet:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    try:
        rf = parse_rules(text)
    except ParseError as e:
        raise UsageError(f"{path}: {e}") from None
    return RelationSet(rf.relations, rf.ctx)


def _frame_text(frame: Word, ctx: AlgebraContext) -> str:
    names = list(ctx.names)

    def fmt(w: Word) -> str:
        parts = []
        for f in w.factors:
            if isinstance(f, Word):
                parts.append(f"P({fmt(f)})")
            elif f == STAR:
                parts.append(HOLE_TEXT)
            else:
                parts.append(names[f])
        return "*".join(parts)

    return fmt(frame)


def _kinds_text(kinds) -> str:
    return ",".join(kinds)


def _composition_record(c, ctx: AlgebraContext) -> dict:
    return {
        "kind": c.kind,
        "f": c.f_index + 1,
        "g": None if c.g_index is None else c.g_index + 1,
        "ambiguity": None if c.w is None else print_word(c.w, ctx),
        "multiplier": None if c.multiplier is None else print_word(c.multiplier, ctx),
        "top": print_word(c.top, ctx),
        "status": "trivial" if c.trivial else "nontrivial",
        "remainder": print_poly(c.remainder, ctx),
    }


def _report_json(command: str, S: RelationSet, report: GSBReport) -> str:
    ctx = S.ctx
    doc = {
        "version": REPORT_VERSION,
        "command": command,
        "lambda": format_rational(ctx.lam),
        "generators": list(ctx.names),
        "relations": len(S),
        "max_deg": report.max_deg,
        "mult_deg": report.mult_deg,
        "kinds": list(report.kinds),
        "passed": report.passed,
        "verdict": report.verdict,
        "counts": report.counts,
        "compositions": [_composition_record(c, ctx) for c in report.compositions],
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def _composition_line(c, ctx: AlgebraContext) -> str:
    rec = _composition_record(c, ctx)
    pair = f"f={rec['f']}" if rec["g"] is None else f"f={rec['f']} g={rec['g']}"
    where = f"w={rec['ambiguity']}" if rec["ambiguity"] else f"u={rec['multiplier']} top={rec['top']}"
    line = f"{c.kind} {pair} {where}: {rec['status']}"
    if not c.trivial:
        line += f", remainder {rec['remainder']}"
    return line


def _counts_lines(report: GSBReport) -> list[str]:
    return [
        f"  {k}: {v['total']} checked, {v['nontrivial']} nontrivial"
        for k, v in report.counts.items()
    ]


def _run_report(args) -> tuple[RelationSet, GSBReport]:
    S = _load_rules(args.rules)
    kinds = tuple(k for k in ALL_KINDS if k in set(args.kinds))
    comps = enumerate_compositions(S, args.max_deg, args.mult_deg, kinds)
    check_compositions(comps, S, args.jobs)
    passed = all(c.trivial for c in comps)
    return S, GSBReport(passed, args.max_deg, args.mult_deg, kinds, comps)


# ---------------------------------------------------------------- commands


def cmd_normalize(args) -> int:
    ctx = _context(args.gens, args.lam)
    print(print_poly(parse_expr(args.expr, ctx), ctx))
    return 0


def cmd_compare(args) -> int:
    ctx = _context(args.gens, Fraction(0))
    u, v = parse_word(args.w1, ctx), parse_word(args.w2, ctx)
    print(compare(u, v, ctx).name)
    return 0


def cmd_reduce(args) -> int:
    S = _load_rules(args.rules)
    p = parse_expr(args.expr, S.ctx)
    red = reduce(p, S, strategy=args.strategy, max_steps=args.max_steps)
    if args.trace:
        for k, st in enumerate(red.trace, start=1):
            print(
                f"step {k}: {print_word(st.word, S.ctx)} via rule {st.rule + 1} "
                f"in {_frame_text(st.frame, S.ctx)} times {format_rational(st.coeff)}"
            )
    print(print_poly(red.normal_form, S.ctx))
    return 0


def cmd_compositions(args) -> int:
    S, report = _run_report(args)
    if args.json:
        print(_report_json("compositions", S, report))
        return 0
    for c in report.compositions:
        print(_composition_line(c, S.ctx))
    print(f"{len(report.compositions)} compositions, {len(report.failures)} nontrivial")
    return 0


def cmd_check_gsb(args) -> int:
    S, report = _run_report(args)
    if args.json:
        print(_report_json("check-gsb", S, report))
    else:
        print(("PASS: " if report.passed else "FAIL: ") + report.verdict)
        print(f"kinds: {_kinds_text(report.kinds)}")
        print("\n".join(_counts_lines(report)))
        for c in report.failures:
            print(_composition_line(c, S.ctx))
    return 0 if report.passed else 1


def cmd_complete(args) -> int:
    S = _load_rules(args.rules)
    mult_deg = args.mult_deg if args.mult_deg is not None else args.max_deg
    kinds = tuple(k for k in ALL_KINDS if k in set(args.kinds))
    try:
        C = complete(S, args.max_deg, mult_deg, args.max_rounds, kinds)
    except CompletionLimitError as e:
        raise ComputationError(f"{e} ({len(e.partial)} rules so far)") from None
    header = (
        f"completed: {len(C)} rules, max-deg {args.max_deg}, mult-deg {mult_deg}, "
        f"kinds {_kinds_text(kinds)}"
    )
    sys.stdout.write(format_rules(C.relations, C.ctx, header))
    return 0


def cmd_irr(args) -> int:
    S = _load_rules(args.rules)
    words = irr_enumerate(S, args.max_deg)
    for w in words:
        print(print_word(w, S.ctx))
    print(f"# {len(words)} words up to degree {args.max_deg}")
    return 0


def cmd_oracle_dim(args) -> int:
    S = _load_rules(args.rules)
    summ = oracle_summary(S, args.max_deg)
    print(f"max_deg {summ.max_deg}")
    print(f"ideal_dim {summ.ideal_dim}")
    print(f"irr_count {summ.irr_count}")
    print(f"word_count {summ.word_count}")
    rel = "=" if summ.balanced else "!="
    print(f"rank-nullity: {summ.irr_count} + {summ.ideal_dim} {rel} {summ.word_count}")
    if not summ.balanced:
        print("note: ideal_dim is only a lower bound when the rules are not a basis at this degree")
    return 0


def cmd_preset(args) -> int:
    if args.name == "commutative":
        if not args.gens or args.inst_deg is None:
            raise UsageError("the commutative preset needs --gens and --inst-deg")
        ctx = _context(args.gens, args.lam if args.lam is not None else Fraction(0))
        S = commutative_relations(ctx, args.inst_deg)
        header = f"commutative preset, words up to degree {args.inst_deg} under P"
    else:
        if args.data is None or args.lam is None:
            raise UsageError(f"the {args.name} preset needs --data and --lambda")
        try:
            data = load_dendriform(args.data)
        except OSError as e:
            raise UsageError(f"cannot read {args.data}: {e.strerror}") from None
        except ParseError as e:
            raise UsageError(f"{args.data}: {e}") from None
        _context(data.basis, Fraction(1))
        allowed = DI_FAMILIES if args.name == "dialgebra" else TRI_FAMILIES
        if args.families and not set(args.families) <= set(allowed):
            raise UsageError(f"the {args.name} preset takes families {', '.join(allowed)}")
        if args.name == "dialgebra":
            fams = args.families or DI_FAMILIES
            S = dialgebra_enveloping_relations(data, args.lam, fams)
        else:
            fams = args.families or TRI_FAMILIES
            S = trialgebra_enveloping_relations(data, args.lam, fams)
        header = f"{args.name} preset, families {','.join(sorted(fams))}"
    sys.stdout.write(format_rules(S.relations, S.ctx, header))
    return 0


# ---------------------------------------------------------------- parser


def _add_bounds(p, mult_required: bool = True) -> None:
    p.add_argument("--max-deg", type=_positive, required=True, help="ambiguity degree bound")
    p.add_argument("--mult-deg", type=_positive, required=mult_required,
                   help="degree bound on v in the multipliers P(v)")
    p.add_argument("--kinds", nargs="+", choices=ALL_KINDS, default=list(ALL_KINDS),
                   help="composition kinds to consider (default: all)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rbgsb", description="Groebner-Shirshov bases for free Rota-Baxter algebras."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("normalize", help="print the canonical form of an expression")
    p.add_argument("--lambda", dest="lam", type=_rational, required=True, help="weight, e.g. 1 or -1/2")
    p.add_argument("--gens", nargs="+", required=True, help="generator names in increasing order")
    p.add_argument("expr", nargs="?", help="expression to normalize")
    p.set_defaults(func=cmd_normalize, trailing=("expr",))

    p = sub.add_parser("compare", help="compare two words (LT, EQ or GT)")
    p.add_argument("--gens", nargs="+", required=True, help="generator names in increasing order")
    p.add_argument("w1", nargs="?", help="first word")
    p.add_argument("w2", nargs="?", help="second word")
    p.set_defaults(func=cmd_compare, trailing=("w1", "w2"))

    p = sub.add_parser("reduce", help="normal form modulo a rules file")
    p.add_argument("--rules", required=True, help="rules file")
    p.add_argument("--trace", action="store_true", help="print every rewriting step")
    p.add_argument("--strategy", choices=("greatest", "rule-index"), default="greatest",
                   help="which occurrence to rewrite first (default: greatest)")
    p.add_argument("--max-steps", type=_positive, default=None, help="abort after N steps")
    p.add_argument("expr", help="expression to reduce")
    p.set_defaults(func=cmd_reduce)

    for name, func, helptext in (
        ("compositions", cmd_compositions, "list compositions with their status"),
        ("check-gsb", cmd_check_gsb, "check that every composition is trivial"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--rules", required=True, help="rules file")
        _add_bounds(p)
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--jobs", type=_positive, default=1, help="worker processes (default: 1)")
        p.set_defaults(func=func)

    p = sub.add_parser("complete", help="bounded completion; prints a rules file")
    p.add_argument("--rules", required=True, help="rules file")
    _add_bounds(p, mult_required=False)
    p.add_argument("--max-rounds", type=_positive, required=True, help="round limit")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("irr", help="list irreducible words")
    p.add_argument("--rules", required=True, help="rules file")
    p.add_argument("--max-deg", type=_positive, required=True, help="word degree bound")
    p.set_defaults(func=cmd_irr)

    p = sub.add_parser("oracle-dim", help="truncated ideal dimension and rank-nullity summary")
    p.add_argument("--rules", required=True, help="rules file")
    p.add_argument("--max-deg", type=_positive, required=True, help="word degree bound")
    p.set_defaults(func=cmd_oracle_dim)

    p = sub.add_parser("preset", help="emit a preset rules file")
    p.add_argument("name", choices=("commutative", "dialgebra", "trialgebra"))
    p.add_argument("--gens", nargs="+", help="generators (commutative)")
    p.add_argument("--inst-deg", type=_positive, help="degree bound on u in P(u) (commutative)")
    p.add_argument("--data", help="dendriform data file (dialgebra, trialgebra)")
    p.add_argument("--lambda", dest="lam", type=_rational, help="weight (default 0 for commutative)")
    p.add_argument("--families", nargs="+", choices=DI_FAMILIES + TRI_FAMILIES,
                   help="relation families to emit (default: all for the preset)")
    p.set_defaults(func=cmd_preset)
    return parser


def _split_gens(args, parser: argparse.ArgumentParser) -> None:
    # ``--gens x y "expr"``: a greedy --gens also swallows the positionals,
    # so missing positionals are taken back from its tail.
    gens = [n for g in args.gens for n in g.split(",") if n]
    names = [n for n in args.trailing if getattr(args, n) is None]
    given = [n for n in args.trailing if getattr(args, n) is not None]
    if given and names:
        parser.error(f"expected {len(args.trailing)} positional argument(s)")
    if len(gens) <= len(names):
        parser.error("--gens needs at least one name besides the positional arguments")
    if names:
        tail = gens[-len(names):]
        gens = gens[: -len(names)]
        for n, v in zip(names, tail):
            setattr(args, n, v)
    args.gens = gens


def _glue_negative(argv: Sequence[str]) -> list[str]:
    # argparse reads "-1/2" as an option; attach such values to their flag
    out: list[str] = []
    for a in argv:
        if out and out[-1] == "--lambda" and re.fullmatch(r"-\d+(/\d+)?", a):
            out[-1] = f"--lambda={a}"
        else:
            out.append(a)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_negative(sys.argv[1:] if argv is None else argv))
    if getattr(args, "trailing", None):
        _split_gens(args, parser)
    try:
        return args.func(args)
    except (UsageError, ParseError) as e:
        print(f"rbgsb {args.command}: error: {e}", file=sys.stderr)
        return 2
    except (ComputationError, ContextError, PresetError, ReductionError) as e:
        print(f"rbgsb {args.command}: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
