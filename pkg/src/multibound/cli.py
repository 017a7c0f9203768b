"""Command-line front door: parse inputs, dispatch computations, emit reports.

One verb per invocation.  Inputs are monomial-ideal files (``vars: n``
header, one monomial per line) or facet files (``vertices: n`` header, one
facet per line); the kind is auto-detected from the header or extension,
with ``--as`` as the override.  Exit statuses: 0 ok, 1 a checked verdict
fails or a sweep hits a counterexample, 2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from .complexes import (
    SimplicialComplex,
    from_squarefree_ideal,
    nonfaces_ideal,
    parse_facets,
)
from .conjecture import (
    VERDICT_FAILS,
    Report,
    check_union_inequality,
    classify_lower_equality,
    classify_upper_equality,
    is_cohen_macaulay,
    verify_bounds,
)
from .enumeration import parse_sweep_config, sweep
from .errors import (
    CounterexampleError,
    InputError,
    MultiboundError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
)
from .homology import FieldSpec
from .monomials import MonomialIdeal, is_squarefree, parse_ideal, polarize
from .shifts import (
    DEFAULT_MAX_LATTICE,
    DEFAULT_MAX_SUBSETS,
    extremal_shifts,
    hochster_betti,
    taylor_betti,
    taylor_shifts,
)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--field",
        default="q",
        metavar="q|gf:<p>",
        help="coefficient field (default q)",
    )
    common.add_argument(
        "--resolution",
        default="taylor",
        choices=("taylor", "minimal"),
        help="resolution kind (default taylor)",
    )
    common.add_argument(
        "--max-lattice",
        type=int,
        default=DEFAULT_MAX_LATTICE,
        metavar="N",
        help="lcm-lattice size budget",
    )
    common.add_argument(
        "--max-subsets",
        type=int,
        default=DEFAULT_MAX_SUBSETS,
        metavar="N",
        help="generator-subset budget for full Taylor tables",
    )
    common.add_argument(
        "--out", metavar="PATH", help="write the output document here instead of stdout"
    )
    common.add_argument(
        "--as",
        dest="as_kind",
        choices=("ideal", "facets"),
        help="force the input kind instead of auto-detecting",
    )

    parser = argparse.ArgumentParser(
        prog="multibound",
        description="Multiplicity bounds from resolution shift data of monomial ideals.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full bound report")
    p.add_argument("input", help="ideal or facet file")
    p = sub.add_parser("betti", parents=[common], help="Betti table")
    p.add_argument("input", help="ideal or facet file")
    p = sub.add_parser("shifts", parents=[common], help="shift sequences")
    p.add_argument("input", help="ideal or facet file")
    p = sub.add_parser(
        "verify", parents=[common], help="exit 0 iff all applicable bounds hold"
    )
    p.add_argument("input", help="ideal or facet file")
    p = sub.add_parser(
        "classify", parents=[common], help="equality families of a flag complex"
    )
    p.add_argument("input", help="ideal or facet file")
    p = sub.add_parser(
        "union-check",
        parents=[common],
        help="sharpened union inequality for two facet files with shared labels",
    )
    p.add_argument("first", help="facet file for the first factor")
    p.add_argument("second", help="facet file for the second factor")
    p = sub.add_parser("sweep", parents=[common], help="run a theorem sweep")
    p.add_argument("config", help="key=value sweep configuration file")
    p.add_argument(
        "--ledger", metavar="PATH", help="ledger path (overrides out= in the config)"
    )
    return parser


# --- input handling ----------------------------------------------------------------


def _detect_kind(path: str, text: str) -> str:
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if body.lower().startswith("vars:"):
            return "ideal"
        if body.lower().startswith("vertices:"):
            return "facets"
        break
    if path.endswith(".ideal"):
        return "ideal"
    if path.endswith(".facets"):
        return "facets"
    raise ParseError(
        f"cannot tell whether {path!r} is an ideal or facet file; pass --as"
    )


def _load(path: str, as_kind: str | None) -> MonomialIdeal | SimplicialComplex:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path!r}: {exc}") from exc
    kind = as_kind or _detect_kind(path, text)
    if kind == "ideal":
        return parse_ideal(text)
    return parse_facets(text)


def _as_complex(obj: MonomialIdeal | SimplicialComplex) -> SimplicialComplex:
    if isinstance(obj, SimplicialComplex):
        return obj
    ideal = obj if is_squarefree(obj) else polarize(obj)
    return from_squarefree_ideal(ideal)


def _as_ideal(obj: MonomialIdeal | SimplicialComplex) -> MonomialIdeal:
    if isinstance(obj, MonomialIdeal):
        return obj
    return nonfaces_ideal(obj)


# --- rendering ---------------------------------------------------------------------


def _render_report(report: Report) -> str:
    lines = [f"{key}: {json.dumps(value)}" for key, value in report.to_json_dict().items()]
    return "\n".join(lines) + "\n"


def _render_table(table) -> str:
    lines = ["i j beta"]
    for i, j, v in table.items():
        lines.append(f"{i} {j} {v}")
    return "\n".join(lines) + "\n"


# --- verbs -------------------------------------------------------------------------


def _cmd_analyze(args, field: FieldSpec) -> tuple[str, int]:
    obj = _load(args.input, args.as_kind)
    report = verify_bounds(obj, args.resolution, field, args.max_lattice)
    return _render_report(report), 0


def _cmd_verify(args, field: FieldSpec) -> tuple[str, int]:
    obj = _load(args.input, args.as_kind)
    report = verify_bounds(obj, args.resolution, field, args.max_lattice)
    status = 0 if report.all_applicable_hold() else 1
    return _render_report(report), status


def _cmd_betti(args, field: FieldSpec) -> tuple[str, int]:
    obj = _load(args.input, args.as_kind)
    if args.resolution == "taylor":
        table = taylor_betti(_as_ideal(obj), args.max_subsets)
    else:
        table = hochster_betti(_as_complex(obj), field)
    return _render_table(table), 0


def _cmd_shifts(args, field: FieldSpec) -> tuple[str, int]:
    obj = _load(args.input, args.as_kind)
    if args.resolution == "taylor":
        ideal = _as_ideal(obj)
        mins, maxs = taylor_shifts(ideal, len(ideal), args.max_lattice)
    else:
        table = hochster_betti(_as_complex(obj), field)
        mins, maxs = extremal_shifts(table, table.length)
    lines = [
        f"rows: {len(mins)}",
        "m: " + " ".join(str(v) for v in mins),
        "M: " + " ".join(str(v) for v in maxs),
    ]
    return "\n".join(lines) + "\n", 0


def _cmd_classify(args, field: FieldSpec) -> tuple[str, int]:
    complex_ = _as_complex(_load(args.input, args.as_kind))
    upper = classify_upper_equality(complex_)
    lines = [f"upper: {upper}"]
    if is_cohen_macaulay(complex_, field):
        lower = classify_lower_equality(complex_, field)
        lines.append(f"lower: {lower}")
    else:
        lines.append(f"lower: not-applicable (not Cohen-Macaulay over {field})")
    return "\n".join(lines) + "\n", 0


def _cmd_union_check(args, field: FieldSpec) -> tuple[str, int]:
    first = _load(args.first, "facets")
    second = _load(args.second, "facets")
    report = check_union_inequality(
        first, second, args.resolution, field, args.max_lattice
    )
    body = _render_report(report)
    extra = [
        f"branch: {json.dumps(report.union_branch)}",
        f"hypothesis: {json.dumps(report.union_hypothesis)}",
        f"sharp-bound: {json.dumps(str(report.union_sharp_bound))}",
    ]
    for name, value in sorted(report.union_conditions.items()):
        extra.append(f"condition {name}: {json.dumps(value)}")
    status = 0 if report.upper != VERDICT_FAILS else 1
    return body + "\n".join(extra) + "\n", status


def _cmd_sweep(args, field: FieldSpec) -> tuple[str, int]:
    try:
        text = Path(args.config).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.config!r}: {exc}") from exc
    config = parse_sweep_config(text)
    overrides = {}
    if args.ledger:
        overrides["out"] = args.ledger
    if config.max_lattice == DEFAULT_MAX_LATTICE and args.max_lattice != DEFAULT_MAX_LATTICE:
        overrides["max_lattice"] = args.max_lattice
    if config.max_subsets == DEFAULT_MAX_SUBSETS and args.max_subsets != DEFAULT_MAX_SUBSETS:
        overrides["max_subsets"] = args.max_subsets
    if overrides:
        config = dataclasses.replace(config, **overrides)
    result = sweep(config)
    lines = [
        f"theorem: {result.theorem}",
        f"instances: {result.instances}",
        f"skipped: {result.skipped}",
        f"complete: {json.dumps(result.complete)}",
        f"ledger: {result.ledger_path or '-'}",
    ]
    return "\n".join(lines) + "\n", 0 if result.complete else 3


_VERBS = {
    "analyze": _cmd_analyze,
    "betti": _cmd_betti,
    "shifts": _cmd_shifts,
    "verify": _cmd_verify,
    "classify": _cmd_classify,
    "union-check": _cmd_union_check,
    "sweep": _cmd_sweep,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        field = FieldSpec.parse(args.field)
        document, status = _VERBS[args.verb](args, field)
    except CounterexampleError as exc:
        print(f"counterexample: {exc}", file=sys.stderr)
        print(json.dumps(exc.record, separators=(",", ":")), file=sys.stderr)
        return 1
    except ResourceLimitError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return 3
    except (InputError, PreconditionError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except MultiboundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        Path(args.out).write_text(document)
    else:
        sys.stdout.write(document)
    return status


if __name__ == "__main__":
    sys.exit(main())
