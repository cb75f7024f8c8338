"""Command-line front end: rank, sweep and validate decision problems.

Problem files are CSV (header ``alt,<attr...>``, cells ``eta;xi;t;i;f``,
optional trailing ``weights,...`` row) or JSON (object with
``alternatives``, ``attributes``, ``weights`` and a row-major ``cells``
array of 5-field objects).  Exit codes: 0 success, 1 usage error,
2 data/validation error, 3 degenerate computation.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass

from .aggregate import OPERATORS, check_weights
from .core import Fnnn, make_fnnn
from .errors import (
    DegenerateCloseness,
    FnnError,
    LambdaInvalid,
    LengthMismatch,
    ParseError,
    WeightInvalid,
)
from .pipeline import (
    METRICS,
    DecisionMatrix,
    PipelineConfig,
    RankingReport,
    SweepResult,
    lambda_sweep,
    make_decision_matrix,
    rank,
    run_pipeline,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_DEGENERATE = 3

DEFAULT_PRECISION = 4
PRECISION_ENV = "FNN_MADM_PRECISION"


# ---------------------------------------------------------------------------
# problem-file loading


@dataclass
class RawProblem:
    """Parsed but not yet validated problem content."""

    alternatives: list[str]
    attributes: list[str]
    cells: list[list[tuple[float, float, float, float, float]]]
    weights: list[float] | None


def _parse_cell(text: str, row: int, col: int) -> tuple[float, ...]:
    parts = [p.strip() for p in text.split(";")]
    if len(parts) != 5:
        raise ParseError(
            f"cell {text!r} must have 5 ';'-separated fields eta;xi;t;i;f",
            row=row,
            col=col,
        )
    try:
        return tuple(float(p) for p in parts)
    except ValueError as e:
        raise ParseError(f"cell {text!r}: {e}", row=row, col=col) from None


def _read_csv_problem(path: str) -> RawProblem:
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [r for r in csv.reader(fh) if r and any(field.strip() for field in r)]
    if not rows:
        raise ParseError(f"{path}: file is empty")
    header = rows[0]
    if len(header) < 2:
        raise ParseError("header must be 'alt,<attr1>,...,<attrm>'", row=1)
    attributes = [h.strip() for h in header[1:]]
    weights = None
    data_rows = rows[1:]
    if data_rows and data_rows[-1][0].strip().lower() == "weights":
        wrow = data_rows.pop()
        if len(wrow) != len(attributes) + 1:
            raise ParseError(
                f"weights row has {len(wrow) - 1} entries, expected {len(attributes)}",
                row=len(rows),
            )
        try:
            weights = [float(w) for w in wrow[1:]]
        except ValueError as e:
            raise ParseError(f"weights row: {e}", row=len(rows)) from None
    if not data_rows:
        raise ParseError("no alternative rows found")
    alternatives, cells = [], []
    for r, row in enumerate(data_rows, start=2):
        if len(row) != len(attributes) + 1:
            raise ParseError(
                f"row has {len(row) - 1} cells, expected {len(attributes)}", row=r
            )
        alternatives.append(row[0].strip())
        cells.append(
            [_parse_cell(cell, r, c) for c, cell in enumerate(row[1:], start=2)]
        )
    return RawProblem(alternatives, attributes, cells, weights)


def _read_json_problem(path: str) -> RawProblem:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise ParseError(f"{path}: invalid JSON: {e}") from None
    try:
        alternatives = [str(a) for a in doc["alternatives"]]
        attributes = [str(a) for a in doc["attributes"]]
        raw_cells = doc["cells"]
    except (KeyError, TypeError) as e:
        raise ParseError(f"{path}: missing field {e}") from None
    n, m = len(alternatives), len(attributes)
    if len(raw_cells) != n * m:
        raise ParseError(f"expected {n * m} cells (row-major), got {len(raw_cells)}")
    cells = []
    for i in range(n):
        row = []
        for j in range(m):
            d = raw_cells[i * m + j]
            try:
                row.append(
                    tuple(float(d[k]) for k in ("eta", "xi", "t", "i", "f"))
                )
            except (KeyError, TypeError, ValueError) as e:
                raise ParseError(f"cell object {i * m + j}: {e}", row=i, col=j) from None
        cells.append(row)
    weights = [float(w) for w in doc["weights"]] if doc.get("weights") else None
    return RawProblem(alternatives, attributes, cells, weights)


def _detect_format(path: str, declared: str | None) -> str:
    if declared:
        return declared
    return "json" if path.lower().endswith(".json") else "csv"


def _read_raw(path: str, fmt: str | None = None) -> RawProblem:
    fmt = _detect_format(path, fmt)
    if fmt == "json":
        return _read_json_problem(path)
    return _read_csv_problem(path)


def _cell_diagnostics(raw: RawProblem) -> list[tuple[str, str, str]]:
    """(alternative, attribute, reason) for every invalid cell."""
    out = []
    for i, row in enumerate(raw.cells):
        for j, values in enumerate(row):
            try:
                make_fnnn(*values)
            except FnnError as e:
                out.append((raw.alternatives[i], raw.attributes[j], str(e)))
    return out


def _build_matrix(
    raw: RawProblem,
    weights_override: list[float] | None = None,
    renormalize: bool = False,
) -> DecisionMatrix:
    bad = _cell_diagnostics(raw)
    if bad:
        alt, attr, reason = bad[0]
        raise ParseError(f"invalid cell at ({alt}, {attr}): {reason}")
    cells = [[make_fnnn(*values) for values in row] for row in raw.cells]
    weights = weights_override if weights_override is not None else raw.weights
    if weights is None:
        raise ParseError("no weights: embed a 'weights' row or pass --weights")
    return make_decision_matrix(
        raw.alternatives, raw.attributes, cells, weights, renormalize=renormalize
    )


def parse_problem(path: str, fmt: str | None = None) -> DecisionMatrix:
    """Load and fully validate a problem file (weights must be embedded)."""
    return _build_matrix(_read_raw(path, fmt))


# ---------------------------------------------------------------------------
# report serialization


def _precision() -> int:
    value = os.environ.get(PRECISION_ENV)
    if value is None:
        return DEFAULT_PRECISION
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{PRECISION_ENV} must be an integer, got {value!r}") from None


def fnnn_to_dict(v: Fnnn) -> dict:
    return {"eta": v.eta, "xi": v.xi, "t": v.t, "i": v.i, "f": v.f}


def _fmt_fnnn(v: Fnnn, prec: int) -> str:
    return (
        f"({v.eta:.{prec}f}, {v.xi:.{prec}f}); "
        f"{v.t:.{prec}f}, {v.i:.{prec}f}, {v.f:.{prec}f}"
    )


def _ordering_str(report_labels) -> str:
    return " >= ".join(report_labels)


def report_to_dict(rep: RankingReport) -> dict:
    dm = rep.matrix
    return {
        "config": {
            "operator": rep.config.operator,
            "metric": rep.config.metric,
            "lambda": rep.config.lam,
        },
        "alternatives": list(dm.alternatives),
        "attributes": list(dm.attributes),
        "weights": list(dm.weights),
        "normalized": [[fnnn_to_dict(c) for c in row] for row in dm.cells],
        "aggregates": [fnnn_to_dict(a) for a in rep.aggregates],
        "positive_ideal": fnnn_to_dict(rep.positive_ideal),
        "negative_ideal": fnnn_to_dict(rep.negative_ideal),
        "d_plus": list(rep.d_plus),
        "d_minus": list(rep.d_minus),
        "closeness": list(rep.closeness),
        "ordering": list(rep.ordering),
        "ordering_labels": list(rep.ordered_labels()),
        "notes": list(rep.notes),
    }


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _render_rank_table(rep: RankingReport, prec: int) -> str:
    dm = rep.matrix
    lines = [
        f"operator={rep.config.operator}  metric={rep.config.metric}  "
        f"lambda={rep.config.lam:g}",
        "",
        "Normalized decision matrix:",
    ]
    width = max(len(a) for a in dm.alternatives)
    for label, row in zip(dm.alternatives, dm.cells):
        cells = "  ".join(_fmt_fnnn(c, prec) for c in row)
        lines.append(f"  {label:<{width}}  {cells}")
    lines += ["", "Aggregates:"]
    for label, agg in zip(dm.alternatives, rep.aggregates):
        lines.append(f"  {label:<{width}}  {_fmt_fnnn(agg, prec)}")
    lines += [
        "",
        f"Positive ideal: {_fmt_fnnn(rep.positive_ideal, prec)}",
        f"Negative ideal: {_fmt_fnnn(rep.negative_ideal, prec)}",
        "",
        "Distances and closeness:",
        f"  {'alt':<{width}}  {'D+':>{prec + 4}}  {'D-':>{prec + 4}}  "
        f"{'D*':>{prec + 4}}  rank",
    ]
    position = {k: r + 1 for r, k in enumerate(rep.ordering)}
    for k, label in enumerate(dm.alternatives):
        lines.append(
            f"  {label:<{width}}  {rep.d_plus[k]:>{prec + 4}.{prec}f}  "
            f"{rep.d_minus[k]:>{prec + 4}.{prec}f}  "
            f"{rep.closeness[k]:>{prec + 4}.{prec}f}  {position[k]:>4}"
        )
    lines += ["", f"Ranking: {_ordering_str(rep.ordered_labels())}"]
    for note in rep.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def _render_rank_csv(rep: RankingReport) -> str:
    position = {k: r + 1 for r, k in enumerate(rep.ordering)}
    lines = ["alternative,d_plus,d_minus,closeness,rank"]
    for k, label in enumerate(rep.matrix.alternatives):
        lines.append(
            f"{label},{rep.d_plus[k]!r},{rep.d_minus[k]!r},"
            f"{rep.closeness[k]!r},{position[k]}"
        )
    return "\n".join(lines)


def sweep_to_dict(result: SweepResult, dm: DecisionMatrix, config: PipelineConfig) -> dict:
    labels = dm.alternatives
    return {
        "config": {"operator": config.operator, "metric": config.metric},
        "alternatives": list(labels),
        "rows": [
            {
                "lambda": row.lam,
                "closeness": list(row.closeness),
                "ordering": list(row.ordering),
                "ordering_labels": [labels[k] for k in row.ordering],
            }
            for row in result.rows
        ],
        "transitions": [
            {
                "lambda": tr.lam,
                "previous": list(tr.previous),
                "ordering": list(tr.ordering),
            }
            for tr in result.transitions
        ],
    }


def _render_sweep_table(result: SweepResult, dm: DecisionMatrix, prec: int) -> str:
    labels = dm.alternatives
    head = "  ".join(f"{a:>{prec + 3}}" for a in labels)
    lines = [f"{'lambda':>7}  {head}  ordering"]
    transition_lams = {tr.lam for tr in result.transitions}
    for row in result.rows:
        vals = "  ".join(f"{v:>{prec + 3}.{prec}f}" for v in row.closeness)
        mark = "  <- transition" if row.lam in transition_lams else ""
        lines.append(
            f"{row.lam:>7g}  {vals}  "
            f"{_ordering_str([labels[k] for k in row.ordering])}{mark}"
        )
    if result.transitions:
        lines.append("")
        for tr in result.transitions:
            lines.append(
                f"transition at lambda={tr.lam:g}: "
                f"{_ordering_str([labels[k] for k in tr.previous])} -> "
                f"{_ordering_str([labels[k] for k in tr.ordering])}"
            )
    return "\n".join(lines)


def _render_sweep_csv(result: SweepResult, dm: DecisionMatrix) -> str:
    labels = dm.alternatives
    lines = ["lambda," + ",".join(f"D{k + 1}" for k in range(len(labels))) + ",ordering"]
    for row in result.rows:
        vals = ",".join(repr(v) for v in row.closeness)
        lines.append(
            f"{row.lam!r},{vals},{_ordering_str([labels[k] for k in row.ordering])}"
        )
    return "\n".join(lines)


def _plot_csv(result: SweepResult, n: int) -> str:
    lines = ["lambda," + ",".join(f"D{k + 1}" for k in range(n))]
    for row in result.rows:
        lines.append(f"{row.lam!r}," + ",".join(repr(v) for v in row.closeness))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands


def _parse_weights_flag(text: str) -> list[float]:
    try:
        return [float(w) for w in text.split(",")]
    except ValueError as e:
        raise WeightInvalid(f"--weights: {e}") from None


def _load_matrix(args) -> DecisionMatrix:
    """Read the problem file; apply the --weights override if given.

    File/data problems raise FnnError subclasses (exit 2); a bad
    --weights flag is a usage problem and raises _UsageError (exit 1).
    """
    raw = _read_raw(args.path, args.input_format)
    override = None
    if args.weights is not None:
        override = _parse_weights_flag(args.weights)
        try:
            check_weights(
                override, n=len(raw.attributes), renormalize=args.renormalize_weights
            )
        except (LengthMismatch, WeightInvalid) as e:
            raise _UsageError(str(e)) from None
    return _build_matrix(raw, override, renormalize=args.renormalize_weights)


class _UsageError(Exception):
    pass


def cmd_rank(args) -> int:
    dm = _load_matrix(args)
    try:
        config = PipelineConfig(operator=args.operator, metric=args.metric, lam=args.lam)
    except (KeyError, LambdaInvalid) as e:
        raise _UsageError(str(e)) from None
    rep = run_pipeline(dm, config)
    prec = _precision()
    if args.format == "json":
        print(_dump_json(report_to_dict(rep)))
    elif args.format == "csv":
        print(_render_rank_csv(rep))
    else:
        print(_render_rank_table(rep, prec))
    return EXIT_OK


def _sweep_lambdas(args) -> list[float]:
    if args.lambdas:
        try:
            lams = [float(v) for v in args.lambdas.split(",")]
        except ValueError as e:
            raise _UsageError(f"--lambdas: {e}") from None
    elif args.lambda_range:
        text = args.lambda_range
        if ".." not in text:
            raise _UsageError(f"--lambda-range must look like 'a..b', got {text!r}")
        lo_s, hi_s = text.split("..", 1)
        try:
            lo, hi = float(lo_s), float(hi_s)
        except ValueError as e:
            raise _UsageError(f"--lambda-range: {e}") from None
        if not (1.0 <= lo <= hi):
            raise _UsageError(f"--lambda-range needs 1 <= a <= b, got {text!r}")
        lams, v = [], lo
        while v <= hi + 1e-9:
            lams.append(v)
            v += 1.0
    else:
        raise _UsageError("sweep needs --lambda-range a..b or --lambdas x,y,...")
    if any(v < 1.0 for v in lams):
        raise _UsageError("every lambda must be >= 1")
    if any(b <= a for a, b in zip(lams, lams[1:])):
        raise _UsageError("lambda values must be strictly increasing")
    return lams


def cmd_sweep(args) -> int:
    dm = _load_matrix(args)
    lams = _sweep_lambdas(args)
    config = PipelineConfig(operator=args.operator, metric=args.metric, lam=lams[0])
    result = lambda_sweep(dm, config, lams)
    prec = _precision()
    if args.plot_out:
        with open(args.plot_out, "w", encoding="utf-8") as fh:
            fh.write(_plot_csv(result, dm.n_alternatives))
    if args.format == "json":
        print(_dump_json(sweep_to_dict(result, dm, config)))
    elif args.format == "csv":
        print(_render_sweep_csv(result, dm))
    else:
        print(_render_sweep_table(result, dm, prec))
    return EXIT_OK


def cmd_validate(args) -> int:
    raw = _read_raw(args.path, args.input_format)
    diagnostics = _cell_diagnostics(raw)
    weight_problem = None
    if args.weights is None and raw.weights is not None:
        try:
            check_weights(raw.weights, n=len(raw.attributes))
        except (LengthMismatch, WeightInvalid) as e:
            weight_problem = str(e)
    for alt, attr, reason in diagnostics:
        print(f"invalid cell ({alt}, {attr}): {reason}")
    if weight_problem:
        print(f"invalid weights: {weight_problem}")
    if diagnostics or weight_problem:
        total = len(raw.alternatives) * len(raw.attributes)
        print(f"{total - len(diagnostics)} of {total} cells valid")
        return EXIT_DATA
    print(f"{len(raw.alternatives) * len(raw.attributes)} cells valid")
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="fnn-madm",
        description=(
            "Rank alternatives described by Fermatean neutrosophic normal "
            "numbers with TOPSIS-style relative closeness."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_lambda=True):
        p.add_argument("path", help="problem file (CSV or JSON)")
        p.add_argument(
            "--input-format",
            choices=("csv", "json"),
            default=None,
            help="problem file format (default: by extension)",
        )
        p.add_argument(
            "--operator",
            choices=sorted(OPERATORS),
            default="fnnwa",
            help="aggregation operator (default: fnnwa)",
        )
        p.add_argument(
            "--metric",
            choices=sorted(METRICS),
            default="hamming",
            help="ideal-distance measure (default: hamming)",
        )
        p.add_argument(
            "--weights",
            default=None,
            metavar="w1,...,wm",
            help="attribute weights; overrides a weights row in the file",
        )
        p.add_argument(
            "--renormalize-weights",
            action="store_true",
            help="rescale weights to sum 1 instead of rejecting them",
        )
        if with_lambda:
            p.add_argument(
                "--lambda",
                dest="lam",
                type=float,
                default=1.0,
                help="operation parameter, real >= 1 (default: 1)",
            )
        p.add_argument(
            "--format",
            choices=("table", "json", "csv"),
            default="table",
            help="report format (default: table)",
        )

    p_rank = sub.add_parser("rank", help="run the full ranking pipeline")
    add_common(p_rank)
    p_rank.set_defaults(func=cmd_rank)

    p_sweep = sub.add_parser("sweep", help="rank repeatedly over a lambda grid")
    add_common(p_sweep, with_lambda=False)
    p_sweep.add_argument(
        "--lambda-range",
        default=None,
        metavar="a..b",
        help="integer-stepped grid from a to b, 1 <= a <= b",
    )
    p_sweep.add_argument(
        "--lambdas",
        default=None,
        metavar="x,y,...",
        help="explicit strictly increasing lambda values",
    )
    p_sweep.add_argument(
        "--plot-out",
        default=None,
        metavar="PATH",
        help="write closeness-vs-lambda CSV (header: lambda,D1,...,Dn)",
    )
    p_sweep.set_defaults(func=cmd_sweep)

    p_val = sub.add_parser("validate", help="report every invalid cell")
    p_val.add_argument("path", help="problem file (CSV or JSON)")
    p_val.add_argument(
        "--input-format", choices=("csv", "json"), default=None
    )
    p_val.add_argument("--weights", default=None, metavar="w1,...,wm")
    p_val.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateCloseness as e:
        print(f"error: degenerate computation: {e}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (FnnError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
