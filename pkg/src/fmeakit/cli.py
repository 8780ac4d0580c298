"""Command-line front end.

Exit codes: 0 success, 1 data or validation failure, 2 usage error.
Diagnostics go to stderr; payload goes to stdout, and nothing is written
to stdout when the exit code is nonzero. Every subcommand builds its
whole payload before writing, so output is all-or-nothing.
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import (
    DEFAULT_BANDS,
    ClassBands,
    MatrixAxes,
    collisions,
    rank,
    risk_matrix,
    summary_stats,
)
from .dataset import bundled_csv_bytes, microgrid_worksheet
from .ingest import ParseFailure, emit_json, parse_csv, parse_json
from .report import (
    RenderOptions,
    analysis_payload,
    render_analysis_csv,
    render_analysis_markdown,
    render_fmea_report,
    render_matrix_csv,
    render_matrix_svg,
    render_matrix_text,
    render_scales_csv,
    render_simulation_text,
)
from .simulate import SimConfig, simulate_occurrence, simulate_worksheet
from .worksheet import Worksheet, validate_worksheet


class _UsageError(Exception):
    """Bad invocation detected after argparse (exit 2)."""


class _InputError(Exception):
    """Unreadable or unparseable input (exit 1); carries diagnostic lines."""

    def __init__(self, lines: list[str]):
        super().__init__("; ".join(lines))
        self.lines = lines


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as handle:
            return handle.read()
    except OSError as exc:
        reason = exc.strerror or str(exc)
        raise _InputError([f"error: cannot read {path}: {reason}"]) from exc


def _load(path: str) -> Worksheet:
    """Parse a worksheet file; format chosen by extension, stdin is CSV."""
    data = _read_bytes(path)
    if path == "-" or path.lower().endswith(".csv"):
        parse = parse_csv
    elif path.lower().endswith(".json"):
        parse = parse_json
    else:
        raise _UsageError(f"cannot tell the format of {path!r}: "
                          "expected a .csv or .json file, or - for stdin CSV")
    try:
        return parse(data)
    except ParseFailure as exc:
        raise _InputError([str(err) for err in exc.errors]) from exc


def _bands_type(text: str) -> ClassBands:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            f"expected three comma-separated integers, got {text!r}")
    try:
        b1, b2, b3 = (int(p) for p in parts)
        return ClassBands(b1, b2, b3)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _cmd_validate(args: argparse.Namespace) -> int:
    ws = _load(args.file)
    violations = validate_worksheet(ws)
    if violations:
        for violation in violations:
            print(str(violation), file=sys.stderr)
        print(f"{len(violations)} violation(s) in {len(ws)} entries",
              file=sys.stderr)
        return 1
    print(f"OK: {len(ws)} entries, no violations")
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    ws = _load(args.file)
    bands = args.bands
    results = rank(ws, bands)
    groups = collisions(ws)
    flagged = [r for r in results if r.discrepancy]
    summary = summary_stats(ws, bands)
    if args.format == "md":
        payload = render_analysis_markdown(ws, results, groups, flagged,
                                           summary, bands)
    elif args.format == "csv":
        payload = render_analysis_csv(ws, results, groups, flagged,
                                      summary, bands)
    else:
        document = analysis_payload(ws, results, groups, flagged, summary, bands)
        payload = json.dumps(document, indent=2, ensure_ascii=False) + "\n"
    sys.stdout.write(payload)
    return 0


def _cmd_matrix(args: argparse.Namespace) -> int:
    ws = _load(args.file)
    matrix = risk_matrix(ws, MatrixAxes(args.axes))
    if args.format == "svg":
        sys.stdout.buffer.write(render_matrix_svg(matrix))
        sys.stdout.buffer.flush()
        return 0
    if args.format == "csv":
        sys.stdout.write(render_matrix_csv(matrix))
    else:
        sys.stdout.write(render_matrix_text(matrix))
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    ws = _load(args.file)
    results = rank(ws, DEFAULT_BANDS)
    sys.stdout.write(render_fmea_report(ws, results))
    return 0


def _cmd_simulate(args: argparse.Namespace) -> int:
    if (args.file is None) == (args.rating is None):
        raise _UsageError("simulate needs a worksheet file or --rating, "
                          "but not both")
    try:
        cfg = SimConfig(trials=args.trials, seed=args.seed)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    if args.rating is not None:
        payload = render_simulation_text([simulate_occurrence(args.rating, cfg)])
    else:
        ws = _load(args.file)
        results = simulate_worksheet(ws, cfg)
        components = [entry.component for entry in ws.entries]
        payload = render_simulation_text(results, components)
    sys.stdout.write(payload)
    return 0


def _cmd_dataset(args: argparse.Namespace) -> int:
    if args.format == "json":
        sys.stdout.buffer.write(emit_json(microgrid_worksheet()))
    else:
        sys.stdout.buffer.write(bundled_csv_bytes())
    sys.stdout.buffer.flush()
    return 0


def _cmd_scales(args: argparse.Namespace) -> int:
    sys.stdout.write(render_scales_csv(args.scale))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fmeakit",
        description="Classical FMEA: validate worksheets, rank failure "
                    "modes by RPN, map risk matrices, and check occurrence "
                    "ratings by simulation.")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("validate", help="parse a worksheet and report violations")
    p.add_argument("file", help="worksheet path (.csv or .json), or - for stdin CSV")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("analyze",
                       help="ranked RPN results with collisions and discrepancies")
    p.add_argument("file", help="worksheet path (.csv or .json), or - for stdin CSV")
    p.add_argument("--bands", type=_bands_type, default=DEFAULT_BANDS,
                   metavar="B1,B2,B3",
                   help="ascending class cut points (default 100,200,500)")
    p.add_argument("--format", choices=("md", "csv", "json"), default="md")
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("matrix", help="10x10 risk matrix")
    p.add_argument("file", help="worksheet path (.csv or .json), or - for stdin CSV")
    p.add_argument("--axes", choices=("s-d", "s-o"), required=True,
                   help="severity vs detection (s-d) or occurrence (s-o)")
    p.add_argument("--format", choices=("text", "csv", "svg"), default="text")
    p.set_defaults(handler=_cmd_matrix)

    p = sub.add_parser("report", help="full FMEA report in rank order")
    p.add_argument("file", help="worksheet path (.csv or .json), or - for stdin CSV")
    p.set_defaults(handler=_cmd_report)

    p = sub.add_parser("simulate",
                       help="check occurrence ratings by Monte Carlo sampling")
    p.add_argument("file", nargs="?",
                   help="worksheet path; omit when using --rating")
    p.add_argument("--rating", type=int, choices=range(1, 11), metavar="R",
                   help="simulate a single occurrence rating (1-10)")
    p.add_argument("--trials", type=int, default=1_000_000, metavar="N",
                   help="Bernoulli opportunities per entry (default 1000000)")
    p.add_argument("--seed", type=int, default=0, metavar="S",
                   help="base PRNG seed (default 0)")
    p.set_defaults(handler=_cmd_simulate)

    p = sub.add_parser("dataset", help="emit the bundled microgrid worksheet")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(handler=_cmd_dataset)

    p = sub.add_parser("scales", help="dump the 1-10 rating scales as CSV")
    p.add_argument("--scale", choices=("s", "o", "d"),
                   help="limit to severity, occurrence, or detection")
    p.set_defaults(handler=_cmd_scales)
    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse argv and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    except _InputError as exc:
        for line in exc.lines:
            print(line, file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 1


def main() -> None:
    sys.exit(run())
