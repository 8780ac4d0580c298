"""Deterministic rendering of analysis results.

Every renderer here is a pure function of its inputs and produces the
same bytes on every call: line-feed newlines only, no locale-dependent
number formatting, no timestamps, no generated ids. Mean RPN is rendered
to two decimal places. These outputs are the golden-file surface of the
tool, so any change to them is a contract change.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .analysis import (
    ClassBands,
    CollisionGroup,
    MatrixAxes,
    RiskMatrix,
    RpnResult,
    Summary,
)
from .scales import DETECTION_SCALE, OCCURRENCE_SCALE, SEVERITY_SCALE
from .simulate import SimResult
from .worksheet import ClassLabel, Worksheet

FORMATS = ("markdown", "csv", "text", "svg")


@dataclass(frozen=True)
class RenderOptions:
    """Output format plus whether narrative columns are included."""

    format: str = "markdown"
    include_narratives: bool = False

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r} (expected one of {FORMATS})")


_RANKED_HEADERS = ("Rank", "Component", "Failure Mode", "S", "O", "D", "RPN",
                   "Computed Class", "Declared Class", "Discrepancy")
_NARRATIVE_HEADERS = ("Effect", "End Effect", "Cause", "Prevention Controls",
                      "Detection Controls")


def _label(value: ClassLabel | None) -> str:
    return "-" if value is None else value.value


def _md_cell(text: str) -> str:
    return text.replace("|", "\\|").replace("\r\n", " ").replace("\n", " ")


def _md_table(headers: tuple[str, ...], rows: list[tuple[str, ...]]) -> str:
    lines = [
        "| " + " | ".join(_md_cell(h) for h in headers) + " |",
        "|" + "|".join(" --- " for _ in headers) + "|",
    ]
    for row in rows:
        lines.append("| " + " | ".join(_md_cell(c) for c in row) + " |")
    return "\n".join(lines) + "\n"


def _text_table(headers: tuple[str, ...], rows: list[tuple[str, ...]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    def fmt(row: tuple[str, ...]) -> str:
        return "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
    return "\n".join([fmt(headers)] + [fmt(r) for r in rows]) + "\n"


def _csv_text(rows: list[list[object]]) -> str:
    buffer = io.StringIO(newline="")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def _ranked_rows(results: list[RpnResult], ws: Worksheet,
                 include_narratives: bool, yes_no=("yes", "no")) -> list[tuple[str, ...]]:
    rows = []
    for result in results:
        entry = ws.entries[result.entry_index]
        row = (
            str(result.rank),
            entry.component,
            entry.failure_mode,
            str(entry.triple.severity),
            str(entry.triple.occurrence),
            str(entry.triple.detection),
            str(result.rpn),
            result.computed_class.value,
            _label(result.declared_class),
            yes_no[0] if result.discrepancy else yes_no[1],
        )
        if include_narratives:
            row += (entry.effect, entry.end_effect, entry.cause,
                    entry.prevention_controls, entry.detection_controls)
        rows.append(row)
    return rows


def render_ranked(results: list[RpnResult], ws: Worksheet,
                  opts: RenderOptions = RenderOptions()) -> str:
    """Render ranked results as a markdown, CSV, or text table.

    Rows follow rank order. The svg format is not applicable to ranked
    tables and raises ValueError.
    """
    if opts.format == "svg":
        raise ValueError("svg is only supported for risk matrices")
    headers = _RANKED_HEADERS + (_NARRATIVE_HEADERS if opts.include_narratives else ())
    if opts.format == "markdown":
        return _md_table(headers, _ranked_rows(results, ws, opts.include_narratives))
    if opts.format == "text":
        return _text_table(headers, _ranked_rows(results, ws, opts.include_narratives))
    # csv: machine-readable header names, empty cell for missing declared class
    header = ["rank", "component", "failure_mode", "severity", "occurrence",
              "detection", "rpn", "computed_class", "declared_class", "discrepancy"]
    if opts.include_narratives:
        header += ["effect", "end_effect", "cause", "prevention_controls",
                   "detection_controls"]
    rows: list[list[object]] = [header]
    for result in results:
        entry = ws.entries[result.entry_index]
        row: list[object] = [
            result.rank, entry.component, entry.failure_mode,
            entry.triple.severity, entry.triple.occurrence, entry.triple.detection,
            result.rpn, result.computed_class.value,
            "" if result.declared_class is None else result.declared_class.value,
            "true" if result.discrepancy else "false",
        ]
        if opts.include_narratives:
            row += [entry.effect, entry.end_effect, entry.cause,
                    entry.prevention_controls, entry.detection_controls]
        rows.append(row)
    return _csv_text(rows)


def render_fmea_report(ws: Worksheet, results: list[RpnResult]) -> str:
    """Render the full worksheet report, one section per entry in rank order.

    Each section carries the complete row: failure mode, ratings, effects,
    cause, classification (the declared label when present, otherwise the
    computed one), controls, and RPN.
    """
    lines = []
    lines.append(f"# FMEA report: {ws.title}" if ws.title else "# FMEA report")
    for result in results:
        entry = ws.entries[result.entry_index]
        classification = (entry.declared_classification
                          or result.computed_class).value
        def text(value: str) -> str:
            return value if value else "-"
        lines.append("")
        lines.append(f"## {result.rank}. {entry.component}")
        lines.append("")
        lines.append(f"- Failure mode: {text(entry.failure_mode)}")
        lines.append(f"- Severity (S): {entry.triple.severity}")
        lines.append(f"- Effect: {text(entry.effect)}")
        lines.append(f"- End effect: {text(entry.end_effect)}")
        lines.append(f"- Cause: {text(entry.cause)}")
        lines.append(f"- Classification: {classification}")
        lines.append(f"- Occurrence (O): {entry.triple.occurrence}")
        lines.append(f"- Prevention controls: {text(entry.prevention_controls)}")
        lines.append(f"- Detection controls: {text(entry.detection_controls)}")
        lines.append(f"- Detection (D): {entry.triple.detection}")
        lines.append(f"- RPN: {result.rpn}")
    return "\n".join(lines) + "\n"


def render_matrix_text(matrix: RiskMatrix) -> str:
    """Render a 10x10 count grid, severity 10 at the top, zeros as "."."""
    second = matrix.axes.second_name
    corner = "S\\" + second[0]
    lines = [
        f"Risk matrix: Severity vs {second}",
        f"Rows: severity 10 (top) to 1. Columns: {second.lower()} 1 to 10. "
        "Zero cells shown as \".\".",
        "",
        f"{corner:>4}" + "".join(f"{x:>5}" for x in range(1, 11)),
    ]
    for severity in range(10, 0, -1):
        cells = []
        for x in range(1, 11):
            count = matrix.count(severity, x)
            cells.append(f"{count if count else '.':>5}")
        lines.append(f"{severity:>4}" + "".join(cells))
    return "\n".join(lines) + "\n"


def render_matrix_csv(matrix: RiskMatrix) -> str:
    """Render the count grid as CSV, one row per severity (10 down to 1)."""
    prefix = matrix.axes.second_name[0].lower()
    rows: list[list[object]] = [["severity"] + [f"{prefix}{x}" for x in range(1, 11)]]
    for severity in range(10, 0, -1):
        rows.append([severity] + [matrix.count(severity, x) for x in range(1, 11)])
    return _csv_text(rows)


_CELL = 40
_LEFT, _TOP, _RIGHT, _BOTTOM = 70, 50, 20, 60
_HEAT_RGB = (178, 24, 43)  # saturated end of the white-to-red ramp


def _heat_fill(count: int, max_count: int) -> str:
    if count == 0 or max_count == 0:
        return "#ffffff"
    f = count / max_count
    channels = (round(255 + (c - 255) * f) for c in _HEAT_RGB)
    return "#" + "".join(f"{c:02x}" for c in channels)


def render_matrix_svg(matrix: RiskMatrix) -> bytes:
    """Render the matrix as a standalone SVG heatmap, byte-deterministic.

    Exactly 100 cell rectangles; fill intensity is linear in count from
    white (zero) to a single saturated hue (the matrix maximum); counts
    are overlaid on non-empty cells.
    """
    second = matrix.axes.second_name
    width = _LEFT + 10 * _CELL + _RIGHT
    height = _TOP + 10 * _CELL + _BOTTOM
    grid_cx = _LEFT + 5 * _CELL
    grid_cy = _TOP + 5 * _CELL
    max_count = matrix.max_count()

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g font-family="sans-serif" font-size="14">',
        f'<text x="{grid_cx}" y="30" text-anchor="middle" font-size="18">'
        f'Risk matrix: Severity vs {second}</text>',
    ]
    cells = []
    numerals = []
    for severity in range(10, 0, -1):
        y = _TOP + (10 - severity) * _CELL
        for x_rating in range(1, 11):
            x = _LEFT + (x_rating - 1) * _CELL
            count = matrix.count(severity, x_rating)
            fill = _heat_fill(count, max_count)
            cells.append(
                f'<rect class="cell" x="{x}" y="{y}" width="{_CELL}" '
                f'height="{_CELL}" fill="{fill}" stroke="#cccccc"/>')
            if count:
                text_fill = "#ffffff" if count / max_count > 0.5 else "#000000"
                numerals.append(
                    f'<text x="{x + _CELL // 2}" y="{y + _CELL // 2 + 5}" '
                    f'text-anchor="middle" fill="{text_fill}">{count}</text>')
    parts.extend(cells)
    parts.extend(numerals)

    for x_rating in range(1, 11):
        x = _LEFT + (x_rating - 1) * _CELL + _CELL // 2
        parts.append(f'<text x="{x}" y="{_TOP + 10 * _CELL + 20}" '
                     f'text-anchor="middle">{x_rating}</text>')
    for severity in range(1, 11):
        y = _TOP + (10 - severity) * _CELL + _CELL // 2 + 5
        parts.append(f'<text x="{_LEFT - 10}" y="{y}" '
                     f'text-anchor="end">{severity}</text>')
    parts.append(f'<text x="{grid_cx}" y="{_TOP + 10 * _CELL + 45}" '
                 f'text-anchor="middle">{second}</text>')
    parts.append(f'<text transform="rotate(-90 18 {grid_cy})" x="18" y="{grid_cy}" '
                 f'text-anchor="middle">Severity</text>')
    parts.append("</g>")
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("utf-8")


def _mean_text(summary: Summary) -> str:
    mean = summary.rpn_mean
    return f"{mean.numerator / mean.denominator:.2f}"


def _class_counts_text(counts: dict[ClassLabel, int]) -> str:
    return ", ".join(f"{label.value} {counts[label]}" for label in ClassLabel)


def render_analysis_markdown(ws: Worksheet, results: list[RpnResult],
                             groups: list[CollisionGroup],
                             flagged: list[RpnResult],
                             summary: Summary, bands: ClassBands) -> str:
    """Assemble the full analysis document: ranked table, then collisions
    and discrepancies."""
    lines = ["# FMEA analysis", ""]
    lines.append(f"Class bands: {bands.describe()}")
    if summary.entries:
        lines.append(f"Entries: {summary.entries} | RPN min {summary.rpn_min}, "
                     f"max {summary.rpn_max}, mean {_mean_text(summary)}")
        lines.append("Computed classes: "
                     + _class_counts_text(summary.computed_class_counts))
        lines.append("Declared classes: "
                     + _class_counts_text(summary.declared_class_counts))
    else:
        lines.append("Entries: 0")
    lines.append("")
    lines.append(render_ranked(results, ws, RenderOptions(format="markdown")).rstrip("\n"))
    lines.append("")
    lines.append("## Collisions")
    lines.append("")
    if groups:
        for group in groups:
            names = "; ".join(ws.entries[i].component for i in group.members)
            lines.append(f"- RPN {group.rpn} ({len(group.members)} entries): {names}")
    else:
        lines.append("(none)")
    lines.append("")
    lines.append("## Discrepancies")
    lines.append("")
    if flagged:
        for result in flagged:
            entry = ws.entries[result.entry_index]
            lines.append(f"- {entry.component}: declared "
                         f"{_label(result.declared_class)}, computed "
                         f"{result.computed_class.value} (RPN {result.rpn})")
    else:
        lines.append("(none)")
    return "\n".join(lines) + "\n"


def render_analysis_csv(ws: Worksheet, results: list[RpnResult],
                        groups: list[CollisionGroup],
                        flagged: list[RpnResult],
                        summary: Summary, bands: ClassBands) -> str:
    """Analysis as four CSV tables separated by blank lines: summary
    (including the bands in force), ranked results, collisions,
    discrepancies."""
    summary_rows: list[list[object]] = [
        ["entries", "rpn_min", "rpn_max", "rpn_mean",
         "marginal_min", "critical_min", "catastrophic_min"],
        [summary.entries,
         "" if summary.rpn_min is None else summary.rpn_min,
         "" if summary.rpn_max is None else summary.rpn_max,
         "" if summary.rpn_mean is None else _mean_text(summary),
         bands.marginal_min, bands.critical_min, bands.catastrophic_min],
    ]
    out = [_csv_text(summary_rows),
           render_ranked(results, ws, RenderOptions(format="csv"))]

    collision_rows: list[list[object]] = [["rpn", "member_indices", "member_components"]]
    for group in groups:
        collision_rows.append([
            group.rpn,
            ";".join(str(i) for i in group.members),
            ";".join(ws.entries[i].component for i in group.members),
        ])
    out.append(_csv_text(collision_rows))

    flagged_rows: list[list[object]] = [
        ["rank", "component", "rpn", "computed_class", "declared_class"]]
    for result in flagged:
        flagged_rows.append([
            result.rank, ws.entries[result.entry_index].component, result.rpn,
            result.computed_class.value, _label(result.declared_class),
        ])
    out.append(_csv_text(flagged_rows))
    return "\n".join(out)


def analysis_payload(ws: Worksheet, results: list[RpnResult],
                     groups: list[CollisionGroup], flagged: list[RpnResult],
                     summary: Summary, bands: ClassBands) -> dict:
    """Analysis as a JSON-serializable dict (the --format json contract)."""
    def result_record(result: RpnResult) -> dict:
        entry = ws.entries[result.entry_index]
        return {
            "rank": result.rank,
            "entry_index": result.entry_index,
            "component": entry.component,
            "failure_mode": entry.failure_mode,
            "severity": entry.triple.severity,
            "occurrence": entry.triple.occurrence,
            "detection": entry.triple.detection,
            "rpn": result.rpn,
            "computed_class": result.computed_class.value,
            "declared_class": (None if result.declared_class is None
                               else result.declared_class.value),
            "discrepancy": result.discrepancy,
        }

    mean = summary.rpn_mean
    return {
        "bands": [bands.marginal_min, bands.critical_min, bands.catastrophic_min],
        "summary": {
            "entries": summary.entries,
            "rpn_min": summary.rpn_min,
            "rpn_max": summary.rpn_max,
            "rpn_mean": None if mean is None else float(_mean_text(summary)),
            "computed_class_counts": {
                label.value: summary.computed_class_counts[label]
                for label in ClassLabel},
            "declared_class_counts": {
                label.value: summary.declared_class_counts[label]
                for label in ClassLabel},
        },
        "results": [result_record(r) for r in results],
        "collisions": [
            {
                "rpn": group.rpn,
                "members": list(group.members),
                "components": [ws.entries[i].component for i in group.members],
            }
            for group in groups
        ],
        "discrepancies": [result_record(r) for r in flagged],
    }


def render_simulation_text(results: list[SimResult],
                           components: list[str] | None = None) -> str:
    """Simulation results as an aligned text table.

    When components is given (worksheet mode) a leading component column
    identifies each row.
    """
    headers: tuple[str, ...] = ("rating_in", "trials", "failures",
                                "empirical_rate", "rating_out", "agrees")
    rows = []
    for i, result in enumerate(results):
        row = (
            str(result.rating_in),
            str(result.trials),
            str(result.failures),
            f"{result.empirical_rate:.8f}",
            str(result.rating_out),
            "yes" if result.agrees else "no",
        )
        if components is not None:
            row = (components[i],) + row
        rows.append(row)
    if components is not None:
        headers = ("component",) + headers
    return _text_table(headers, rows)


_SCALES = (
    ("severity", SEVERITY_SCALE),
    ("occurrence", OCCURRENCE_SCALE),
    ("detection", DETECTION_SCALE),
)


def render_scales_csv(which: str | None = None) -> str:
    """Dump the rating scales as CSV (scale, rating, label, criteria).

    which selects a single scale by initial ("s", "o", "d"); None dumps
    all three.
    """
    rows: list[list[object]] = [["scale", "rating", "label", "criteria"]]
    for name, table in _SCALES:
        if which is not None and not name.startswith(which):
            continue
        for row in table:
            rows.append([name, row.rating, row.label, row.criteria])
    return _csv_text(rows)
