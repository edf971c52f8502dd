"""Text formats: dataset parsing, report serialization and curve export."""

from __future__ import annotations

import enum
import json
import re
from xml.sax.saxutils import escape

from .distributions import GroupedDistribution, from_groups
from .errors import InequalityError, ParseError
from .indices import IndexReport, kolkata
from .lorenz import lorenz_curve, sample_curve

__all__ = [
    "DatasetFormat",
    "ReportFormat",
    "CurveFormat",
    "parse_dataset",
    "parse_citations",
    "write_grouped",
    "write_report",
    "read_report",
    "export_curve",
]

REPORT_KEYS = ("k", "normalized_k", "gini", "pietra", "mean", "pietra_arg", "median_to_mean", "disparity_at_k")

_DECIMAL = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?")
_INTEGER = re.compile(r"\+?\d+")


class DatasetFormat(enum.Enum):
    RAW = "raw"
    GROUPED = "grouped"


class ReportFormat(enum.Enum):
    JSON = "json"
    TSV = "tsv"


class CurveFormat(enum.Enum):
    CSV = "csv"
    SVG = "svg"


def _text(data) -> str:
    if isinstance(data, (bytes, bytearray)):
        try:
            return bytes(data).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(None, f"not valid UTF-8 ({exc.reason})") from None
    return data


def _data_lines(text: str):
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _value(token: str, lineno: int) -> float:
    token = token.strip()
    if not _DECIMAL.fullmatch(token):
        raise ParseError(lineno, f"not a decimal number: {token!r}")
    value = float(token)
    if value < 0:
        raise ParseError(lineno, "negative value")
    return value


def _count(token: str, lineno: int) -> int:
    token = token.strip()
    if not _INTEGER.fullmatch(token) or int(token) == 0:
        raise ParseError(lineno, f"count must be a positive integer: {token!r}")
    return int(token)


def parse_dataset(data, fmt=DatasetFormat.RAW) -> GroupedDistribution:
    """Parse raw values or ``count,value`` lines into a grouped distribution.

    Lines starting with ``#`` and blank lines are skipped; LF and CRLF line
    endings are both accepted.

    Raises
    ------
    ParseError
        Malformed line, negative value, or nonpositive count. The line
        number is 1-based in the original text.
    EmptyInput, AllZeroIncome
        Propagated from distribution construction.
    """
    fmt = DatasetFormat(fmt)
    pairs = []
    lines = []
    for lineno, line in _data_lines(_text(data)):
        if fmt is DatasetFormat.RAW:
            pairs.append((1, _value(line, lineno)))
        else:
            fields = line.split(",")
            if len(fields) != 2:
                raise ParseError(lineno, f"expected 'count,value', got {len(fields)} field(s)")
            pairs.append((_count(fields[0], lineno), _value(fields[1], lineno)))
        lines.append(lineno)
    try:
        return from_groups(pairs)
    except InequalityError as exc:
        # map item indices in construction errors back to line numbers
        index = getattr(exc, "index", None)
        if index is not None and 0 <= index < len(lines):
            raise ParseError(lines[index], str(exc)) from exc
        raise


def parse_citations(data) -> list[int]:
    """One non-negative integer citation count per line."""
    counts = []
    for lineno, line in _data_lines(_text(data)):
        if not re.fullmatch(r"[+-]?\d+", line):
            raise ParseError(lineno, f"not an integer citation count: {line!r}")
        value = int(line)
        if value < 0:
            raise ParseError(lineno, "negative value")
        counts.append(value)
    if not counts:
        raise ParseError(None, "no citation counts")
    return counts


def write_grouped(dist: GroupedDistribution) -> bytes:
    """Serialize as ``count,value`` lines, values in round-trip ``repr`` form."""
    return "".join(f"{g.count},{g.value!r}\n" for g in dist.groups).encode()


def _round12(x: float) -> float:
    return float(format(float(x), ".12g"))


def write_report(report: IndexReport, fmt=ReportFormat.JSON) -> bytes:
    """Serialize a report with fixed key order and 12 significant digits."""
    fmt = ReportFormat(fmt)
    values = report.as_dict()
    rounded = {key: _round12(values[key]) for key in REPORT_KEYS}
    if fmt is ReportFormat.JSON:
        return (json.dumps(rounded, indent=2) + "\n").encode()
    header = "\t".join(REPORT_KEYS)
    row = "\t".join(repr(rounded[key]) for key in REPORT_KEYS)
    return f"{header}\n{row}\n".encode()


def read_report(data) -> IndexReport:
    """Inverse of :func:`write_report`; the format is detected from content."""
    text = _text(data).strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.lineno, exc.msg) from None
    else:
        rows = text.splitlines()
        if len(rows) != 2:
            raise ParseError(None, "TSV report needs a header row and one value row")
        keys, vals = rows[0].split("\t"), rows[1].split("\t")
        if len(keys) != len(vals):
            raise ParseError(2, "column count differs from header")
        obj = {k: _value_any(v, 2) for k, v in zip(keys, vals)}
    missing = [k for k in REPORT_KEYS if k not in obj]
    if missing:
        raise ParseError(None, f"report is missing {', '.join(missing)}")
    return IndexReport(**{k: float(obj[k]) for k in REPORT_KEYS})


def _value_any(token: str, lineno: int) -> float:
    if not _DECIMAL.fullmatch(token.strip()):
        raise ParseError(lineno, f"not a decimal number: {token!r}")
    return float(token)


# plot geometry for the SVG export
_SIZE = 640
_MARGIN = 48
_SPAN = _SIZE - 2 * _MARGIN


def _xy(p: float, v: float) -> str:
    return f"{_MARGIN + p * _SPAN:.3f},{_MARGIN + (1.0 - v) * _SPAN:.3f}"


def _svg(curve, samples) -> str:
    k = kolkata(curve)
    lor = " ".join(_xy(p, l) for p, l, _ in samples)
    comp = " ".join(_xy(p, h) for p, _, h in samples)
    x0, y0 = _MARGIN, _MARGIN + _SPAN
    x1, y1 = _MARGIN + _SPAN, _MARGIN
    kx, ky = _xy(k, 1.0 - k).split(",")
    title = escape(f"Lorenz curve, k = {k:.6g}")
    return "\n".join([
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" viewBox="0 0 {_SIZE} {_SIZE}">',
        f"  <title>{title}</title>",
        f'  <rect x="{_MARGIN}" y="{_MARGIN}" width="{_SPAN}" height="{_SPAN}" fill="white" stroke="black"/>',
        f'  <line class="equality" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="#1f77b4" stroke-width="1.5"/>',
        f'  <line class="anti-diagonal" x1="{x0}" y1="{y1}" x2="{x1}" y2="{y0}" stroke="#999999" stroke-dasharray="4 4"/>',
        f'  <polyline class="lorenz" points="{lor}" fill="none" stroke="#d62728" stroke-width="2"/>',
        f'  <polyline class="complementary" points="{comp}" fill="none" stroke="#ff7f0e" stroke-width="2"/>',
        f'  <circle class="k-marker" cx="{kx}" cy="{ky}" r="5" fill="black"/>',
        f'  <text x="{_MARGIN}" y="{_MARGIN - 16}" font-family="sans-serif" font-size="14">{title}</text>',
        f'  <text x="{_SIZE // 2}" y="{_SIZE - 12}" text-anchor="middle" font-family="sans-serif" font-size="12">population share p</text>',
        "</svg>",
        "",
    ])


def export_curve(curve, points: int, fmt=CurveFormat.CSV) -> bytes:
    """Sample a curve for plotting.

    CSV has columns ``p,L,Lhat``. SVG is a standalone 640x640 plot of the
    Lorenz and complementary curves, the equality line and a marker at
    ``(k, 1 - k)``.
    """
    fmt = CurveFormat(fmt)
    curve = lorenz_curve(curve)
    samples = sample_curve(curve, points)
    if fmt is CurveFormat.CSV:
        rows = ["p,L,Lhat"] + [f"{p!r},{l!r},{h!r}" for p, l, h in samples]
        return ("\n".join(rows) + "\n").encode()
    return _svg(curve, samples).encode()
