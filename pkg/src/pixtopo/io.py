"""Reading binary images, writing them back, and emitting analysis reports.

Two input formats are supported: a permissive ASCII grid ('#' or '1' marks a
pixel, '.', '0' or space marks background) and Netpbm PBM, both the ASCII P1
and the packed-binary P4 variant.  The coordinate convention is shared: the
top line is row y=0, y grows downward, the leftmost column is x=0.

Report emission is deterministic: JSON keys keep a fixed order so equal
inputs produce byte-identical documents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, Optional

from .curves import CurveVerdict
from .grid import Adjacency, DigitalObject
from .invariants import InvariantReport

FORMAT_VERSION = "1"

PIXEL_CHARS = frozenset("#1")
EMPTY_CHARS = frozenset(".0 ")


class ParseError(ValueError):
    """Malformed input image; the message pinpoints the offending location."""


def parse_ascii_grid(text: str) -> DigitalObject:
    """Parse an ASCII grid; lines may differ in length (short lines padded).

    Any character outside '#1' / '.0 ' raises ParseError naming the 1-based
    line and column.
    """
    pixels = []
    for row, line in enumerate(text.splitlines()):
        for col, ch in enumerate(line):
            if ch in PIXEL_CHARS:
                pixels.append((col, row))
            elif ch not in EMPTY_CHARS:
                raise ParseError(
                    f"unexpected character {ch!r} at line {row + 1}, column {col + 1}"
                )
    return DigitalObject(pixels)


def to_ascii_grid(obj: DigitalObject, pixel_char: str = "#", empty_char: str = ".") -> str:
    """Render the object as an ASCII grid (inverse of parse_ascii_grid).

    When the object lies in the nonnegative quadrant the rendering starts at
    the origin, so parse -> render -> parse is the identity on coordinates;
    otherwise it starts at the bounding-box corner (grids cannot express
    negative positions).
    """
    box = obj.bounding_box()
    if box is None:
        return ""
    (x0, y0), (x1, y1) = box
    x0 = min(x0, 0)
    y0 = min(y0, 0)
    rows = []
    for y in range(y0, y1 + 1):
        rows.append(
            "".join(
                pixel_char if (x, y) in obj else empty_char for x in range(x0, x1 + 1)
            )
        )
    return "\n".join(rows)


# ---------------------------------------------------------------------------
# PBM

_WHITESPACE = b" \t\r\n\x0b\x0c"


def _next_token(data: bytes, pos: int) -> tuple[bytes, int]:
    """Next header token, skipping whitespace and '#' comments."""
    n = len(data)
    while pos < n:
        ch = data[pos : pos + 1]
        if ch in (b"#",):
            while pos < n and data[pos : pos + 1] != b"\n":
                pos += 1
        elif ch in _WHITESPACE:
            pos += 1
        else:
            break
    if pos >= n:
        raise ParseError(f"unexpected end of header at byte {pos}")
    start = pos
    while pos < n and data[pos : pos + 1] not in _WHITESPACE and data[pos : pos + 1] != b"#":
        pos += 1
    return data[start:pos], pos


def _header_int(data: bytes, pos: int, what: str) -> tuple[int, int]:
    token, end = _next_token(data, pos)
    if not token.isdigit():
        raise ParseError(f"non-numeric {what} {token!r} at byte {end - len(token)}")
    return int(token), end


def parse_pbm(data: bytes) -> DigitalObject:
    """Parse a PBM image, ASCII (P1) or packed binary (P4); bit 1 is a pixel.

    P4 rows are padded to whole bytes, most significant bit first.  Raises
    ParseError with a byte offset on bad magic, malformed header or a
    truncated raster.
    """
    magic = data[:2]
    if magic not in (b"P1", b"P4"):
        raise ParseError(f"bad magic {magic!r} at byte 0 (expected P1 or P4)")
    width, pos = _header_int(data, 2, "width")
    height, pos = _header_int(data, pos, "height")
    pixels = []
    if magic == b"P1":
        x = y = 0
        n = len(data)
        while y < height:
            if pos >= n:
                raise ParseError(f"unexpected end of raster at byte {pos}")
            ch = data[pos : pos + 1]
            if ch in _WHITESPACE:
                pos += 1
            elif ch == b"#":
                while pos < n and data[pos : pos + 1] != b"\n":
                    pos += 1
            elif ch in (b"0", b"1"):
                if ch == b"1":
                    pixels.append((x, y))
                pos += 1
                x += 1
                if x == width:
                    x = 0
                    y += 1
            else:
                raise ParseError(f"invalid raster character {ch!r} at byte {pos}")
    else:
        # single whitespace byte separates the header from the raster
        if pos >= len(data) or data[pos : pos + 1] not in _WHITESPACE:
            raise ParseError(f"missing raster separator at byte {pos}")
        pos += 1
        row_bytes = (width + 7) // 8
        if len(data) - pos < row_bytes * height:
            raise ParseError(f"unexpected end of raster at byte {len(data)}")
        for y in range(height):
            row = data[pos : pos + row_bytes]
            pos += row_bytes
            for x in range(width):
                if row[x >> 3] & (0x80 >> (x & 7)):
                    pixels.append((x, y))
    return DigitalObject(pixels)


def to_pbm(obj: DigitalObject, binary: bool = True) -> bytes:
    """Render the object as PBM bytes, P4 when binary else P1.

    Same origin rule as to_ascii_grid: coordinates are preserved for objects
    in the nonnegative quadrant.
    """
    box = obj.bounding_box()
    if box is None:
        width = height = 0
        x0 = y0 = 0
    else:
        (bx0, by0), (bx1, by1) = box
        x0 = min(bx0, 0)
        y0 = min(by0, 0)
        width = bx1 - x0 + 1
        height = by1 - y0 + 1
    if not binary:
        lines = [b"P1", f"{width} {height}".encode()]
        for y in range(y0, y0 + height):
            lines.append(
                b"".join(b"1" if (x, y) in obj else b"0" for x in range(x0, x0 + width))
            )
        return b"\n".join(lines) + b"\n"
    out = bytearray(b"P4\n")
    out += f"{width} {height}\n".encode()
    row_bytes = (width + 7) // 8
    for y in range(y0, y0 + height):
        row = bytearray(row_bytes)
        for i, x in enumerate(range(x0, x0 + width)):
            if (x, y) in obj:
                row[i >> 3] |= 0x80 >> (i & 7)
        out += row
    return bytes(out)


# ---------------------------------------------------------------------------
# reports

@dataclass(frozen=True)
class ReportDocument:
    """One analysis result ready for emission."""

    source: str
    report: InvariantReport
    curves: Optional[Dict[Adjacency, CurveVerdict]] = None
    format_version: str = FORMAT_VERSION


def _verdict_dict(verdict: CurveVerdict) -> dict:
    return {
        "adjacency": int(verdict.alpha),
        "is_simple_closed_curve": verdict.is_simple_closed,
        "is_simple_arc": verdict.is_simple_arc,
        "is_general_curve": verdict.is_general_curve,
        "identities": [
            {"name": c.name, "lhs": c.lhs, "rhs": c.rhs, "holds": c.holds}
            for c in verdict.identity_checks
        ],
    }


def emit_report(doc: ReportDocument, format: str = "text") -> str:
    """Serialize a report document as 'json' or aligned human-readable 'text'.

    JSON field names and order are frozen (c0 and c1 are the component counts
    under 0- and 1-adjacency); output is deterministic for regression diffs.
    """
    rep = doc.report
    if format == "json":
        payload = {
            "source": doc.source,
            "format_version": doc.format_version,
            "p": rep.p,
            "v": rep.v,
            "c0": rep.c0,
            "c1": rep.c1,
            "h": rep.h,
            "b": rep.b,
            "t_direct": rep.t_direct,
            "t_formula": rep.t_formula,
            "consistent": rep.consistent,
        }
        if doc.curves:
            payload["curve"] = {
                str(int(alpha)): _verdict_dict(verdict)
                for alpha, verdict in sorted(doc.curves.items())
            }
        return json.dumps(payload, indent=2)
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    lines = [
        f"source: {doc.source}",
        f"  pixels         p  = {rep.p}",
        f"  vertices       v  = {rep.v}",
        f"  0-components   c0 = {rep.c0}",
        f"  1-components   c1 = {'-' if rep.c1 is None else rep.c1}",
        f"  proper holes   h  = {rep.h}",
        f"  2x2 blocks     b  = {rep.b}",
        f"  tunnels        t  = {rep.t_direct} (directly counted)",
        "  t = v - 2(p + c - h) + b"
        f" = {rep.v} - 2({rep.p} + {rep.c0} - {rep.h}) + {rep.b} = {rep.t_formula}",
        f"  consistent: {'yes' if rep.consistent else 'NO'}",
    ]
    if doc.curves:
        for alpha, verdict in sorted(doc.curves.items()):
            lines.append(f"  curve classification ({int(alpha)}-adjacency):")
            lines.append(f"    simple closed curve: {verdict.is_simple_closed}")
            lines.append(f"    simple arc:          {verdict.is_simple_arc}")
            lines.append(f"    general curve:       {verdict.is_general_curve}")
            for c in verdict.identity_checks:
                mark = "ok" if c.holds else "VIOLATED"
                lines.append(f"    [{mark}] {c.name}  ({c.lhs} vs {c.rhs})")
    return "\n".join(lines)
