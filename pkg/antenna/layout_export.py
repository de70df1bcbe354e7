"""
Etch-mask generation for a single-layer spiral coil.

A LayoutDocument holds the trace centerline, the two terminal pads and the
outline, all in mm with the origin at the bottom-left of the outline and
+y up. It is rendered as an SVG preview and as an RS-274X photomask in
3.6 millimeter format. Output is byte-deterministic for identical input.
"""

import math
import re
import xml.etree.ElementTree as ET
from itertools import combinations

import shapely.geometry as sg
from pydantic import BaseModel, ConfigDict, Field, model_validator

from antenna.coil_model import Point, coil_centerline
from antenna.constants import MM
from antenna.models import CoilGeometry

# Gerber coordinate format: FSLAX36Y36 -> 1 unit = 1e-6 mm
GERBER_SCALE = 1_000_000

TRACE_APERTURE = 10
SVG_NAMESPACE = "http://www.w3.org/2000/svg"

_GERBER_OPERATION = re.compile(r"X(-?\d+)Y(-?\d+)D0([123])\*")


class PadSpec(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    center: Point
    width: float = Field(1.5, gt=0)
    height: float = Field(1.5, gt=0)


class LayoutDocument(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    centerline: tuple[Point, ...]
    trace_width: float = Field(..., gt=0)
    turn_spacing: float = Field(..., ge=0)
    pads: tuple[PadSpec, PadSpec]
    outline_width: float = Field(..., gt=0)
    outline_height: float = Field(..., gt=0)

    @model_validator(mode="after")
    def _centerline_inside_outline(self):
        margin = self.trace_width / 2 - 1e-9
        for x, y in self.centerline:
            if not (margin <= x <= self.outline_width - margin and margin <= y <= self.outline_height - margin):
                raise ValueError(f"centerline vertex ({x}, {y}) leaves the outline inset")
        return self


def build_layout(geometry: CoilGeometry, pad_width: float = 1.5, pad_height: float = 1.5) -> LayoutDocument:
    centerline = coil_centerline(geometry)
    return LayoutDocument(
        centerline=tuple(centerline),
        trace_width=geometry.trace_width,
        turn_spacing=geometry.turn_spacing,
        pads=(
            PadSpec(center=centerline[0], width=pad_width, height=pad_height),
            PadSpec(center=centerline[-1], width=pad_width, height=pad_height),
        ),
        outline_width=geometry.outer_length,
        outline_height=geometry.outer_width,
    )


# ---------------------------------------------------------------------------
# SVG
# ---------------------------------------------------------------------------

def _num(mm: float) -> str:
    return f"{mm:.6f}"


def to_svg(layout: LayoutDocument) -> str:
    width, height = layout.outline_width, layout.outline_height

    svg = ET.Element("svg", {
        "xmlns": SVG_NAMESPACE,
        "version": "1.1",
        "width": f"{_num(width)}mm",
        "height": f"{_num(height)}mm",
        "viewBox": f"0 0 {_num(width)} {_num(height)}",
    })
    ET.SubElement(svg, "desc").text = (
        "Single copper layer coil mask. The inner terminal needs an off-board bridge to the chip."
    )

    commands = []
    for i, (x, y) in enumerate(layout.centerline):
        commands.append(f"{'M' if i == 0 else 'L'} {_num(x)} {_num(height - y)}")
    ET.SubElement(svg, "path", {
        "id": "trace",
        "d": " ".join(commands),
        "fill": "none",
        "stroke": "#b87333",
        "stroke-width": _num(layout.trace_width),
        "stroke-linejoin": "round",
        "stroke-linecap": "round",
    })

    for name, pad in zip(("outer-terminal", "inner-terminal"), layout.pads):
        cx, cy = pad.center
        ET.SubElement(svg, "rect", {
            "id": name,
            "x": _num(cx - pad.width / 2),
            "y": _num(height - cy - pad.height / 2),
            "width": _num(pad.width),
            "height": _num(pad.height),
            "fill": "#b87333",
        })

    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(svg, encoding="unicode") + "\n"


def parse_svg_path(text: str) -> list[Point]:
    """Trace centerline back in layout coordinates (y flip undone)."""
    root = ET.fromstring(text.encode("utf-8"))
    height = float(root.get("viewBox").split()[3])
    path = next(element for element in root.iter() if element.tag.endswith("path"))
    tokens = path.get("d").split()
    return [
        (float(tokens[i + 1]), height - float(tokens[i + 2]))
        for i in range(0, len(tokens), 3)
    ]


# ---------------------------------------------------------------------------
# Gerber RS-274X
# ---------------------------------------------------------------------------

def coord(mm: float) -> str:
    """Convert mm to Gerber integer string (FSLAX36Y36)."""
    return str(round(mm * GERBER_SCALE))


def to_gerber(layout: LayoutDocument) -> str:
    pad_sizes = sorted({(pad.width, pad.height) for pad in layout.pads})
    pad_apertures = {size: TRACE_APERTURE + 1 + i for i, size in enumerate(pad_sizes)}

    lines = [
        "G04 Flexible NFC coil etch mask, top copper*",
        "G04 Single layer: bridge the inner terminal to the chip off-board*",
        "%FSLAX36Y36*%",
        "%MOMM*%",
        "%LPD*%",
        f"%ADD{TRACE_APERTURE}C,{layout.trace_width:.3f}*%",
    ]
    for (width, height), code in pad_apertures.items():
        lines.append(f"%ADD{code}R,{width:.3f}X{height:.3f}*%")

    lines.append("G01*")
    lines.append(f"D{TRACE_APERTURE}*")
    first_x, first_y = layout.centerline[0]
    lines.append(f"X{coord(first_x)}Y{coord(first_y)}D02*")
    for x, y in layout.centerline[1:]:
        lines.append(f"X{coord(x)}Y{coord(y)}D01*")

    current = None
    for pad in layout.pads:
        code = pad_apertures[(pad.width, pad.height)]
        if code != current:
            lines.append(f"D{code}*")
            current = code
        x, y = pad.center
        lines.append(f"X{coord(x)}Y{coord(y)}D03*")

    lines.append("M02*")
    return "\n".join(lines) + "\n"


def parse_gerber_draws(text: str) -> list[tuple[Point, Point]]:
    """D01 draws of the emitted subset, in mm."""
    draws = []
    position = None
    for match in _GERBER_OPERATION.finditer(text):
        x = int(match.group(1)) / GERBER_SCALE
        y = int(match.group(2)) / GERBER_SCALE
        if match.group(3) == "1" and position is not None:
            draws.append((position, (x, y)))
        position = (x, y)
    return draws


def gerber_trace_length(text: str) -> float:
    """Total draw length in meters."""
    return math.fsum(math.dist(start, end) for start, end in parse_gerber_draws(text)) * MM


def clearance_audit(layout: LayoutDocument) -> float:
    """Smallest copper edge-to-edge gap in mm between non-adjacent trace segments."""
    segments = [
        sg.LineString([start, end])
        for start, end in zip(layout.centerline, layout.centerline[1:])
    ]
    gaps = [
        segments[i].distance(segments[j])
        for i, j in combinations(range(len(segments)), 2)
        if j - i >= 2
    ]
    if not gaps:
        return math.inf
    return min(gaps) - layout.trace_width
