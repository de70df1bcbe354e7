"""
Planar spiral coil model.

Derived dimensions and the modified Wheeler inductance, the drawable spiral
centerline, trace length, skin depth and trace resistance.

Rectangles are handled by averaging the two side lengths before d_out and
d_in are formed; the Wheeler constants are the square-spiral ones.
"""

import math

from pydantic import BaseModel, ConfigDict

from antenna.constants import MM, MU_0
from antenna.errors import InnerOpeningNonPositive, NonPositiveFrequency
from antenna.models import CoilGeometry, ConductorMaterial, WheelerConstants

Point = tuple[float, float]


class DerivedDimensions(BaseModel):
    """Side-averaged diameters in mm, measured to copper edges."""
    model_config = ConfigDict(frozen=True)

    d_out: float
    d_in: float
    d_mean: float
    fill_ratio: float


def inner_opening(geometry: CoilGeometry) -> tuple[float, float]:
    """Inner opening (x, y) in mm, to the inner copper edge."""
    stack = 2 * geometry.turn_stack
    return geometry.outer_length - stack, geometry.outer_width - stack


def derive_dimensions(geometry: CoilGeometry) -> DerivedDimensions:
    inner_x, inner_y = inner_opening(geometry)
    if min(inner_x, inner_y) <= 0:
        raise InnerOpeningNonPositive(
            f"{geometry.turns} turns of {geometry.trace_width} mm at {geometry.turn_spacing} mm "
            f"spacing leave an inner opening of {inner_x:.3f} x {inner_y:.3f} mm"
        )

    d_out = (geometry.outer_length + geometry.outer_width) / 2
    d_in = (inner_x + inner_y) / 2
    return DerivedDimensions(
        d_out=d_out,
        d_in=d_in,
        d_mean=(d_out + d_in) / 2,
        fill_ratio=(d_out - d_in) / (d_out + d_in),
    )


def modified_wheeler(turns: int, d_mean: float, fill_ratio: float, constants: WheelerConstants = WheelerConstants()) -> float:
    """K1·µ0·N²·d / (1 + K2·p) in henries, d_mean in meters."""
    return constants.k1 * constants.mu0 * turns ** 2 * d_mean / (1 + constants.k2 * fill_ratio)


def inductance_wheeler(geometry: CoilGeometry, constants: WheelerConstants = WheelerConstants()) -> float:
    """Modified Wheeler inductance of the coil in henries."""
    dims = derive_dimensions(geometry)
    return modified_wheeler(geometry.turns, dims.d_mean * MM, dims.fill_ratio, constants)


def coil_centerline(geometry: CoilGeometry) -> list[Point]:
    """Clockwise inward spiral on trace centerlines, in mm.

    Origin at the bottom-left corner of the outline, +y up. The outer
    terminal is the top-left corner inset by w/2; each turn contributes four
    axis-aligned segments and the last one stops one pitch below the top of
    its own turn, which is where the next turn (or the inner terminal) starts.
    """
    derive_dimensions(geometry)

    width = geometry.outer_length
    height = geometry.outer_width

    def inset(k: int) -> float:
        return geometry.trace_width / 2 + k * geometry.pitch

    vertices = [(inset(0), height - inset(0))]
    for k in range(geometry.turns):
        a = inset(k)
        vertices.append((width - a, height - a))
        vertices.append((width - a, a))
        vertices.append((a, a))
        vertices.append((a, height - inset(k + 1)))
    return vertices


def outer_terminal(geometry: CoilGeometry) -> Point:
    return coil_centerline(geometry)[0]


def inner_terminal(geometry: CoilGeometry) -> Point:
    return coil_centerline(geometry)[-1]


def trace_length(polyline: list[Point]) -> float:
    """Sum of segment lengths in meters for a polyline given in mm."""
    total_mm = math.fsum(
        math.dist(start, end) for start, end in zip(polyline, polyline[1:])
    )
    return total_mm * MM


def skin_depth(frequency: float, material: ConductorMaterial = ConductorMaterial()) -> float:
    """Skin depth in meters: sqrt(2ρ / (ωµ0µr))."""
    if frequency <= 0:
        raise NonPositiveFrequency(f"skin depth needs f > 0, got {frequency} Hz")
    omega = 2 * math.pi * frequency
    return math.sqrt(2 * material.resistivity / (omega * MU_0 * material.relative_permeability))


def effective_thickness(geometry: CoilGeometry, material: ConductorMaterial, frequency: float) -> float:
    """Current-carrying thickness in meters, δ·(1 − e^(−t/δ)); t itself at DC."""
    thickness = geometry.conductor_thickness * MM
    if frequency == 0:
        return thickness
    delta = skin_depth(frequency, material)
    return delta * -math.expm1(-thickness / delta)


def trace_resistance(
    geometry: CoilGeometry,
    material: ConductorMaterial = ConductorMaterial(),
    frequency: float = 0.0,
) -> float:
    """Series resistance of the spiral trace in ohms. Proximity effect is not modelled."""
    if frequency < 0:
        raise NonPositiveFrequency(f"resistance needs f >= 0, got {frequency} Hz")
    length = trace_length(coil_centerline(geometry))
    width = geometry.trace_width * MM
    return material.resistivity * length / (width * effective_thickness(geometry, material, frequency))
