"""
Near-field coupling between a reader loop and a tag coil.

Coils are discretised into straight filament segments; mutual inductance is
the Neumann double line integral evaluated with the midpoint rule. The read
range is the largest coaxial separation at which the EMF induced in the tag
still reaches a calibrated threshold. Only orderings and calibrated fixed
points are meaningful, absolute ranges are not claimed.
"""

import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from scipy.optimize import bisect

from antenna.coil_model import coil_centerline
from antenna.constants import MM, MU_0, NFC_CARRIER_HZ
from antenna.errors import CoilsIntersect, NonPositiveSeparation, ThresholdNotCalibrated
from antenna.models import CoilGeometry

# Closest midpoint approach treated as touching conductors
MIN_SEPARATION = 1e-6


class FilamentCoil(BaseModel):
    """Ordered, connected straight segments in 3D, meters."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    starts: np.ndarray
    ends: np.ndarray

    @field_validator("starts", "ends", mode="before")
    @classmethod
    def _segment_array(cls, value):
        array = np.array(value, dtype=float)
        if array.ndim != 2 or array.shape[1] != 3:
            raise ValueError(f"expected an (n, 3) array, got shape {array.shape}")
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def _connected(self):
        if self.starts.shape != self.ends.shape:
            raise ValueError("starts and ends differ in length")
        if not np.allclose(self.ends[:-1], self.starts[1:], rtol=0, atol=1e-12):
            raise ValueError("segments are not connected end-to-start")
        return self

    @property
    def segment_count(self) -> int:
        return len(self.starts)

    @property
    def midpoints(self) -> np.ndarray:
        return (self.starts + self.ends) / 2

    @property
    def vectors(self) -> np.ndarray:
        return self.ends - self.starts

    @property
    def lengths(self) -> np.ndarray:
        return np.linalg.norm(self.vectors, axis=1)


class CouplingScenario(BaseModel):
    """Reader loop at z = 0 facing a coaxial tag at a variable height."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    reader: FilamentCoil
    tag_geometry: CoilGeometry
    subdivisions_per_side: int = Field(40, ge=1)
    drive_current: float = Field(1.0, gt=0, description="Reader current in amperes")
    threshold_emf: float | None = Field(None, gt=0, description="Detection threshold in volts")
    max_range: float = Field(0.3, gt=0, description="Upper end of the search bracket in meters")
    resolution: float = Field(1e-4, gt=0, description="Range resolution in meters")

    def tag_at(self, z: float) -> FilamentCoil:
        return discretize_coil(self.tag_geometry, z, self.subdivisions_per_side)


class RangePoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    z_m: float
    mutual_h: float
    emf_v: float


def _subdivide(vertices: np.ndarray, subdivisions: int) -> FilamentCoil:
    fractions = np.linspace(0.0, 1.0, subdivisions + 1)
    points = [vertices[0]]
    for start, end in zip(vertices[:-1], vertices[1:]):
        for fraction in fractions[1:]:
            points.append(start + (end - start) * fraction)
    points = np.array(points)
    return FilamentCoil(starts=points[:-1], ends=points[1:])


def discretize_coil(geometry: CoilGeometry, z: float, subdivisions_per_side: int) -> FilamentCoil:
    """Spiral centerline centred on the z-axis at height z, each side split evenly."""
    if subdivisions_per_side < 1:
        raise ValueError(f"subdivisions_per_side must be >= 1, got {subdivisions_per_side}")
    centerline = np.array(coil_centerline(geometry))
    centerline -= (geometry.outer_length / 2, geometry.outer_width / 2)
    vertices = np.column_stack([centerline * MM, np.full(len(centerline), z)])
    return _subdivide(vertices, subdivisions_per_side)


def rectangular_loop(length: float, width: float, z: float = 0.0, subdivisions_per_side: int = 40) -> FilamentCoil:
    """Closed single-turn loop in meters, clockwise seen from +z like the tag spirals."""
    x, y = length / 2, width / 2
    corners = np.array([(-x, y, z), (x, y, z), (x, -y, z), (-x, -y, z), (-x, y, z)])
    return _subdivide(corners, subdivisions_per_side)


def rotate_about_x(coil: FilamentCoil, angle: float) -> FilamentCoil:
    """Rigid rotation about the x-parallel axis through the coil's centroid."""
    centre = coil.midpoints.mean(axis=0)
    c, s = math.cos(angle), math.sin(angle)
    rotation = np.array([[1, 0, 0], [0, c, -s], [0, s, c]])
    return FilamentCoil(
        starts=(coil.starts - centre) @ rotation.T + centre,
        ends=(coil.ends - centre) @ rotation.T + centre,
    )


def mutual_inductance(a: FilamentCoil, b: FilamentCoil) -> float:
    """Neumann sum µ0/4π · Σ (dl_a · dl_b) / |r_a − r_b| over segment midpoints.

    Pair terms are reduced with math.fsum, which is exactly rounded, so the
    result does not depend on summation order and M(a, b) == M(b, a).
    """
    diff = a.midpoints[:, None, :] - b.midpoints[None, :, :]
    distance = np.sqrt(diff[..., 0] ** 2 + diff[..., 1] ** 2 + diff[..., 2] ** 2)
    closest = float(distance.min())
    if closest <= MIN_SEPARATION:
        raise CoilsIntersect(f"coils approach within {closest:.3e} m")

    va, vb = a.vectors, b.vectors
    dots = (
        va[:, None, 0] * vb[None, :, 0]
        + va[:, None, 1] * vb[None, :, 1]
        + va[:, None, 2] * vb[None, :, 2]
    )
    return MU_0 / (4 * math.pi) * math.fsum((dots / distance).ravel().tolist())


def induced_emf(scenario: CouplingScenario, z: float, frequency: float = NFC_CARRIER_HZ) -> float:
    """Open-circuit EMF 2πf·M(z)·I in volts."""
    if z <= 0:
        raise NonPositiveSeparation(f"separation must be positive, got {z} m")
    m = mutual_inductance(scenario.reader, scenario.tag_at(z))
    return 2 * math.pi * frequency * m * scenario.drive_current


def calibrate_threshold(
    scenario: CouplingScenario,
    reference_range: float,
    frequency: float = NFC_CARRIER_HZ,
) -> CouplingScenario:
    """Scenario copy whose threshold makes its own tag read exactly reference_range."""
    threshold = induced_emf(scenario, reference_range, frequency)
    return scenario.model_copy(update={"threshold_emf": threshold})


def estimate_range(scenario: CouplingScenario, frequency: float = NFC_CARRIER_HZ) -> float:
    """Largest z in (0, max_range] with EMF >= threshold; 0 when never reached."""
    if scenario.threshold_emf is None:
        raise ThresholdNotCalibrated("set threshold_emf or calibrate the scenario first")

    def margin(z: float) -> float:
        return induced_emf(scenario, z, frequency) - scenario.threshold_emf

    lo, hi = scenario.resolution, scenario.max_range
    if margin(lo) < 0:
        return 0.0
    if margin(hi) >= 0:
        return hi

    xtol = scenario.resolution / 10
    z = float(bisect(margin, lo, hi, xtol=xtol))
    # Step back onto the detected side of the crossing
    if margin(z) < 0:
        z = max(lo, z - xtol)
    return z


def range_curve(
    scenario: CouplingScenario,
    frequency: float,
    z_values: list[float],
) -> list[RangePoint]:
    points = []
    for z in z_values:
        m = mutual_inductance(scenario.reader, scenario.tag_at(z))
        points.append(RangePoint(
            z_m=z,
            mutual_h=m,
            emf_v=2 * math.pi * frequency * m * scenario.drive_current,
        ))
    return points


def range_curve_to_csv(points: list[RangePoint]) -> str:
    lines = ["z_m,mutual_h,emf_v"]
    for point in points:
        lines.append(f"{point.z_m!r},{point.mutual_h!r},{point.emf_v!r}")
    return "\n".join(lines) + "\n"


def default_scenario(
    tag_geometry: CoilGeometry,
    reader_length: float = 0.04,
    reader_width: float = 0.04,
    subdivisions_per_side: int = 40,
    **overrides,
) -> CouplingScenario:
    """Smartphone-scale single-turn reader loop (40 x 40 mm) at 1 A."""
    return CouplingScenario(
        reader=rectangular_loop(reader_length, reader_width, 0.0, subdivisions_per_side),
        tag_geometry=tag_geometry,
        subdivisions_per_side=subdivisions_per_side,
        **overrides,
    )
