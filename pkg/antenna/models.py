"""
Shared domain models for the antenna design library.

Lengths of coil geometry are in millimeters; every electrical quantity is
in SI units (henries, farads, ohms, hertz).
"""

import math
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from antenna.constants import COPPER_RESISTIVITY, MU_0


class SubstrateSpec(BaseModel):
    """Dielectric carrier of the coil. Stored as metadata only."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    thickness: float = Field(0.127, gt=0, description="Substrate thickness in mm")
    relative_permittivity: float = Field(4.6, ge=1, description="Relative permittivity")


class CoilGeometry(BaseModel):
    """Parametric rectangular or square planar spiral."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    shape: Literal["rectangular", "square"] = "rectangular"
    outer_length: float = Field(..., gt=0, description="Long side Lx in mm")
    outer_width: float = Field(None, gt=0, description="Short side Ly in mm (defaults to Lx)")
    turns: int = Field(..., ge=1)
    trace_width: float = Field(..., gt=0, description="Trace width w in mm")
    turn_spacing: float = Field(..., ge=0, description="Edge-to-edge clearance s in mm")
    conductor_thickness: float = Field(..., gt=0, description="Copper thickness t in mm")
    substrate: SubstrateSpec = SubstrateSpec()

    @model_validator(mode="before")
    @classmethod
    def _default_width(cls, data):
        if isinstance(data, dict) and data.get("outer_width") is None:
            data = {**data, "outer_width": data.get("outer_length")}
        return data

    @model_validator(mode="after")
    def _square_is_square(self):
        if self.shape == "square" and not math.isclose(self.outer_length, self.outer_width):
            raise ValueError(
                f"square coil needs equal sides, got {self.outer_length} x {self.outer_width} mm"
            )
        return self

    @property
    def pitch(self) -> float:
        """Centerline distance between adjacent turns in mm."""
        return self.trace_width + self.turn_spacing

    @property
    def turn_stack(self) -> float:
        """Copper plus clearance consumed by the windings on one side, in mm."""
        return self.turns * self.trace_width + (self.turns - 1) * self.turn_spacing

    def scaled(self, factor: float) -> "CoilGeometry":
        """Copy with every length multiplied by factor."""
        return self.model_copy(update={
            "outer_length": self.outer_length * factor,
            "outer_width": self.outer_width * factor,
            "trace_width": self.trace_width * factor,
            "turn_spacing": self.turn_spacing * factor,
            "conductor_thickness": self.conductor_thickness * factor,
        })


class WheelerConstants(BaseModel):
    """Layout constants of the modified Wheeler expression (square spiral)."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    k1: float = Field(2.34, gt=0)
    k2: float = Field(2.75, gt=0)
    mu0: float = Field(MU_0, gt=0, description="Vacuum permeability in H/m")


class ConductorMaterial(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    resistivity: float = Field(COPPER_RESISTIVITY, gt=0, description="Resistivity in ohm-meters")
    relative_permeability: float = Field(1.0, gt=0)


class ChipModel(BaseModel):
    """Tag IC input: Rc in parallel with Cc."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    capacitance_cc: float = Field(50e-12, gt=0, description="Chip capacitance in farads")
    resistance_rc: float = Field(50e3, gt=0, description="Chip resistance in ohms, may be inf")


class TuningSolution(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    topology: Literal["series", "parallel", "none"]
    c_tune: float = Field(..., ge=0, description="Tuning capacitor in farads")
    achieved_frequency: float = Field(..., gt=0, description="Resonance in hertz")
    snapped: bool = False

    @model_validator(mode="after")
    def _capacitor_present(self):
        if self.topology != "none" and self.c_tune <= 0:
            raise ValueError(f"{self.topology} tuning needs a positive capacitor")
        return self


class TagNetwork(BaseModel):
    """Antenna Rs + Ls in a loop with the chip branch and optional Ctune."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    antenna_ls: float = Field(..., gt=0, description="Antenna series inductance in henries")
    antenna_rs: float = Field(..., ge=0, description="Antenna series resistance in ohms")
    chip: ChipModel = ChipModel()
    tuning: TuningSolution | None = None
