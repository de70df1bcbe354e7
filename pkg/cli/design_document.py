"""
Design documents: unit-annotated TOML descriptions of one tag antenna.

Every key carries its unit in the name (``trace_width_mm``, ``capacitance_pf``)
and every section is validated by a pydantic model that rejects unknown keys.
The section models convert to the library's SI/millimeter domain types.
"""

import math
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from antenna.circuit_model import Snap, equivalent_capacitance, resonance_frequency
from antenna.constants import MHZ, MM, NFC_CARRIER_HZ, PF, UH
from antenna.coupling_range import CouplingScenario, rectangular_loop
from antenna.geometry_synthesis import DesignRules, SynthesisTarget
from antenna.models import ChipModel, CoilGeometry, ConductorMaterial, SubstrateSpec, TuningSolution, WheelerConstants


class DesignDocumentError(Exception):
    """A command needs a section the document does not provide."""


class _Section(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class SubstrateSection(_Section):
    thickness_mm: float = Field(0.127, gt=0)
    relative_permittivity: float = Field(4.6, ge=1)


class GeometrySection(_Section):
    shape: Literal["rectangular", "square"] = "rectangular"
    outer_length_mm: float = Field(..., gt=0)
    outer_width_mm: float | None = Field(None, gt=0)
    turns: int = Field(..., ge=1)
    trace_width_mm: float = Field(..., gt=0)
    turn_spacing_mm: float = Field(..., ge=0)
    conductor_thickness_mm: float = Field(0.0175, gt=0)
    substrate: SubstrateSection = SubstrateSection()

    def to_geometry(self) -> CoilGeometry:
        return CoilGeometry(
            shape=self.shape,
            outer_length=self.outer_length_mm,
            outer_width=self.outer_width_mm,
            turns=self.turns,
            trace_width=self.trace_width_mm,
            turn_spacing=self.turn_spacing_mm,
            conductor_thickness=self.conductor_thickness_mm,
            substrate=SubstrateSpec(
                thickness=self.substrate.thickness_mm,
                relative_permittivity=self.substrate.relative_permittivity,
            ),
        )


class ConductorSection(_Section):
    resistivity_ohm_m: float = Field(1.72e-8, gt=0)
    relative_permeability: float = Field(1.0, gt=0)

    def to_material(self) -> ConductorMaterial:
        return ConductorMaterial(
            resistivity=self.resistivity_ohm_m,
            relative_permeability=self.relative_permeability,
        )


class WheelerSection(_Section):
    k1: float = Field(2.34, gt=0)
    k2: float = Field(2.75, gt=0)

    def to_constants(self) -> WheelerConstants:
        return WheelerConstants(k1=self.k1, k2=self.k2)


class ChipSection(_Section):
    capacitance_pf: float = Field(50.0, gt=0)
    resistance_kohm: float = Field(50.0, gt=0, description="inf for an ideal lossless chip")

    def to_chip(self) -> ChipModel:
        resistance = math.inf if math.isinf(self.resistance_kohm) else self.resistance_kohm * 1e3
        return ChipModel(capacitance_cc=self.capacitance_pf * PF, resistance_rc=resistance)


class MeasuredSection(_Section):
    """Bench values of the fabricated antenna, preferred by circuit-level commands."""
    inductance_uh: float | None = Field(None, gt=0)
    resistance_ohm: float | None = Field(None, ge=0)
    resonance_mhz: float | None = Field(None, gt=0)
    read_range_cm: float | None = Field(None, ge=0)


class TuningSection(_Section):
    topology: Literal["series", "parallel", "none"]
    c_tune_pf: float = Field(0.0, ge=0)

    def to_tuning(self, ls: float, chip: ChipModel) -> TuningSolution:
        c_tune = self.c_tune_pf * PF
        ceq = equivalent_capacitance(chip.capacitance_cc, c_tune, self.topology)
        return TuningSolution(
            topology=self.topology,
            c_tune=c_tune,
            achieved_frequency=resonance_frequency(ls, ceq),
        )


class RulesSection(_Section):
    min_trace_width_mm: float = Field(0.3, gt=0)
    max_trace_width_mm: float = Field(2.0, gt=0)
    min_spacing_mm: float = Field(0.2, gt=0)
    max_spacing_mm: float = Field(3.0, gt=0)
    max_outer_length_mm: float = Field(300.0, gt=0)
    max_outer_width_mm: float = Field(300.0, gt=0)
    max_turns: int = Field(12, gt=0)
    width_grid_mm: float = Field(0.1, gt=0)
    spacing_grid_mm: float = Field(0.1, gt=0)

    def to_rules(self) -> DesignRules:
        return DesignRules(
            min_trace_width=self.min_trace_width_mm,
            max_trace_width=self.max_trace_width_mm,
            min_spacing=self.min_spacing_mm,
            max_spacing=self.max_spacing_mm,
            max_outer_length=self.max_outer_length_mm,
            max_outer_width=self.max_outer_width_mm,
            max_turns=self.max_turns,
            width_grid=self.width_grid_mm,
            spacing_grid=self.spacing_grid_mm,
        )


class TargetSection(_Section):
    mode: Literal["inductance", "resonance"] = "resonance"
    inductance_uh: float | None = Field(None, gt=0)
    frequency_mhz: float = Field(NFC_CARRIER_HZ / MHZ, gt=0)
    tolerance: float = Field(0.05, gt=0, lt=1)
    snap: Snap = "exact"

    @model_validator(mode="after")
    def _inductance_given(self):
        if self.mode == "inductance" and self.inductance_uh is None:
            raise ValueError("inductance mode needs inductance_uh")
        return self

    def to_target(self, chip: ChipModel) -> SynthesisTarget:
        value = self.inductance_uh * UH if self.mode == "inductance" else self.frequency_mhz * MHZ
        return SynthesisTarget(
            mode=self.mode,
            target_value=value,
            chip=chip,
            tolerance=self.tolerance,
            snap=self.snap,
        )


class ScenarioSection(_Section):
    reader_length_mm: float = Field(40.0, gt=0)
    reader_width_mm: float = Field(40.0, gt=0)
    subdivisions_per_side: int = Field(40, ge=1)
    drive_current_a: float = Field(1.0, gt=0)
    threshold_emf_v: float | None = Field(None, gt=0)
    max_range_cm: float = Field(30.0, gt=0)
    resolution_mm: float = Field(0.1, gt=0)
    frequency_mhz: float = Field(NFC_CARRIER_HZ / MHZ, gt=0)

    def to_scenario(self, tag_geometry: CoilGeometry) -> CouplingScenario:
        return CouplingScenario(
            reader=rectangular_loop(
                self.reader_length_mm * MM,
                self.reader_width_mm * MM,
                0.0,
                self.subdivisions_per_side,
            ),
            tag_geometry=tag_geometry,
            subdivisions_per_side=self.subdivisions_per_side,
            drive_current=self.drive_current_a,
            threshold_emf=self.threshold_emf_v,
            max_range=self.max_range_cm / 100,
            resolution=self.resolution_mm * MM,
        )


class LayoutSection(_Section):
    pad_width_mm: float = Field(1.5, gt=0)
    pad_height_mm: float = Field(1.5, gt=0)


class DesignDocument(_Section):
    name: str | None = None
    geometry: GeometrySection | None = None
    conductor: ConductorSection = ConductorSection()
    wheeler: WheelerSection = WheelerSection()
    chip: ChipSection = ChipSection()
    measured: MeasuredSection | None = None
    tuning: TuningSection | None = None
    rules: RulesSection = RulesSection()
    target: TargetSection | None = None
    scenario: ScenarioSection = ScenarioSection()
    layout: LayoutSection = LayoutSection()

    def require_geometry(self) -> CoilGeometry:
        if self.geometry is None:
            raise DesignDocumentError("document has no [geometry] section")
        return self.geometry.to_geometry()


def load_design_document(path: str | Path) -> DesignDocument:
    """Read and validate a design document; OSError, TOMLDecodeError and ValidationError propagate."""
    with open(path, "rb") as f:
        data = tomllib.load(f)
    data.setdefault("name", Path(path).stem)
    return DesignDocument.model_validate(data)
