"""
Machine-readable command outputs and their text rendering.

Every numeric field carries its unit as a name suffix. The JSON form is the
stable surface; the text form is for people.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict

from antenna.constants import MHZ, PF, UH
from antenna.geometry_synthesis import CandidateDesign


class _Report(BaseModel):
    model_config = ConfigDict(frozen=True)


class TuningReport(_Report):
    topology: Literal["series", "parallel", "none"]
    c_tune_pf: float
    achieved_frequency_mhz: float
    target_frequency_mhz: float
    snap: str
    snapped: bool
    inductance_uh: float
    inductance_source: Literal["measured", "wheeler"]

    def summary_line(self) -> str:
        return f"{self.topology}, {self.c_tune_pf:.1f} pF"


class AnalysisReport(_Report):
    name: str
    shape: str
    outer_length_mm: float
    outer_width_mm: float
    turns: int
    trace_width_mm: float
    turn_spacing_mm: float
    d_out_mm: float
    d_in_mm: float
    d_mean_mm: float
    fill_ratio: float
    inductance_uh: float
    trace_length_mm: float
    frequency_mhz: float
    skin_depth_um: float
    dc_resistance_ohm: float
    ac_resistance_ohm: float
    inductance_source: Literal["measured", "wheeler"]
    circuit_inductance_uh: float
    circuit_resistance_ohm: float
    q_factor: float | None
    bandwidth_khz: float | None
    configured_resonance_mhz: float | None = None
    tuning: TuningReport
    measured_inductance_uh: float | None = None
    inductance_deviation: float | None = None
    measured_resistance_ohm: float | None = None
    resistance_deviation: float | None = None
    warnings: list[str] = []

    def render_text(self) -> str:
        lines = [
            "=" * 70,
            f"ANTENNA ANALYSIS: {self.name}",
            "=" * 70,
            f"Geometry:           {self.shape} {self.outer_length_mm:g} x {self.outer_width_mm:g} mm, "
            f"N={self.turns}, w={self.trace_width_mm:g} mm, s={self.turn_spacing_mm:g} mm",
            f"Diameters:          d_out={self.d_out_mm:.2f} mm  d_in={self.d_in_mm:.2f} mm  "
            f"d_mean={self.d_mean_mm:.2f} mm",
            f"Fill ratio:         {self.fill_ratio:.4f}",
            f"Inductance:         {self.inductance_uh:.3f} µH (modified Wheeler)",
            f"Trace length:       {self.trace_length_mm:.1f} mm",
            f"Skin depth:         {self.skin_depth_um:.2f} µm at {self.frequency_mhz:g} MHz",
            f"Resistance:         DC {self.dc_resistance_ohm:.3f} Ω  AC {self.ac_resistance_ohm:.3f} Ω",
            "-" * 70,
            f"Circuit values:     L={self.circuit_inductance_uh:.3f} µH  Rs={self.circuit_resistance_ohm:.3f} Ω "
            f"({self.inductance_source})",
        ]
        if self.configured_resonance_mhz is not None:
            lines.append(f"Configured f_r:     {self.configured_resonance_mhz:.3f} MHz")
        if self.q_factor is not None:
            lines.append(f"Q factor:           {self.q_factor:.2f}  (bandwidth {self.bandwidth_khz:.1f} kHz)")
        lines.append(
            f"Tuning at {self.tuning.target_frequency_mhz:g} MHz: {self.tuning.summary_line()} "
            f"-> {self.tuning.achieved_frequency_mhz:.4f} MHz"
        )
        if self.measured_inductance_uh is not None:
            lines.append(
                f"Measured L:         {self.measured_inductance_uh:.3f} µH "
                f"(model deviation {self.inductance_deviation * 100:+.1f}%)"
            )
        if self.measured_resistance_ohm is not None and self.resistance_deviation is not None:
            lines.append(
                f"Measured Rs:        {self.measured_resistance_ohm:.3f} Ω "
                f"(model deviation {self.resistance_deviation * 100:+.1f}%)"
            )
        if self.warnings:
            lines.append("-" * 70)
            lines.extend(f"⚠️  {warning}" for warning in self.warnings)
        lines.append("=" * 70)
        return "\n".join(lines) + "\n"


class CandidateRow(_Report):
    rank: int
    turns: int
    trace_width_mm: float
    turn_spacing_mm: float
    inductance_uh: float
    relative_error: float
    tuning_topology: str | None = None
    c_tune_pf: float | None = None
    achieved_frequency_mhz: float | None = None

    @classmethod
    def from_candidate(cls, rank: int, candidate: CandidateDesign) -> "CandidateRow":
        tuning = candidate.tuning
        return cls(
            rank=rank,
            turns=candidate.geometry.turns,
            trace_width_mm=candidate.geometry.trace_width,
            turn_spacing_mm=candidate.geometry.turn_spacing,
            inductance_uh=candidate.predicted_inductance / UH,
            relative_error=candidate.relative_error,
            tuning_topology=tuning.topology if tuning else None,
            c_tune_pf=tuning.c_tune / PF if tuning else None,
            achieved_frequency_mhz=tuning.achieved_frequency / MHZ if tuning else None,
        )

    def render_line(self) -> str:
        line = (
            f"{self.rank:>3}. N={self.turns:<2} w={self.trace_width_mm:.2f} mm  s={self.turn_spacing_mm:.2f} mm  "
            f"L={self.inductance_uh:.3f} µH  error={self.relative_error * 100:.3f}%"
        )
        if self.tuning_topology is not None:
            line += f"  [{self.tuning_topology}, {self.c_tune_pf:.1f} pF]"
        return line


class SynthesisReport(_Report):
    name: str
    mode: Literal["inductance", "resonance"]
    target_value: float
    target_unit: Literal["uH", "MHz"]
    outline_mm: tuple[float, float]
    total_candidates: int
    candidates: list[CandidateRow]

    def render_text(self) -> str:
        lines = [
            f"Target: {self.target_value:g} {self.target_unit} on {self.outline_mm[0]:g} x {self.outline_mm[1]:g} mm",
            f"{self.total_candidates} candidates within tolerance, showing {len(self.candidates)}",
        ]
        lines.extend(row.render_line() for row in self.candidates)
        return "\n".join(lines) + "\n"
