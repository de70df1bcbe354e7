"""
Design-rule checking and exhaustive coil geometry search.

The search enumerates turn count, trace width and spacing over the grids
given by DesignRules for a fixed outline, scores every DRC-clean coil
against an inductance or resonance target and returns the candidates inside
the target tolerance, best first.
"""

from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from antenna.circuit_model import Snap, synthesize_tuning
from antenna.coil_model import inductance_wheeler, inner_opening
from antenna.constants import NFC_CARRIER_HZ
from antenna.errors import Untunable
from antenna.models import ChipModel, CoilGeometry, TuningSolution, WheelerConstants

# Slack for comparisons against rule limits on rounded grids
_RULE_EPS = 1e-9


class SynthesisTarget(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    mode: Literal["inductance", "resonance"]
    target_value: float = Field(..., gt=0, description="Henries (inductance) or hertz (resonance)")
    chip: ChipModel = ChipModel()
    tolerance: float = Field(0.05, gt=0, lt=1, description="Accepted relative error")
    snap: Snap = "exact"


class DesignRules(BaseModel):
    """Manufacturing limits for hobby chemical etching, in mm."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    min_trace_width: float = Field(0.3, gt=0)
    max_trace_width: float = Field(2.0, gt=0)
    min_spacing: float = Field(0.2, gt=0)
    max_spacing: float = Field(3.0, gt=0)
    max_outer_length: float = Field(300.0, gt=0)
    max_outer_width: float = Field(300.0, gt=0)
    max_turns: int = Field(12, gt=0)
    width_grid: float = Field(0.1, gt=0)
    spacing_grid: float = Field(0.1, gt=0)


class RuleViolation(BaseModel):
    model_config = ConfigDict(frozen=True)

    rule: Literal[
        "MinTraceWidth",
        "MinSpacing",
        "MaxOuterLength",
        "MaxOuterWidth",
        "MaxTurns",
        "InnerOpeningNonPositive",
    ]
    message: str
    actual: float
    limit: float


class CandidateDesign(BaseModel):
    model_config = ConfigDict(frozen=True)

    geometry: CoilGeometry
    predicted_inductance: float
    relative_error: float
    tuning: TuningSolution | None = None


def drc_check(geometry: CoilGeometry, rules: DesignRules) -> list[RuleViolation]:
    violations = []

    if geometry.trace_width < rules.min_trace_width - _RULE_EPS:
        violations.append(RuleViolation(
            rule="MinTraceWidth",
            message=f"trace width {geometry.trace_width} mm below {rules.min_trace_width} mm",
            actual=geometry.trace_width,
            limit=rules.min_trace_width,
        ))
    if geometry.turns > 1 and geometry.turn_spacing < rules.min_spacing - _RULE_EPS:
        violations.append(RuleViolation(
            rule="MinSpacing",
            message=f"turn spacing {geometry.turn_spacing} mm below {rules.min_spacing} mm",
            actual=geometry.turn_spacing,
            limit=rules.min_spacing,
        ))
    if geometry.outer_length > rules.max_outer_length + _RULE_EPS:
        violations.append(RuleViolation(
            rule="MaxOuterLength",
            message=f"outer length {geometry.outer_length} mm above {rules.max_outer_length} mm",
            actual=geometry.outer_length,
            limit=rules.max_outer_length,
        ))
    if geometry.outer_width > rules.max_outer_width + _RULE_EPS:
        violations.append(RuleViolation(
            rule="MaxOuterWidth",
            message=f"outer width {geometry.outer_width} mm above {rules.max_outer_width} mm",
            actual=geometry.outer_width,
            limit=rules.max_outer_width,
        ))
    if geometry.turns > rules.max_turns:
        violations.append(RuleViolation(
            rule="MaxTurns",
            message=f"{geometry.turns} turns above {rules.max_turns}",
            actual=geometry.turns,
            limit=rules.max_turns,
        ))

    opening = min(inner_opening(geometry))
    if opening <= 0:
        violations.append(RuleViolation(
            rule="InnerOpeningNonPositive",
            message=f"turn stack leaves an inner opening of {opening:.3f} mm",
            actual=opening,
            limit=0.0,
        ))

    return violations


def grid_values(lo: float, hi: float, step: float) -> list[float]:
    """Inclusive grid lo, lo+step, ... <= hi, rounded so decimal steps land exactly."""
    count = int((hi - lo) / step + _RULE_EPS) + 1
    return [round(lo + i * step, 9) for i in range(count)]


def _score(
    geometry: CoilGeometry,
    target: SynthesisTarget,
    constants: WheelerConstants,
) -> CandidateDesign | None:
    inductance = inductance_wheeler(geometry, constants)

    if target.mode == "inductance":
        return CandidateDesign(
            geometry=geometry,
            predicted_inductance=inductance,
            relative_error=abs(inductance - target.target_value) / target.target_value,
        )

    try:
        tuning = synthesize_tuning(inductance, target.chip, target.target_value, target.snap)
    except Untunable:
        return None
    return CandidateDesign(
        geometry=geometry,
        predicted_inductance=inductance,
        relative_error=abs(tuning.achieved_frequency - target.target_value) / target.target_value,
        tuning=tuning,
    )


def _enumerate_turns(
    turns: int,
    target: SynthesisTarget,
    outline: tuple[float, float],
    rules: DesignRules,
    conductor_thickness: float,
    constants: WheelerConstants,
) -> list[CandidateDesign]:
    length, width = outline
    shape = "square" if length == width else "rectangular"

    candidates = []
    for trace_width in grid_values(rules.min_trace_width, rules.max_trace_width, rules.width_grid):
        for spacing in grid_values(rules.min_spacing, rules.max_spacing, rules.spacing_grid):
            geometry = CoilGeometry(
                shape=shape,
                outer_length=length,
                outer_width=width,
                turns=turns,
                trace_width=trace_width,
                turn_spacing=spacing,
                conductor_thickness=conductor_thickness,
            )
            if drc_check(geometry, rules):
                continue
            candidate = _score(geometry, target, constants)
            if candidate is not None and candidate.relative_error <= target.tolerance:
                candidates.append(candidate)
    return candidates


def ranking_key(candidate: CandidateDesign) -> tuple:
    """Error first (to 12 decimals), then fewer turns, wider trace, wider spacing."""
    geometry = candidate.geometry
    return (
        round(candidate.relative_error, 12),
        geometry.turns,
        -geometry.trace_width,
        -geometry.turn_spacing,
    )


def search_geometry(
    target: SynthesisTarget,
    outline: tuple[float, float],
    rules: DesignRules = DesignRules(),
    conductor_thickness: float = 0.0175,
    constants: WheelerConstants = WheelerConstants(),
    max_workers: int = 4,
) -> list[CandidateDesign]:
    """Ranked DRC-clean candidates within tolerance of the target; empty when infeasible."""
    candidates = []
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        futures = [
            executor.submit(_enumerate_turns, turns, target, outline, rules, conductor_thickness, constants)
            for turns in range(1, rules.max_turns + 1)
        ]
        for future in as_completed(futures):
            candidates.extend(future.result())

    return sorted(candidates, key=ranking_key)


def default_target(chip: ChipModel = ChipModel()) -> SynthesisTarget:
    """Resonance at the NFC carrier with the given chip."""
    return SynthesisTarget(mode="resonance", target_value=NFC_CARRIER_HZ, chip=chip)
