"""Tests for design-rule checking and geometry search."""

import pytest

from antenna.coil_model import inductance_wheeler
from antenna.constants import NFC_CARRIER_HZ, UH
from antenna.errors import InnerOpeningNonPositive
from antenna.geometry_synthesis import (
    DesignRules,
    SynthesisTarget,
    default_target,
    drc_check,
    grid_values,
    ranking_key,
    search_geometry,
)
from antenna.models import CoilGeometry

# Grid restricted to the fabricated square tag's trace and spacing
ANTENNA2_RULES = DesignRules(
    min_trace_width=0.6, max_trace_width=0.6,
    min_spacing=2.0, max_spacing=2.0,
)


class TestDrcCheck:

    def test_fabricated_antennas_pass(self, antenna1, antenna2):
        assert drc_check(antenna1, DesignRules()) == []
        assert drc_check(antenna2, DesignRules()) == []

    def test_narrow_trace(self, antenna1):
        violations = drc_check(antenna1.model_copy(update={"trace_width": 0.2}), DesignRules())
        assert [v.rule for v in violations] == ["MinTraceWidth"]
        assert violations[0].actual == 0.2
        assert violations[0].limit == 0.3

    def test_tight_spacing(self, antenna1):
        violations = drc_check(antenna1.model_copy(update={"turn_spacing": 0.1}), DesignRules())
        assert [v.rule for v in violations] == ["MinSpacing"]

    def test_spacing_irrelevant_for_single_turn(self, antenna1):
        single = antenna1.model_copy(update={"turns": 1, "turn_spacing": 0.0})
        assert drc_check(single, DesignRules()) == []

    def test_crowded_coil_is_reported_not_raised(self, antenna2):
        crowded = antenna2.model_copy(update={"turns": 17})
        rules = {v.rule for v in drc_check(crowded, DesignRules())}
        assert rules == {"MaxTurns", "InnerOpeningNonPositive"}

    def test_oversized_outline(self):
        large = CoilGeometry(
            outer_length=400, outer_width=350, turns=2,
            trace_width=1.0, turn_spacing=1.0, conductor_thickness=0.035,
        )
        rules = {v.rule for v in drc_check(large, DesignRules())}
        assert rules == {"MaxOuterLength", "MaxOuterWidth"}


class TestGridValues:

    def test_includes_both_ends(self):
        values = grid_values(0.3, 2.0, 0.1)
        assert len(values) == 18
        assert values[0] == 0.3
        assert values[-1] == 2.0
        assert 0.6 in values

    def test_single_point(self):
        assert grid_values(0.6, 0.6, 0.1) == [0.6]


class TestSearchGeometry:

    def test_recovers_antenna2_design_point(self):
        target = SynthesisTarget(mode="inductance", target_value=1.62 * UH)
        candidates = search_geometry(target, (80.0, 80.0), ANTENNA2_RULES)
        best = candidates[0].geometry
        assert (best.turns, best.trace_width, best.turn_spacing) == (3, 0.6, 2.0)
        assert candidates[0].predicted_inductance == pytest.approx(1.616 * UH, rel=1e-3)

    def test_matches_brute_force(self):
        """Search output equals a plain re-enumeration of the same grid."""
        rules = DesignRules(min_trace_width=0.5, max_trace_width=0.8, min_spacing=1.5, max_spacing=2.5, max_turns=6)
        target = SynthesisTarget(mode="inductance", target_value=1.62 * UH, tolerance=0.1)

        expected = []
        for turns in range(1, rules.max_turns + 1):
            for width in grid_values(rules.min_trace_width, rules.max_trace_width, rules.width_grid):
                for spacing in grid_values(rules.min_spacing, rules.max_spacing, rules.spacing_grid):
                    geometry = CoilGeometry(
                        shape="square", outer_length=80.0, turns=turns,
                        trace_width=width, turn_spacing=spacing, conductor_thickness=0.0175,
                    )
                    if drc_check(geometry, rules):
                        continue
                    error = abs(inductance_wheeler(geometry) - target.target_value) / target.target_value
                    if error <= target.tolerance:
                        expected.append((round(error, 12), turns, -width, -spacing))
        expected.sort()

        candidates = search_geometry(target, (80.0, 80.0), rules)
        assert [ranking_key(c) for c in candidates] == expected
        assert candidates[0].relative_error == min(c.relative_error for c in candidates)

    def test_rectangle_ranked_by_error(self):
        rules = DesignRules(min_trace_width=0.5, max_trace_width=0.5, min_spacing=2.0, max_spacing=2.0)
        target = SynthesisTarget(mode="inductance", target_value=4.85 * UH, tolerance=0.5)
        candidates = search_geometry(target, (160.0, 80.0), rules)
        assert [c.geometry.turns for c in candidates[:2]] == [4, 5]
        assert candidates[0].relative_error == pytest.approx(0.0919, abs=1e-3)

    def test_unreachable_target_is_empty(self):
        target = SynthesisTarget(mode="inductance", target_value=1.0)
        assert search_geometry(target, (80.0, 80.0), ANTENNA2_RULES) == []

    def test_candidates_are_drc_clean(self):
        target = SynthesisTarget(mode="inductance", target_value=2.0 * UH, tolerance=0.2)
        rules = DesignRules(max_turns=5, width_grid=0.5, spacing_grid=0.5)
        for candidate in search_geometry(target, (80.0, 80.0), rules):
            assert drc_check(candidate.geometry, rules) == []

    def test_resonance_mode_tunes_every_candidate(self):
        target = default_target()
        rules = DesignRules(max_turns=4, width_grid=0.5, spacing_grid=1.0)
        candidates = search_geometry(target, (80.0, 80.0), rules)
        assert candidates
        for candidate in candidates:
            assert candidate.tuning is not None
            assert candidate.tuning.achieved_frequency == pytest.approx(NFC_CARRIER_HZ, rel=1e-9)

    def test_resonance_ties_prefer_fewer_turns_then_wider(self):
        """Exact tuning hits the carrier for every coil, so the tie order decides."""
        target = default_target()
        rules = DesignRules(max_turns=3, width_grid=0.5, spacing_grid=1.0)
        best = search_geometry(target, (80.0, 80.0), rules)[0].geometry
        assert best.turns == 1
        assert best.trace_width == max(grid_values(rules.min_trace_width, rules.max_trace_width, rules.width_grid))

    def test_snapped_resonance_respects_tolerance(self):
        target = SynthesisTarget(mode="resonance", target_value=NFC_CARRIER_HZ, snap="e12", tolerance=0.01)
        rules = DesignRules(max_turns=4, width_grid=0.5, spacing_grid=1.0)
        candidates = search_geometry(target, (80.0, 80.0), rules)
        for candidate in candidates:
            assert candidate.tuning.snapped
            assert candidate.relative_error <= 0.01
        errors = [round(c.relative_error, 12) for c in candidates]
        assert errors == sorted(errors)

    def test_thread_count_does_not_change_order(self):
        target = SynthesisTarget(mode="inductance", target_value=1.62 * UH, tolerance=0.2)
        rules = DesignRules(max_turns=6, width_grid=0.5, spacing_grid=0.5)
        serial = search_geometry(target, (80.0, 80.0), rules, max_workers=1)
        parallel = search_geometry(target, (80.0, 80.0), rules, max_workers=6)
        assert serial == parallel


class TestRuleErrors:

    def test_wheeler_still_raises_for_crowded_geometry(self, antenna2):
        with pytest.raises(InnerOpeningNonPositive):
            inductance_wheeler(antenna2.model_copy(update={"turns": 17}))
