"""Tests for the planar spiral coil model."""

import math

import pytest
from pydantic import ValidationError

from antenna.coil_model import (
    coil_centerline,
    derive_dimensions,
    effective_thickness,
    inductance_wheeler,
    inner_opening,
    inner_terminal,
    modified_wheeler,
    outer_terminal,
    skin_depth,
    trace_length,
    trace_resistance,
)
from antenna.constants import MM, NFC_CARRIER_HZ, UH
from antenna.errors import InnerOpeningNonPositive, NonPositiveFrequency
from antenna.models import CoilGeometry, ConductorMaterial


class TestCoilGeometry:
    """Tests for construction-time validation."""

    def test_square_defaults_width(self, antenna2):
        assert antenna2.outer_width == 80.0

    def test_square_with_unequal_sides_rejected(self):
        with pytest.raises(ValidationError):
            CoilGeometry(
                shape="square", outer_length=80, outer_width=60,
                turns=3, trace_width=0.6, turn_spacing=2, conductor_thickness=0.0175,
            )

    @pytest.mark.parametrize("field,value", [
        ("turns", 0),
        ("trace_width", 0.0),
        ("turn_spacing", -0.1),
        ("conductor_thickness", 0.0),
    ])
    def test_field_bounds(self, antenna1, field, value):
        data = antenna1.model_dump()
        data[field] = value
        with pytest.raises(ValidationError):
            CoilGeometry.model_validate(data)

    def test_unknown_field_rejected(self, antenna1):
        with pytest.raises(ValidationError):
            CoilGeometry.model_validate({**antenna1.model_dump(), "colour": "red"})


class TestDerivedDimensions:
    """Tests for side-averaged diameters and fill ratio."""

    def test_antenna2(self, antenna2):
        dims = derive_dimensions(antenna2)
        assert dims.d_out == pytest.approx(80.0)
        assert dims.d_in == pytest.approx(68.4)
        assert dims.d_mean == pytest.approx(74.2)
        assert dims.fill_ratio == pytest.approx(0.078167, rel=1e-4)

    def test_antenna1(self, antenna1):
        assert inner_opening(antenna1) == pytest.approx((144.0, 64.0))
        dims = derive_dimensions(antenna1)
        assert dims.d_out == pytest.approx(120.0)
        assert dims.d_in == pytest.approx(104.0)
        assert dims.d_mean == pytest.approx(112.0)
        assert dims.fill_ratio == pytest.approx(0.0714286, rel=1e-5)

    def test_turn_stack_consumes_outline(self, antenna2):
        """17 turns of 0.6 mm at 2 mm spacing need 84.4 mm on an 80 mm outline."""
        crowded = antenna2.model_copy(update={"turns": 17})
        assert min(inner_opening(crowded)) == pytest.approx(-4.4)
        with pytest.raises(InnerOpeningNonPositive):
            derive_dimensions(crowded)


class TestInductanceWheeler:
    """Tests for the modified Wheeler inductance."""

    def test_antenna2_matches_bench(self, antenna2):
        inductance = inductance_wheeler(antenna2)
        assert inductance == pytest.approx(1.616 * UH, rel=1e-3)
        assert inductance == pytest.approx(1.62 * UH, rel=0.05)

    def test_antenna1_within_rectangle_band(self, antenna1):
        inductance = inductance_wheeler(antenna1)
        assert inductance == pytest.approx(4.40 * UH, rel=2e-3)
        assert inductance == pytest.approx(4.85 * UH, rel=0.15)

    def test_scales_linearly_with_size(self, antenna1):
        """Fill ratio is scale invariant, so L follows d_mean."""
        assert inductance_wheeler(antenna1.scaled(2.0)) == pytest.approx(2 * inductance_wheeler(antenna1))

    def test_grows_with_turns_on_open_outline(self, antenna2):
        values = [inductance_wheeler(antenna2.model_copy(update={"turns": n})) for n in range(1, 6)]
        assert values == sorted(values)

    def test_rejects_crowded_coil(self, antenna2):
        with pytest.raises(InnerOpeningNonPositive):
            inductance_wheeler(antenna2.model_copy(update={"turns": 17}))


class TestModifiedWheeler:
    """Tests for the closed-form expression on (N, d_mean, p)."""

    def test_increasing_in_mean_diameter(self):
        values = [modified_wheeler(4, d, 0.1) for d in (0.02, 0.05, 0.08, 0.11, 0.14)]
        assert all(later > earlier for earlier, later in zip(values, values[1:]))

    def test_decreasing_in_fill_ratio(self):
        values = [modified_wheeler(4, 0.1, p) for p in (0.01, 0.1, 0.3, 0.6, 0.99)]
        assert all(later < earlier for earlier, later in zip(values, values[1:]))

    @pytest.mark.parametrize("turns", [1, 3, 6])
    def test_doubling_turns_quadruples(self, turns):
        single = modified_wheeler(turns, 0.0742, 0.078167)
        assert modified_wheeler(2 * turns, 0.0742, 0.078167) == pytest.approx(4 * single)

    def test_matches_geometry_entry_point(self, antenna2):
        dims = derive_dimensions(antenna2)
        assert modified_wheeler(3, dims.d_mean * MM, dims.fill_ratio) == inductance_wheeler(antenna2)


class TestCoilCenterline:
    """Tests for the drawable spiral polyline."""

    def test_vertex_count(self, antenna1):
        assert len(coil_centerline(antenna1)) == 4 * 4 + 1

    def test_single_turn_has_four_segments(self, antenna2):
        single = antenna2.model_copy(update={"turns": 1})
        assert len(coil_centerline(single)) - 1 == 4

    def test_segments_axis_aligned(self, antenna1):
        vertices = coil_centerline(antenna1)
        for (x0, y0), (x1, y1) in zip(vertices, vertices[1:]):
            assert x0 == x1 or y0 == y1

    def test_terminals(self, antenna1):
        assert outer_terminal(antenna1) == pytest.approx((0.25, 79.75))
        # last turn is k = 3: inset 0.25 + 3 * 2.5, ending one pitch lower at the top
        assert inner_terminal(antenna1) == pytest.approx((7.75, 80 - 10.25))

    def test_stays_inside_outline(self, antenna1):
        half = antenna1.trace_width / 2
        for x, y in coil_centerline(antenna1):
            assert half <= x <= antenna1.outer_length - half
            assert half <= y <= antenna1.outer_width - half


class TestTraceLength:
    """Tests for centerline length."""

    def test_antenna1(self, antenna1):
        # per-turn lengths 475.5 + 458 + 438 + 418 mm
        assert trace_length(coil_centerline(antenna1)) == pytest.approx(1.7895, rel=1e-9)

    def test_independent_summation(self, antenna2):
        vertices = coil_centerline(antenna2)
        expected = sum(abs(x1 - x0) + abs(y1 - y0) for (x0, y0), (x1, y1) in zip(vertices, vertices[1:]))
        assert trace_length(vertices) == pytest.approx(expected * 1e-3)

    @pytest.mark.parametrize("geometry_name", ["antenna1", "antenna2"])
    def test_bounded_by_inner_and_outer_perimeters(self, request, geometry_name):
        geometry = request.getfixturevalue(geometry_name)
        inner_x, inner_y = inner_opening(geometry)
        lower = geometry.turns * 2 * (inner_x + inner_y) * MM
        upper = geometry.turns * 2 * (geometry.outer_length + geometry.outer_width) * MM
        assert lower <= trace_length(coil_centerline(geometry)) <= upper

    def test_empty_and_single_point(self):
        assert trace_length([]) == 0.0
        assert trace_length([(1.0, 2.0)]) == 0.0


class TestResistance:
    """Tests for skin depth and trace resistance."""

    def test_skin_depth_copper_at_carrier(self):
        assert skin_depth(NFC_CARRIER_HZ) == pytest.approx(17.925e-6, rel=1e-3)

    def test_skin_depth_copper_at_mains(self):
        assert skin_depth(60.0) == pytest.approx(8.52e-3, rel=2e-3)

    @pytest.mark.parametrize("frequency", [60.0, 1e6, NFC_CARRIER_HZ])
    def test_skin_depth_halves_at_four_times_frequency(self, frequency):
        assert skin_depth(4 * frequency) == pytest.approx(skin_depth(frequency) / 2)

    @pytest.mark.parametrize("frequency", [0.0, -1.0])
    def test_skin_depth_rejects_non_positive(self, frequency):
        with pytest.raises(NonPositiveFrequency):
            skin_depth(frequency)

    def test_effective_thickness_at_carrier(self, antenna1):
        assert effective_thickness(antenna1, ConductorMaterial(), NFC_CARRIER_HZ) == pytest.approx(11.17e-6, rel=1e-3)

    def test_effective_thickness_at_dc(self, antenna1):
        assert effective_thickness(antenna1, ConductorMaterial(), 0.0) == pytest.approx(17.5e-6)

    def test_dc_resistance(self, antenna1):
        assert trace_resistance(antenna1) == pytest.approx(3.5176, rel=1e-4)

    def test_ac_resistance_bounds(self, antenna1):
        r_dc = trace_resistance(antenna1)
        r_ac = trace_resistance(antenna1, frequency=NFC_CARRIER_HZ)
        assert r_dc <= r_ac <= 3 * r_dc
        assert r_ac == pytest.approx(5.51, rel=2e-3)

    def test_ac_resistance_against_bench(self, antenna1, antenna2):
        """Proximity effect is not modelled, so only a factor-of-three band holds."""
        for geometry, measured in ((antenna1, 10.0), (antenna2, 2.0)):
            r_ac = trace_resistance(geometry, frequency=NFC_CARRIER_HZ)
            assert measured / 3 <= r_ac <= measured * 3

    def test_resistance_monotone_in_frequency(self, antenna2):
        values = [trace_resistance(antenna2, frequency=f) for f in (0.0, 1e5, 1e6, 1e7, 1e8)]
        assert values == sorted(values)
        assert math.isfinite(values[-1])
