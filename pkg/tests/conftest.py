"""Shared fixtures: the two fabricated antennas and their tag networks."""

import math
from pathlib import Path

import pytest

from antenna.circuit_model import synthesize_tuning
from antenna.constants import NFC_CARRIER_HZ, PF, UH
from antenna.models import ChipModel, CoilGeometry, TagNetwork, TuningSolution

DESIGNS_DIR = Path(__file__).resolve().parent.parent / "designs"


@pytest.fixture
def antenna1() -> CoilGeometry:
    """160 x 80 mm rectangle, 4 turns, w 0.5 mm, s 2 mm."""
    return CoilGeometry(
        shape="rectangular",
        outer_length=160.0,
        outer_width=80.0,
        turns=4,
        trace_width=0.5,
        turn_spacing=2.0,
        conductor_thickness=0.0175,
    )


@pytest.fixture
def antenna2() -> CoilGeometry:
    """80 x 80 mm square, 3 turns, w 0.6 mm, s 2 mm."""
    return CoilGeometry(
        shape="square",
        outer_length=80.0,
        turns=3,
        trace_width=0.6,
        turn_spacing=2.0,
        conductor_thickness=0.0175,
    )


@pytest.fixture
def ideal_chip() -> ChipModel:
    """50 pF chip with an open resistive branch."""
    return ChipModel(capacitance_cc=50 * PF, resistance_rc=math.inf)


@pytest.fixture
def antenna1_network(ideal_chip) -> TagNetwork:
    """Bench values: 4.85 µH, 10 Ω, series 56 pF."""
    return TagNetwork(
        antenna_ls=4.85 * UH,
        antenna_rs=10.0,
        chip=ideal_chip,
        tuning=TuningSolution(topology="series", c_tune=56 * PF, achieved_frequency=14.06e6),
    )


@pytest.fixture
def antenna2_network(ideal_chip) -> TagNetwork:
    """Bench values: 1.62 µH, 2 Ω, parallel 30 pF."""
    return TagNetwork(
        antenna_ls=1.62 * UH,
        antenna_rs=2.0,
        chip=ideal_chip,
        tuning=TuningSolution(topology="parallel", c_tune=30 * PF, achieved_frequency=13.98e6),
    )


@pytest.fixture
def carrier_tuned(ideal_chip):
    """Factory for a network tuned exactly to the carrier."""
    def build(ls: float, rs: float) -> TagNetwork:
        return TagNetwork(
            antenna_ls=ls,
            antenna_rs=rs,
            chip=ideal_chip,
            tuning=synthesize_tuning(ls, ideal_chip, NFC_CARRIER_HZ),
        )
    return build
