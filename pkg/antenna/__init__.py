"""
Design library for flexible 13.56 MHz NFC tag antennas.

This package contains the coil, circuit, synthesis, layout and coupling
models used by the command line and the experiments.
"""

from .models import ChipModel, CoilGeometry, ConductorMaterial, SubstrateSpec, TagNetwork, TuningSolution, WheelerConstants
from .errors import AntennaDesignError
from .coil_model import derive_dimensions, inductance_wheeler, coil_centerline, trace_resistance
from .circuit_model import synthesize_tuning, resonance_frequency, sweep, find_resonance, q_factor
from .geometry_synthesis import DesignRules, SynthesisTarget, drc_check, search_geometry
from .layout_export import build_layout, to_gerber, to_svg
from .coupling_range import CouplingScenario, default_scenario, estimate_range, mutual_inductance

__all__ = [
    "AntennaDesignError",
    "ChipModel",
    "CoilGeometry",
    "ConductorMaterial",
    "CouplingScenario",
    "DesignRules",
    "SubstrateSpec",
    "SynthesisTarget",
    "TagNetwork",
    "TuningSolution",
    "WheelerConstants",
    "build_layout",
    "coil_centerline",
    "default_scenario",
    "derive_dimensions",
    "drc_check",
    "estimate_range",
    "find_resonance",
    "inductance_wheeler",
    "mutual_inductance",
    "q_factor",
    "resonance_frequency",
    "search_geometry",
    "sweep",
    "synthesize_tuning",
    "to_gerber",
    "to_svg",
    "trace_resistance",
]
