"""
Tag equivalent circuit.

The antenna is a series Rs + Ls loop closed through the chip branch
(Rc parallel Cc). The external tuning capacitor either sits across the chip
(parallel) or in series with the chip branch. Stray inter-turn capacitance
is neglected.
"""

import math
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from antenna.e_series import snap_to_series
from antenna.errors import (
    BadRange,
    NoResonanceInRange,
    NonPositiveComponent,
    NonPositiveFrequency,
    Untunable,
    ZeroResistance,
    ZeroSeriesCapacitor,
)
from antenna.models import ChipModel, TagNetwork, TuningSolution

Topology = Literal["series", "parallel", "none"]
Snap = Literal["exact", "e12", "e24"]


class ImpedancePoint(BaseModel):
    """One sweep sample: loop impedance at a frequency."""
    model_config = ConfigDict(frozen=True)

    frequency: float = Field(..., gt=0, description="Hz")
    real: float = Field(..., description="Resistance in ohms")
    imag: float = Field(..., description="Reactance in ohms")

    @property
    def impedance(self) -> complex:
        return complex(self.real, self.imag)


def equivalent_capacitance(cc: float, c_tune: float, topology: Topology) -> float:
    if cc <= 0 or c_tune < 0:
        raise NonPositiveComponent(f"need cc > 0 and c_tune >= 0, got {cc} F and {c_tune} F")
    if topology == "series":
        if c_tune == 0:
            raise ZeroSeriesCapacitor("series tuning with a zero capacitor opens the loop")
        return cc * c_tune / (cc + c_tune)
    if topology == "parallel":
        return cc + c_tune
    return cc


def resonance_frequency(ls: float, ceq: float) -> float:
    """f_r = 1 / (2π·sqrt(Ls·Ceq))."""
    if ls <= 0 or ceq <= 0:
        raise NonPositiveComponent(f"need ls > 0 and ceq > 0, got {ls} H and {ceq} F")
    return 1 / (2 * math.pi * math.sqrt(ls * ceq))


def required_equivalent_capacitance(ls: float, f_target: float) -> float:
    if ls <= 0 or f_target <= 0:
        raise NonPositiveComponent(f"need ls > 0 and f > 0, got {ls} H and {f_target} Hz")
    omega = 2 * math.pi * f_target
    return 1 / (omega ** 2 * ls)


def synthesize_tuning(ls: float, chip: ChipModel, f_target: float, snap: Snap = "exact") -> TuningSolution:
    """Choose the tuning topology and capacitor that put the loop on f_target.

    A larger required Ceq than the chip offers needs a parallel capacitor,
    a smaller one needs a series capacitor.
    """
    c_req = required_equivalent_capacitance(ls, f_target)
    cc = chip.capacitance_cc
    if c_req <= 0:
        raise Untunable(f"required capacitance {c_req} F is not positive")

    if math.isclose(c_req, cc, rel_tol=1e-12):
        return TuningSolution(
            topology="none",
            c_tune=0.0,
            achieved_frequency=resonance_frequency(ls, cc),
            snapped=False,
        )

    if c_req > cc:
        topology = "parallel"
        c_tune = c_req - cc
    else:
        topology = "series"
        denominator = cc - c_req
        if denominator <= cc * 1e-12:
            raise Untunable(f"series capacitor diverges for c_req {c_req} F against cc {cc} F")
        c_tune = cc * c_req / denominator

    if snap != "exact":
        c_tune = snap_to_series(c_tune, snap)

    return TuningSolution(
        topology=topology,
        c_tune=c_tune,
        achieved_frequency=resonance_frequency(ls, equivalent_capacitance(cc, c_tune, topology)),
        snapped=snap != "exact",
    )


def network_equivalent_capacitance(network: TagNetwork) -> float:
    cc = network.chip.capacitance_cc
    if network.tuning is None:
        return cc
    return equivalent_capacitance(cc, network.tuning.c_tune, network.tuning.topology)


def network_resonance(network: TagNetwork) -> float:
    return resonance_frequency(network.antenna_ls, network_equivalent_capacitance(network))


def impedance_at(network: TagNetwork, f: float) -> complex:
    """Loop impedance Rs + jωLs + Z_branch seen around the tag loop."""
    if f <= 0:
        raise NonPositiveFrequency(f"impedance needs f > 0, got {f} Hz")
    omega = 2 * math.pi * f
    chip = network.chip

    admittance = 1j * omega * chip.capacitance_cc
    if not math.isinf(chip.resistance_rc):
        admittance += 1 / chip.resistance_rc

    tuning = network.tuning
    if tuning is not None and tuning.topology == "parallel":
        admittance += 1j * omega * tuning.c_tune

    branch = 1 / admittance
    if tuning is not None and tuning.topology == "series":
        branch += 1 / (1j * omega * tuning.c_tune)

    return network.antenna_rs + 1j * omega * network.antenna_ls + branch


def sweep(network: TagNetwork, f_lo: float, f_hi: float, n_points: int) -> list[ImpedancePoint]:
    """Log-spaced samples from f_lo to f_hi inclusive."""
    if not 0 < f_lo < f_hi or n_points < 2:
        raise BadRange(f"need 0 < f_lo < f_hi and n_points >= 2, got {f_lo}, {f_hi}, {n_points}")

    frequencies = np.geomspace(f_lo, f_hi, n_points)
    frequencies[0], frequencies[-1] = f_lo, f_hi

    points = []
    for f in frequencies.tolist():
        z = impedance_at(network, f)
        points.append(ImpedancePoint(frequency=f, real=z.real, imag=z.imag))
    return points


def find_resonance(points: list[ImpedancePoint]) -> float:
    """Linearly interpolated frequency of the first Im(Z) zero crossing."""
    for lower, upper in zip(points, points[1:]):
        im0, im1 = lower.imag, upper.imag
        if im0 == 0:
            return lower.frequency
        if (im0 < 0 <= im1) or (im0 > 0 >= im1):
            return lower.frequency + (upper.frequency - lower.frequency) * (-im0) / (im1 - im0)
    raise NoResonanceInRange(
        f"Im(Z) keeps its sign across {points[0].frequency if points else 0:.6g}"
        f"-{points[-1].frequency if points else 0:.6g} Hz"
    )


def q_factor(network: TagNetwork) -> float:
    """Series-loop Q = 2π·f_r·Ls / Rs at the network's own resonance."""
    if network.antenna_rs <= 0:
        raise ZeroResistance("Q is unbounded for a lossless antenna")
    return 2 * math.pi * network_resonance(network) * network.antenna_ls / network.antenna_rs


def bandwidth(network: TagNetwork) -> float:
    """3 dB bandwidth f_r / Q in hertz."""
    return network_resonance(network) / q_factor(network)


def sweep_to_csv(points: list[ImpedancePoint]) -> str:
    lines = ["frequency_hz,re_ohm,im_ohm"]
    for point in points:
        lines.append(f"{point.frequency!r},{point.real!r},{point.imag!r}")
    return "\n".join(lines) + "\n"
