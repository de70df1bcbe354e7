"""Impedance sweep plot rendered to SVG text."""

import io

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from antenna.circuit_model import ImpedancePoint
from antenna.constants import MHZ

# Fixed salt and no date so identical sweeps give identical files
_SVG_RC = {"svg.hashsalt": "nfc-sweep", "svg.fonttype": "none"}


def sweep_plot_svg(points: list[ImpedancePoint], title: str, resonance: float | None = None) -> str:
    frequencies = np.array([point.frequency for point in points]) / MHZ
    impedance = np.array([point.impedance for point in points])

    with plt.rc_context(_SVG_RC):
        fig, (ax_mag, ax_phase) = plt.subplots(2, 1, sharex=True, figsize=(7, 5))
        ax_mag.semilogy(frequencies, np.abs(impedance), color="#b87333")
        ax_mag.set_ylabel("|Z| (Ω)")
        ax_mag.set_title(title)
        ax_mag.grid(True, which="both", alpha=0.3)

        ax_phase.plot(frequencies, np.degrees(np.angle(impedance)), color="#3a6ea5")
        ax_phase.set_ylabel("Phase (°)")
        ax_phase.set_xlabel("Frequency (MHz)")
        ax_phase.grid(True, alpha=0.3)

        if resonance is not None:
            for ax in (ax_mag, ax_phase):
                ax.axvline(resonance / MHZ, color="gray", linestyle="--", linewidth=0.8)

        fig.tight_layout()
        buffer = io.StringIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})
        plt.close(fig)
    return buffer.getvalue()
