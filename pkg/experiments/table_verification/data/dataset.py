"""
Verification table dataset container.

This module provides the TableVerificationDataset class for organizing the
fabricated antennas: their design geometry and the values measured on the
bench (inductance, resistance, chip and tuning capacitance, resonance).
"""

import json
import os
from typing import Optional


class TableVerificationDataset:
    """Dataset container for fabricated antenna records."""

    def __init__(self, antennas: list[dict]):
        self._antennas = antennas

    def get_antennas(self) -> list[dict]:
        """Get all antennas in the dataset."""
        return self._antennas

    def get_antenna(self, name: str) -> dict | None:
        """Get one antenna by name, None if absent."""
        return next((a for a in self._antennas if a.get("name") == name), None)

    def size(self) -> int:
        """Get the total number of antennas in the dataset."""
        return len(self._antennas)

    def save_to_json(self, filepath: str) -> None:
        """Save the dataset to a JSON file."""
        directory = os.path.dirname(filepath)
        if directory:
            os.makedirs(directory, exist_ok=True)

        with open(filepath, 'w') as f:
            json.dump(self._antennas, f, indent=2)

        print(f"Dataset saved to {filepath}")

    def get_metadata(self) -> dict:
        """Get metadata about the dataset."""
        return {
            'total_antennas': self.size(),
            'shapes': sorted({a["geometry"]["shape"] for a in self._antennas}),
            'connections': sorted({a["measured"]["connection"] for a in self._antennas}),
        }

    @classmethod
    def load_from_json(cls, filepath: str) -> Optional['TableVerificationDataset']:
        """Load dataset from a JSON file. Returns None if file doesn't exist."""
        if not os.path.exists(filepath):
            return None

        try:
            with open(filepath, 'r') as f:
                antennas = json.load(f)

            print(f"Dataset loaded from {filepath} ({len(antennas)} antennas)")
            return cls(antennas)

        except (json.JSONDecodeError, KeyError) as e:
            print(f"Error loading dataset from {filepath}: {e}")
            return None
