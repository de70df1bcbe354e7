"""
Read range dataset container.

Holds the measured read ranges of the fabricated tags and of the best
commercial tag, the geometry of every tag that has one, and the reader
loop used to model the phone.
"""

import json
import os
from typing import Optional


class ReadRangeDataset:
    """Dataset container for read-range measurements."""

    def __init__(self, data: dict):
        self._data = data

    def get_tags(self) -> list[dict]:
        """Get all tags in the dataset."""
        return self._data["tags"]

    def get_tag(self, name: str) -> dict | None:
        return next((t for t in self.get_tags() if t.get("name") == name), None)

    def get_tags_with_geometry(self) -> list[dict]:
        """Get the tags that can be modelled (commercial tags carry no geometry)."""
        return [t for t in self.get_tags() if t.get("geometry")]

    def get_calibration_tag(self) -> dict:
        """Get the tag whose measured range fixes the detection threshold."""
        return self.get_tag(self._data["calibration_antenna"])

    def get_reader(self) -> dict:
        return self._data["reader"]

    def size(self) -> int:
        """Get the total number of tags in the dataset."""
        return len(self.get_tags())

    def save_to_json(self, filepath: str) -> None:
        """Save the dataset to a JSON file."""
        directory = os.path.dirname(filepath)
        if directory:
            os.makedirs(directory, exist_ok=True)

        with open(filepath, 'w') as f:
            json.dump(self._data, f, indent=2)

        print(f"Dataset saved to {filepath}")

    def get_metadata(self) -> dict:
        return {
            'total_tags': self.size(),
            'modelled_tags': len(self.get_tags_with_geometry()),
            'calibration_antenna': self._data["calibration_antenna"],
        }

    @classmethod
    def load_from_json(cls, filepath: str) -> Optional['ReadRangeDataset']:
        """Load dataset from a JSON file. Returns None if file doesn't exist."""
        if not os.path.exists(filepath):
            return None

        try:
            with open(filepath, 'r') as f:
                data = json.load(f)

            print(f"Dataset loaded from {filepath} ({len(data['tags'])} tags)")
            return cls(data)

        except (json.JSONDecodeError, KeyError) as e:
            print(f"Error loading dataset from {filepath}: {e}")
            return None
