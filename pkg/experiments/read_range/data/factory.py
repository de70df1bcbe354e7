import os

from experiments.read_range.data.dataset import ReadRangeDataset

def create_dataset() -> ReadRangeDataset:
    """Create the read range dataset.

    Returns:
        ReadRangeDataset with measured ranges, tag geometries and the reader loop
    """
    current_dir = os.path.dirname(__file__)
    return ReadRangeDataset.load_from_json(os.path.join(current_dir, "dataset.json"))
