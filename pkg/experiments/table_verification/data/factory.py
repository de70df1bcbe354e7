import os

from experiments.table_verification.data.dataset import TableVerificationDataset

def create_dataset() -> TableVerificationDataset:
    """Create the verification table dataset.

    Returns:
        TableVerificationDataset with the fabricated antennas and their bench values
    """
    current_dir = os.path.dirname(__file__)
    return TableVerificationDataset.load_from_json(os.path.join(current_dir, "dataset.json"))
