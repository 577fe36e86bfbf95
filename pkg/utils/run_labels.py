"""
Utility functions for labelling stored campaigns.
"""

import config
from database import Database


def generate_run_label(db: Database, seed: int) -> str:
    """
    Generate a unique label for a stored campaign.
    Format: Run-<seed>-<k> where k is the first unused counter for that seed.
    """
    k = 1
    while True:
        label = f"{config.RUN_LABEL_PREFIX}{seed}-{k}"

        # Check if label already exists
        if not db.label_exists(label):
            return label
        k += 1
