"""
Verification settings
Defaults for the brute-force oracle suites, loadable from JSON
"""

import json
import logging
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Dict

from .errors import Malformed

logger = logging.getLogger(__name__)


@dataclass
class VerificationSettings:
    """Grid resolutions, sampling sizes and the random seed"""

    triple_grid: int = 3  # exhaustive transitivity
    pair_grid: int = 4  # exhaustive pair checks
    spot_grid: int = 6  # least/greatest spot checks
    seed: int = 20210413
    max_denominator: int = 60
    random_pairs: int = 10_000
    random_subsets: int = 1_000
    subset_size: int = 10

    def get_settings(self) -> Dict[str, Any]:
        """Get settings for saving"""
        return asdict(self)

    def load_settings(self, settings: Dict[str, Any]):
        """Load settings; unknown keys are ignored"""
        known = {f.name for f in fields(self)}
        for key, value in settings.items():
            if key not in known:
                logger.warning(f"Ignoring unknown setting: {key}")
                continue
            # any non-negative seed; grids and counts start at 1
            minimum = 0 if key == "seed" else 1
            if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
                kind = "a non-negative" if minimum == 0 else "a positive"
                raise Malformed(value, f"setting {key} must be {kind} integer")
            setattr(self, key, value)

    @classmethod
    def from_file(cls, path: Path) -> "VerificationSettings":
        settings = cls()
        try:
            data = json.loads(Path(path).read_text())
        except json.JSONDecodeError as e:
            raise Malformed(str(path), f"{path}: invalid JSON ({e})") from e
        if not isinstance(data, dict):
            raise Malformed(str(path), f"{path}: settings must be a JSON object")
        settings.load_settings(data)
        logger.info(f"Loaded verification settings from {path}")
        return settings
