"""
WLW ranking principle
Score, accuracy, membership uncertainty index (T), hesitation uncertainty index (G)
"""

# Add parent directory to path for imports
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Tuple

sys.path.append(str(Path(__file__).parent.parent.parent))

from src.ivifn_core import StatVector  # noqa: E402
from src.order_base import Bound, RankingPrinciple  # noqa: E402


class WLWOrder(RankingPrinciple):
    """Lexicographic order on (S, H, T, G)"""

    ORDER_NAME = "WLW"
    ORDER_VERSION = "1.0.0"
    ORDER_DESCRIPTION = "Score, accuracy, membership and hesitation uncertainty indices"
    KEY_LABELS = ("S", "H", "T", "G")

    def tail_keys(self, sv: StatVector) -> Tuple[Fraction, Fraction]:
        return (sv.t, sv.g)

    def half_widths(self, k3: Fraction, k4: Fraction) -> Tuple[Fraction, Fraction]:
        # full widths are (G + T)/2 and (G - T)/2
        return ((k3 + k4) / 4, (k4 - k3) / 4)

    def conditions(
        self, k1: Fraction, k2: Fraction, k3: Fraction, k4: Fraction
    ) -> List[Tuple[str, bool]]:
        return [
            ("k3 + k4 >= 0", k3 + k4 >= 0),
            ("k4 - k3 >= 0", k4 - k3 >= 0),
            ("(k1 + k2)/2 - (k3 + k4)/4 >= 0", (k1 + k2) / 2 - (k3 + k4) / 4 >= 0),
            ("(k2 - k1)/2 - (k4 - k3)/4 >= 0", (k2 - k1) / 2 - (k4 - k3) / 4 >= 0),
            ("k2 + k4/2 <= 1", k2 + k4 / 2 <= 1),
        ]

    def fill_key3(self, k1: Fraction, k2: Fraction, bound: Bound) -> Fraction:
        zeta1 = (k1 + k2) / 2
        zeta2 = (k2 - k1) / 2
        room = 1 - k2
        if bound is Bound.UPPER:
            # smallest T: degenerate membership, widest non-membership
            return -2 * min(zeta2, room)
        return 2 * min(zeta1, room)

    def fill_key4(self, k1: Fraction, k2: Fraction, k3: Fraction, bound: Bound) -> Fraction:
        if bound is Bound.UPPER:
            return abs(k3)
        zeta1 = (k1 + k2) / 2
        zeta2 = (k2 - k1) / 2
        shift = k3 / 2
        # widest pair of half widths (p, q) with p - q = T/2
        q = min(zeta2, zeta1 - shift, (1 - k2 - shift) / 2)
        return 4 * q + k3
