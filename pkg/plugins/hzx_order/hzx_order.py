"""
HZX ranking principle
Score, accuracy, total interval width (E2), membership interval width (E3)
"""

# Add parent directory to path for imports
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Tuple

sys.path.append(str(Path(__file__).parent.parent.parent))

from src.ivifn_core import StatVector  # noqa: E402
from src.order_base import Bound, RankingPrinciple  # noqa: E402


class HZXOrder(RankingPrinciple):
    """Lexicographic order on (S, H, E2, E3)"""

    ORDER_NAME = "HZX"
    ORDER_VERSION = "1.0.0"
    ORDER_DESCRIPTION = "Score, accuracy and two entropy functions"
    KEY_LABELS = ("S", "H", "E2", "E3")
    ADMISSIBILITY_PROVEN = True

    def tail_keys(self, sv: StatVector) -> Tuple[Fraction, Fraction]:
        return (sv.e2, sv.e3)

    def half_widths(self, k3: Fraction, k4: Fraction) -> Tuple[Fraction, Fraction]:
        # E3 is the full membership width, E2 the sum of half widths
        return (k4 / 2, (2 * k3 - k4) / 2)

    def conditions(
        self, k1: Fraction, k2: Fraction, k3: Fraction, k4: Fraction
    ) -> List[Tuple[str, bool]]:
        return [
            ("k4 >= 0", k4 >= 0),
            ("2k3 - k4 >= 0", 2 * k3 - k4 >= 0),
            ("(k1 + k2 - k4)/2 >= 0", (k1 + k2 - k4) / 2 >= 0),
            ("(k2 - k1)/2 - (2k3 - k4)/2 >= 0", (k2 - k1) / 2 - (2 * k3 - k4) / 2 >= 0),
            ("k2 + k3 <= 1", k2 + k3 <= 1),
        ]

    def fill_key3(self, k1: Fraction, k2: Fraction, bound: Bound) -> Fraction:
        if bound is Bound.UPPER:
            return Fraction(0)
        # largest total width: bounded by both centres and by the capacity 1 - H
        return min(k2, 1 - k2)

    def fill_key4(self, k1: Fraction, k2: Fraction, k3: Fraction, bound: Bound) -> Fraction:
        zeta1 = (k1 + k2) / 2
        zeta2 = (k2 - k1) / 2
        if bound is Bound.UPPER:
            # the non-membership interval absorbs as much of E2 as its centre allows
            return 2 * max(Fraction(0), k3 - zeta2)
        return min(2 * k3, 2 * zeta1, 2 - 2 * zeta1)
