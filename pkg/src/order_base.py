"""
Base class for ranking-principle plugins
"""

import logging
from abc import ABC, abstractmethod
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

from .errors import Infeasible, ValidationError
from .ivifn_core import IVIFN, StatVector, stats

Keys = Tuple[Fraction, Fraction, Fraction, Fraction]


class Bound(Enum):
    """Which side of a family the level statistics describe"""

    UPPER = "upper"
    LOWER = "lower"


class RankingPrinciple(ABC):
    """Base class for all ranking principles

    A ranking principle compares IVIFNs lexicographically on
    (S, H, key3, key4), all ascending. S and H are shared; the plugin
    supplies the two tail keys, the inverse map from keys back to an
    IVIFN, and the extremal feasible completions used by suprema and
    infima.
    """

    # Plugin metadata
    ORDER_NAME = "Base Order"
    ORDER_VERSION = "1.0.0"
    ORDER_DESCRIPTION = "Base ranking principle"
    KEY_LABELS: Tuple[str, str, str, str] = ("S", "H", "K3", "K4")
    ADMISSIBILITY_PROVEN = False

    def __init__(self):
        self.logger = logging.getLogger(f"{__name__}.{self.ORDER_NAME}")

    def keys(self, a: IVIFN) -> Keys:
        """Lexicographic key of an IVIFN"""
        sv = stats(a)
        k3, k4 = self.tail_keys(sv)
        return (sv.s, sv.h, k3, k4)

    @abstractmethod
    def tail_keys(self, sv: StatVector) -> Tuple[Fraction, Fraction]:
        """Third and fourth ranking keys"""

    @abstractmethod
    def half_widths(self, k3: Fraction, k4: Fraction) -> Tuple[Fraction, Fraction]:
        """Half widths of the membership and non-membership intervals"""

    @abstractmethod
    def conditions(
        self, k1: Fraction, k2: Fraction, k3: Fraction, k4: Fraction
    ) -> List[Tuple[str, bool]]:
        """Named feasibility conditions, checked in order"""

    @abstractmethod
    def fill_key3(self, k1: Fraction, k2: Fraction, bound: Bound) -> Fraction:
        """Extremal feasible key3 given S and H (minimal for UPPER, maximal for LOWER)"""

    @abstractmethod
    def fill_key4(self, k1: Fraction, k2: Fraction, k3: Fraction, bound: Bound) -> Fraction:
        """Extremal feasible key4 given S, H and key3"""

    def from_keys(self, k1: Fraction, k2: Fraction, k3: Fraction, k4: Fraction) -> IVIFN:
        """The unique IVIFN with the given keys"""
        for condition, holds in self.conditions(k1, k2, k3, k4):
            if not holds:
                raise Infeasible(condition)

        zeta1 = (k1 + k2) / 2
        zeta2 = (k2 - k1) / 2
        p, q = self.half_widths(k3, k4)
        try:
            return IVIFN(zeta1 - p, zeta1 + p, zeta2 - q, zeta2 + q)
        except ValidationError as e:
            raise Infeasible(e.field, str(e)) from e

    def complete(self, levels: Sequence[Fraction], bound: Bound) -> Keys:
        """Fill the keys below the deepest given level with extremal feasible values"""
        filled = [Fraction(level) for level in levels]

        if len(filled) == 1:
            # smallest H for a given S is |S|; the largest is 1
            filled.append(abs(filled[0]) if bound is Bound.UPPER else Fraction(1))
        if len(filled) == 2:
            filled.append(self.fill_key3(filled[0], filled[1], bound))
        if len(filled) == 3:
            filled.append(self.fill_key4(filled[0], filled[1], filled[2], bound))

        self.logger.debug(f"{bound.value} completion of {len(levels)} level(s): {filled}")
        return (filled[0], filled[1], filled[2], filled[3])

    def get_settings(self) -> Dict[str, Any]:
        """Plugin metadata for reports"""
        return {
            "name": self.ORDER_NAME,
            "version": self.ORDER_VERSION,
            "keys": list(self.KEY_LABELS),
            "admissibility_proven": self.ADMISSIBILITY_PROVEN,
        }
