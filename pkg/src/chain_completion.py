"""
Chain completion
Closed-form suprema and infima of described families, reconstruction of an
IVIFN from its ranking keys, and finite joins and meets.

A family is described by its level statistics: the extremum of S over the
family, the extremum of H over the members attaining that S, and so on for
the two tail keys, each with a flag telling whether the extremum is attained.
Levels below the first non-attained one carry no information. The bound is
then the IVIFN whose keys are the given levels, completed with the extremal
feasible values of the remaining keys (smallest for suprema, largest for
infima).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import EmptyFamily, Infeasible, Malformed
from .ivifn_core import BOTTOM, IVIFN, TOP, as_rational, format_rational
from .order_base import Bound, Keys
from .order_engine import OrderSelector, maximum, minimum, principle

logger = logging.getLogger(__name__)

__all__ = [
    "Bound",
    "ChainStats",
    "from_stats",
    "infimum",
    "join",
    "level_statistics",
    "meet",
    "stats_projection",
    "supremum",
]


@dataclass(frozen=True)
class ChainStats:
    """Level statistics of a family under one order"""

    order: OrderSelector
    levels: Tuple[Fraction, ...]
    attained: Tuple[bool, ...]
    bound: Bound = Bound.UPPER

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(Fraction(x) for x in self.levels))
        object.__setattr__(self, "attained", tuple(bool(x) for x in self.attained))

    @property
    def depth(self) -> int:
        return len(self.levels)

    def level(self, k: int) -> Optional[Fraction]:
        return self.levels[k - 1] if k <= self.depth else None

    def is_attained(self, k: int) -> Optional[bool]:
        return self.attained[k - 1] if k <= self.depth else None

    @property
    def level1(self) -> Optional[Fraction]:
        return self.level(1)

    @property
    def level2(self) -> Optional[Fraction]:
        return self.level(2)

    @property
    def level3(self) -> Optional[Fraction]:
        return self.level(3)

    @property
    def level4(self) -> Optional[Fraction]:
        return self.level(4)

    @property
    def attained1(self) -> Optional[bool]:
        return self.is_attained(1)

    @property
    def attained2(self) -> Optional[bool]:
        return self.is_attained(2)

    @property
    def attained3(self) -> Optional[bool]:
        return self.is_attained(3)

    @property
    def attained4(self) -> Optional[bool]:
        return self.is_attained(4)

    @property
    def zeta1(self) -> Optional[Fraction]:
        if self.depth < 2:
            return None
        return (self.levels[0] + self.levels[1]) / 2

    @property
    def zeta2(self) -> Optional[Fraction]:
        if self.depth < 2:
            return None
        return (self.levels[1] - self.levels[0]) / 2

    def validate(self):
        """Raise Infeasible unless the statistics could come from a family"""
        if not 1 <= self.depth <= 4:
            raise Infeasible("1 <= depth <= 4")
        if len(self.attained) != self.depth:
            raise Infeasible("one attainment flag per level")
        if not all(self.attained[:-1]):
            raise Infeasible("levels below a non-attained level are absent")
        if self.depth < 4 and self.attained[-1]:
            raise Infeasible("a short description ends at a non-attained level")

        s = self.levels[0]
        if not -1 <= s <= 1:
            raise Infeasible("-1 <= level1 <= 1")
        if self.depth >= 2 and not abs(s) <= self.levels[1] <= 1:
            raise Infeasible("|level1| <= level2 <= 1")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order": self.order.value.lower(),
            "bound": self.bound.value,
            "levels": [format_rational(x) for x in self.levels],
            "attained": list(self.attained),
        }


def stats_projection(a: IVIFN, order: OrderSelector) -> Keys:
    """The four ranking keys of an IVIFN"""
    return principle(order).keys(a)


def from_stats(
    order: OrderSelector, k1: Fraction, k2: Fraction, k3: Fraction, k4: Fraction
) -> IVIFN:
    """Solve the keys back to the unique IVIFN having them"""
    return principle(order).from_keys(Fraction(k1), Fraction(k2), Fraction(k3), Fraction(k4))


def level_statistics(
    omega: Iterable[IVIFN], order: OrderSelector, bound: Bound = Bound.UPPER
) -> ChainStats:
    """Extremes of the successive keys over the nested level sets of a finite family"""
    members: List[Keys] = [stats_projection(a, order) for a in omega]
    if not members:
        raise EmptyFamily("level statistics need a nonempty family")

    pick = max if bound is Bound.UPPER else min
    levels = []
    for k in range(4):
        extreme = pick(keys[k] for keys in members)
        levels.append(extreme)
        members = [keys for keys in members if keys[k] == extreme]

    return ChainStats(order, tuple(levels), (True,) * 4, bound)


def _bound_from(cs: ChainStats, expected: Bound) -> IVIFN:
    cs.validate()
    if cs.bound is not expected:
        raise Infeasible(
            f"bound == {expected.value}",
            f"{cs.bound.value} statistics cannot give the {expected.value} bound",
        )

    ranking = principle(cs.order)
    keys = ranking.complete(cs.levels, cs.bound)
    result = ranking.from_keys(*keys)
    logger.debug(
        f"{expected.value} bound at depth {cs.depth} "
        f"(last level attained: {cs.attained[-1]}) -> {result}"
    )
    return result


def supremum(cs: ChainStats) -> IVIFN:
    """Least upper bound of the family described by UPPER statistics"""
    return _bound_from(cs, Bound.UPPER)


def infimum(cs: ChainStats) -> IVIFN:
    """Greatest lower bound of the family described by LOWER statistics"""
    return _bound_from(cs, Bound.LOWER)


def join(omega: Sequence[IVIFN], order: OrderSelector) -> IVIFN:
    """Finite supremum; the empty join is the bottom element"""
    values = list(omega)
    if not values:
        return BOTTOM
    return maximum(values, order)


def meet(omega: Sequence[IVIFN], order: OrderSelector) -> IVIFN:
    """Finite infimum; the empty meet is the top element"""
    values = list(omega)
    if not values:
        return TOP
    return minimum(values, order)


def chain_stats_from_dict(
    data: Dict[str, Any], order: Optional[OrderSelector] = None
) -> ChainStats:
    """Build ChainStats from its JSON form; an explicit order wins over the document's"""
    if not isinstance(data, dict) or not isinstance(data.get("levels"), list):
        raise Malformed(data, "chain statistics need a 'levels' list")
    levels = tuple(as_rational(x, "levels") for x in data["levels"])
    attained = tuple(data.get("attained", (True,) * len(levels)))
    if order is None:
        order = OrderSelector.parse(str(data.get("order", "hzx")))
    try:
        bound = Bound(data.get("bound", Bound.UPPER.value))
    except ValueError as e:
        raise Malformed(data.get("bound"), "bound must be 'upper' or 'lower'") from e
    return ChainStats(order, levels, attained, bound)
