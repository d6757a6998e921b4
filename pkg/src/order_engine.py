"""
Order engine
Total-order comparison, containment order, ranking and admissibility
"""

import functools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from .errors import DuplicateLabel, UnknownOrder
from .ivifn_core import BOTTOM, IVIFN, TOP, StatVector, accuracy, score, stats
from .order_base import RankingPrinciple
from .order_manager import default_manager

logger = logging.getLogger(__name__)


class OrderSelector(Enum):
    """Which complete ranking principle to use

    HZX and WLW are built in. Any other ranking principle registered with the
    order manager is selected by its name, e.g. OrderSelector("E3X").
    """

    HZX = "HZX"
    WLW = "WLW"

    @classmethod
    def _missing_(cls, value):
        if not isinstance(value, str) or value not in default_manager().names():
            return None
        # cached, so each plugin name maps to one selector
        selector = object.__new__(cls)
        selector._name_ = value
        selector._value_ = value
        return cls._value2member_map_.setdefault(value, selector)

    @classmethod
    def parse(cls, text: str) -> "OrderSelector":
        try:
            return cls(text.strip().upper())
        except ValueError as e:
            known = ", ".join(name.lower() for name in default_manager().names())
            raise UnknownOrder(f"unknown order {text!r} (known: {known})") from e


class Relation(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def flipped(self) -> "Relation":
        return Relation(-self.value)


class DecidedAt(Enum):
    """The lexicographic level that decided a comparison"""

    SCORE = 0
    ACCURACY = 1
    KEY3 = 2
    KEY4 = 3
    ALL_EQUAL = 4


@dataclass(frozen=True)
class ComparisonOutcome:
    relation: Relation
    decided_at: DecidedAt

    def __post_init__(self):
        if (self.relation is Relation.EQUAL) != (self.decided_at is DecidedAt.ALL_EQUAL):
            raise ValueError(f"inconsistent outcome: {self.relation} at {self.decided_at}")

    def key_label(self, order: OrderSelector) -> str:
        """Printed name of the deciding key, '=' when nothing decided"""
        if self.decided_at is DecidedAt.ALL_EQUAL:
            return "="
        return principle(order).KEY_LABELS[self.decided_at.value]


def principle(order: OrderSelector) -> RankingPrinciple:
    """The ranking-principle plugin behind a selector"""
    return default_manager().get(order.value)


def _relation(x, y) -> Relation:
    if x < y:
        return Relation.LESS
    if x > y:
        return Relation.GREATER
    return Relation.EQUAL


def compare(a: IVIFN, b: IVIFN, order: OrderSelector) -> ComparisonOutcome:
    """Compare two IVIFNs key by key, stopping at the first key that differs"""
    ranking = principle(order)
    keys_a = ranking.keys(a)
    keys_b = ranking.keys(b)

    for level, (x, y) in zip(DecidedAt, zip(keys_a, keys_b)):
        relation = _relation(x, y)
        if relation is not Relation.EQUAL:
            return ComparisonOutcome(relation, level)
    return ComparisonOutcome(Relation.EQUAL, DecidedAt.ALL_EQUAL)


def leq(a: IVIFN, b: IVIFN, order: OrderSelector) -> bool:
    return compare(a, b, order).relation is not Relation.GREATER


def sort_key(order: OrderSelector) -> Callable[[IVIFN], object]:
    """Key function for sorted/min/max under the chosen order"""
    return functools.cmp_to_key(lambda a, b: compare(a, b, order).relation.value)


def subset_leq(a: IVIFN, b: IVIFN) -> bool:
    """Containment order: b has larger membership and smaller non-membership bounds"""
    return a.mu_lo <= b.mu_lo and a.mu_hi <= b.mu_hi and a.nu_lo >= b.nu_lo and a.nu_hi >= b.nu_hi


def is_admissible_pair(a: IVIFN, b: IVIFN, order: OrderSelector) -> bool:
    """Whether the order refines containment on this pair"""
    return not subset_leq(a, b) or leq(a, b, order)


def xu_compare(a: IVIFN, b: IVIFN) -> Relation:
    """Two-key ranking on score then accuracy; ties on both report EQUAL"""
    relation = _relation(score(a), score(b))
    if relation is Relation.EQUAL:
        relation = _relation(accuracy(a), accuracy(b))
    return relation


def extremes() -> Tuple[IVIFN, IVIFN]:
    """Bottom and top elements, the same for both orders"""
    return BOTTOM, TOP


@dataclass(frozen=True)
class RankedItem:
    position: int
    label: str
    value: IVIFN
    stats: StatVector
    # how this item was separated from the next one; None for the last item
    versus_next: Optional[ComparisonOutcome]


def rank(items: Sequence[Tuple[str, IVIFN]], order: OrderSelector) -> List[RankedItem]:
    """Sort labelled IVIFNs from best to worst, keeping input order among equals"""
    seen = set()
    for label, _ in items:
        if label in seen:
            raise DuplicateLabel(label)
        seen.add(label)

    key = sort_key(order)
    ordered = sorted(items, key=lambda item: key(item[1]), reverse=True)

    ranked = []
    for position, (label, value) in enumerate(ordered, start=1):
        outcome = None
        if position < len(ordered):
            outcome = compare(value, ordered[position][1], order)
        ranked.append(RankedItem(position, label, value, stats(value), outcome))

    logger.debug(f"Ranked {len(ranked)} alternatives under {order.value}")
    return ranked


def maximum(values: Iterable[IVIFN], order: OrderSelector) -> IVIFN:
    return max(values, key=sort_key(order))


def minimum(values: Iterable[IVIFN], order: OrderSelector) -> IVIFN:
    return min(values, key=sort_key(order))
