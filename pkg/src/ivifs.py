"""
Interval-valued intuitionistic fuzzy sets over finite universes
Cut sets, the decomposition theorem and Zadeh's extension principle
"""

import logging
from dataclasses import dataclass
from types import MappingProxyType
from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple

from .chain_completion import join
from .errors import DuplicateLabel, Malformed
from .ivifn_core import BOTTOM, IVIFN, ivifn_from_dict
from .order_engine import OrderSelector, leq

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IVIFS:
    """A total map from a finite ordered universe to IVIFNs"""

    universe: Tuple[str, ...]
    degrees: Mapping[str, IVIFN]

    def __post_init__(self):
        universe = tuple(self.universe)
        seen = set()
        for label in universe:
            if label in seen:
                raise DuplicateLabel(label)
            seen.add(label)

        missing = [x for x in universe if x not in self.degrees]
        extra = [x for x in self.degrees if x not in seen]
        if missing or extra:
            raise Malformed(
                dict(self.degrees),
                f"degrees must cover the universe exactly (missing={missing}, extra={extra})",
            )

        object.__setattr__(self, "universe", universe)
        degrees = {x: self.degrees[x] for x in universe}
        object.__setattr__(self, "degrees", MappingProxyType(degrees))

    def __call__(self, label: str) -> IVIFN:
        return self.degrees[label]

    def __eq__(self, other):
        if not isinstance(other, IVIFS):
            return NotImplemented
        return self.universe == other.universe and dict(self.degrees) == dict(other.degrees)

    def __hash__(self):
        return hash((self.universe, tuple(self.degrees[x] for x in self.universe)))

    def degree_values(self) -> List[IVIFN]:
        """Distinct degrees in universe order"""
        values: List[IVIFN] = []
        for x in self.universe:
            if self.degrees[x] not in values:
                values.append(self.degrees[x])
        return values

    def to_dict(self) -> Dict[str, Any]:
        return {
            "universe": list(self.universe),
            "degrees": {x: self.degrees[x].to_dict() for x in self.universe},
        }


def make_ivifs(pairs: Iterable[Tuple[str, IVIFN]]) -> IVIFS:
    """Build an IVIFS from (label, degree) pairs, keeping their order"""
    pairs = list(pairs)
    universe = tuple(label for label, _ in pairs)
    degrees: Dict[str, IVIFN] = {}
    for label, value in pairs:
        if label in degrees:
            raise DuplicateLabel(label)
        degrees[label] = value
    return IVIFS(universe, degrees)


def ivifs_from_dict(data: Dict[str, Any]) -> IVIFS:
    """Build an IVIFS from {"universe": [...], "degrees": {label: {...}}}"""
    if not isinstance(data, dict) or not isinstance(data.get("degrees"), dict):
        raise Malformed(data, "an IVIFS document needs a 'degrees' object")

    degrees: Dict[str, IVIFN] = {}
    for x, value in data["degrees"].items():
        if not isinstance(value, dict):
            raise Malformed(value, f"degree of {x!r} must be an object, got {value!r}")
        degrees[str(x)] = ivifn_from_dict(value)

    universe = data.get("universe", list(degrees))
    if not isinstance(universe, list):
        raise Malformed(universe, "'universe' must be a list of labels")
    return IVIFS(tuple(str(x) for x in universe), degrees)


def cut(a_set: IVIFS, alpha: IVIFN, order: OrderSelector = OrderSelector.HZX) -> Tuple[str, ...]:
    """Labels whose degree is at least alpha, in universe order"""
    return tuple(x for x in a_set.universe if leq(alpha, a_set(x), order))


def reconstruct(
    a_set: IVIFS, candidate_alphas: Sequence[IVIFN], order: OrderSelector = OrderSelector.HZX
) -> IVIFS:
    """Rebuild each degree as the join of the candidate levels whose cut contains the label"""
    candidates = list(candidate_alphas)
    cuts = [(alpha, set(cut(a_set, alpha, order))) for alpha in candidates]

    degrees = {}
    for x in a_set.universe:
        degrees[x] = join([alpha for alpha, members in cuts if x in members], order)

    logger.debug(f"Reconstructed {len(a_set.universe)} degrees from {len(candidates)} levels")
    return IVIFS(a_set.universe, degrees)


def zadeh_extend(
    f: Mapping[str, str],
    a_set: IVIFS,
    universe_y: Sequence[str],
    order: OrderSelector = OrderSelector.HZX,
) -> IVIFS:
    """Push an IVIFS forward along f; empty preimages get the bottom element"""
    universe_y = tuple(universe_y)
    targets = set(universe_y)
    preimages: Dict[str, List[IVIFN]] = {y: [] for y in universe_y}

    for x in a_set.universe:
        if x not in f:
            raise Malformed(x, f"map is undefined at {x!r}")
        y = f[x]
        if y not in targets:
            raise Malformed(y, f"map sends {x!r} outside the codomain: {y!r}")
        preimages[y].append(a_set(x))

    degrees = {y: join(values, order) if values else BOTTOM for y, values in preimages.items()}
    return IVIFS(universe_y, degrees)


def compose(f: Mapping[str, str], g: Mapping[str, str]) -> Dict[str, str]:
    """The label map g after f"""
    return {x: g[y] for x, y in f.items()}
