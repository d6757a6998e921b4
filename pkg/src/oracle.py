"""
Brute-force oracle
Grid enumeration of IVIFNs, order-axiom checks, and exhaustive bound checks
used to validate the closed-form constructions.

The oracle computes its own ranking keys straight from the statistics and
never goes through the ranking-principle plugins, so a bug in a plugin shows
up as a disagreement rather than being reproduced.
"""

import json
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .chain_completion import (
    Bound,
    ChainStats,
    from_stats,
    infimum,
    join,
    level_statistics,
    meet,
    stats_projection,
    supremum,
)
from .errors import EmptyFamily, IVIFNError
from .ivifn_core import IVIFN, StatVector, stats
from .order_engine import OrderSelector, Relation, compare, principle, subset_leq
from .settings import VerificationSettings

logger = logging.getLogger(__name__)

Comparator = Callable[[IVIFN, IVIFN], Relation]

MAX_WITNESSES = 25


@dataclass(frozen=True)
class Grid:
    """All IVIFNs whose coordinates are multiples of 1/k"""

    resolution_k: int
    members: Tuple[IVIFN, ...]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def grid_count(k: int) -> int:
    """Closed-form number of grid members"""
    return sum((j + 1) * sum(l + 1 for l in range(k - j + 1)) for j in range(k + 1))


@lru_cache(maxsize=16)
def enumerate_grid(k: int) -> Grid:
    """Grid members ordered by mu_hi, mu_lo, nu_hi, nu_lo"""
    if k < 1:
        raise ValueError(f"grid resolution must be positive, got {k}")

    members = []
    for mu_hi in range(k + 1):
        for mu_lo in range(mu_hi + 1):
            for nu_hi in range(k - mu_hi + 1):
                for nu_lo in range(nu_hi + 1):
                    members.append(
                        IVIFN(
                            Fraction(mu_lo, k),
                            Fraction(mu_hi, k),
                            Fraction(nu_lo, k),
                            Fraction(nu_hi, k),
                        )
                    )
    return Grid(k, tuple(members))


TAIL_KEYS: Dict[OrderSelector, Callable[[StatVector], Tuple[Fraction, Fraction]]] = {
    OrderSelector.HZX: lambda sv: (sv.e2, sv.e3),
    OrderSelector.WLW: lambda sv: (sv.t, sv.g),
}


def oracle_keys(a: IVIFN, order: OrderSelector) -> Tuple[Fraction, ...]:
    """Ranking keys computed directly from the statistics

    Orders without an entry in TAIL_KEYS come from plugins; their keys are
    taken from the plugin, so only the axioms and bounds are checked for them.
    """
    tail = TAIL_KEYS.get(order)
    if tail is None:
        return principle(order).keys(a)
    sv = stats(a)
    return (sv.s, sv.h) + tail(sv)


def oracle_relation(a: IVIFN, b: IVIFN, order: OrderSelector) -> Relation:
    """Plain tuple comparison of the keys"""
    ka, kb = oracle_keys(a, order), oracle_keys(b, order)
    if ka < kb:
        return Relation.LESS
    if ka > kb:
        return Relation.GREATER
    return Relation.EQUAL


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: Tuple[IVIFN, ...]
    asserted: bool = True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "axiom": self.axiom,
            "asserted": self.asserted,
            "witness": [a.to_dict() for a in self.witness],
        }


@dataclass
class SuiteReport:
    """Outcome of one verification suite"""

    suite: str
    order: OrderSelector
    checked: int = 0
    violations: List[Violation] = field(default_factory=list)
    counts: Dict[str, int] = field(default_factory=dict)
    seed: Optional[int] = None
    informational: Tuple[str, ...] = ()

    def record(self, axiom: str, witness: Tuple[IVIFN, ...]):
        self.counts[axiom] = self.counts.get(axiom, 0) + 1
        if self.counts[axiom] <= MAX_WITNESSES:
            asserted = axiom not in self.informational
            self.violations.append(Violation(axiom, witness, asserted))

    @property
    def asserted_violations(self) -> List[Violation]:
        return [v for v in self.violations if v.asserted]

    @property
    def passed(self) -> bool:
        return not any(n for axiom, n in self.counts.items() if axiom not in self.informational)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "order": self.order.value,
            "checked": self.checked,
            "passed": self.passed,
            "seed": self.seed,
            "counts": dict(self.counts),
            "informational": list(self.informational),
            "violations": [v.to_dict() for v in self.violations],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def relation_matrix(sample: Sequence[IVIFN], comparator: Comparator) -> np.ndarray:
    """n x n matrix of comparator outcomes as -1, 0, 1"""
    n = len(sample)
    matrix = np.zeros((n, n), dtype=np.int8)
    for i, a in enumerate(sample):
        for j, b in enumerate(sample):
            matrix[i, j] = comparator(a, b).value
    return matrix


def axiom_suite(
    sample: Sequence[IVIFN],
    order: OrderSelector,
    comparator: Optional[Comparator] = None,
) -> SuiteReport:
    """Check totality, antisymmetry, transitivity and admissibility exhaustively on a sample"""
    sample = list(sample)
    if comparator is None:
        comparator = lambda a, b: compare(a, b, order).relation  # noqa: E731

    informational = () if principle(order).ADMISSIBILITY_PROVEN else ("admissibility",)
    report = SuiteReport("axioms", order, informational=informational)
    n = len(sample)
    report.checked = n * n + n * n * n
    logger.info(f"Checking order axioms for {order.value} on {n} elements")

    matrix = relation_matrix(sample, comparator)

    # totality: every pair is related one way, consistently from both sides
    for i, j in zip(*np.nonzero(matrix != -matrix.T)):
        if i < j:
            report.record("totality", (sample[i], sample[j]))

    # antisymmetry: EQUAL only between identical IVIFNs
    for i, j in zip(*np.nonzero(matrix == 0)):
        if i < j and sample[i] != sample[j]:
            report.record("antisymmetry", (sample[i], sample[j]))

    # transitivity: a <= b <= c forces a <= c
    leq = (matrix <= 0).astype(np.int64)
    broken = ((leq @ leq) > 0) & (leq == 0)
    for i, k in zip(*np.nonzero(broken)):
        j = int(np.flatnonzero(leq[i] & leq[:, k])[0])
        report.record("transitivity", (sample[i], sample[j], sample[k]))

    # admissibility: the order refines containment
    for i, a in enumerate(sample):
        for j, b in enumerate(sample):
            if matrix[i, j] > 0 and subset_leq(a, b):
                report.record("admissibility", (a, b))

    _log_report(report)
    return report


def _log_report(report: SuiteReport):
    if report.passed:
        logger.info(f"{report.suite}/{report.order.value}: {report.checked} checks passed")
    else:
        logger.error(f"{report.suite}/{report.order.value}: violations {report.counts}")
    for axiom in report.informational:
        if report.counts.get(axiom):
            logger.warning(
                f"{report.suite}/{report.order.value}: {report.counts[axiom]} "
                f"{axiom} counterexamples (not asserted)"
            )


def brute_lub(omega: Sequence[IVIFN], order: OrderSelector) -> Tuple[IVIFN, bool]:
    """Maximum of a finite family by direct search, and whether the library agrees"""
    values = list(omega)
    if not values:
        raise EmptyFamily("brute_lub needs a nonempty family")

    best = values[0]
    for a in values[1:]:
        if oracle_relation(a, best, order) is Relation.GREATER:
            best = a

    agrees = join(values, order) == best and supremum(level_statistics(values, order)) == best
    return best, agrees


def brute_glb(omega: Sequence[IVIFN], order: OrderSelector) -> Tuple[IVIFN, bool]:
    """Minimum of a finite family by direct search, and whether the library agrees"""
    values = list(omega)
    if not values:
        raise EmptyFamily("brute_glb needs a nonempty family")

    best = values[0]
    for a in values[1:]:
        if oracle_relation(a, best, order) is Relation.LESS:
            best = a

    lower = level_statistics(values, order, Bound.LOWER)
    agrees = meet(values, order) == best and infimum(lower) == best
    return best, agrees


KeyedGrid = List[Tuple[Tuple[Fraction, ...], IVIFN]]


def keyed_grid(grid: Sequence[IVIFN], order: OrderSelector) -> KeyedGrid:
    return [(oracle_keys(x, order), x) for x in grid]


def bound_check(
    candidate: IVIFN,
    family: Sequence[IVIFN],
    grid: Sequence[IVIFN],
    order: OrderSelector,
    bound: Bound = Bound.UPPER,
) -> List[Violation]:
    """Check that candidate bounds the family and is the tightest such grid element

    For UPPER: every member is <= candidate, and every grid element that is
    an upper bound of the family is >= candidate. LOWER is the dual.
    """
    return _bound_violations(candidate, family, keyed_grid(grid, order), order, bound)


def _oriented(key: Tuple[Fraction, ...], bound: Bound) -> Tuple[Fraction, ...]:
    # flip signs so that LOWER reads like UPPER
    sign = 1 if bound is Bound.UPPER else -1
    return tuple(sign * k for k in key)


def _bound_violations(
    candidate: IVIFN,
    family: Sequence[IVIFN],
    grid: KeyedGrid,
    order: OrderSelector,
    bound: Bound,
) -> List[Violation]:
    top = _oriented(oracle_keys(candidate, order), bound)
    members = [(_oriented(oracle_keys(a, order), bound), a) for a in family]

    violations = []
    for key, a in members:
        if key > top:
            violations.append(Violation(f"{bound.value} bound", (a, candidate)))

    if members:
        reach = max(key for key, _ in members)
        for key, x in grid:
            if reach <= _oriented(key, bound) < top:
                violations.append(Violation(f"tightest {bound.value} bound", (x, candidate)))
    return violations


def prefix_groups(grid: KeyedGrid, depth: int) -> Dict[Tuple[Fraction, ...], KeyedGrid]:
    """Grid elements grouped by their first `depth` keys"""
    groups: Dict[Tuple[Fraction, ...], KeyedGrid] = {}
    for key, x in grid:
        groups.setdefault(key[:depth], []).append((key, x))
    return groups


def prefix_check(
    candidate: IVIFN,
    levels: Sequence[Fraction],
    group: KeyedGrid,
    order: OrderSelector,
    bound: Bound,
) -> List[Violation]:
    """Check a completion against the grid elements sharing its levels

    The completion of non-attained levels must itself carry those levels and
    be the smallest (UPPER) or largest (LOWER) element that does.
    """
    key = oracle_keys(candidate, order)
    if key[: len(levels)] != tuple(levels):
        return [Violation(f"{bound.value} bound levels", (candidate,))]

    extreme = _oriented(key, bound)
    return [
        Violation(f"tightest {bound.value} bound", (x, candidate))
        for other, x in group
        if _oriented(other, bound) < extreme
    ]


def random_ivifn(rng: np.random.Generator, max_denominator: int = 60) -> IVIFN:
    """Random valid IVIFN on a common denominator <= max_denominator"""
    d = int(rng.integers(1, max_denominator, endpoint=True))
    mu_hi = int(rng.integers(0, d, endpoint=True))
    mu_lo = int(rng.integers(0, mu_hi, endpoint=True))
    nu_hi = int(rng.integers(0, d - mu_hi, endpoint=True))
    nu_lo = int(rng.integers(0, nu_hi, endpoint=True))
    return IVIFN(Fraction(mu_lo, d), Fraction(mu_hi, d), Fraction(nu_lo, d), Fraction(nu_hi, d))


def random_superset(rng: np.random.Generator, a: IVIFN) -> IVIFN:
    """Random b with a contained in b, on the common denominator of a"""
    d = math.lcm(*(x.denominator for x in a.as_tuple()))
    mu_lo_a, mu_hi_a, nu_lo_a, nu_hi_a = (int(x * d) for x in a.as_tuple())

    nu_hi = int(rng.integers(0, nu_hi_a, endpoint=True))
    nu_lo = int(rng.integers(0, min(nu_lo_a, nu_hi), endpoint=True))
    mu_hi = int(rng.integers(mu_hi_a, d - nu_hi, endpoint=True))
    mu_lo = int(rng.integers(mu_lo_a, mu_hi, endpoint=True))
    return IVIFN(Fraction(mu_lo, d), Fraction(mu_hi, d), Fraction(nu_lo, d), Fraction(nu_hi, d))


def random_subset(rng: np.random.Generator, pool: Sequence[IVIFN], size: int) -> List[IVIFN]:
    """Random nonempty subset of at most `size` elements"""
    size = int(rng.integers(1, min(size, len(pool)), endpoint=True))
    picks = rng.choice(len(pool), size=size, replace=False)
    return [pool[int(i)] for i in picks]


def admissibility_suite(order: OrderSelector, settings: VerificationSettings) -> SuiteReport:
    """Random containment pairs must be ordered the same way"""
    rng = np.random.default_rng(settings.seed)
    informational = () if principle(order).ADMISSIBILITY_PROVEN else ("admissibility",)
    report = SuiteReport("admissibility", order, seed=settings.seed, informational=informational)

    for _ in range(settings.random_pairs):
        a = random_ivifn(rng, settings.max_denominator)
        b = random_superset(rng, a)
        report.checked += 1
        if compare(a, b, order).relation is Relation.GREATER:
            report.record("admissibility", (a, b))

    _log_report(report)
    return report


def supremum_suite(
    order: OrderSelector, settings: VerificationSettings, grid_k: Optional[int] = None
) -> SuiteReport:
    """Closed-form bounds of random grid subsets against direct search"""
    rng = np.random.default_rng(settings.seed)
    pool = enumerate_grid(grid_k or settings.pair_grid).members
    report = SuiteReport("supremum", order, seed=settings.seed)

    for _ in range(settings.random_subsets):
        omega = random_subset(rng, pool, settings.subset_size)
        report.checked += 1
        try:
            top, top_agrees = brute_lub(omega, order)
            bottom, bottom_agrees = brute_glb(omega, order)
        except IVIFNError as e:
            logger.error(f"Closed-form bound failed on {len(omega)} elements: {e}")
            report.record("feasibility closure", tuple(omega))
            continue
        if not top_agrees:
            report.record("supremum", (top,) + tuple(omega))
        if not bottom_agrees:
            report.record("infimum", (bottom,) + tuple(omega))

    _log_report(report)
    return report


def score_limit_family(xi1: Fraction, bound: Bound, n_max: int) -> List[IVIFN]:
    """Degenerate IVIFNs whose scores tend to xi1 strictly from below (UPPER) or above (LOWER)

    UPPER members have the smallest accuracy for their score, LOWER members
    the largest, so the limit is not attained at the first level.
    """
    family = []
    for n in range(1, n_max + 1):
        s = xi1 - Fraction(1, n) if bound is Bound.UPPER else xi1 + Fraction(1, n)
        if not -1 <= s <= 1:
            continue
        if bound is Bound.UPPER:
            mu, nu = max(s, Fraction(0)), max(-s, Fraction(0))
        else:
            mu, nu = (1 + s) / 2, (1 - s) / 2
        family.append(IVIFN(mu, mu, nu, nu))
    return family


def bounds_suite(order: OrderSelector, settings: VerificationSettings) -> SuiteReport:
    """Least/greatest bound checks against every element of a finer grid

    Covers random coarse-grid families (attained bounds), for every
    coarse-grid score a family whose score tends to it without reaching it,
    and the completion of every coarse-grid key prefix of depth 1 to 3.
    """
    rng = np.random.default_rng(settings.seed)
    pool = enumerate_grid(settings.pair_grid).members
    fine = keyed_grid(enumerate_grid(settings.spot_grid).members, order)
    report = SuiteReport("bounds", order, seed=settings.seed)

    for _ in range(settings.random_subsets):
        omega = random_subset(rng, pool, settings.subset_size)
        for bound in Bound:
            report.checked += 1
            try:
                cs = level_statistics(omega, order, bound)
                candidate = supremum(cs) if bound is Bound.UPPER else infimum(cs)
            except IVIFNError:
                report.record("feasibility closure", tuple(omega))
                continue
            for violation in _bound_violations(candidate, omega, fine, order, bound):
                report.record(violation.axiom, violation.witness)

    # the family must get closer to the limit than any two grid scores are apart
    n_max = 4 * settings.pair_grid * settings.spot_grid + 1
    scores = sorted({stats(a).s for a in pool})
    for bound in Bound:
        for xi1 in scores:
            if xi1 == (-1 if bound is Bound.UPPER else 1):
                continue
            report.checked += 1
            family = score_limit_family(xi1, bound, n_max)
            cs = ChainStats(order, (xi1,), (False,), bound)
            try:
                candidate = supremum(cs) if bound is Bound.UPPER else infimum(cs)
            except IVIFNError:
                report.record("feasibility closure", tuple(family[-1:]))
                continue
            for violation in _bound_violations(candidate, family, fine, order, bound):
                report.record(violation.axiom, violation.witness)

    # every coarse-grid key prefix as non-attained levels, against the fine grid
    coarse = keyed_grid(pool, order)
    for depth in (1, 2, 3):
        fine_groups = prefix_groups(fine, depth)
        attained = (True,) * (depth - 1) + (False,)
        for levels, members in sorted(prefix_groups(coarse, depth).items()):
            for bound in Bound:
                report.checked += 1
                cs = ChainStats(order, levels, attained, bound)
                try:
                    candidate = supremum(cs) if bound is Bound.UPPER else infimum(cs)
                except IVIFNError:
                    report.record("feasibility closure", (members[0][1],))
                    continue
                group = fine_groups.get(levels, [])
                for violation in prefix_check(candidate, levels, group, order, bound):
                    report.record(violation.axiom, violation.witness)

    _log_report(report)
    return report


def reconstruction_suite(
    order: OrderSelector, settings: VerificationSettings, grid_k: Optional[int] = None
) -> SuiteReport:
    """Solving the keys back must return the original IVIFN"""
    rng = np.random.default_rng(settings.seed)
    samples = list(enumerate_grid(grid_k or settings.pair_grid).members)
    samples += [random_ivifn(rng, settings.max_denominator) for _ in range(settings.random_pairs)]
    report = SuiteReport("reconstruction", order, seed=settings.seed)

    for a in samples:
        report.checked += 1
        try:
            rebuilt = from_stats(order, *stats_projection(a, order))
        except IVIFNError:
            report.record("reconstruction", (a,))
            continue
        if rebuilt != a:
            report.record("reconstruction", (a, rebuilt))

    _log_report(report)
    return report


def run_all(
    settings: VerificationSettings, order: OrderSelector, grid_k: Optional[int] = None
) -> List[SuiteReport]:
    """Every suite for one order; grid_k replaces the default grids when given"""
    logger.info(f"Running verification suites for {order.value} (seed {settings.seed})")
    grids = [grid_k] if grid_k else sorted({settings.triple_grid, settings.pair_grid})

    reports = [axiom_suite(enumerate_grid(k).members, order) for k in grids]
    reports.append(admissibility_suite(order, settings))
    reports.append(supremum_suite(order, settings, grid_k))
    reports.append(bounds_suite(order, settings))
    reports.append(reconstruction_suite(order, settings, grid_k))
    for report in reports:
        report.seed = settings.seed
    return reports
