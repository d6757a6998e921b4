"""
Tests for the comparators, containment order and ranking
"""

import pytest
from conftest import ivifns
from hypothesis import given

from src.errors import DuplicateLabel, UnknownOrder
from src.ivifn_core import BOTTOM, TOP, make_ivifn
from src.oracle import enumerate_grid
from src.order_engine import (
    ComparisonOutcome,
    DecidedAt,
    OrderSelector,
    Relation,
    compare,
    extremes,
    is_admissible_pair,
    leq,
    principle,
    rank,
    sort_key,
    subset_leq,
    xu_compare,
)


class TestOrderSelector:
    def test_parse_case_insensitive(self):
        assert OrderSelector.parse("hzx") is OrderSelector.HZX
        assert OrderSelector.parse(" WLW ") is OrderSelector.WLW

    def test_parse_unknown(self):
        with pytest.raises(UnknownOrder):
            OrderSelector.parse("xyz")


class TestCompare:
    def test_hzx_decided_at_key3(self, degenerate_example, stats_example):
        outcome = compare(degenerate_example, stats_example, OrderSelector.HZX)
        assert outcome == ComparisonOutcome(Relation.LESS, DecidedAt.KEY3)
        assert outcome.key_label(OrderSelector.HZX) == "E2"

    def test_wlw_decided_at_key4(self, degenerate_example, stats_example):
        outcome = compare(degenerate_example, stats_example, OrderSelector.WLW)
        assert outcome == ComparisonOutcome(Relation.LESS, DecidedAt.KEY4)
        assert outcome.key_label(OrderSelector.WLW) == "G"

    def test_orders_disagree(self, disagreement_pair):
        a, b = disagreement_pair
        hzx = compare(a, b, OrderSelector.HZX)
        wlw = compare(a, b, OrderSelector.WLW)
        assert hzx == ComparisonOutcome(Relation.GREATER, DecidedAt.KEY3)
        assert wlw == ComparisonOutcome(Relation.LESS, DecidedAt.KEY3)
        assert wlw.key_label(OrderSelector.WLW) == "T"

    def test_decided_at_score(self, order):
        outcome = compare(BOTTOM, TOP, order)
        assert outcome == ComparisonOutcome(Relation.LESS, DecidedAt.SCORE)

    def test_equal(self, order, stats_example):
        outcome = compare(stats_example, stats_example, order)
        assert outcome.relation is Relation.EQUAL
        assert outcome.key_label(order) == "="

    def test_inconsistent_outcome_rejected(self):
        with pytest.raises(ValueError):
            ComparisonOutcome(Relation.EQUAL, DecidedAt.SCORE)

    @given(ivifns(), ivifns())
    def test_antisymmetric_and_flipped(self, a, b):
        for order in OrderSelector:
            forward = compare(a, b, order)
            backward = compare(b, a, order)
            assert backward.relation is forward.relation.flipped()
            assert backward.decided_at is forward.decided_at
            assert (forward.relation is Relation.EQUAL) == (a == b)

    @given(ivifns(), ivifns(), ivifns())
    def test_transitive(self, a, b, c):
        for order in OrderSelector:
            if leq(a, b, order) and leq(b, c, order):
                assert leq(a, c, order)

    @given(ivifns(), ivifns())
    def test_matches_tuple_comparison(self, a, b):
        for order in OrderSelector:
            ka, kb = principle(order).keys(a), principle(order).keys(b)
            assert leq(a, b, order) == (ka <= kb)


class TestSubsetOrder:
    def test_contained(self):
        a = make_ivifn("1/10", "2/10", "3/10", "4/10")
        b = make_ivifn("2/10", "3/10", "2/10", "3/10")
        assert subset_leq(a, b)
        assert not subset_leq(b, a)

    @given(ivifns(), ivifns())
    def test_admissible(self, a, b):
        for order in OrderSelector:
            assert is_admissible_pair(a, b, order)

    def test_extremes_bound_everything(self, order, stats_example):
        bottom, top = extremes()
        assert (bottom, top) == (BOTTOM, TOP)
        assert subset_leq(bottom, stats_example) and subset_leq(stats_example, top)
        assert leq(bottom, stats_example, order) and leq(stats_example, top, order)


class TestXuCompare:
    def test_ties_on_distinct_values(self, degenerate_example, stats_example):
        assert xu_compare(degenerate_example, stats_example) is Relation.EQUAL
        assert degenerate_example != stats_example

    def test_score_decides(self):
        assert xu_compare(BOTTOM, TOP) is Relation.LESS

    def test_both_orders_refine_it_on_grid_pairs(self, order):
        members = enumerate_grid(4).members
        for a in members:
            for b in members:
                relation = xu_compare(a, b)
                if relation is Relation.EQUAL:
                    continue
                outcome = compare(a, b, order)
                assert outcome.relation is relation, (a, b)
                assert outcome.decided_at in (DecidedAt.SCORE, DecidedAt.ACCURACY)

    @given(ivifns(), ivifns())
    def test_both_orders_refine_it(self, a, b):
        relation = xu_compare(a, b)
        if relation is not Relation.EQUAL:
            for order in OrderSelector:
                assert compare(a, b, order).relation is relation


class TestRank:
    def test_two_rows(self, degenerate_example, stats_example):
        ranked = rank([("a", degenerate_example), ("b", stats_example)], OrderSelector.HZX)
        assert [item.label for item in ranked] == ["b", "a"]
        assert ranked[0].position == 1
        assert ranked[0].versus_next.key_label(OrderSelector.HZX) == "E2"
        assert ranked[1].versus_next is None
        assert ranked[0].stats.e2 == ranked[0].stats.e3

    def test_top_first_and_orders_differ(self, disagreement_pair):
        a, b = disagreement_pair
        items = [("a", a), ("b", b), ("top", TOP)]
        hzx = [item.label for item in rank(items, OrderSelector.HZX)]
        wlw = [item.label for item in rank(items, OrderSelector.WLW)]
        assert hzx == ["top", "a", "b"]
        assert wlw == ["top", "b", "a"]

    def test_equal_values_keep_input_order(self, order, stats_example):
        ranked = rank([("first", stats_example), ("second", stats_example)], order)
        assert [item.label for item in ranked] == ["first", "second"]
        assert ranked[0].versus_next.relation is Relation.EQUAL

    def test_duplicate_label(self, order, stats_example):
        with pytest.raises(DuplicateLabel) as err:
            rank([("x", stats_example), ("x", TOP)], order)
        assert err.value.label == "x"

    def test_sort_key(self, order, stats_example):
        values = [TOP, stats_example, BOTTOM]
        assert sorted(values, key=sort_key(order)) == [BOTTOM, stats_example, TOP]
