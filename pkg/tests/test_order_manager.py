"""
Tests for ranking-principle plugin discovery
"""

import json
import logging
import textwrap
from fractions import Fraction

import pytest

from src.chain_completion import Bound, ChainStats, infimum, supremum
from src.cli import EXIT_OK, run
from src.errors import UnknownOrder
from src.ivifn_core import make_ivifn
from src.order_base import RankingPrinciple
from src.order_engine import OrderSelector, Relation, compare, rank
from src.order_manager import PLUGIN_PATH_ENV, OrderManager, default_manager

EXTRA_PLUGIN = '''
"""Reversed-tail test plugin"""

from src.order_base import Bound, RankingPrinciple


class ReversedTail(RankingPrinciple):
    ORDER_NAME = "REV"
    KEY_LABELS = ("S", "H", "-E2", "-E3")

    def tail_keys(self, sv):
        return (-sv.e2, -sv.e3)

    def half_widths(self, k3, k4):
        return (-k4 / 2, (-2 * k3 + k4) / 2)

    def conditions(self, k1, k2, k3, k4):
        return []

    def fill_key3(self, k1, k2, bound):
        return 0

    def fill_key4(self, k1, k2, k3, bound):
        return 0
'''


WIDTH_FIRST_PLUGIN = '''
"""Membership width before total width"""

from fractions import Fraction

from src.order_base import Bound, RankingPrinciple


class WidthFirst(RankingPrinciple):
    ORDER_NAME = "E3X"
    KEY_LABELS = ("S", "H", "E3", "E2")

    def tail_keys(self, sv):
        return (sv.e3, sv.e2)

    def half_widths(self, k3, k4):
        return (k3 / 2, k4 - k3 / 2)

    def conditions(self, k1, k2, k3, k4):
        return [("k3 >= 0", k3 >= 0), ("k2 + k4 <= 1", k2 + k4 <= 1)]

    def fill_key3(self, k1, k2, bound):
        if bound is Bound.UPPER:
            return Fraction(0)
        return 2 * min((k1 + k2) / 2, 1 - k2)

    def fill_key4(self, k1, k2, k3, bound):
        if bound is Bound.UPPER:
            return k3 / 2
        return k3 / 2 + min((k2 - k1) / 2, 1 - k2 - k3 / 2)
'''


def _write_plugin(root, name, body):
    package = root / name
    package.mkdir()
    (package / "__init__.py").write_text(textwrap.dedent(body))


def test_default_plugins_registered():
    manager = default_manager()
    assert manager.names() == ["HZX", "WLW"]
    assert manager.get("hzx").KEY_LABELS == ("S", "H", "E2", "E3")
    assert manager.get("WLW").KEY_LABELS == ("S", "H", "T", "G")


def test_instances_are_shared():
    manager = default_manager()
    assert manager.get("hzx") is manager.get("HZX")


def test_unknown_order():
    with pytest.raises(UnknownOrder):
        default_manager().get("nope")


def test_plugin_metadata():
    info = default_manager().get("hzx").get_settings()
    assert info["name"] == "HZX"
    assert info["admissibility_proven"] is True
    assert info["keys"] == ["S", "H", "E2", "E3"]


def test_extra_plugin_directory(tmp_path):
    _write_plugin(tmp_path, "reversed_tail_plugin", EXTRA_PLUGIN)

    manager = OrderManager(extra_paths=[tmp_path])
    manager.discover_plugins()

    assert "REV" in manager.names()
    plugin = manager.get("rev")
    assert isinstance(plugin, RankingPrinciple)
    assert plugin.KEY_LABELS[2] == "-E2"


def test_plugin_path_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv(PLUGIN_PATH_ENV, str(tmp_path))
    manager = OrderManager()
    assert tmp_path in manager.plugin_paths


def test_broken_plugin_does_not_stop_discovery(tmp_path, caplog):
    _write_plugin(tmp_path, "broken_order_plugin", "raise RuntimeError('boom')\n")

    manager = OrderManager(extra_paths=[tmp_path])
    with caplog.at_level(logging.ERROR, logger="src.order_manager"):
        manager.discover_plugins()

    assert {"HZX", "WLW"} <= set(manager.names())
    assert "broken_order_plugin" in caplog.text


def test_reregistration_warns(caplog):
    manager = OrderManager()
    manager.discover_plugins()
    hzx = manager.get_plugins()["HZX"]

    class Shadow(hzx):
        pass

    with caplog.at_level(logging.WARNING, logger="src.order_manager"):
        manager.register_plugin("hzx", Shadow)

    assert "already registered" in caplog.text
    assert isinstance(manager.get("HZX"), Shadow)


@pytest.fixture
def width_first(tmp_path, monkeypatch):
    """E3X ranking principle discovered through the plugin path variable"""
    _write_plugin(tmp_path, "width_first_plugin", WIDTH_FIRST_PLUGIN)
    monkeypatch.setenv(PLUGIN_PATH_ENV, str(tmp_path))
    default_manager.cache_clear()
    yield OrderSelector.parse("e3x")
    default_manager.cache_clear()


class TestPluginOrders:
    def test_selected_by_name(self, width_first):
        assert width_first.value == "E3X"
        assert OrderSelector.parse("E3X") is width_first
        assert set(OrderSelector) == {OrderSelector.HZX, OrderSelector.WLW}

    def test_compare_and_rank(self, width_first):
        wide = make_ivifn("1/10", "3/10", "1/5", "1/5")
        narrow = make_ivifn("1/5", "1/5", "1/10", "3/10")
        outcome = compare(wide, narrow, width_first)
        assert outcome.relation is Relation.GREATER
        assert outcome.key_label(width_first) == "E3"
        # HZX ties them on E2 and settles on E3 the same way
        assert compare(wide, narrow, OrderSelector.HZX).key_label(OrderSelector.HZX) == "E3"

        ranked = rank([("n", narrow), ("w", wide)], width_first)
        assert [item.label for item in ranked] == ["w", "n"]

    def test_completion(self, width_first):
        cs = ChainStats(width_first, (Fraction(-1, 2), Fraction(1, 2)), (True, False))
        assert supremum(cs) == make_ivifn(0, 0, "1/2", "1/2")
        lower = ChainStats(width_first, (Fraction(0),), (False,), Bound.LOWER)
        assert infimum(lower) == make_ivifn("1/2", "1/2", "1/2", "1/2")

    def test_verify_from_the_command_line(self, width_first, capsys):
        argv = ["verify", "--order", "e3x", "--grid", "2", "--trials", "10", "--json"]
        assert run(argv) == EXIT_OK
        reports = json.loads(capsys.readouterr().out)
        assert {r["order"] for r in reports} == {"E3X"}
        assert all(r["passed"] for r in reports)
        axioms = reports[0]
        assert axioms["counts"] == {} and axioms["informational"] == ["admissibility"]

    def test_unknown_name_lists_registered_orders(self, width_first):
        with pytest.raises(UnknownOrder, match="e3x"):
            OrderSelector.parse("e9x")
