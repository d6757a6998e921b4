"""
Order Manager
Handles ranking-principle plugin discovery, loading, and lookup
"""

import importlib
import inspect
import logging
import os
import sys
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Type

from .errors import UnknownOrder
from .order_base import RankingPrinciple

PLUGIN_PATH_ENV = "IVIFN_PLUGIN_PATH"


class OrderManager:
    """Manages ranking-principle plugins"""

    def __init__(self, extra_paths: Optional[List[Path]] = None):
        self.logger = logging.getLogger(__name__)
        self.plugins: Dict[str, Type[RankingPrinciple]] = {}
        self.plugin_instances: Dict[str, RankingPrinciple] = {}

        # Plugin search paths
        self.plugin_paths = [Path(__file__).parent.parent / "plugins"]
        for entry in os.environ.get(PLUGIN_PATH_ENV, "").split(os.pathsep):
            if entry:
                self.plugin_paths.append(Path(entry))
        self.plugin_paths.extend(extra_paths or [])

    def discover_plugins(self):
        """Discover and load all available plugins"""
        self.logger.info("Discovering ranking principles...")

        for plugin_path in self.plugin_paths:
            if plugin_path.exists():
                self._scan_plugin_directory(plugin_path)

        self.logger.info(f"Discovered {len(self.plugins)} ranking principles")

    def _scan_plugin_directory(self, directory: Path):
        """Scan a directory for plugin packages"""
        for item in sorted(directory.iterdir()):
            if item.is_dir() and (item / "__init__.py").exists():
                self._load_plugin_module(item)

    def _load_plugin_module(self, plugin_dir: Path):
        """Load a plugin package and register every ranking principle it exports"""
        plugin_name = plugin_dir.name

        try:
            if str(plugin_dir.parent) not in sys.path:
                sys.path.insert(0, str(plugin_dir.parent))

            module = importlib.import_module(plugin_name)

            for _, obj in inspect.getmembers(module):
                if (
                    inspect.isclass(obj)
                    and issubclass(obj, RankingPrinciple)
                    and obj is not RankingPrinciple
                    and not inspect.isabstract(obj)
                ):
                    self.register_plugin(obj.ORDER_NAME, obj)

        except Exception as e:
            # a broken plugin must not keep the others from loading
            self.logger.error(f"Failed to load plugin {plugin_name}: {e}")

    def register_plugin(self, name: str, plugin_class: Type[RankingPrinciple]):
        """Register a ranking principle class"""
        key = name.upper()
        if key in self.plugins and self.plugins[key] is not plugin_class:
            self.logger.warning(f"Ranking principle {key} already registered, overwriting")
            self.plugin_instances.pop(key, None)

        self.plugins[key] = plugin_class
        self.logger.info(f"Registered ranking principle: {key} v{plugin_class.ORDER_VERSION}")

    def get(self, name: str) -> RankingPrinciple:
        """Shared instance of a registered ranking principle"""
        key = name.upper()
        if key not in self.plugins:
            raise UnknownOrder(
                f"ranking principle {name!r} not found (known: {', '.join(self.names())})"
            )

        if key not in self.plugin_instances:
            self.plugin_instances[key] = self.plugins[key]()
        return self.plugin_instances[key]

    def names(self) -> List[str]:
        return sorted(self.plugins)

    def get_plugins(self) -> Dict[str, Type[RankingPrinciple]]:
        """Get all registered plugins"""
        return self.plugins.copy()


@lru_cache(maxsize=1)
def default_manager() -> OrderManager:
    """Process-wide manager with the discovered plugins"""
    manager = OrderManager()
    manager.discover_plugins()
    return manager
