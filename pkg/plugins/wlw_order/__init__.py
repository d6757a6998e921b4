"""
WLW Order Plugin
Score, accuracy and uncertainty-index based complete ranking of IVIFNs
"""

from .wlw_order import WLWOrder

__all__ = ["WLWOrder"]
