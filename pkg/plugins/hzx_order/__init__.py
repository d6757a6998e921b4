"""
HZX Order Plugin
Score, accuracy and entropy based complete ranking of IVIFNs
"""

from .hzx_order import HZXOrder

__all__ = ["HZXOrder"]
