"""
Canonical Examples Module
"""

from .examples_service import EXAMPLES, get_example, identity, mo3, swap_reversible, triangle, urn_fig1

__all__ = ["EXAMPLES", "get_example", "identity", "mo3", "swap_reversible", "triangle", "urn_fig1"]
