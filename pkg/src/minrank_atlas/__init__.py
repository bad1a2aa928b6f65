"""Minimum-rank bound tables for all graphs of order <= 7, plus exact
rational verification of the bundled optimal-matrix certificates."""

from minrank_atlas.graphs import Graph

__all__ = ["Graph"]
__version__ = "0.1.0"
