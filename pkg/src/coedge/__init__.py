"""Exact tools for co-edge-regular graphs: constructions, certified spectra,
regularity checks, subgraph search, recognizers and theorem pipelines."""

__version__ = "0.1.0"
