"""Certified Ramsey witnesses for 3-uniform loose paths and loose cycles.

The package builds extremal split colorings certifying every lower bound,
extracts verified monochromatic witnesses from colorings at or above each
Ramsey threshold, and cross-checks everything against a brute-force oracle.
"""

from .core import (
    RED,
    BLUE,
    PATH,
    CYCLE,
    TripleEdge,
    Coloring,
    LoosePath,
    LooseCycle,
    Witness,
    StructureError,
    colex_rank,
    colex_unrank,
    edge_color,
    validate_loose_path,
    validate_loose_cycle,
    verify_witness,
)
from .constructions import (
    PP,
    CC,
    PNCM,
    PMCN,
    PairKind,
    SplitSpec,
    lower_bound_params,
    build_split_coloring,
)
from .extractor import ramsey_number, solve

__all__ = [
    "RED",
    "BLUE",
    "PATH",
    "CYCLE",
    "TripleEdge",
    "Coloring",
    "LoosePath",
    "LooseCycle",
    "Witness",
    "StructureError",
    "colex_rank",
    "colex_unrank",
    "edge_color",
    "validate_loose_path",
    "validate_loose_cycle",
    "verify_witness",
    "PP",
    "CC",
    "PNCM",
    "PMCN",
    "PairKind",
    "SplitSpec",
    "lower_bound_params",
    "build_split_coloring",
    "ramsey_number",
    "solve",
]
