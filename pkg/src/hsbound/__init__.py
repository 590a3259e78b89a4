"""Improved analyticity bounds for the hard-sphere gas pressure.

Estimates the normalized exclusion volumes g~_d(k) (probability that k
uniform points in the unit d-ball are pairwise more than 1 apart), builds
C_d(a) = sum_s g~_d(s) a^s / s!, and maximizes a / C_d(a).
"""

__version__ = "0.1.0"

from .errors import HSBoundError
from .geometry import volume_unit_ball, sample_point_in_unit_ball, is_hardcore_valid
from .gtable import (
    MCEstimate,
    GTildeEntry,
    GTildeTable,
    RunConfig,
    estimate_g_tilde,
    exact_g_tilde,
    build_gtable,
)
from .bounds import (
    BoundReport,
    c_polynomial,
    optimize_a,
    classical_bound,
    pressure_series_tail,
    bound_report,
)
from .combinatorics import cayley_count, prufer_enumerate

__all__ = [
    "HSBoundError",
    "volume_unit_ball",
    "sample_point_in_unit_ball",
    "is_hardcore_valid",
    "MCEstimate",
    "GTildeEntry",
    "GTildeTable",
    "RunConfig",
    "estimate_g_tilde",
    "exact_g_tilde",
    "build_gtable",
    "BoundReport",
    "c_polynomial",
    "optimize_a",
    "classical_bound",
    "pressure_series_tail",
    "bound_report",
    "cayley_count",
    "prufer_enumerate",
]
