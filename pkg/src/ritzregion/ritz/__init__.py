"""Compressions, partner regions, isogonal conjugates and the region R_A(mu1)."""

from .certificates import (
    NormalizedConfig,
    check_A,
    check_B,
    normalize_A,
    normalize_B,
    perp_family,
    x_vector,
    z_matrix,
)
from .compression import (
    DEFAULT_ANGLES,
    PerpBasis,
    SweepResult,
    compress,
    numerical_range_sweep,
    partner_region,
    partner_sweep,
    perp_basis,
)
from .isogonal import conjugate_vector, isogonal_formula, isogonal_geometric
from .region import (
    ISOGONAL,
    RESIDUAL,
    CompressionWitness,
    GeneratingPoint,
    RegionReport,
    region_R,
    union_generating_points,
    weight_avoiding,
)

__all__ = [
    "DEFAULT_ANGLES", "ISOGONAL", "RESIDUAL", "CompressionWitness", "GeneratingPoint",
    "NormalizedConfig", "PerpBasis", "RegionReport", "SweepResult", "check_A", "check_B",
    "compress", "conjugate_vector", "isogonal_formula", "isogonal_geometric",
    "normalize_A", "normalize_B", "numerical_range_sweep", "partner_region", "partner_sweep",
    "perp_basis", "perp_family", "region_R", "union_generating_points", "weight_avoiding",
    "x_vector", "z_matrix",
]
