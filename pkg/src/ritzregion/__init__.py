"""Second Ritz values of normal matrices.

For a normal matrix given by its spectrum and a first Ritz value mu1, computes
the convex region of admissible partners mu2, generating points with explicit
2x2 compression witnesses, and independent verification tools.
"""

from ._backend import BACKEND
from .errors import *  # noqa: F401,F403
from .geometry import (
    TOL_GEOM,
    ConvexRegion,
    Location,
    RegionKind,
    Side,
    barycentric_weights,
    ccw_order,
    convex_hull,
    hausdorff_distance,
    half_plane_side,
    point_location,
    segment_intersection,
    segment_weights,
)
from .ritz import (
    CompressionWitness,
    PerpBasis,
    RegionReport,
    compress,
    isogonal_formula,
    isogonal_geometric,
    normalize_A,
    normalize_B,
    partner_region,
    perp_basis,
    region_R,
    x_vector,
    z_matrix,
)
from .spectrum import (
    CaseKind,
    CaseLabel,
    Spectrum,
    classify,
    is_corner,
    numerical_range,
    rank2_range,
    reduce_multiplicity,
)
from .weights import WeightVector, extreme_weights, interior_weight, sample_weight

__version__ = "0.1.0"
