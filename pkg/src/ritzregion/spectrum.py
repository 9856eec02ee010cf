"""Normal matrices modelled by their spectrum.

A :class:`Spectrum` stores the distinct eigenvalues with multiplicities in a
canonical counterclockwise order about the centroid ``trace/n``. Everything
that indexes eigenvalues (case labels, weight vectors, triples) uses positions
in the *expanded* list, where each eigenvalue is repeated according to its
multiplicity and copies are adjacent.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    CollinearSpectrum,
    InteriorEigenvalue,
    InternalInconsistency,
    TooFewEigenvalues,
)
from .geometry import (
    TOL_GEOM,
    ConvexRegion,
    Location,
    RegionKind,
    ccw_order,
    convex_hull,
    intersect,
    point_location,
    point_segment_distance,
)


class Spectrum:
    """Multiset of eigenvalues in canonical CCW order.

    Values closer than ``tol`` are merged and their multiplicities added.
    A value sitting on the centroid (possible only for collinear spectra or
    interior eigenvalues) has no angle and is placed last.
    """

    def __init__(self, values, mults=None, tol: float = TOL_GEOM):
        vals = [complex(v) for v in values]
        if mults is None:
            mults = [1] * len(vals)
        mults = [int(m) for m in mults]
        if len(vals) != len(mults):
            raise ValueError("values and multiplicities differ in length")
        if not vals:
            raise TooFewEigenvalues("empty spectrum")
        if any(m < 1 for m in mults):
            raise ValueError("multiplicities must be positive")
        if not all(np.isfinite(v) for v in vals):
            raise ValueError("eigenvalues must be finite")

        distinct, counts = [], []
        for v, m in zip(vals, mults):
            for k, u in enumerate(distinct):
                if abs(u - v) <= tol:
                    counts[k] += m
                    break
            else:
                distinct.append(v)
                counts.append(m)

        n = sum(counts)
        center = sum(m * v for v, m in zip(distinct, counts)) / n
        at_center = [k for k, v in enumerate(distinct) if abs(v - center) <= tol]
        rest = [k for k in range(len(distinct)) if k not in at_center]
        order = []
        if rest:
            order = [rest[k] for k in ccw_order([distinct[k] for k in rest], center, tol)]
        order += at_center

        self.values = tuple(distinct[k] for k in order)
        self.mults = tuple(counts[k] for k in order)
        self.tol = tol

    @classmethod
    def from_eigenvalues(cls, eigenvalues, tol: float = TOL_GEOM) -> "Spectrum":
        return cls(list(eigenvalues), None, tol)

    def __repr__(self) -> str:
        items = ", ".join(f"{v:.6g}" + (f"(x{m})" if m > 1 else "")
                          for v, m in zip(self.values, self.mults))
        return f"Spectrum([{items}])"

    def __eq__(self, other) -> bool:
        return (isinstance(other, Spectrum) and self.values == other.values
                and self.mults == other.mults)

    def __hash__(self) -> int:
        return hash((self.values, self.mults))

    @property
    def n(self) -> int:
        return sum(self.mults)

    @property
    def is_simple(self) -> bool:
        return all(m == 1 for m in self.mults)

    @cached_property
    def eigenvalues(self) -> np.ndarray:
        """Expanded eigenvalue array of length ``n`` in canonical order."""
        return np.repeat(np.asarray(self.values, dtype=complex), self.mults)

    @cached_property
    def distinct_index(self) -> tuple:
        """Expanded position -> index into ``values``."""
        return tuple(int(k) for k in np.repeat(np.arange(len(self.values)), self.mults))

    @cached_property
    def first_index(self) -> tuple:
        """Index into ``values`` -> first expanded position."""
        return tuple(int(k) for k in np.concatenate(([0], np.cumsum(self.mults)[:-1])))

    @property
    def centroid(self) -> complex:
        return complex(np.mean(self.eigenvalues))

    @property
    def diameter(self) -> float:
        v = np.asarray(self.values)
        return float(np.max(np.abs(v[:, None] - v[None, :])))

    def diag(self) -> np.ndarray:
        return np.diag(self.eigenvalues)

    def without(self, indices) -> list:
        """The multiset difference sigma minus one copy per expanded index."""
        drop = set(indices)
        return [complex(z) for k, z in enumerate(self.eigenvalues) if k not in drop]

    def affine(self, scale: complex, shift: complex) -> "Spectrum":
        """Spectrum of ``scale*A + shift``."""
        return Spectrum([scale * v + shift for v in self.values], self.mults, self.tol)


def numerical_range(S: Spectrum) -> ConvexRegion:
    return convex_hull(S.values, S.tol)


def removal_hull(S: Spectrum, indices) -> ConvexRegion:
    rest = S.without(indices)
    if not rest:
        return ConvexRegion.empty()
    return convex_hull(rest, S.tol)


def rank2_range(S: Spectrum) -> ConvexRegion:
    """Intersection over distinct eigenvalues of conv(sigma minus that eigenvalue)."""
    if S.n < 3:
        raise TooFewEigenvalues("the rank-2 numerical range needs n >= 3")
    region = None
    for k in S.first_index:
        H = removal_hull(S, [k])
        region = H if region is None else intersect(region, H, S.tol)
        if region.is_empty:
            break
    return region


def is_corner(idx: int, S: Spectrum) -> bool:
    W = numerical_range(S)
    z = S.eigenvalues[idx]
    return any(abs(z - v) <= S.tol for v in W.vertices)


def reduce_multiplicity(S: Spectrum):
    """Split into (distinct eigenvalues, remaining repeated copies or None)."""
    lam = Spectrum(S.values, None, S.tol)
    extra = [(v, m - 1) for v, m in zip(S.values, S.mults) if m > 1]
    rep = Spectrum([v for v, _ in extra], [m for _, m in extra], S.tol) if extra else None
    return lam, rep


def interior_eigenvalues(S: Spectrum) -> list:
    """Expanded first positions of distinct eigenvalues strictly inside W(S)."""
    W = numerical_range(S)
    if W.kind is not RegionKind.POLYGON:
        return []
    return [S.first_index[k] for k, v in enumerate(S.values)
            if point_location(v, W, S.tol) is Location.INSIDE]


class CaseKind(enum.Enum):
    IN_RANK2 = "Case1_InRank2"
    BOUNDARY = "Case2_Boundary"
    EIGENVALUE = "Eigenvalue"
    UNIQUE_VERTEX = "Case3_UniqueVertex"
    ADJACENT_PAIR = "Case4_AdjacentPair"
    TRIANGLE = "Triangle_Interior"
    OUTSIDE_W = "OutsideW"


@dataclass(frozen=True)
class CaseLabel:
    """Which branch of the region formula applies.

    ``indices`` are expanded positions: the edge endpoints for BOUNDARY, the
    eigenvalue for EIGENVALUE, the bad vertex for UNIQUE_VERTEX and the bad
    pair (a, a+1 in CCW order) for ADJACENT_PAIR, all three for TRIANGLE.
    """

    kind: CaseKind
    indices: tuple = ()

    def __str__(self) -> str:
        return self.kind.value


def classify(S: Spectrum, mu1: complex) -> CaseLabel:
    tol = S.tol
    W = numerical_range(S)
    if W.kind is not RegionKind.POLYGON:
        raise CollinearSpectrum("all eigenvalues lie on one line")
    inner = interior_eigenvalues(S)
    if inner:
        raise InteriorEigenvalue(f"eigenvalues at positions {inner} are interior to W(A)")
    loc = point_location(mu1, W, tol)
    if loc is Location.OUTSIDE:
        return CaseLabel(CaseKind.OUTSIDE_W)

    L2 = rank2_range(S)
    if not L2.is_empty and point_location(mu1, L2, tol) is not Location.OUTSIDE:
        return CaseLabel(CaseKind.IN_RANK2)

    d = len(S.values)
    if loc is Location.BOUNDARY:
        for k, v in enumerate(S.values):
            if abs(mu1 - v) <= tol:
                return CaseLabel(CaseKind.EIGENVALUE, (S.first_index[k],))
        for k in range(d):
            a, b = S.values[k], S.values[(k + 1) % d]
            if point_segment_distance(mu1, a, b) <= tol:
                return CaseLabel(CaseKind.BOUNDARY,
                                 (S.first_index[k], S.first_index[(k + 1) % d]))
        raise InternalInconsistency("boundary point not on any edge between neighbours")

    bad = [k for k in range(d)
           if point_location(mu1, removal_hull(S, [S.first_index[k]]), tol)
           is Location.OUTSIDE]
    if S.n == 3 and len(bad) == 3:
        # three simple eigenvalues: every vertex is bad, the union reduces to {w123}
        return CaseLabel(CaseKind.TRIANGLE, tuple(S.first_index))
    if len(bad) == 1:
        return CaseLabel(CaseKind.UNIQUE_VERTEX, (S.first_index[bad[0]],))
    if len(bad) == 2:
        a, b = bad
        if (a + 1) % d == b:
            return CaseLabel(CaseKind.ADJACENT_PAIR, (S.first_index[a], S.first_index[b]))
        if (b + 1) % d == a:
            return CaseLabel(CaseKind.ADJACENT_PAIR, (S.first_index[b], S.first_index[a]))
    raise InternalInconsistency(f"no case matches mu1={mu1} (bad vertices {bad})")
