"""Planar convex geometry on complex numbers.

Points are plain Python/numpy complex numbers. Convex sets are represented by
:class:`ConvexRegion`, a counterclockwise vertex list tagged with its kind.
All predicates use the absolute tolerance ``TOL_GEOM``; inputs are assumed to
be scaled to unit size.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ._backend import region_distances
from .errors import (
    DegenerateLine,
    DegenerateTriangle,
    EmptyInput,
    EmptyRegion,
    NotOnSegment,
    OutsideTriangle,
    OverlappingSegments,
    PointAtCenter,
)

TOL_GEOM = 1e-9


class RegionKind(enum.Enum):
    EMPTY = "Empty"
    POINT = "Point"
    SEGMENT = "Segment"
    POLYGON = "Polygon"


class Side(enum.Enum):
    LEFT = "Left"
    RIGHT = "Right"
    ON = "On"


class Location(enum.Enum):
    INSIDE = "Inside"
    BOUNDARY = "Boundary"
    OUTSIDE = "Outside"


def cross(u: complex, v: complex) -> float:
    """z-component of the planar cross product; positive when v is left of u."""
    return u.real * v.imag - u.imag * v.real


@dataclass(frozen=True)
class ConvexRegion:
    """A convex point, segment or polygon with CCW vertices."""

    vertices: tuple
    kind: RegionKind

    @classmethod
    def empty(cls) -> "ConvexRegion":
        return cls((), RegionKind.EMPTY)

    @property
    def is_empty(self) -> bool:
        return self.kind is RegionKind.EMPTY

    def __len__(self) -> int:
        return len(self.vertices)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.vertices, dtype=complex)

    @property
    def area(self) -> float:
        if self.kind is not RegionKind.POLYGON:
            return 0.0
        v = self.vertices
        return 0.5 * sum(cross(v[k], v[(k + 1) % len(v)]) for k in range(len(v)))

    @property
    def diameter(self) -> float:
        v = self.as_array()
        if v.size < 2:
            return 0.0
        return float(np.max(np.abs(v[:, None] - v[None, :])))

    def edges(self):
        v = self.vertices
        if self.kind is RegionKind.SEGMENT:
            return [(v[0], v[1])]
        if self.kind is RegionKind.POLYGON:
            return [(v[k], v[(k + 1) % len(v)]) for k in range(len(v))]
        return []


def _as_points(points) -> np.ndarray:
    pts = np.asarray(points, dtype=complex).ravel()
    if pts.size == 0:
        raise EmptyInput("no points given")
    if not np.all(np.isfinite(pts)):
        raise ValueError("points must be finite")
    return pts


def convex_hull(points: Iterable[complex], tol: float = TOL_GEOM) -> ConvexRegion:
    """Monotone-chain hull; near-collinear and near-duplicate points are dropped."""
    pts = _as_points(list(points) if not isinstance(points, np.ndarray) else points)
    pts = np.unique(pts)  # sorts lexicographically by (real, imag)
    if pts.size == 1 or np.max(np.abs(pts - pts[0])) <= tol:
        return ConvexRegion((complex(pts[0]),), RegionKind.POINT)

    seq = [complex(p) for p in pts]

    def half(chain_pts):
        chain = []
        for p in chain_pts:
            while len(chain) >= 2:
                o, a = chain[-2], chain[-1]
                base = abs(p - o)
                # keep a only if it is strictly right of o->p by more than tol
                if base > tol and cross(a - o, p - o) / base > tol:
                    break
                chain.pop()
            chain.append(p)
        return chain

    lower = half(seq)
    upper = half(reversed(seq))
    hull = lower[:-1] + upper[:-1]

    merged = []
    for p in hull:
        if not merged or abs(p - merged[-1]) > tol:
            merged.append(p)
    while len(merged) > 1 and abs(merged[0] - merged[-1]) <= tol:
        merged.pop()

    if len(merged) == 1:
        return ConvexRegion((merged[0],), RegionKind.POINT)
    if len(merged) == 2:
        return ConvexRegion(tuple(merged), RegionKind.SEGMENT)
    return ConvexRegion(tuple(merged), RegionKind.POLYGON)


def half_plane_side(p: complex, a: complex, b: complex, tol: float = TOL_GEOM) -> Side:
    """Side of ``p`` relative to the directed line a -> b."""
    d = b - a
    if abs(d) <= tol:
        raise DegenerateLine("a and b coincide")
    s = (d * (p - a).conjugate()).imag
    if abs(s) <= tol * abs(d):
        return Side.ON
    return Side.RIGHT if s > 0 else Side.LEFT


def point_segment_distance(p: complex, a: complex, b: complex) -> float:
    d = b - a
    L2 = d.real * d.real + d.imag * d.imag
    if L2 == 0.0:
        return abs(p - a)
    s = ((p - a) * d.conjugate()).real / L2
    s = min(1.0, max(0.0, s))
    return abs(p - (a + s * d))


def distance_to_region(p: complex, R: ConvexRegion) -> float:
    """Euclidean distance from ``p`` to the convex set ``R`` (0 inside)."""
    if R.is_empty:
        raise EmptyRegion("distance to an empty region")
    v = R.vertices
    if R.kind is RegionKind.POINT:
        return abs(p - v[0])
    if R.kind is RegionKind.SEGMENT:
        return point_segment_distance(p, v[0], v[1])
    if all(cross(b - a, p - a) >= 0.0 for a, b in R.edges()):
        return 0.0
    return min(point_segment_distance(p, a, b) for a, b in R.edges())


def point_location(p: complex, R: ConvexRegion, tol: float = TOL_GEOM) -> Location:
    if R.is_empty:
        raise EmptyRegion("location in an empty region")
    if R.kind is RegionKind.POLYGON:
        margins = [cross(b - a, p - a) / abs(b - a) for a, b in R.edges()]
        if min(margins) > tol:
            return Location.INSIDE
    return Location.BOUNDARY if distance_to_region(p, R) <= tol else Location.OUTSIDE


def signed_barycentric(p: complex, a: complex, b: complex, c: complex) -> tuple:
    """Raw signed-area barycentric coordinates (no tolerance handling)."""
    area = cross(b - a, c - a)
    return (
        cross(b - p, c - p) / area,
        cross(c - p, a - p) / area,
        cross(a - p, b - p) / area,
    )


def is_degenerate_triangle(tri: Sequence[complex], tol: float = TOL_GEOM) -> bool:
    a, b, c = tri
    diam = max(abs(a - b), abs(b - c), abs(c - a))
    return diam == 0.0 or abs(cross(b - a, c - a)) <= tol * diam * diam


def barycentric_weights(p: complex, tri: Sequence[complex], tol: float = TOL_GEOM) -> tuple:
    """Convex weights of ``p`` in the triangle ``tri`` from signed-area ratios.

    Raises DegenerateTriangle for (near-)collinear vertices and OutsideTriangle
    when some weight is below ``-tol``. Weights within tolerance of zero are
    clipped and the triple renormalized.
    """
    if is_degenerate_triangle(tri, tol):
        raise DegenerateTriangle("triangle vertices are collinear")
    r = signed_barycentric(p, *tri)
    if min(r) < -tol:
        raise OutsideTriangle(f"point lies outside the triangle (weights {r})")
    r = [max(0.0, x) for x in r]
    s = sum(r)
    return tuple(x / s for x in r)


def segment_weights(p: complex, a: complex, b: complex, tol: float = TOL_GEOM) -> tuple:
    if abs(b - a) <= tol:
        raise DegenerateLine("segment endpoints coincide")
    if point_segment_distance(p, a, b) > tol:
        raise NotOnSegment("point is not on the segment")
    d = b - a
    s = ((p - a) * d.conjugate()).real / (abs(d) ** 2)
    s = min(1.0, max(0.0, s))
    return (1.0 - s, s)


def segment_intersection(a: complex, b: complex, c: complex, d: complex,
                         tol: float = TOL_GEOM):
    """Intersection point of closed segments [a,b] and [c,d], or None."""
    if abs(b - a) <= tol or abs(d - c) <= tol:
        raise DegenerateLine("segment endpoints coincide")
    u, w = b - a, d - c
    den = cross(u, w)
    if abs(den) <= tol * abs(u) * abs(w):
        if abs(cross(u, c - a)) / abs(u) > tol:
            return None
        # collinear: compare parameter intervals along u
        L2 = abs(u) ** 2
        s0 = ((c - a) * u.conjugate()).real / L2
        s1 = ((d - a) * u.conjugate()).real / L2
        lo, hi = max(0.0, min(s0, s1)), min(1.0, max(s0, s1))
        eps = tol / abs(u)
        if hi < lo - eps:
            return None
        if hi - lo <= eps:
            return a + 0.5 * (lo + hi) * u
        raise OverlappingSegments("collinear segments share a sub-segment")
    s = cross(c - a, w) / den
    t = cross(c - a, u) / den
    eps_s, eps_t = tol / abs(u), tol / abs(w)
    if -eps_s <= s <= 1 + eps_s and -eps_t <= t <= 1 + eps_t:
        return a + min(1.0, max(0.0, s)) * u
    return None


def ccw_order(points: Sequence[complex], center: complex, tol: float = TOL_GEOM) -> list:
    """Indices sorted by angle about ``center`` in [0, 2pi), ties by modulus."""
    z = np.asarray(points, dtype=complex).ravel() - center
    if np.any(np.abs(z) <= tol):
        raise PointAtCenter("a point coincides with the center")
    ang = np.mod(np.angle(z), 2 * math.pi)
    ang[ang >= 2 * math.pi] = 0.0
    return [int(k) for k in np.lexsort((np.abs(z), ang))]


def hausdorff_distance(A: ConvexRegion, B: ConvexRegion) -> float:
    """Exact for convex sets: distance to a convex set is maximized at a vertex."""
    if A.is_empty or B.is_empty:
        raise EmptyRegion("Hausdorff distance with an empty region")
    dab = region_distances(A.as_array(), B.as_array()).max()
    dba = region_distances(B.as_array(), A.as_array()).max()
    return float(max(dab, dba))


def _halfplanes(R: ConvexRegion):
    """Directed lines whose closed left sides intersect to R (polygon/segment)."""
    v = R.vertices
    if R.kind is RegionKind.POLYGON:
        return R.edges()
    a, b = v
    return [(a, b), (b, a),
            (a, a - 1j * (b - a)), (b, b - 1j * (a - b))]


def _clip(poly: list, a: complex, b: complex, tol: float) -> list:
    d = b - a
    L = abs(d)
    out = []
    n = len(poly)
    for k in range(n):
        p, q = poly[k], poly[(k + 1) % n]
        sp, sq = cross(d, p - a) / L, cross(d, q - a) / L
        pin, qin = sp >= -tol, sq >= -tol
        if pin:
            out.append(p)
        if pin != qin:
            t = min(1.0, max(0.0, sp / (sp - sq)))
            out.append(p + t * (q - p))
    return out


def intersect(A: ConvexRegion, B: ConvexRegion, tol: float = TOL_GEOM) -> ConvexRegion:
    """Intersection of two convex regions by Sutherland-Hodgman clipping."""
    if A.is_empty or B.is_empty:
        return ConvexRegion.empty()
    if B.kind is RegionKind.POINT:
        A, B = B, A
    if A.kind is RegionKind.POINT:
        p = A.vertices[0]
        return A if distance_to_region(p, B) <= tol else ConvexRegion.empty()
    poly = list(A.vertices)
    for a, b in _halfplanes(B):
        poly = _clip(poly, a, b, tol)
        if not poly:
            return ConvexRegion.empty()
    return convex_hull(poly, tol)


def contains_region(outer: ConvexRegion, inner: ConvexRegion, tol: float = TOL_GEOM) -> bool:
    """True when every vertex of ``inner`` is within ``tol`` of ``outer``."""
    return all(distance_to_region(v, outer) <= tol for v in inner.vertices)


def hull_union(*regions: ConvexRegion) -> ConvexRegion:
    pts = [v for R in regions for v in R.vertices]
    if not pts:
        return ConvexRegion.empty()
    return convex_hull(pts)
