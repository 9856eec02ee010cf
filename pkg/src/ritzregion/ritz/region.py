"""The region R_A(mu1), its generating points, and explicit compression witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from ..errors import InternalInconsistency, OutsideW
from ..geometry import (
    ConvexRegion,
    Location,
    convex_hull,
    is_degenerate_triangle,
    point_location,
    point_segment_distance,
    signed_barycentric,
)
from ..spectrum import (
    CaseKind,
    CaseLabel,
    Spectrum,
    classify,
    numerical_range,
    rank2_range,
    removal_hull,
)
from ..weights import _candidates
from .compression import ORTHO_TOL, compress
from .isogonal import conjugate_vector, isogonal_formula

ISOGONAL = "IsogonalConjugate"
RESIDUAL = "EigenvalueResidual"


@dataclass(frozen=True, eq=False)
class CompressionWitness:
    """Isometry V = [sqrt(t) | v] with V*LV = [[mu1, offdiag], [0, mu2]]."""

    V: np.ndarray
    mu1: complex
    mu2: complex
    offdiag: complex

    @classmethod
    def build(cls, S: Spectrum, mu1: complex, t: np.ndarray, v: np.ndarray) -> "CompressionWitness":
        u = np.sqrt(t)
        v = np.asarray(v, dtype=complex)
        v = v - (u @ v) * u
        V = np.column_stack([u.astype(complex), v / np.linalg.norm(v)])
        B = (V.conj().T * S.eigenvalues) @ V
        return cls(V, complex(mu1), complex(B[1, 1]), complex(B[0, 1]))

    def residual(self, S: Spectrum) -> float:
        """Worst entrywise mismatch of V*LV against the claimed triangular form."""
        B = compress(S, self.V)
        target = np.array([[self.mu1, self.offdiag], [0.0, self.mu2]])
        return float(np.max(np.abs(B - target)))

    def orthonormality(self) -> float:
        return float(np.max(np.abs(self.V.conj().T @ self.V - np.eye(2))))

    def is_valid(self, S: Spectrum, tol: float = 1e-10) -> bool:
        return self.orthonormality() <= ORTHO_TOL and self.residual(S) <= tol


@dataclass(frozen=True)
class GeneratingPoint:
    point: complex
    kind: str
    K: tuple = ()
    index: int = -1


@dataclass(frozen=True, eq=False)
class RegionReport:
    region: ConvexRegion
    case: CaseLabel
    generating_points: list
    witnesses: list
    W: ConvexRegion
    L2: ConvexRegion
    notes: dict = field(default_factory=dict)

    def witness_residuals(self, S: Spectrum) -> list:
        return [max(w.residual(S), abs(w.mu2 - g.point))
                for g, w in zip(self.generating_points, self.witnesses)]


def weight_avoiding(S: Spectrum, mu1: complex, excluded) -> np.ndarray:
    """An extreme weight for mu1 that vanishes on the expanded indices ``excluded``."""
    lam = S.eigenvalues
    keep = np.array([j for j in range(lam.size) if j not in set(excluded)])
    scale = max(S.diameter, 1.0)
    for tol in (1e-12 * scale, S.tol):
        cands = _candidates(lam[keep], mu1, tol)
        if cands:
            best = min(cands, key=lambda r: abs(r @ lam[keep] - mu1))
            t = np.zeros(lam.size)
            t[keep] = best
            return t
    raise InternalInconsistency(f"mu1={mu1} is not in the hull of the remaining eigenvalues")


def _residual_points(S: Spectrum, mu1: complex, region: ConvexRegion, forbid=()):
    """Vertices of ``region`` as eigenvalue residuals with e_j witnesses."""
    lam = S.eigenvalues
    gps, wits = [], []
    for z in region.vertices:
        cand = [j for j in range(lam.size) if abs(lam[j] - z) <= S.tol and j not in forbid]
        j = cand[0]
        t = weight_avoiding(S, mu1, [j])
        e = np.zeros(lam.size, dtype=complex)
        e[j] = 1.0
        gps.append(GeneratingPoint(complex(lam[j]), RESIDUAL, index=j))
        wits.append(CompressionWitness.build(S, mu1, t, e))
    return gps, wits


def _in_region(z: complex, R: ConvexRegion, tol: float) -> bool:
    return not R.is_empty and point_location(z, R, tol) is not Location.OUTSIDE


def union_generating_points(S: Spectrum, mu1: complex, check_collinear: bool = True):
    """Every E_K(mu1) over triples K (expanded positions) with mu1 in conv(K).

    Isogonal conjugates come one per K, residual eigenvalues one per index.
    """
    lam = S.eigenvalues
    n = lam.size
    tol = S.tol
    gps, wits = [], []
    residual_t = {}
    for K in combinations(range(n), 3):
        tri = lam[list(K)]
        if is_degenerate_triangle(tri, tol):
            distinct = all(abs(a - b) > tol for a, b in combinations(tri, 2))
            if check_collinear and distinct:
                span = max(combinations(tri, 2), key=lambda p: abs(p[0] - p[1]))
                if point_segment_distance(mu1, *span) <= tol:
                    raise InternalInconsistency(f"mu1 lies on the collinear triple {K}")
            continue
        r = np.array(signed_barycentric(mu1, *tri))
        if r.min() < -tol:
            continue
        r = np.maximum(r, 0.0)
        r /= r.sum()
        w = isogonal_formula(tri, mu1, tol)
        zero = np.flatnonzero(r <= tol)
        if zero.size:
            # snap to the edge, otherwise sqrt(r) leaks into the subdiagonal
            r[zero] = 0.0
            r /= r.sum()
        t = np.zeros(n)
        t[list(K)] = r
        if zero.size:
            # on an open edge of conv(K): the conjugate is the opposite vertex
            v = np.zeros(n, dtype=complex)
            v[K[zero[0]]] = 1.0
        else:
            v = np.zeros(n, dtype=complex)
            v[list(K)] = conjugate_vector(tri, r)
        gps.append(GeneratingPoint(w, ISOGONAL, K=tuple(K)))
        wits.append(CompressionWitness.build(S, mu1, t, v))
        for j in range(n):
            if j not in K and j not in residual_t:
                residual_t[j] = t
    for j in sorted(residual_t):
        e = np.zeros(n, dtype=complex)
        e[j] = 1.0
        gps.append(GeneratingPoint(complex(lam[j]), RESIDUAL, index=j))
        wits.append(CompressionWitness.build(S, mu1, residual_t[j], e))
    return gps, wits


def region_R(S: Spectrum, mu1: complex) -> RegionReport:
    """R_A(mu1) by case dispatch, with one witness per generating point."""
    mu1 = complex(mu1)
    case = classify(S, mu1)
    if case.kind is CaseKind.OUTSIDE_W:
        raise OutsideW(f"mu1={mu1} is outside the numerical range")
    W = numerical_range(S)
    L2 = rank2_range(S)
    kind = case.kind

    if kind is CaseKind.IN_RANK2:
        region = W
        gps, wits = _residual_points(S, mu1, region)
    elif kind is CaseKind.EIGENVALUE:
        (p,) = case.indices
        region = removal_hull(S, [p])
        gps, wits = _residual_points(S, mu1, region, forbid=(p,))
    elif kind is CaseKind.BOUNDARY:
        i, k = case.indices
        lam = S.eigenvalues
        out_i = not _in_region(lam[i], L2, S.tol)
        out_k = not _in_region(lam[k], L2, S.tol)
        if out_i and out_k:
            drop = [i, k]
        elif out_i or out_k:
            drop = [i] if out_i else [k]
        else:
            raise InternalInconsistency("both edge endpoints lie in the rank-2 range")
        region = removal_hull(S, drop)
        gps, wits = _residual_points(S, mu1, region, forbid=drop)
    else:
        gps, wits = union_generating_points(S, mu1)
        region = convex_hull([g.point for g in gps])
    return RegionReport(region, case, gps, wits, W, L2)
