"""Compressions V*LV, the perpendicular space of a Ritz vector, and partner regions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import InputError, NotIsometry
from ..geometry import ConvexRegion, convex_hull, hausdorff_distance
from ..spectrum import Spectrum
from ..weights import WeightVector

ORTHO_TOL = 1e-12
DEFAULT_ANGLES = 720


@dataclass(frozen=True, eq=False)
class PerpBasis:
    """Orthonormal basis F of {sqrt(t), L sqrt(t)}^perp; m is the span dimension."""

    F: np.ndarray
    m: int

    def errors(self, S: Spectrum, t: WeightVector) -> tuple:
        """(orthonormality error, orthogonality error) measured from scratch."""
        F = self.F
        k = F.shape[1]
        u = np.sqrt(t.t)
        ortho = float(np.max(np.abs(F.conj().T @ F - np.eye(k)), initial=0.0))
        perp = float(np.max(np.abs(F.conj().T @ np.column_stack([u, S.eigenvalues * u])),
                            initial=0.0))
        return ortho, perp


def _weights(t) -> np.ndarray:
    return np.asarray(t.t if isinstance(t, WeightVector) else t, dtype=float)


def perp_basis(t, S: Spectrum) -> PerpBasis:
    """Zero-weight indices contribute e_j; the support block comes from an SVD."""
    tv = _weights(t)
    lam = S.eigenvalues
    n = lam.size
    u = np.sqrt(tv)
    mu = complex(tv @ lam)
    spread = float(np.sqrt(tv @ np.abs(lam - mu) ** 2))
    m = 1 if spread <= 1e-12 * max(S.diameter, 1.0) else 2

    supp = np.flatnonzero(tv > 0)
    off = np.flatnonzero(tv == 0)
    A = u[supp, None] if m == 1 else np.column_stack([u[supp], (lam * u)[supp]])
    # the last |supp| - m left singular vectors span the complement on the support
    Uf, _, _ = np.linalg.svd(A, full_matrices=True)
    block = Uf[:, m:]
    F = np.zeros((n, n - m), dtype=complex)
    F[supp, : block.shape[1]] = block
    for c, j in enumerate(off):
        F[j, block.shape[1] + c] = 1.0
    return PerpBasis(F, m)


def compress(S: Spectrum, V) -> np.ndarray:
    """V*LV for an isometry V (n x k)."""
    V = np.asarray(V, dtype=complex)
    if V.ndim == 1:
        V = V[:, None]
    if V.shape[0] != S.n:
        raise InputError(f"V has {V.shape[0]} rows, spectrum has {S.n} eigenvalues")
    err = np.max(np.abs(V.conj().T @ V - np.eye(V.shape[1])), initial=0.0)
    if err > 1e-10:
        raise NotIsometry(f"V*V differs from the identity by {err:.3e}")
    return (V.conj().T * S.eigenvalues) @ V


@dataclass(frozen=True)
class SweepResult:
    inner: ConvexRegion
    outer: ConvexRegion
    gap: float


def numerical_range_sweep(M, angles: int = DEFAULT_ANGLES) -> SweepResult:
    """Inner and outer polygons for W(M) from supporting lines at uniform angles.

    For each angle the top eigenpair of the Hermitian part of e^{-i theta} M
    gives a boundary point x*Mx and the supporting half-plane
    Re(e^{-i theta} z) <= lambda_max.
    """
    M = np.atleast_2d(np.asarray(M, dtype=complex))
    d = M.shape[0]
    if d == 0:
        return SweepResult(ConvexRegion.empty(), ConvexRegion.empty(), 0.0)
    if d == 1:
        P = convex_hull([M[0, 0]])
        return SweepResult(P, P, 0.0)
    if angles < 16:
        raise InputError("angles must be at least 16")
    theta = 2 * np.pi * np.arange(angles) / angles
    rot = np.exp(-1j * theta)[:, None, None]
    H = 0.5 * (rot * M + np.conj(rot) * M.conj().T)
    vals, vecs = np.linalg.eigh(H)
    x = vecs[:, :, -1]
    top = vals[:, -1]
    pts = np.einsum("ki,ij,kj->k", x.conj(), M, x)
    inner = convex_hull(pts)

    c, s = np.cos(theta), np.sin(theta)
    c2, s2, top2 = np.roll(c, -1), np.roll(s, -1), np.roll(top, -1)
    det = c * s2 - s * c2
    xo = (top * s2 - top2 * s) / det
    yo = (c * top2 - c2 * top) / det
    outer = convex_hull(xo + 1j * yo)
    return SweepResult(inner, outer, hausdorff_distance(inner, outer))


def partner_sweep(S: Spectrum, mu1: complex, t, angles: int = DEFAULT_ANGLES) -> SweepResult:
    F = perp_basis(t, S).F
    if F.shape[1] == 0:
        return SweepResult(ConvexRegion.empty(), ConvexRegion.empty(), 0.0)
    M = (F.conj().T * S.eigenvalues) @ F
    return numerical_range_sweep(M, angles)


def partner_region(S: Spectrum, mu1: complex, t, angles: int = DEFAULT_ANGLES) -> ConvexRegion:
    """B(mu1, t) = W(F*LF), returned as the inner sweep polygon."""
    return partner_sweep(S, mu1, t, angles).inner
