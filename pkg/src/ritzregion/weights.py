"""The polytope of convex weights t with sum t_j lambda_j = mu1.

Extreme points have at most three positive entries, so they are found by
enumerating every support of size one, two and three. Sampling draws convex
combinations of those extremes.

Randomness is organised in blocks of ``BLOCK`` consecutive sample indices:
the draws for index ``i`` come from the generator seeded with
``(seed, i // BLOCK)`` at row ``i % BLOCK``. Any sample is therefore a fixed
function of ``(seed, index)`` and index ranges can be processed in parallel.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .errors import NoFullSupport, OutsideW
from .geometry import (
    Location,
    is_degenerate_triangle,
    point_location,
    point_segment_distance,
    signed_barycentric,
)
from .spectrum import Spectrum, numerical_range

BLOCK = 1024
DEDUP_TOL = 1e-10
POSITIVE_FLOOR = 1e-6


@dataclass(frozen=True, eq=False)
class WeightVector:
    t: np.ndarray

    @property
    def support(self) -> tuple:
        return tuple(int(j) for j in np.flatnonzero(self.t > 0))

    def moment(self, S: Spectrum) -> complex:
        return complex(self.t @ S.eigenvalues)

    def check(self, S: Spectrum, mu1: complex) -> bool:
        t = self.t
        scale = max(S.diameter, 1.0)
        return (bool(np.all(t >= 0)) and abs(t.sum() - 1.0) <= 1e-12
                and abs(self.moment(S) - mu1) <= 1e-10 * scale)


def _candidates(lam: np.ndarray, mu1: complex, tol: float) -> list:
    n = lam.size
    out = []
    for j in range(n):
        if abs(mu1 - lam[j]) <= tol:
            t = np.zeros(n)
            t[j] = 1.0
            out.append(t)
    for a, b in combinations(range(n), 2):
        za, zb = lam[a], lam[b]
        d = zb - za
        if abs(d) <= tol or point_segment_distance(mu1, za, zb) > tol:
            continue
        s = ((mu1 - za) * np.conj(d)).real / abs(d) ** 2
        s = min(1.0, max(0.0, s))
        t = np.zeros(n)
        t[a], t[b] = 1.0 - s, s
        out.append(t)
    for a, b, c in combinations(range(n), 3):
        tri = (lam[a], lam[b], lam[c])
        if is_degenerate_triangle(tri):
            continue
        r = signed_barycentric(mu1, *tri)
        if min(r) < -tol:
            continue
        r = np.maximum(r, 0.0)
        t = np.zeros(n)
        t[[a, b, c]] = r / r.sum()
        out.append(t)
    return out


def _dedupe(cands: list) -> list:
    kept = []
    for t in cands:
        if all(np.max(np.abs(t - u)) > DEDUP_TOL for u in kept):
            kept.append(t)
    return kept


@lru_cache(maxsize=256)
def _extremes_cached(values: tuple, mults: tuple, mu1: complex, tol: float) -> tuple:
    S = Spectrum(values, mults, tol)
    if point_location(mu1, numerical_range(S), tol) is Location.OUTSIDE:
        raise OutsideW(f"mu1={mu1} is outside the numerical range")
    lam = S.eigenvalues
    # strict pass first so the moment stays exact; loosen only if mu1 sits
    # within tolerance outside every candidate support
    cands = _candidates(lam, mu1, 1e-12 * max(S.diameter, 1.0))
    if not cands:
        cands = _candidates(lam, mu1, tol)
    kept = _dedupe(cands)
    for t in kept:
        t.setflags(write=False)
    return tuple(kept)


def extreme_weights(S: Spectrum, mu1: complex) -> list:
    """Candidate extreme points of the weight polytope (a superset of Ext)."""
    return [WeightVector(t) for t in _extremes_cached(S.values, S.mults, complex(mu1), S.tol)]


def extreme_matrix(S: Spectrum, mu1: complex) -> np.ndarray:
    """Extremes stacked as rows, shape (m, n)."""
    return np.array(_extremes_cached(S.values, S.mults, complex(mu1), S.tol))


def block_rng(seed: int, block: int) -> np.random.Generator:
    return np.random.default_rng([int(seed), int(block)])


def draw_block(seed: int, block: int, m: int, n: int) -> dict:
    """All random numbers used by samples ``block*BLOCK ... block*BLOCK+BLOCK-1``.

    Draw order is fixed: subset sizes, subset keys, Dirichlet exponentials,
    complex Gaussian directions, full-support Dirichlet exponentials.
    """
    g = block_rng(seed, block)
    sizes = g.integers(1, m + 1, size=BLOCK)
    keys = g.random((BLOCK, m))
    expo = g.standard_exponential((BLOCK, m))
    gauss = g.standard_normal((BLOCK, n, 2))
    full = g.standard_exponential((BLOCK, m))
    return {"sizes": sizes, "keys": keys, "expo": expo,
            "gauss": gauss[..., 0] + 1j * gauss[..., 1], "full": full}


def _subset_coefficients(sizes, keys, expo) -> np.ndarray:
    ranks = np.argsort(np.argsort(keys, axis=1), axis=1)
    mask = ranks < sizes[:, None]
    c = np.where(mask, expo, 0.0)
    return c / c.sum(axis=1, keepdims=True)


def iter_blocks(indices: np.ndarray):
    """Yield (block, rows, positions) grouping sample indices by block."""
    blocks = indices // BLOCK
    for b in np.unique(blocks):
        pos = np.flatnonzero(blocks == b)
        yield int(b), indices[pos] % BLOCK, pos


def sample_weights(S: Spectrum, mu1: complex, seed: int, indices, full_support=False):
    """Batch version of :func:`sample_weight`; returns shape (len(indices), n)."""
    E = extreme_matrix(S, mu1)
    m, n = E.shape
    idx = np.asarray(indices, dtype=np.int64).ravel()
    T = np.empty((idx.size, n))
    for b, rows, pos in iter_blocks(idx):
        d = draw_block(seed, b, m, n)
        if full_support:
            c = d["full"][rows]
            c = c / c.sum(axis=1, keepdims=True)
        else:
            c = _subset_coefficients(d["sizes"][rows], d["keys"][rows], d["expo"][rows])
        T[pos] = c @ E
    # the affine constraints are preserved exactly up to roundoff; renormalize the sum
    T = np.maximum(T, 0.0)
    T /= T.sum(axis=1, keepdims=True)
    return T


def sample_weight(S: Spectrum, mu1: complex, seed: int, index: int) -> WeightVector:
    """A random convex combination of a random subset of extreme weights."""
    return WeightVector(sample_weights(S, mu1, seed, [index])[0])


def interior_weight(S: Spectrum, mu1: complex) -> WeightVector:
    """A weight vector with every entry at least ``POSITIVE_FLOOR``."""
    E = extreme_matrix(S, mu1)
    t = E.mean(axis=0)
    lam = S.eigenvalues
    A = np.vstack([np.ones_like(lam.real), lam.real, lam.imag])
    b = np.array([1.0, mu1.real, mu1.imag])
    t = t - A.T @ np.linalg.solve(A @ A.T, A @ t - b)
    if np.min(t) < POSITIVE_FLOOR:
        raise NoFullSupport(f"no fully supported weight for mu1={mu1}")
    return WeightVector(t)
