"""Isogonal conjugates of a point with respect to a triangle.

Two independent constructions: the closed form through the weighted vector
``f`` (the unique direction orthogonal to sqrt(r) and Lambda sqrt(r)), and the
classical one that reflects each cevian about the vertex angle bisector.
"""

from __future__ import annotations

import numpy as np

from ..errors import DegenerateTriangle, InconsistentCevians, OutsideTriangle, VertexInput
from ..geometry import TOL_GEOM, cross, is_degenerate_triangle, signed_barycentric


def _prepare(tri, mu: complex, tol: float):
    z = np.asarray(tri, dtype=complex).ravel()
    if z.size != 3:
        raise ValueError("a triangle needs exactly three vertices")
    if is_degenerate_triangle(z, tol):
        raise DegenerateTriangle("triangle vertices are collinear")
    diam = float(np.max(np.abs(z[:, None] - z[None, :])))
    if np.min(np.abs(z - mu)) <= tol * diam:
        raise VertexInput("the isogonal conjugate of a vertex is undefined")
    r = np.array(signed_barycentric(mu, *z))
    if r.min() < -tol:
        raise OutsideTriangle(f"mu lies outside the triangle (weights {r})")
    return z, np.maximum(r, 0.0), diam


def conjugate_vector(tri, r) -> np.ndarray:
    """The vector f with entries conj(opposite side)/sqrt(r_j)."""
    z1, z2, z3 = np.asarray(tri, dtype=complex)
    sides = np.array([z3 - z2, z1 - z3, z2 - z1])
    return np.conj(sides) / np.sqrt(np.asarray(r, dtype=float))


def isogonal_formula(tri, mu: complex, tol: float = TOL_GEOM) -> complex:
    """w = f*Lf / f*f; a point on an open edge maps to the opposite vertex."""
    z, r, _ = _prepare(tri, complex(mu), tol)
    zero = np.flatnonzero(r <= tol)
    if zero.size:
        return complex(z[zero[0]])
    f = conjugate_vector(z, r)
    w = np.abs(f) ** 2
    return complex(w @ z / w.sum())


def _reflected_direction(z: np.ndarray, j: int, mu: complex) -> complex:
    p, q = z[(j + 1) % 3] - z[j], z[(j + 2) % 3] - z[j]
    beta = p / abs(p) + q / abs(q)
    beta /= abs(beta)
    d = mu - z[j]
    return beta * beta * np.conj(d)


def isogonal_geometric(tri, mu: complex, tol: float = TOL_GEOM) -> complex:
    """Intersection of the cevians through mu reflected about the angle bisectors."""
    z, _, diam = _prepare(tri, complex(mu), tol)
    dirs = [_reflected_direction(z, j, mu) for j in range(3)]
    units = [d / abs(d) for d in dirs]
    pairs = [(0, 1), (1, 2), (2, 0)]
    a, b = max(pairs, key=lambda p: abs(cross(units[p[0]], units[p[1]])))
    c = 3 - a - b
    den = cross(dirs[a], dirs[b])
    s = cross(z[b] - z[a], dirs[b]) / den
    w = complex(z[a] + s * dirs[a])
    miss = abs(cross(units[c], w - z[c]))
    if miss > 1e-8 * diam:
        raise InconsistentCevians(f"third reflected cevian misses by {miss:.3e}")
    return w
