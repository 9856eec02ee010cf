"""Pure numpy implementations of the hot kernels.

Used when the compiled ``_kernels`` extension is unavailable, and as the
reference the compiled version is tested against.
"""

import numpy as np


def partner_values(lam, T, G):
    """Second Ritz values v*Lv/v*v for a batch of weights and directions.

    Row k uses the Ritz vector u = sqrt(T[k]) and projects the complex
    direction G[k] onto the orthogonal complement of span{u, Lu}. Rows whose
    complement is trivial give NaN.
    """
    lam = np.asarray(lam, dtype=complex)
    T = np.asarray(T, dtype=float)
    G = np.asarray(G, dtype=complex)
    scale = float(np.max(np.abs(lam))) + 1e-300

    U = np.sqrt(T)
    mu = (T * lam).sum(axis=1)
    Q = U * lam - mu[:, None] * U
    Q -= (U * Q).sum(axis=1)[:, None] * U
    qn = np.linalg.norm(Q, axis=1)
    has_q = qn > 1e-13 * scale
    Q = np.where(has_q[:, None], Q / np.where(has_q, qn, 1.0)[:, None], 0.0)

    V = G.copy()
    for _ in range(2):
        V -= (U * V).sum(axis=1)[:, None] * U
        V -= (np.conj(Q) * V).sum(axis=1)[:, None] * Q
    w = np.abs(V) ** 2
    den = w.sum(axis=1)
    ref = (np.abs(G) ** 2).sum(axis=1)
    out = np.full(T.shape[0], np.nan + 1j * np.nan)
    ok = den > 1e-20 * ref
    out[ok] = (w[ok] @ lam) / den[ok]
    return out


def region_distances(points, verts):
    """Distance from each point to the convex hull of CCW ``verts`` (0 inside)."""
    p = np.asarray(points, dtype=complex).ravel()
    v = np.asarray(verts, dtype=complex).ravel()
    if v.size == 1:
        return np.abs(p - v[0])
    if v.size == 2:
        edges = [(v[0], v[1])]
    else:
        edges = [(v[k], v[(k + 1) % v.size]) for k in range(v.size)]
    inside = np.ones(p.size, dtype=bool)
    best = np.full(p.size, np.inf)
    for a, b in edges:
        d = b - a
        rel = p - a
        inside &= (d.real * rel.imag - d.imag * rel.real) >= 0.0
        L2 = d.real ** 2 + d.imag ** 2
        s = np.clip((rel * np.conj(d)).real / L2, 0.0, 1.0)
        best = np.minimum(best, np.abs(rel - s * d))
    if v.size >= 3:
        best[inside] = 0.0
    return best
