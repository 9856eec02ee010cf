"""Independent checks of the region R_A(mu1).

Random Ritz pairs are generated directly from compressions, without using the
region formula, and compared against it. The compound-matrix condition gives a
second, formula-free necessary test for a pair (mu1, mu2).
"""

from __future__ import annotations

import enum
import hashlib
from dataclasses import asdict, dataclass, field
from itertools import combinations

import numpy as np

from ._backend import partner_values, region_distances
from .errors import (
    BadCount,
    HypothesisViolation,
    InteriorEigenvalue,
    NormalizationFailed,
    OutsideW,
    RankOutOfRange,
    RitzError,
)
from .geometry import ConvexRegion, RegionKind, convex_hull, hausdorff_distance
from .ritz import (
    normalize_A,
    normalize_B,
    partner_region,
    region_R,
    union_generating_points,
    x_vector,
    z_matrix,
)
from .ritz.region import CompressionWitness
from .spectrum import CaseKind, Spectrum, classify
from .weights import BLOCK, draw_block, extreme_matrix, iter_blocks, sample_weights

NEC2_TOL = 1e-9
Z_TOL = 1e-9


def compound_matrix(X, r: int) -> np.ndarray:
    """r-th compound: determinants of r x r submatrices, rows/columns in lexicographic order."""
    X = np.asarray(X)
    m, n = X.shape
    if not 0 < r <= min(m, n):
        raise RankOutOfRange(f"r={r} outside 1..{min(m, n)}")
    rows = list(combinations(range(m), r))
    cols = list(combinations(range(n), r))
    sub = np.array([[X[np.ix_(a, b)] for b in cols] for a in rows])
    return np.linalg.det(sub)


def default_z_grid(S: Spectrum) -> np.ndarray:
    """5x5 grid over the bounding box of W(A) plus the eigenvalues themselves."""
    v = np.asarray(S.values)
    xs = np.linspace(v.real.min(), v.real.max(), 5)
    ys = np.linspace(v.imag.min(), v.imag.max(), 5)
    grid = (xs[:, None] + 1j * ys[None, :]).ravel()
    return np.concatenate([grid, v])


def _pair_products(lam: np.ndarray, z: complex) -> np.ndarray:
    i, j = np.triu_indices(lam.size, 1)
    return (lam[i] - z) * (lam[j] - z)


def _signed_distances(q: np.ndarray, H: ConvexRegion) -> np.ndarray:
    d = region_distances(q, H.as_array())
    if H.kind is RegionKind.POLYGON:
        V = H.as_array()
        e = np.roll(V, -1) - V
        rel = q[:, None] - V[None, :]
        margin = (e.real * rel.imag - e.imag * rel.real) / np.abs(e)
        inside = d == 0.0
        d = np.where(inside, -margin.min(axis=1), d)
    return d


def nec2_margins(S: Spectrum, mu1: complex, mu2, z_grid=None) -> np.ndarray:
    """Worst signed distance over z of (mu1-z)(mu2-z) to conv{(li-z)(lj-z)}, per mu2.

    Distances are relative to the size of the product hull; positive means outside.
    """
    lam = S.eigenvalues
    mu2 = np.atleast_1d(np.asarray(mu2, dtype=complex))
    zs = default_z_grid(S) if z_grid is None else np.atleast_1d(np.asarray(z_grid, dtype=complex))
    worst = np.full(mu2.size, -np.inf)
    for z in zs:
        P = _pair_products(lam, z)
        scale = max(1.0, float(np.max(np.abs(P))))
        H = convex_hull(P, NEC2_TOL * scale)
        q = (mu1 - z) * (mu2 - z)
        worst = np.maximum(worst, _signed_distances(q, H) / scale)
    return worst


def nec2_check(S: Spectrum, mu1: complex, mu2: complex, z_grid=None) -> tuple:
    """(passes, worst signed margin) for the compound-matrix necessary condition."""
    m = float(nec2_margins(S, mu1, [mu2], z_grid)[0])
    return m <= NEC2_TOL, m


def t_hash(t) -> str:
    return hashlib.blake2b(np.ascontiguousarray(t, dtype=float).tobytes(), digest_size=8).hexdigest()


@dataclass(frozen=True, eq=False)
class PartnerSample:
    points: np.ndarray
    weights: np.ndarray
    extreme_points: np.ndarray
    hull: ConvexRegion


def partner_directions(S: Spectrum, mu1: complex, seed: int, indices) -> np.ndarray:
    """The complex Gaussian directions paired with ``sample_weights`` rows."""
    m = extreme_matrix(S, mu1).shape[0]
    idx = np.asarray(indices, dtype=np.int64).ravel()
    G = np.empty((idx.size, S.n), dtype=complex)
    for b, rows, pos in iter_blocks(idx):
        G[pos] = draw_block(seed, b, m, S.n)["gauss"][rows]
    return G


def sample_partners(S: Spectrum, mu1: complex, n_samples: int, seed: int,
                    merge_extremes: bool = True, angles: int = 720) -> PartnerSample:
    """Random second Ritz values v*Lv/v*v with v in {sqrt(t), L sqrt(t)}^perp."""
    mu1 = complex(mu1)
    idx = np.arange(n_samples)
    T = sample_weights(S, mu1, seed, idx)
    G = partner_directions(S, mu1, seed, idx)
    pts = partner_values(S.eigenvalues, T, G) if n_samples else np.empty(0, dtype=complex)
    keep = np.isfinite(pts)
    pts, T = pts[keep], T[keep]
    extra = []
    if merge_extremes:
        for t in extreme_matrix(S, mu1):
            R = partner_region(S, mu1, t, angles)
            extra.extend(R.vertices)
    extra = np.asarray(extra, dtype=complex)
    allpts = np.concatenate([pts, extra])
    hull = convex_hull(allpts) if allpts.size else ConvexRegion.empty()
    return PartnerSample(pts, T, extra, hull)


def sample_witness(S: Spectrum, mu1: complex, seed: int, index: int) -> CompressionWitness:
    """Rebuild the isometry behind sample ``index`` with plain numpy."""
    t = sample_weights(S, mu1, seed, [index])[0]
    g = partner_directions(S, mu1, seed, [index])[0]
    lam = S.eigenvalues
    u = np.sqrt(t)
    Q = np.linalg.qr(np.column_stack([u, lam * u]))[0]
    v = g - Q @ (Q.conj().T @ g)
    v = v - Q @ (Q.conj().T @ v)
    return CompressionWitness.build(S, mu1, t, v)


class SpectrumMode(enum.Enum):
    CONVEX_POSITION = "ConvexPosition"
    WITH_INTERIOR = "WithInterior"


def _separated(z: np.ndarray, frac: float) -> bool:
    D = np.abs(z[:, None] - z[None, :])
    return D[np.triu_indices(z.size, 1)].min() >= frac * D.max()


def random_spectrum(n: int, seed: int, mode=SpectrumMode.CONVEX_POSITION) -> Spectrum:
    """Points on a random circle at jittered angles, optionally with one interior point."""
    mode = SpectrumMode(mode)
    inner = mode is SpectrumMode.WITH_INTERIOR
    if n < (4 if inner else 3):
        raise BadCount(f"n={n} is too small for mode {mode.value}")
    g = np.random.default_rng([int(seed), n, int(inner)])
    k = n - 1 if inner else n
    while True:
        radius = g.uniform(0.5, 2.0)
        center = complex(*g.uniform(-1.0, 1.0, 2))
        ang = g.uniform(0, 2 * np.pi) + 2 * np.pi * (np.arange(k) + g.uniform(-0.3, 0.3, k)) / k
        z = center + radius * np.exp(1j * ang)
        if inner:
            w = g.dirichlet(np.ones(k))
            p = z.mean() + 0.6 * (w @ z - z.mean())
            z = np.append(z, p)
        if _separated(z, 0.05):
            return Spectrum(z)


def naive_region(S: Spectrum, mu1: complex) -> ConvexRegion:
    """The union formula applied without checking the no-interior-eigenvalue hypothesis."""
    gps, _ = union_generating_points(S, complex(mu1), check_collinear=False)
    return convex_hull([g.point for g in gps])


@dataclass
class TheoremConfig:
    samples: int = 10_000
    seed: int = 0
    angles: int = 720
    tol_in: float = 1e-8
    tol_witness: float = 1e-9
    nec2_pairs: int = 32
    z_draws: int = 20
    merge_extremes: bool = True


@dataclass
class VerificationReport:
    seed: int
    samples_total: int = 0
    case: str = ""
    inclusion_violations: list = field(default_factory=list)
    generating_point_residuals: list = field(default_factory=list)
    hausdorff_gap: float | None = None
    z_certificates: list = field(default_factory=list)
    x_margin: float | None = None
    normalization: str = ""
    nec2_failures: list = field(default_factory=list)
    max_inclusion_distance: float = 0.0
    error: dict | None = None
    verdict: str = "Fail"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["inclusion_violations"] = [[[z.real, z.imag], dist] for z, dist in self.inclusion_violations]
        d["nec2_failures"] = [[[z.real, z.imag], m] for z, m in self.nec2_failures]
        return d


def _error(exc: Exception) -> dict:
    return {"type": type(exc).__name__, "message": str(exc),
            "hypothesis": isinstance(exc, HypothesisViolation)}


def _pass(rep: VerificationReport, cfg: TheoremConfig) -> bool:
    return (rep.error is None and not rep.inclusion_violations and not rep.nec2_failures
            and all(r <= cfg.tol_witness for r in rep.generating_point_residuals)
            and all(m >= -Z_TOL for _, m in rep.z_certificates)
            and (rep.x_margin is None or rep.x_margin < 0))


def _inclusion(rep: VerificationReport, pts: np.ndarray, R: ConvexRegion, tol: float) -> None:
    if pts.size == 0:
        return
    d = region_distances(pts, R.as_array())
    rep.max_inclusion_distance = float(d.max())
    bad = np.flatnonzero(d > tol)
    rep.inclusion_violations = [(complex(pts[k]), float(d[k])) for k in bad]


def _is_r123(t_local: np.ndarray) -> bool:
    return bool(np.all(t_local[:3] > 0) and not np.any(t_local[3:] > 0))


def _certificates(rep: VerificationReport, S: Spectrum, mu1: complex, case, cfg: TheoremConfig) -> None:
    # the normalized frames assume distinct eigenvalues
    if not S.is_simple:
        rep.normalization = "skipped"
        return
    if case.kind is CaseKind.UNIQUE_VERTEX:
        norm = normalize_A(S, mu1, case.indices[0])
        rep.normalization = "A"
        T = sample_weights(S, mu1, cfg.seed, np.arange(cfg.z_draws), full_support=True)
        for t in T:
            if np.min(t) > 0:
                ev = np.linalg.eigvalsh(z_matrix(norm, norm.local(t)))
                rep.z_certificates.append((t_hash(t), float(ev.min())))
        x = x_vector(norm)
        margins = [float(x @ t) for t in (norm.local(e) for e in extreme_matrix(S, mu1))
                   if not _is_r123(t)]
        rep.x_margin = max(margins) if margins else None
    elif case.kind is CaseKind.ADJACENT_PAIR:
        normalize_B(S, mu1, case.indices)
        rep.normalization = "B"


def check_theorem(S: Spectrum, mu1: complex, config: TheoremConfig | None = None) -> VerificationReport:
    """Inclusion of sampled partners, witness tightness, certificates and nec2 spot checks.

    Never raises for hypothesis or normalization failures; they are recorded in
    ``error`` and the verdict is Fail. For an interior eigenvalue the sampled
    partners are compared against the naive union formula instead.
    """
    cfg = config or TheoremConfig()
    mu1 = complex(mu1)
    rep = VerificationReport(seed=cfg.seed)
    try:
        case = classify(S, mu1)
    except InteriorEigenvalue as exc:
        rep.error = _error(exc)
        rep.case = "InteriorEigenvalue"
        smp = sample_partners(S, mu1, cfg.samples, cfg.seed, cfg.merge_extremes, cfg.angles)
        rep.samples_total = int(smp.points.size)
        _inclusion(rep, np.concatenate([smp.points, smp.extreme_points]), naive_region(S, mu1), cfg.tol_in)
        return rep
    except RitzError as exc:
        rep.error = _error(exc)
        return rep
    rep.case = str(case)
    if case.kind is CaseKind.OUTSIDE_W:
        rep.error = _error(OutsideW(f"mu1={mu1} is outside the numerical range"))
        return rep

    report = region_R(S, mu1)
    R = report.region
    rep.generating_point_residuals = [float(r) for r in report.witness_residuals(S)]

    smp = sample_partners(S, mu1, cfg.samples, cfg.seed, cfg.merge_extremes, cfg.angles)
    rep.samples_total = int(smp.points.size)
    _inclusion(rep, np.concatenate([smp.points, smp.extreme_points]), R, cfg.tol_in)
    if not smp.hull.is_empty:
        rep.hausdorff_gap = float(hausdorff_distance(smp.hull, R))

    try:
        _certificates(rep, S, mu1, case, cfg)
    except (NormalizationFailed, HypothesisViolation) as exc:
        rep.error = _error(exc)

    realized = [g.point for g in report.generating_points] + list(smp.points)
    realized = np.asarray(realized[: cfg.nec2_pairs], dtype=complex)
    if realized.size:
        margins = nec2_margins(S, mu1, realized)
        rep.nec2_failures = [(complex(z), float(m)) for z, m in zip(realized, margins) if m > NEC2_TOL]

    rep.verdict = "Pass" if _pass(rep, cfg) else "Fail"
    return rep


__all__ = [
    "BLOCK", "PartnerSample", "SpectrumMode", "TheoremConfig", "VerificationReport",
    "check_theorem", "compound_matrix", "default_z_grid", "naive_region", "nec2_check",
    "nec2_margins", "partner_directions", "random_spectrum", "sample_partners",
    "sample_witness", "t_hash",
]
