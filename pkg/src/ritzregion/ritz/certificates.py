"""Normalized frames for the unique-vertex and adjacent-pair cases, and the
positivity certificates Z(t) and x that live in the first frame.

A normalized configuration relabels the eigenvalues locally (``labels[k]`` is
the canonical expanded index of local eigenvalue k+1) and applies the rigid
motion z -> rho*(z - shift) with |rho| = 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import CoincidentConjugates, InputError, NormalizationFailed, NotNormalized
from ..geometry import TOL_GEOM
from ..spectrum import Spectrum
from .isogonal import isogonal_formula

NORM_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class NormalizedConfig:
    kind: str
    lam: np.ndarray
    mu1: complex
    labels: tuple
    rho: complex
    shift: complex
    w123: complex
    w12n: complex | None = None

    def forward(self, z):
        return self.rho * (np.asarray(z) - self.shift)

    def inverse(self, z):
        return np.asarray(z) / self.rho + self.shift

    def local(self, t) -> np.ndarray:
        """Reorder a canonical-order vector into local labels."""
        t = np.asarray(getattr(t, "t", t))
        return t[list(self.labels)]

    def canonical(self, t_local) -> np.ndarray:
        out = np.empty_like(np.asarray(t_local))
        out[list(self.labels)] = t_local
        return out

    @property
    def spectrum(self) -> Spectrum:
        return Spectrum.from_eigenvalues(self.lam)


def _orient(d: complex, lam: np.ndarray, shift: complex, which) -> tuple:
    """Both rotations putting d on the imaginary axis, best one first."""
    base = 1j * np.conj(d) / abs(d)
    options = []
    for rho in (base, -base):
        re = (rho * (lam - shift)).real
        options.append((float(np.max(re[list(which)])), rho))
    options.sort(key=lambda o: o[0])
    return options[0][1]


def _local_order(n: int, start: int) -> list:
    return [(start + k) % n for k in range(n)]


def normalize_A(S: Spectrum, mu1: complex, a: int) -> NormalizedConfig:
    """Frame with lambda_2 the bad vertex, lambda_3 = 0 and Re(w123) = 0.

    Local labels run counterclockwise: lambda_1, lambda_2, lambda_3 are the
    canonical eigenvalues a-1, a, a+1, followed by a+2, ..., a-2.
    """
    if not S.is_simple:
        raise NormalizationFailed("normalization needs distinct eigenvalues")
    n = S.n
    if n < 4:
        raise NormalizationFailed("normalization needs n >= 4")
    labels = _local_order(n, (a - 1) % n)
    lam0 = S.eigenvalues[labels]
    mu1 = complex(mu1)
    w = isogonal_formula(lam0[:3], mu1)
    shift = complex(lam0[2])
    d = w - shift
    if abs(d) <= TOL_GEOM * S.diameter:
        raise NormalizationFailed("isogonal conjugate coincides with lambda_3")
    rho = _orient(d, lam0, shift, [1])
    cfg = NormalizedConfig("A", rho * (lam0 - shift), complex(rho * (mu1 - shift)),
                           tuple(labels), complex(rho), shift, complex(rho * d))
    problem = check_A(cfg)
    if problem:
        raise NormalizationFailed(problem)
    return cfg


def check_A(cfg: NormalizedConfig) -> str:
    """Empty string when the sign pattern holds, else a description."""
    lam = cfg.lam
    scale = max(float(np.max(np.abs(lam))), 1e-300)
    tol = NORM_TOL * scale
    if abs(lam[2]) > tol:
        return "lambda_3 is not at the origin"
    if not lam[1].real < -tol:
        return "Re(lambda_2) is not negative"
    others = [k for k in range(lam.size) if k not in (1, 2)]
    bad = [k + 1 for k in others if not lam[k].real > tol]
    if bad:
        return f"Re(lambda_j) is not positive for local j in {bad}"
    if abs(cfg.w123.real) > tol:
        return "Re(w123) is not zero"
    return ""


def normalize_B(S: Spectrum, mu1: complex, pair) -> NormalizedConfig:
    """Frame with Re(w123) = Re(w12n) = 0, lambda_1, lambda_2 on the left.

    Local labels run counterclockwise from canonical a: lambda_1 = a,
    lambda_2 = a+1, lambda_3 = a+2, ..., lambda_n = a-1.
    """
    if not S.is_simple:
        raise NormalizationFailed("normalization needs distinct eigenvalues")
    n = S.n
    if n < 4:
        raise NormalizationFailed("normalization needs n >= 4")
    a, b = pair
    if (a + 1) % n != b:
        raise InputError("the pair must be (a, a+1) in canonical order")
    labels = _local_order(n, a)
    lam0 = S.eigenvalues[labels]
    mu1 = complex(mu1)
    w3 = isogonal_formula([lam0[0], lam0[1], lam0[2]], mu1)
    wn = isogonal_formula([lam0[0], lam0[1], lam0[-1]], mu1)
    d = wn - w3
    if abs(d) <= TOL_GEOM * S.diameter:
        raise CoincidentConjugates("w123 and w12n coincide")
    rho = _orient(d, lam0, w3, [0, 1])
    cfg = NormalizedConfig("B", rho * (lam0 - w3), complex(rho * (mu1 - w3)), tuple(labels),
                           complex(rho), complex(w3), 0j, complex(rho * d))
    problem = check_B(cfg)
    if problem:
        raise NormalizationFailed(problem)
    return cfg


def check_B(cfg: NormalizedConfig) -> str:
    lam = cfg.lam
    scale = max(float(np.max(np.abs(lam))), 1e-300)
    tol = NORM_TOL * scale
    if abs(cfg.w123.real) > tol or abs(cfg.w12n.real) > tol:
        return "conjugates are not on the imaginary axis"
    left = lam[[0, 1]].real
    if np.any(left > tol) or not np.any(left < -tol):
        return "lambda_1, lambda_2 are not left of the axis"
    bad = [k + 1 for k in range(2, lam.size) if lam[k].real < -tol]
    if bad:
        return f"Re(lambda_j) is negative for local j in {bad}"
    return ""


def _require_A(cfg: NormalizedConfig) -> None:
    if not isinstance(cfg, NormalizedConfig) or cfg.kind != "A":
        raise NotNormalized("expected a configuration from normalize_A")
    problem = check_A(cfg)
    if problem:
        raise NotNormalized(problem)


def z_matrix(cfg: NormalizedConfig, t_local) -> np.ndarray:
    """The (n-2)x(n-2) Hermitian matrix whose quadratic form is Re(v*Lv) on the perp space.

    ``t_local`` is an all-positive weight vector in local labels.
    """
    _require_A(cfg)
    t = np.asarray(t_local, dtype=float)
    if t.shape != cfg.lam.shape or np.any(t <= 0):
        raise InputError("z_matrix needs an all-positive weight vector in local labels")
    lam = cfg.lam
    l1, l2 = lam[0], lam[1]
    w = lam[2:]
    p = (w - l2)[:, None]
    q = (l1 - w)[:, None]
    Z = (l1.real / t[0]) * (p @ p.conj().T) + (l2.real / t[1]) * (q @ q.conj().T)
    Z = Z + abs(l2 - l1) ** 2 * np.diag(w.real / t[2:])
    return 0.5 * (Z + Z.conj().T)


def perp_family(cfg: NormalizedConfig, t_local) -> np.ndarray:
    """Columns f_3..f_n spanning {sqrt(t), L sqrt(t)}^perp (local labels)."""
    lam = cfg.lam
    t = np.asarray(t_local, dtype=float)
    n = lam.size
    F = np.zeros((n, n - 2), dtype=complex)
    for c, j in enumerate(range(2, n)):
        F[0, c] = np.conj(lam[j] - lam[1]) / np.sqrt(t[0])
        F[1, c] = np.conj(lam[0] - lam[j]) / np.sqrt(t[1])
        F[j, c] = np.conj(lam[1] - lam[0]) / np.sqrt(t[j])
    return F


def x_vector(cfg: NormalizedConfig) -> np.ndarray:
    """x_j = |lambda_j|^2 / Re(lambda_j) for j != 3, zero at local index 3."""
    _require_A(cfg)
    lam = cfg.lam
    x = np.zeros(lam.size)
    for j in range(lam.size):
        if j != 2:
            x[j] = abs(lam[j]) ** 2 / lam[j].real
    return x
