"""Compare the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from ritzregion import _kernels_py
from ritzregion.verify import random_spectrum
from ritzregion.weights import sample_weights

try:
    from ritzregion import _kernels
except ImportError:
    _kernels = None


def cases():
    for n, N in [(4, 10_000), (7, 10_000), (7, 100_000), (12, 20_000)]:
        S = random_spectrum(n, 1)
        mu1 = complex(np.mean(S.eigenvalues[:3]))
        T = sample_weights(S, mu1, 0, np.arange(N))
        g = np.random.default_rng(0)
        G = g.standard_normal((N, n)) + 1j * g.standard_normal((N, n))
        yield f"partner_values n={n} N={N}", "partner_values", (S.eigenvalues, T, G)
    for m, N in [(4, 100_000), (40, 100_000)]:
        verts = np.exp(2j * np.pi * np.arange(m) / m)
        g = np.random.default_rng(1)
        pts = g.standard_normal(N) + 1j * g.standard_normal(N)
        yield f"region_distances m={m} N={N}", "region_distances", (pts, verts)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"{'kernel':38s} {'numpy [ms]':>11s} {'cython [ms]':>12s} {'speedup':>8s} {'max diff':>10s}")
    for label, name, inputs in cases():
        py = getattr(_kernels_py, name)
        t_py = min(timeit.repeat(lambda: py(*inputs), number=1, repeat=args.repeat)) * 1e3
        if _kernels is None:
            print(f"{label:38s} {t_py:11.2f} {'n/a':>12s}")
            continue
        cy = getattr(_kernels, name)
        t_cy = min(timeit.repeat(lambda: cy(*inputs), number=1, repeat=args.repeat)) * 1e3
        diff = float(np.nanmax(np.abs(py(*inputs) - cy(*inputs))))
        print(f"{label:38s} {t_py:11.2f} {t_cy:12.2f} {t_py / t_cy:8.2f} {diff:10.1e}")


if __name__ == "__main__":
    main()
