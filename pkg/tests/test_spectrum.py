import numpy as np
import pytest

from ritzregion import Spectrum, classify, is_corner, numerical_range, rank2_range, reduce_multiplicity
from ritzregion.errors import CollinearSpectrum, InteriorEigenvalue, TooFewEigenvalues
from ritzregion.geometry import (
    Location,
    RegionKind,
    convex_hull,
    hausdorff_distance,
    hull_union,
    point_location,
    segment_intersection,
)
from ritzregion.spectrum import CaseKind, removal_hull
from ritzregion.verify import random_spectrum

from _cases import SQUARE, random_mu1


def test_canonical_order_is_ccw():
    S = Spectrum([-1j, 1, -1, 1j])
    assert S.values == (1, 1j, -1, -1j)


def test_duplicates_merge_into_multiplicity():
    S = Spectrum([1, 1 + 1e-12, 1j, -1])
    assert S.n == 4 and sorted(S.mults) == [1, 1, 2]


def test_numerical_range_examples():
    assert set(numerical_range(SQUARE).vertices) == {1, 1j, -1, -1j}
    seg = numerical_range(Spectrum([0, 1, 2]))
    assert seg.kind is RegionKind.SEGMENT and set(seg.vertices) == {0, 2}
    tri = numerical_range(Spectrum([0, 1, 1j, 0.2 + 0.2j]))
    assert tri.kind is RegionKind.POLYGON and len(tri) == 3


class TestRank2:
    def test_square_is_center(self):
        L = rank2_range(SQUARE)
        assert L.kind is RegionKind.POINT and abs(L.vertices[0]) <= 1e-12

    def test_diagonal_intersection(self):
        L = rank2_range(Spectrum([0, 2, 2 + 2j, 2j]))
        assert L.kind is RegionKind.POINT and abs(L.vertices[0] - (1 + 1j)) <= 1e-12

    def test_pentagon_contains_center(self):
        L = rank2_range(Spectrum(np.exp(2j * np.pi * np.arange(5) / 5)))
        assert L.kind is RegionKind.POLYGON
        assert point_location(0, L) is Location.INSIDE

    def test_too_few(self):
        with pytest.raises(TooFewEigenvalues):
            rank2_range(Spectrum([0, 1]))

    def test_repeated_eigenvalue_stays(self):
        # with 1 doubled, every removal hull still contains 1
        S = Spectrum([1, 1j, -1], [2, 1, 1])
        L = rank2_range(S)
        assert point_location(1, L) is not Location.OUTSIDE

    def test_contained_in_every_removal_hull(self, rng):
        for seed in range(100):
            S = random_spectrum(int(rng.integers(3, 9)), seed)
            L = rank2_range(S)
            for k in S.first_index:
                H = removal_hull(S, [k])
                for v in L.vertices:
                    assert point_location(v, H, 1e-12) is not Location.OUTSIDE


class TestCorner:
    def test_examples(self):
        assert is_corner(0, SQUARE)
        S = Spectrum([0, 1, 2, 1 + 1j])
        k = S.values.index(1)
        assert not is_corner(S.first_index[k], S)
        assert all(is_corner(k, Spectrum([0, 1j])) for k in range(2))

    def test_non_corner_is_in_rank2(self):
        # an eigenvalue in the middle of an edge lies in Lambda_2
        for S in (Spectrum([0, 1, 2, 1 + 1j]), Spectrum([0, 1, 2, 2 + 1j, 1j])):
            L = rank2_range(S)
            for k in range(S.n):
                if not is_corner(k, S):
                    assert point_location(S.eigenvalues[k], L) is not Location.OUTSIDE


class TestReduce:
    def test_doubled(self):
        lam, rep = reduce_multiplicity(Spectrum([1, 1j, -1], [2, 1, 1]))
        assert lam.is_simple and lam.n == 3
        assert rep.values == (1,) and rep.mults == (1,)

    def test_simple(self):
        assert reduce_multiplicity(SQUARE)[1] is None

    def test_triple(self):
        lam, rep = reduce_multiplicity(Spectrum([2], [3]))
        assert lam.values == (2,) and rep.values == (2,) and rep.mults == (2,)

    def test_numerical_range_preserved(self, rng):
        for _ in range(50):
            S = random_spectrum(5, int(rng.integers(1000)))
            m = rng.integers(1, 4, size=5)
            D = Spectrum(S.values, m)
            lam, rep = reduce_multiplicity(D)
            W = numerical_range(D)
            parts = [numerical_range(lam)] + ([numerical_range(rep)] if rep else [])
            assert hausdorff_distance(W, hull_union(*parts)) == 0


class TestClassify:
    def test_square_examples(self):
        assert classify(SQUARE, 0).kind is CaseKind.IN_RANK2
        c = classify(SQUARE, 0.5 + 0.2j)
        assert c.kind is CaseKind.ADJACENT_PAIR
        assert [SQUARE.eigenvalues[k] for k in c.indices] == [1, 1j]
        c = classify(SQUARE, 0.5)
        assert c.kind is CaseKind.UNIQUE_VERTEX and SQUARE.eigenvalues[c.indices[0]] == 1

    def test_point_in_triangle_oracle(self):
        # bad vertices by direct barycentric tests on every conv(sigma minus one)
        lam = SQUARE.eigenvalues
        for mu, expect in [(0.5 + 0.2j, {0, 1}), (0.5, {0})]:
            bad = set()
            for k in range(4):
                tri = np.delete(lam, k)
                M = np.array([np.ones(3), tri.real, tri.imag])
                r = np.linalg.solve(M, [1, mu.real, mu.imag])
                if r.min() < 0:
                    bad.add(k)
            assert bad == expect

    def test_boundary_and_eigenvalue(self):
        assert classify(SQUARE, 0.5 + 0.5j).kind is CaseKind.BOUNDARY
        c = classify(SQUARE, 1j)
        assert c.kind is CaseKind.EIGENVALUE and SQUARE.eigenvalues[c.indices[0]] == 1j

    def test_outside(self):
        assert classify(SQUARE, 5 + 5j).kind is CaseKind.OUTSIDE_W

    def test_hypothesis_errors(self):
        with pytest.raises(InteriorEigenvalue):
            classify(Spectrum([0, 1, 1j, 0.2 + 0.2j]), 0.3 + 0.1j)
        with pytest.raises(CollinearSpectrum):
            classify(Spectrum([0, 1, 2]), 0.5)

    def test_case_invariants(self, rng):
        seen = set()
        for _ in range(400):
            S = random_spectrum(int(rng.integers(4, 8)), int(rng.integers(10**6)))
            mu1 = random_mu1(rng, S)
            c = classify(S, mu1)
            seen.add(c.kind)
            lam = S.eigenvalues
            n = S.n
            if c.kind is CaseKind.UNIQUE_VERTEX:
                (a,) = c.indices
                tri = convex_hull([lam[a - 1], lam[a], lam[(a + 1) % n]])
                assert point_location(mu1, tri) is not Location.OUTSIDE
            elif c.kind is CaseKind.ADJACENT_PAIR:
                a, b = c.indices
                assert b == (a + 1) % n
                assert is_corner(a, S) and is_corner(b, S)
                assert S.mults[S.distinct_index[a]] == 1 == S.mults[S.distinct_index[b]]
        assert {CaseKind.IN_RANK2, CaseKind.UNIQUE_VERTEX, CaseKind.ADJACENT_PAIR} <= seen

    def test_square_rank2_matches_diagonals(self):
        x = segment_intersection(1, -1, 1j, -1j)
        assert abs(rank2_range(SQUARE).vertices[0] - x) <= 1e-12
