from itertools import combinations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ritzregion import (
    Spectrum,
    classify,
    compress,
    isogonal_formula,
    isogonal_geometric,
    normalize_A,
    normalize_B,
    partner_region,
    perp_basis,
    reduce_multiplicity,
    region_R,
    x_vector,
    z_matrix,
)
from ritzregion.errors import (
    DegenerateTriangle,
    InputError,
    NotIsometry,
    NotNormalized,
    OutsideTriangle,
    OutsideW,
    VertexInput,
)
from ritzregion.geometry import (
    Location,
    RegionKind,
    convex_hull,
    distance_to_region,
    hausdorff_distance,
    point_location,
)
from ritzregion.ritz import ISOGONAL, RESIDUAL, perp_family
from ritzregion.ritz.compression import numerical_range_sweep, partner_sweep
from ritzregion.spectrum import CaseKind
from ritzregion.verify import random_spectrum, sample_partners
from ritzregion.weights import extreme_matrix, sample_weights

from _cases import EQUILATERAL, SQUARE, case3_config, case_instance, interior_point, random_mu1, random_triangle

THETA = 2 * np.pi * np.arange(4096) / 4096


def support(M):
    """Support function of W(M) on THETA through the Hermitian-part top eigenvalue."""
    M = np.atleast_2d(M)
    rot = np.exp(-1j * THETA)[:, None, None]
    return np.linalg.eigvalsh(0.5 * (rot * M + np.conj(rot) * M.conj().T))[:, -1]


def point_support(pts):
    pts = np.asarray(pts)
    return (np.exp(-1j * THETA)[:, None] * pts[None, :]).real.max(axis=1)


class TestPerpBasis:
    def test_triangle_is_f_direction(self):
        lam = EQUILATERAL.eigenvalues
        mu1 = 0.1 + 0.2j
        t = extreme_matrix(EQUILATERAL, mu1)[0]
        P = perp_basis(t, EQUILATERAL)
        assert P.m == 2 and P.F.shape == (3, 1)
        sides = np.array([lam[2] - lam[1], lam[0] - lam[2], lam[1] - lam[0]])
        f = np.conj(sides) / np.sqrt(t)
        f /= np.linalg.norm(f)
        assert abs(abs(np.vdot(f, P.F[:, 0])) - 1) < 1e-12

    def test_hand_example(self):
        S = Spectrum([0, 1, 2j])
        t = np.zeros(3)
        i0, i1 = S.values.index(0), S.values.index(1)
        t[i0] = t[i1] = 0.5
        P = perp_basis(t, S)
        e = np.zeros(3)
        e[S.values.index(2j)] = 1
        assert P.m == 2 and abs(abs(np.vdot(e, P.F[:, 0])) - 1) < 1e-15

    def test_eigenvalue_weight(self):
        t = np.array([1.0, 0, 0, 0])
        P = perp_basis(t, SQUARE)
        assert P.m == 1 and P.F.shape == (4, 3)
        assert np.allclose(np.abs(P.F[1:, :]), np.eye(3))

    def test_invariants(self, rng):
        for _ in range(100):
            S = random_spectrum(int(rng.integers(3, 9)), int(rng.integers(10**6)))
            mu1 = random_mu1(rng, S)
            for t in sample_weights(S, mu1, 0, np.arange(10)):
                P = perp_basis(t, S)
                ortho = np.abs(P.F.conj().T @ P.F - np.eye(P.F.shape[1])).max()
                u = np.sqrt(t)
                perp = np.abs(P.F.conj().T @ np.column_stack([u, S.eigenvalues * u])).max()
                assert ortho <= 1e-12 and perp <= 1e-12
                assert P.m == 2 and P.F.shape[1] == S.n - 2


class TestCompress:
    def test_standard_columns(self):
        lam = SQUARE.eigenvalues
        B = compress(SQUARE, np.eye(4)[:, :2])
        assert np.allclose(B, np.diag(lam[:2]))

    def test_upper_triangular(self, rng):
        S = random_spectrum(5, 3)
        mu1 = random_mu1(rng, S)
        t = sample_weights(S, mu1, 0, [0])[0]
        F = perp_basis(t, S).F
        v = F @ (rng.normal(size=F.shape[1]) + 1j * rng.normal(size=F.shape[1]))
        B = compress(S, np.column_stack([np.sqrt(t), v / np.linalg.norm(v)]))
        assert abs(B[0, 0] - mu1) < 1e-12 and abs(B[1, 0]) < 1e-12

    def test_permutation(self):
        P = np.eye(4)[:, [2, 0, 3, 1]]
        assert np.allclose(compress(SQUARE, P), np.diag(SQUARE.eigenvalues[[2, 0, 3, 1]]))

    def test_errors(self):
        with pytest.raises(NotIsometry):
            compress(SQUARE, 2 * np.eye(4)[:, :2])
        with pytest.raises(InputError):
            compress(SQUARE, np.eye(3)[:, :2])


class TestIsogonal:
    def test_equilateral_center(self):
        assert abs(isogonal_formula(EQUILATERAL.values, 0)) < 1e-15
        assert abs(isogonal_geometric(EQUILATERAL.values, 0)) < 1e-15

    def test_incenter_fixed(self):
        c = (1 - np.sqrt(2) / 2) * (1 + 1j)
        assert abs(isogonal_formula([0, 1, 1j], c) - c) < 1e-14
        assert abs(isogonal_geometric([0, 1, 1j], c) - c) < 1e-14

    def test_right_triangle_cross(self):
        tri = [0, 4, 3j]
        assert abs(isogonal_formula(tri, 1 + 0.5j) - isogonal_geometric(tri, 1 + 0.5j)) < 1e-12

    def test_involution(self, rng):
        for _ in range(200):
            tri = random_triangle(rng)
            mu, _ = interior_point(rng, tri, 0.05)
            w = isogonal_formula(tri, mu)
            assert abs(isogonal_formula(tri, w) - mu) < 1e-9

    def test_errors(self):
        with pytest.raises(DegenerateTriangle):
            isogonal_formula([0, 1, 2], 0.5)
        with pytest.raises(VertexInput):
            isogonal_formula([0, 1, 1j], 1)
        with pytest.raises(OutsideTriangle):
            isogonal_geometric([0, 1, 1j], 1 + 1j)

    def test_edge_maps_to_opposite_vertex(self):
        assert isogonal_formula([0, 1, 1j], 0.5) == 1j

    @given(st.integers(0, 2**32 - 1))
    def test_two_constructions_agree(self, seed):
        g = np.random.default_rng(seed)
        tri = random_triangle(g)
        mu, _ = interior_point(g, tri, 0.01)
        assert abs(isogonal_formula(tri, mu) - isogonal_geometric(tri, mu)) <= 1e-9


class TestPartnerRegion:
    def test_singleton(self, rng):
        for _ in range(50):
            S = Spectrum(random_triangle(rng))
            mu1, _ = interior_point(rng, S.values)
            t = extreme_matrix(S, mu1)[0]
            R = partner_region(S, mu1, t)
            assert R.kind is RegionKind.POINT
            assert abs(R.vertices[0] - isogonal_formula(S.values, mu1)) <= 1e-9

    def test_hand_example(self):
        S = Spectrum([0, 1, 2j])
        t = np.zeros(3)
        t[S.values.index(0)] = t[S.values.index(1)] = 0.5
        R = partner_region(S, 0.5, t)
        assert R.kind is RegionKind.POINT and abs(R.vertices[0] - 2j) < 1e-15

    def test_sweep_brackets_true_range(self, rng):
        S = random_spectrum(6, 1)
        mu1 = random_mu1(rng, S)
        t = sample_weights(S, mu1, 0, [3])[0]
        F = perp_basis(t, S).F
        h = support((F.conj().T * S.eigenvalues) @ F)
        sw = partner_sweep(S, mu1, t)
        inner, outer = point_support(sw.inner.vertices), point_support(sw.outer.vertices)
        assert np.all(inner <= h + 1e-12) and np.all(outer >= h - 1e-12)
        # the outer polygon overshoots along flat edges, the inner hull stays close
        assert np.max(h - inner) <= 1e-4 * S.diameter
        assert np.max(h - inner) <= sw.gap + 1e-12

    def test_angles_floor(self):
        with pytest.raises(InputError):
            numerical_range_sweep(np.diag([0, 1, 1j]), 8)

    def test_decomposition_law(self, rng):
        # support functions are exact, so their sup-difference is the Hausdorff distance
        for trial in range(100):
            S = random_spectrum(6, trial)
            lam = S.eigenvalues
            J = list(rng.choice(6, 2, replace=False))
            keep = [k for k in range(6) if k not in J]
            L = Spectrum(lam[keep])
            mu1 = complex(rng.dirichlet(np.ones(4)) @ lam[keep])
            s = sample_weights(L, mu1, trial, [0])[0]
            t = np.zeros(6)
            t[[keep[list(lam[keep]).index(v)] for v in L.eigenvalues]] = s
            F = perp_basis(t, S).F
            Fs = perp_basis(s, L).F
            lhs = support((F.conj().T * lam) @ F)
            rhs = np.maximum(support((Fs.conj().T * L.eigenvalues) @ Fs), point_support(lam[J]))
            assert np.abs(lhs - rhs).max() <= 1e-8


def check_report(S, mu1, rep):
    for g, w in zip(rep.generating_points, rep.witnesses):
        assert w.orthonormality() <= 1e-12
        assert w.residual(S) <= 1e-10
        assert abs(w.mu2 - g.point) <= 1e-9
        assert abs(compress(S, w.V)[1, 0]) <= 1e-10
    assert len(rep.witnesses) == len(rep.generating_points)


class TestRegion:
    def test_square_center_is_W(self):
        rep = region_R(SQUARE, 0)
        assert rep.case.kind is CaseKind.IN_RANK2
        assert set(rep.region.vertices) == {1, 1j, -1, -1j}
        check_report(SQUARE, 0, rep)

    def test_square_adjacent_pair(self):
        mu1 = 0.5 + 0.2j
        rep = region_R(SQUARE, mu1)
        w1 = isogonal_formula([-1j, 1, 1j], mu1)
        w2 = isogonal_formula([1, 1j, -1], mu1)
        expect = convex_hull([w1, w2, -1, -1j])
        assert hausdorff_distance(rep.region, expect) <= 1e-12
        kinds = sorted(g.kind for g in rep.generating_points)
        assert kinds == sorted([ISOGONAL, ISOGONAL, RESIDUAL, RESIDUAL])
        check_report(SQUARE, mu1, rep)

    def test_triangle_point(self, rng):
        S = Spectrum(random_triangle(rng))
        mu1, _ = interior_point(rng, S.values)
        rep = region_R(S, mu1)
        assert rep.region.kind is RegionKind.POINT
        assert abs(rep.region.vertices[0] - isogonal_formula(S.values, mu1)) <= 1e-12

    def test_outside(self):
        with pytest.raises(OutsideW):
            region_R(SQUARE, 3)

    def test_branches(self):
        S = Spectrum([0, 2, 2 + 2j, 2j])
        rep = region_R(S, 2)
        assert hausdorff_distance(rep.region, convex_hull([0, 2 + 2j, 2j])) <= 1e-12
        rep = region_R(S, 1)
        # both endpoints of [0, 2] are outside Lambda_2 = {1+i}
        assert hausdorff_distance(rep.region, convex_hull([2 + 2j, 2j])) <= 1e-12
        check_report(S, 1, rep)

    @pytest.mark.parametrize("kind", [CaseKind.IN_RANK2, CaseKind.UNIQUE_VERTEX, CaseKind.ADJACENT_PAIR])
    def test_witnesses_sound(self, rng, kind):
        for _ in range(30):
            S, mu1 = case_instance(rng, int(rng.integers(4, 8)), kind)
            rep = region_R(S, mu1)
            check_report(S, mu1, rep)
            if kind is not CaseKind.IN_RANK2:
                H = convex_hull([g.point for g in rep.generating_points])
                assert hausdorff_distance(H, rep.region) <= 1e-12

    def test_multiplicity(self, rng):
        for _ in range(20):
            S0 = random_spectrum(5, int(rng.integers(10**6)))
            m = [1] * 5
            m[int(rng.integers(5))] = 2
            D = Spectrum(S0.values, m)
            mu1 = random_mu1(rng, D)
            lam, rep = reduce_multiplicity(D)
            outer = convex_hull(list(region_R(lam, mu1).region.vertices) + list(rep.values))
            smp = sample_partners(D, mu1, 2000, 0)
            d = max(distance_to_region(z, outer) for z in np.concatenate([smp.points, smp.extreme_points]))
            assert d <= 1e-8


class TestHalfPlane:
    def test_four_point_adjacent_pair(self, rng):
        for _ in range(30):
            S, mu1 = case_instance(rng, 4, CaseKind.ADJACENT_PAIR)
            a, _ = classify(S, mu1).indices
            L = [S.eigenvalues[(a + k) % 4] for k in range(4)]
            w123 = isogonal_formula(L[:3], mu1)
            w124 = isogonal_formula([L[0], L[1], L[3]], mu1)
            # w: intersection of the lines (L1, w123) and (L2, w124)
            d1, d2 = w123 - L[0], w124 - L[1]
            s = np.linalg.solve([[d1.real, -d2.real], [d1.imag, -d2.imag]],
                                [(L[1] - L[0]).real, (L[1] - L[0]).imag])[0]
            w = L[0] + s * d1
            H = convex_hull([w, w123, w124, L[2], L[3]])
            smp = sample_partners(S, mu1, 3000, 1)
            for z in np.concatenate([smp.points, smp.extreme_points]):
                assert distance_to_region(z, H) <= 1e-8


class TestIsogonalMembership:
    def test_unique_vertex(self, rng):
        for _ in range(60):
            S, mu1 = case3_config(rng, int(rng.integers(4, 7)))
            (a,) = classify(S, mu1).indices
            lam, n = S.eigenvalues, S.n
            w123 = isogonal_formula([lam[a - 1], lam[a], lam[(a + 1) % n]], mu1)
            H = convex_hull([w123] + S.without([a]))
            for K in combinations(range(n), 3):
                if a not in K:
                    continue
                tri = lam[list(K)]
                R = convex_hull(tri)
                if R.kind is not RegionKind.POLYGON or point_location(mu1, R) is Location.OUTSIDE:
                    continue
                assert distance_to_region(isogonal_formula(tri, mu1), H) <= 1e-8

    def test_adjacent_pair(self, rng):
        for _ in range(60):
            S, mu1 = case_instance(rng, int(rng.integers(4, 8)), CaseKind.ADJACENT_PAIR)
            a, b = classify(S, mu1).indices
            lam, n = S.eigenvalues, S.n
            w3 = isogonal_formula([lam[a], lam[b], lam[(b + 1) % n]], mu1)
            wn = isogonal_formula([lam[a], lam[b], lam[a - 1]], mu1)
            H = convex_hull([w3, wn] + S.without([a, b]))
            for c in range(n):
                if c in (a, b):
                    continue
                tri = [lam[a], lam[b], lam[c]]
                if point_location(mu1, convex_hull(tri)) is Location.OUTSIDE:
                    continue
                assert distance_to_region(isogonal_formula(tri, mu1), H) <= 1e-8


class TestNormalization:
    def test_square_unique_vertex(self):
        cfg = normalize_A(SQUARE, 0.5, 0)
        lam = cfg.lam
        assert abs(lam[2]) <= 1e-12 and lam[1].real < 0
        assert all(lam[k].real > 0 for k in (0, 3))
        assert abs(cfg.w123.real) <= 1e-10
        assert abs(cfg.forward(SQUARE.eigenvalues[list(cfg.labels)]) - lam).max() < 1e-15
        assert abs(cfg.inverse(cfg.mu1) - 0.5) < 1e-15

    def test_already_normalized(self, rng):
        S, mu1 = case3_config(rng, 5)
        cfg = normalize_A(S, mu1, classify(S, mu1).indices[0])
        S2 = cfg.spectrum
        again = normalize_A(S2, cfg.mu1, classify(S2, cfg.mu1).indices[0])
        assert abs(again.rho - 1) <= 1e-12 and abs(again.shift) <= 1e-12

    def test_square_adjacent_pair(self):
        cfg = normalize_B(SQUARE, 0.5 + 0.2j, (0, 1))
        assert abs(cfg.w123.real) <= 1e-9 and abs(cfg.w12n.real) <= 1e-9
        left = cfg.lam[:2].real
        assert np.all(left <= 1e-9) and np.any(left < -1e-9)
        assert np.all(cfg.lam[2:].real >= -1e-9)

    def test_adjacent_pair_identity(self):
        cfg = normalize_B(SQUARE, 0.5 + 0.2j, (0, 1))
        S2 = cfg.spectrum
        again = normalize_B(S2, cfg.mu1, classify(S2, cfg.mu1).indices)
        assert abs(again.rho - 1) <= 1e-12 and abs(again.shift) <= 1e-12

    def test_random_configs(self, rng):
        for _ in range(50):
            S, mu1 = case_instance(rng, int(rng.integers(4, 8)), CaseKind.ADJACENT_PAIR)
            normalize_B(S, mu1, classify(S, mu1).indices)
            S, mu1 = case3_config(rng, int(rng.integers(4, 7)))
            normalize_A(S, mu1, classify(S, mu1).indices[0])


class TestCertificates:
    def test_x_vector(self):
        cfg = normalize_A(SQUARE, 0.5, 0)
        x = x_vector(cfg)
        assert x[2] == 0
        assert all(np.sign(x[k]) == np.sign(cfg.lam[k].real) for k in (0, 1, 3))

    def test_not_normalized(self):
        cfg = normalize_B(SQUARE, 0.5 + 0.2j, (0, 1))
        with pytest.raises(NotNormalized):
            z_matrix(cfg, np.full(4, 0.25))
        with pytest.raises(NotNormalized):
            x_vector(cfg)

    def test_quadratic_form_expansion(self, rng):
        for _ in range(50):
            S, mu1 = case3_config(rng, int(rng.integers(4, 7)))
            cfg = normalize_A(S, mu1, classify(S, mu1).indices[0])
            lam = cfg.lam
            t = cfg.local(sample_weights(S, mu1, 0, [0], full_support=True)[0])
            Z = z_matrix(cfg, t)
            x = rng.normal(size=S.n - 2) + 1j * rng.normal(size=S.n - 2)
            l1, l2, w = lam[0], lam[1], lam[2:]
            expect = (abs(np.sum(np.conj(x) * (w - l2))) ** 2 / t[0] * l1.real
                      + abs(np.sum(np.conj(x) * (l1 - w))) ** 2 / t[1] * l2.real
                      + np.sum(np.abs(np.conj(x) * (l2 - l1)) ** 2 / t[2:] * w.real))
            got = np.vdot(x, Z @ x)
            assert abs(got.imag) <= 1e-9 * abs(expect)
            assert abs(got.real - expect) <= 1e-9 * max(abs(expect), 1.0)

    def test_form_is_real_part_on_perp_space(self, rng):
        for _ in range(50):
            S, mu1 = case3_config(rng, int(rng.integers(4, 7)))
            cfg = normalize_A(S, mu1, classify(S, mu1).indices[0])
            t = cfg.local(sample_weights(S, mu1, 0, [1], full_support=True)[0])
            F = perp_family(cfg, t)
            u = np.sqrt(t)
            assert np.abs(F.conj().T @ np.column_stack([u, cfg.lam * u])).max() <= 1e-10
            Z = z_matrix(cfg, t)
            for _ in range(20):
                c = rng.normal(size=S.n - 2) + 1j * rng.normal(size=S.n - 2)
                v = F @ c
                re = np.vdot(v, cfg.lam * v).real
                assert abs(re - np.vdot(c, Z @ c).real) <= 1e-9 * max(1.0, abs(re))

    def test_z_needs_positive_weights(self):
        cfg = normalize_A(SQUARE, 0.5, 0)
        with pytest.raises(InputError):
            z_matrix(cfg, [0.5, 0.5, 0, 0])
