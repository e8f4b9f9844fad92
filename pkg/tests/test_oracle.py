import math
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from polytoeplitz.errors import ConvergenceAmbiguous
from polytoeplitz.oracle import (
    ProbeThresholds, apply_toeplitz_poly, estimate_kernel_dim, integral_tzbar, kernel_probe,
    quadrature_check, truncate, tzbar_monomial,
)
from polytoeplitz.scalarpoly import GaussQ, Poly
from polytoeplitz.symbolkit import PolyanalyticSymbol
from strategies import gauss, polys, symbols

z = Poly.z()
S = PolyanalyticSymbol
half = GaussQ(F(1, 2))


class TestMonomialFormula:
    def test_examples(self):
        assert tzbar_monomial(2, 3) == F(1, 2)
        assert tzbar_monomial(1, 1) == F(1, 2)
        assert tzbar_monomial(3, 2) == 0
        assert tzbar_monomial(0, 5) == 1

    def test_negative(self):
        with pytest.raises(ValueError):
            tzbar_monomial(-1, 2)

    def test_apply_examples(self):
        c = GaussQ(F(2, 3), 1)
        assert apply_toeplitz_poly(S.zbar(2) + c, z ** 3) == z ** 3 * c + z * F(1, 2)
        a0 = Poly([1, 2, 3])
        f = Poly([F(1, 5), 0, 7])
        assert apply_toeplitz_poly(S.holomorphic(a0), f) == a0 * f
        assert apply_toeplitz_poly(S.zbar(1), Poly([1])).is_zero()

    @given(symbols(3, 3), polys(5), polys(5), gauss, gauss)
    def test_linear_in_f(self, sym, f, g, a, b):
        assert apply_toeplitz_poly(sym, f * a + g * b) == \
            apply_toeplitz_poly(sym, f) * a + apply_toeplitz_poly(sym, g) * b

    @given(symbols(3, 3), symbols(3, 3), polys(5))
    def test_linear_in_symbol(self, p, q, f):
        assert apply_toeplitz_poly(p + q, f) == apply_toeplitz_poly(p, f) + apply_toeplitz_poly(q, f)


class TestTruncate:
    def test_zbar_squared_kills_first_columns(self):
        m = truncate(S.zbar(2), 6).entries
        assert not m[:, 0].any() and not m[:, 1].any() and m[:, 2].any()

    def test_constant(self):
        c = GaussQ(2, -1)
        assert np.array_equal(truncate(S.holomorphic(c), 5).entries, complex(c) * np.eye(5))

    def test_zbar_entries(self):
        m = truncate(S.zbar(1), 3).entries
        expect = np.zeros((3, 3), complex)
        expect[0, 1] = 0.5 * math.sqrt(2)
        expect[1, 2] = (2 / 3) * math.sqrt(1.5)
        assert np.allclose(m, expect, atol=1e-15)

    @pytest.mark.parametrize("k", range(0, 5))
    def test_adjoint(self, k):
        for n in (1, 7, 64):
            a = truncate(S.zbar(k), n).entries
            b = truncate(S.holomorphic(z ** k), n).entries
            assert np.allclose(a, b.conj().T, atol=1e-14)

    @settings(max_examples=40)
    @given(symbols(3, 3))
    def test_band_width(self, sym):
        below, above = truncate(sym, 24).bandwidth()
        assert max(below, above) <= max(sym.z_degree, sym.n)

    @settings(max_examples=30, deadline=None)
    @given(symbols(3, 3))
    def test_column_exactness(self, sym):
        n = 20
        m = truncate(sym, n).entries
        for p in range(n - sym.z_degree):
            col = apply_toeplitz_poly(sym, z ** p)
            want = np.zeros(n, complex)
            for q, c in enumerate(col.coeffs):
                want[q] = complex(c) * math.sqrt((p + 1) / (q + 1))
            assert np.allclose(m[:, p], want, atol=1e-12)

    def test_invalid_size(self):
        with pytest.raises(ValueError):
            truncate(S.zbar(1), 0)


class TestKernelProbe:
    def test_zbar_squared_plus_half(self):
        rep = kernel_probe(S.zbar(2) + half, (32, 64, 128))
        assert rep.estimated_kernel_dim == 2
        assert rep.defect_split == (2, 0)
        assert rep.tag == "numeric-confidence"

    def test_invertible(self):
        rep = kernel_probe(S.zbar(1) - GaussQ(2), (64, 128, 256))
        assert rep.estimated_kernel_dim == 0 and rep.sigma_min_stable()

    def test_constant(self):
        c = GaussQ(F(3, 4), 1)
        rep = kernel_probe(S.holomorphic(c), (8, 16, 32))
        assert all(abs(s - abs(c)) < 1e-12 for s in rep.sigma_min())

    def test_cokernel_is_tail_concentrated(self):
        # index -1: one decaying direction, coming from the cokernel
        sym = S.holomorphic((z - half) * 3) + (S.zbar(1) - GaussQ(2))
        rep = kernel_probe(sym, (32, 64, 128, 256))
        assert rep.estimated_kernel_dim == 1 and rep.defect_split == (0, 1)

    def test_ambiguous_strict_and_lenient(self):
        # a tilde zero at modulus 0.95: the defect decays too slowly to classify
        from polytoeplitz.criteria import corollary_symbol
        sym = corollary_symbol(GaussQ(F(21, 10)), half, 1, 1)
        with pytest.raises(ConvergenceAmbiguous):
            kernel_probe(sym, (64, 128, 256, 512))
        rep = kernel_probe(sym, (64, 128, 256, 512), strict=False)
        assert rep.estimated_kernel_dim is None and rep.ambiguous

    def test_sizes_must_increase(self):
        with pytest.raises(ValueError):
            kernel_probe(S.zbar(1), (64, 32))

    def test_csv(self):
        rep = kernel_probe(S.zbar(2) + half, (8, 16))
        lines = rep.to_csv().splitlines()
        assert lines[0] == "N,sigma_1,sigma_2,sigma_3,sigma_4"
        assert [l.split(",")[0] for l in lines[1:]] == ["8", "16"]

    def test_decision_rule(self):
        th = ProbeThresholds()
        sizes = (1, 2, 3)
        smax = (1.0, 1.0, 1.0)
        decaying = [(1e-2, 0.5), (1e-4, 0.5), (1e-7, 0.5)]
        assert estimate_kernel_dim(sizes, decaying, smax, th) == (1, None)
        slow = [(1e-2, 0.5), (5e-3, 0.5), (1e-7, 0.5)]
        assert estimate_kernel_dim(sizes, slow, smax, th)[0] is None
        noisy = [(1e-14, 0.5), (3e-14, 0.5), (2e-14, 0.5)]
        assert estimate_kernel_dim(sizes, noisy, smax, th) == (1, None)
        no_gap = [(5e-4, 0.4), (5e-4, 0.4), (5e-4, 0.4)]
        assert estimate_kernel_dim(sizes, no_gap, smax, th)[0] is None


class TestQuadrature:
    def test_examples(self):
        pts = np.array([0.3, 0.5j, -0.7 + 0.1j])
        assert np.allclose(integral_tzbar(z, pts), 0.5, atol=1e-14)
        assert np.allclose(integral_tzbar(Poly([1]), pts), 0, atol=1e-14)
        assert np.allclose(integral_tzbar(z ** 3, pts), 0.75 * pts ** 2, atol=1e-14)

    @settings(max_examples=30)
    @given(polys(6))
    def test_residual(self, f):
        scale = 1 + max((abs(complex(c)) for c in f.coeffs), default=0)
        assert quadrature_check(f) < 1e-10 * scale
