import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from polytoeplitz.cases import rand_point_in_disc, rand_poly
from polytoeplitz.criteria import simple_zero_residue, multiple_zero_indicial
from polytoeplitz.errors import NotRegular, ResonanceObstruction
from polytoeplitz.frobenius import (
    classify, indicial, integer_roots, series_residual, series_solution,
)
from polytoeplitz.scalarpoly import GaussQ, Poly, falling_factorial, locate_zeros, roots
from polytoeplitz.symbolkit import PolyanalyticSymbol, tilde
from polytoeplitz.weylops import DiffOp, build_dphi, compose

z = Poly.z()
S = PolyanalyticSymbol
ZERO = GaussQ(0)
half = GaussQ(F(1, 2))


def _proportional(p: Poly, q: Poly) -> bool:
    if p.degree != q.degree or p.is_zero():
        return False
    return p * q.lead() == q * p.lead()


class TestClassify:
    def test_euler_regular(self):
        assert classify(DiffOp([Poly([]), z]), ZERO)

    def test_irregular(self):
        assert not classify(DiffOp([Poly([1]), z ** 2]), ZERO)
        with pytest.raises(NotRegular):
            indicial(DiffOp([Poly([1]), z ** 2]), ZERO)

    def test_dphi_simple_zero(self):
        assert classify(build_dphi(S.zbar(1) - GaussQ(2)), half)


class TestIndicial:
    @pytest.mark.parametrize("k", [0, 1, 4])
    def test_euler_shift(self, k):
        d = indicial(DiffOp([Poly([-k]), z]), ZERO)
        assert _proportional(d.indicial_poly, Poly([-k, 1]))
        assert d.nonneg_integer_roots == (k,)

    def test_zbar_minus_two(self):
        d = indicial(build_dphi(S.zbar(1) - GaussQ(2)), half)
        assert _proportional(d.indicial_poly, Poly([2, 1]))
        assert d.nonneg_integer_roots == ()

    def test_multiple_zero_first_order(self):
        w, psi = GaussQ(F(1, 3)), GaussQ(5, 2)
        sym = S.holomorphic((z - w) * psi) + (S.zbar(1) - GaussQ(1) / w)
        d = indicial(build_dphi(sym), w)
        assert _proportional(d.indicial_poly, multiple_zero_indicial(1, psi, w))

    def test_multiple_zero_closed_form(self):
        rng = random.Random(8)
        for n in range(1, 5):
            for _ in range(4):
                w = rand_point_in_disc(rng)
                psi = rand_poly(rng, rng.randint(0, 2))
                sym = S.holomorphic((z - w) ** n * psi) + (S.zbar(1) - GaussQ(1) / w) ** n
                d = indicial(build_dphi(sym), w)
                assert d.indicial_poly.degree == n
                assert _proportional(d.indicial_poly, multiple_zero_indicial(n, psi(w), w))

    def test_simple_zero_roots(self):
        # roots {0..n-2} and res - 2 at a simple tilde zero
        rng = random.Random(12)
        checked = 0
        while checked < 15:
            n = rng.randint(1, 3)
            w = rand_point_in_disc(rng)
            extra = [rand_poly(rng, 2) for _ in range(n)]
            # a_0 enters tilde as a_0 z^n; shift it so that tilde vanishes at w
            sym = S(n, tuple(extra) + (Poly([1]),))
            t = tilde(sym)
            sym = S(n, (sym.coeffs[0] - Poly([t(w) / w ** n]),) + sym.coeffs[1:])
            t = tilde(sym)
            if t(w) or not t.deriv()(w):
                continue
            d = indicial(build_dphi(sym), w)
            res = simple_zero_residue(sym, w)[2]
            expect = falling_factorial(n - 1) * (Poly.z() - (res - 2))
            assert _proportional(d.indicial_poly, expect)
            checked += 1

    def test_algebraic_point(self):
        # zbar + f with 1 + z f = 1 - 3 z^2 / 2: zeros +- sqrt(2/3) inside the disc
        sym = S(1, (Poly([0, F(-3, 2)]), Poly([1])))
        pts = [zr.point for zr in locate_zeros(tilde(sym))]
        for p in pts:
            d = indicial(build_dphi(sym), p)
            assert d.exact and d.indicial_poly.degree == 1


class TestIntegerRoots:
    def test_examples(self):
        assert integer_roots(Poly([2, 1])) == []
        lam = Poly.z()
        assert integer_roots(Poly([2, 1]) - Poly([1, 1]) * 2) == [0]
        assert integer_roots(lam * (lam - 1) * (lam + 3)) == [0, 1]

    def test_lower_bound(self):
        lam = Poly.z()
        assert integer_roots(lam * (lam + 3), -5) == [-3, 0]

    @given(st.lists(st.integers(-20, 40), min_size=1, max_size=4), st.integers(1, 5))
    def test_recovers_planted_roots(self, ks, c):
        lam = Poly.z()
        p = Poly([c])
        for k in ks:
            p = p * (lam - k)
        assert integer_roots(p) == sorted({k for k in ks if k >= 0})

    def test_float_polynomial(self):
        p = Poly([-6.0, 5.0, 1.0 + 0j])  # (lam - 1)(lam + 6)
        assert integer_roots(p) == [1]

    @pytest.mark.parametrize("n", range(1, 7))
    def test_positivity_guard(self, n):
        for lam in range(0, 51):
            lhs = math.prod(lam + i + 1 for i in range(1, n + 1))
            rhs = sum(F(math.factorial(n) ** 2, math.factorial(i) ** 2 * math.factorial(n - i))
                      * math.perm(lam, i) for i in range(n + 1))
            assert lhs > rhs


class TestSeries:
    def test_euler_constant(self):
        s = series_solution(DiffOp([Poly([]), z]), ZERO, 0, 5)
        assert s.as_poly_u() == Poly([1])

    def test_ordinary_point(self):
        a = DiffOp.d(2)
        w = GaussQ(F(1, 4))
        assert series_solution(a, w, 0, 4).as_poly_u() == Poly([1])
        assert series_solution(a, w, 1, 4).as_poly_u() == Poly([0, 1])

    def test_kernel_of_zbar_squared(self):
        a = build_dphi(S.zbar(2))
        assert indicial(a, ZERO).nonneg_integer_roots == (0, 1)
        assert series_solution(a, ZERO, 0, 6).as_poly_z() == Poly([1])
        assert series_solution(a, ZERO, 1, 6).as_poly_z() == z

    def test_not_a_root(self):
        with pytest.raises(ValueError):
            series_solution(DiffOp([Poly([]), z]), ZERO, 1, 3)

    def test_resonance(self):
        # (z D - 1)(z D) + z: indicial roots 0 and 1, and the exponent-0 series is blocked at 1
        a = compose(DiffOp([Poly([-1]), z]), DiffOp([Poly([]), z])) + DiffOp.mult(z)
        assert indicial(a, ZERO).nonneg_integer_roots == (0, 1)
        with pytest.raises(ResonanceObstruction):
            series_solution(a, ZERO, 0, 4)
        series_solution(a, ZERO, 1, 4)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 3), st.integers(4, 9))
    def test_residual_vanishes_to_truncation(self, k, M):
        w = GaussQ(F(1, 3))
        # (z - w) D - k + (z - w)^2: Fuchsian at w with the single root k
        a = DiffOp([Poly([-k]) + (z - w) ** 2, z - w])
        sol = series_solution(a, w, k, M)
        r = series_residual(a, sol)
        assert all(not c for c in r.coeffs[: M + 1 - a.order])
