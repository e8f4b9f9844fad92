import math
import random
from fractions import Fraction as F

from hypothesis import given, settings, strategies as st

from polytoeplitz.cases import rand_point_in_disc
from polytoeplitz.oracle import apply_toeplitz_poly
from polytoeplitz.scalarpoly import GaussQ, Poly
from polytoeplitz.selftest import dn_expansion, factorized_form
from polytoeplitz.symbolkit import PolyanalyticSymbol, tilde
from polytoeplitz.weylops import (
    DiffOp, apply, build_dphi, build_lambda, compose, euler_product, leading_terms,
)
from strategies import gauss, nonzero_gauss, polys, symbols

z = Poly.z()
D = DiffOp.d()
S = PolyanalyticSymbol


def ops(max_order=3, max_deg=3):
    return st.lists(polys(max_deg), min_size=1, max_size=max_order + 1).map(DiffOp)


class TestCompose:
    def test_commutator(self):
        g = z ** 2
        assert compose(D, DiffOp.mult(g)) == DiffOp([Poly([0, 2]), g])

    def test_euler_pair(self):
        assert compose(DiffOp.euler(2), DiffOp.euler(3)) == DiffOp([Poly([6]), Poly([0, 6]), Poly([0, 0, 1])])

    @given(ops())
    def test_identity(self, a):
        assert compose(a, DiffOp.identity()) == a == compose(DiffOp.identity(), a)

    @settings(max_examples=40)
    @given(ops(), ops(), ops())
    def test_associative(self, a, b, c):
        assert compose(compose(a, b), c) == compose(a, compose(b, c))

    @settings(max_examples=40)
    @given(ops(), ops(), polys(6))
    def test_composition_is_action(self, a, b, f):
        assert apply(compose(a, b), f) == apply(a, apply(b, f))

    @given(st.lists(gauss, min_size=1, max_size=5))
    def test_euler_product_top_coefficients(self, bs):
        m = len(bs)
        prod = DiffOp.identity()
        for bk in bs:
            prod = compose(prod, DiffOp([Poly([bk]), z]))
        assert prod.coeff(m) == z ** m
        assert prod.coeff(m - 1) == z ** (m - 1) * (F(m * (m - 1), 2) + sum(bs, GaussQ(0)))


class TestLambdaAndDphi:
    def test_lambda_small(self):
        assert build_lambda(0) == DiffOp.identity()
        assert build_lambda(1) == DiffOp.euler(2)
        assert build_lambda(2) == DiffOp([Poly([6]), Poly([0, 6]), Poly([0, 0, 1])])
        assert euler_product(5, 4) == DiffOp.identity()

    def test_dphi_zbar(self):
        assert build_dphi(S.zbar(1)) == D

    def test_dphi_holomorphic(self):
        a0 = Poly([1, 2, 3])
        assert build_dphi(S.holomorphic(a0)) == DiffOp.mult(a0)

    @given(polys(3), gauss, nonzero_gauss)
    def test_dphi_second_order(self, a0, a1, a2):
        # constant a_1, a_2
        sym = S(2, (a0, Poly([a1]), Poly([a2])))
        d = build_dphi(sym)
        t = tilde(sym)
        assert d.coeff(2) == t
        assert d.coeff(1) == t.deriv() * 3 - z ** 2 * a0.deriv()
        assert d.coeff(0) == z ** 2 * a0.deriv(2) + z * a0.deriv() * 6 + a0 * 6

    def test_leading_terms_first_order(self):
        a, b, c = GaussQ(1), GaussQ(F(-1, 2)), GaussQ(2, 1)
        sym = S(1, (Poly([a, b, c]), Poly([1])))
        t = Poly([1]) + z * Poly([a, b, c])
        top, sub = leading_terms(build_dphi(sym))
        assert top == t
        assert sub == t.deriv() * 2 - Poly([0, b, c * 2])
        assert leading_terms(build_lambda(2)) == (z ** 2, z * 6)

    def test_apply_examples(self):
        assert apply(D, z ** 3) == z ** 2 * 3
        assert apply(DiffOp.euler(2), Poly([1])) == Poly([2])
        assert apply(build_lambda(2), z) == z * 12

    @settings(max_examples=60, deadline=None)
    @given(symbols(4, 4), polys(6))
    def test_lemma_key(self, sym, f):
        assert apply(build_lambda(sym.n), apply_toeplitz_poly(sym, f)) == apply(build_dphi(sym), f)

    @settings(max_examples=60, deadline=None)
    @given(symbols(4, 4))
    def test_leading_terms_general(self, sym):
        if sym.n == 0:
            return
        top, sub = leading_terms(build_dphi(sym))
        t = tilde(sym)
        assert top == t
        assert sub == t.deriv() * (sym.n + 1) - tilde(sym.dz(), sym.n)


class TestClosedForms:
    def test_dn_identity(self):
        rng = random.Random(2)
        for n in range(1, 6):
            for _ in range(3):
                w = rand_point_in_disc(rng)
                assert compose(DiffOp.d(n), DiffOp.mult(Poly([-w, 1]) ** n)) == dn_expansion(n, w)

    def test_dn_expansion_coefficients(self):
        e = dn_expansion(2, GaussQ(0))
        assert e == DiffOp([Poly([2]), Poly([0, 4]), Poly([0, 0, 1])])

    def test_factorization(self):
        rng = random.Random(3)
        for n in range(1, 5):
            w = rand_point_in_disc(rng)
            sym = (S.zbar(1) - GaussQ(1) / w) ** n
            assert build_dphi(sym) == factorized_form(n, w)
