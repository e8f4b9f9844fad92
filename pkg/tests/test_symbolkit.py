import json
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from polytoeplitz.cases import rand_fredholm_symbol
from polytoeplitz.errors import OrderTooSmall, ParseError, ValidationError
from polytoeplitz.scalarpoly import GaussQ, Poly
from polytoeplitz.symbolkit import (
    PolyanalyticSymbol, boundary_winding, dz_derivative, index_data, parse_symbol, shift_by_scalar,
    tilde,
)
from strategies import gauss, symbols

z = Poly.z()
S = PolyanalyticSymbol
a, b, c = GaussQ(F(1, 3)), GaussQ(-2, 1), GaussQ(F(5, 4))


def quad_first_order():
    return S(1, (Poly([a, b, c]), Poly([1])))


class TestTilde:
    def test_first_order_quadratic(self):
        assert tilde(quad_first_order()) == Poly([1]) + z * Poly([a, b, c])

    def test_holomorphic(self):
        assert tilde(S.holomorphic(Poly([1, 2, 3])), 0) == Poly([1, 2, 3])

    def test_zbar_squared_plus_c(self):
        assert tilde(S.zbar(2) + c) == Poly([1, 0, c])

    def test_order_too_small(self):
        with pytest.raises(OrderTooSmall):
            tilde(S.zbar(2), 1)

    @given(symbols(3, 3), symbols(3, 3), gauss, gauss)
    def test_linear(self, p, q, al, be):
        n = max(p.n, q.n)
        lhs = tilde(p.at_order(n) * al + q.at_order(n) * be, n)
        assert lhs == tilde(p, n) * al + tilde(q, n) * be

    @settings(max_examples=30)
    @given(symbols(3, 3))
    def test_circle_relation(self, sym):
        t = np.exp(2j * np.pi * np.arange(256) / 256)
        lhs = sym(t)
        rhs = t ** (-sym.n) * tilde(sym).evaluate_many(t)
        scale = 1 + np.max(np.abs(lhs))
        assert np.max(np.abs(lhs - rhs)) <= 1e-10 * scale


class TestDerivativeAndShift:
    def test_dz_first_order(self):
        d = dz_derivative(quad_first_order())
        assert d.n == 1 and d.coeffs[0] == Poly([b, c * 2]) and d.coeffs[1].is_zero()
        assert tilde(d, 1) == Poly([0, b, c * 2])

    def test_dz_constant(self):
        assert all(p.is_zero() for p in dz_derivative(S.holomorphic(GaussQ(3))).coeffs)

    def test_dz_multiple_zero_pattern(self):
        w, psi = GaussQ(F(1, 2)), GaussQ(3)
        sym = S.holomorphic((z - w) ** 2 * psi) + (S.zbar(1) - GaussQ(2)) ** 2
        d = dz_derivative(sym)
        assert d.coeffs[0] == (z - w) * psi * 2
        assert all(p.is_zero() for p in d.coeffs[1:])

    def test_shift_examples(self):
        s = shift_by_scalar(S.zbar(1), GaussQ(2))
        assert s.coeffs == (Poly([-2]), Poly([1]))
        assert shift_by_scalar(S.zbar(1), GaussQ(0)) == S.zbar(1)
        assert shift_by_scalar(S.zbar(2) + c, c) == S.zbar(2)


class TestIndex:
    def test_zbar(self):
        d = index_data(S.zbar(1))
        assert (d.winding, d.fredholm_index, d.tilde_zeros_in_disc) == (-1, 1, ())

    def test_zbar_minus_two(self):
        d = index_data(S.zbar(1) - GaussQ(2))
        assert (d.winding, d.fredholm_index, d.sampled_winding) == (0, 0, 0)
        assert d.tilde_zeros_in_disc == ((0.5 + 0j, 1),)

    def test_zbar_squared_plus_c(self):
        d = index_data(S.zbar(2) + GaussQ(F(1, 2)))
        assert (d.winding, d.fredholm_index) == (-2, 2)

    def test_boundary_zero_flag(self):
        d = index_data(S.zbar(1) - GaussQ(1))
        assert d.boundary_zero_flag and d.fredholm_index is None

    def test_identically_zero_on_circle(self):
        # zbar * z - 1 vanishes on the whole circle
        d = index_data(S(1, (Poly([-1]), Poly([0, 1]))))
        assert d.boundary_zero_flag

    def test_random_winding_agreement(self):
        import random
        rng = random.Random(4)
        for _ in range(40):
            sym = rand_fredholm_symbol(rng, 4, 4)
            d = index_data(sym)
            assert d.winding == d.zero_count_in_disc - sym.n == boundary_winding(sym)


class TestParse:
    def test_roundtrip(self):
        sym = S(2, (Poly([a, b]), Poly([]), Poly([c])))
        assert parse_symbol(json.dumps(sym.to_json())) == sym

    def test_malformed_pair_names_index(self):
        with pytest.raises(ParseError, match=r"coeffs\[1\]\[0\]"):
            parse_symbol({"n": 1, "coeffs": [[["1", "0"]], [["1"]]]})

    def test_float_rejected_in_exact_mode(self):
        with pytest.raises(ParseError, match="backend float"):
            parse_symbol({"n": 0, "coeffs": [[[0.5, 0]]]})

    def test_float_backend(self):
        sym = parse_symbol({"n": 0, "coeffs": [[[0.5, 0]]]}, backend="float")
        assert not sym.exact

    def test_wrong_length(self):
        with pytest.raises(ParseError, match="expected n\\+1"):
            parse_symbol({"n": 2, "coeffs": [[], []]})

    def test_top_coefficient_zero(self):
        with pytest.raises(ValidationError):
            parse_symbol({"n": 1, "coeffs": [[["1", "0"]], [["0", "0"]]]})

    @pytest.mark.parametrize("text", ["{", "[]", '{"n": -1, "coeffs": []}', '{"n": 0, "coeffs": [[["x", "0"]]]}'])
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse_symbol(text)


class TestAlgebra:
    @given(symbols(2, 2), symbols(2, 2), st.complex_numbers(max_magnitude=0.99, allow_nan=False))
    def test_product_is_pointwise(self, p, q, x):
        if abs(x) > 0.99:
            return
        got = (p * q)(x)
        want = p(x) * q(x)
        assert abs(got - want) <= 1e-9 * (1 + abs(want))
